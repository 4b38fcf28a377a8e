#include "pluecker/chow.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pluecker::chow {

namespace {

int total_degree(const Exponents& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

} // namespace

int SpaceModel::generator_index(std::string_view gen) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == gen) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator '" + std::string(gen) + "' on " + name);
}

bool SpaceModel::monomial_vanishes(const Exponents& exps) const {
    if (total_degree(exps) > dimension) return true;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] >= nilpotency[i]) return true;
    return false;
}

Rational SpaceModel::integral_of(const Exponents& top_monomial) const {
    auto it = integral_table.find(top_monomial);
    return it == integral_table.end() ? Rational(0) : it->second;
}

std::vector<Exponents> SpaceModel::monomials_of_degree(int k) const {
    std::vector<Exponents> out;
    Exponents cur(generators.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == cur.size()) {
            if (remaining < nilpotency[pos]) {
                cur[pos] = remaining;
                out.push_back(cur);
            }
            return;
        }
        for (int e = 0; e < nilpotency[pos] && e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (k >= 0 && !cur.empty()) rec(rec, 0, k);
    return out;
}

const SpaceModel& projective_space(int n) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<const SpaceModel>> cache;
    if (n < 0) throw std::invalid_argument("projective space needs n >= 0");
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto m = std::make_unique<SpaceModel>();
        m->name = "P" + std::to_string(n);
        m->generators = {"H"};
        m->dimension = n;
        m->nilpotency = {n + 1};
        m->integral_table[{n}] = Rational(1);
        it = cache.emplace(n, std::move(m)).first;
    }
    return *it->second;
}

const SpaceModel& x1_space() {
    static const SpaceModel model = [] {
        SpaceModel m;
        m.name = "M01";
        m.generators = {"eta", "iota"};
        m.dimension = 3;
        m.nilpotency = {3, 3};
        m.integral_table[{2, 1}] = Rational(1);  // one line through two points
        m.integral_table[{1, 2}] = Rational(1);  // one point on two lines
        return m;
    }();
    return model;
}

const SpaceModel& x2_space() {
    static const SpaceModel model = [] {
        SpaceModel m;
        m.name = "M02";
        m.generators = {"h1", "h2", "e"};
        m.dimension = 4;
        m.nilpotency = {3, 3, 5};
        m.integral_table[{2, 2, 0}] = Rational(1);
        // a+b = 2, c = 2: minus the class of the blown-up diagonal
        m.integral_table[{2, 0, 2}] = Rational(-1);
        m.integral_table[{1, 1, 2}] = Rational(-1);
        m.integral_table[{0, 2, 2}] = Rational(-1);
        // a+b = 1, c = 3: the degree-1 Segre class of T_{P^2}
        m.integral_table[{1, 0, 3}] = Rational(-3);
        m.integral_table[{0, 1, 3}] = Rational(-3);
        // c = 4: minus the degree-2 Segre class of T_{P^2}
        m.integral_table[{0, 0, 4}] = Rational(-6);
        return m;
    }();
    return model;
}

void check_same_space(const ChowClass& a, const ChowClass& b) {
    if (a.space_ != b.space_)
        throw std::invalid_argument("space mismatch: " + a.space().name + " vs " + b.space().name);
}

void ChowClass::accumulate(const Exponents& exps, const FormalPoly& coeff) {
    if (coeff.is_zero() || space_->monomial_vanishes(exps)) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChowClass ChowClass::monomial(const SpaceModel& space, const Exponents& exps, FormalPoly coeff) {
    if (exps.size() != space.generators.size())
        throw std::invalid_argument("exponent vector length mismatch on " + space.name);
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (total_degree(exps) > space.dimension)
        throw std::invalid_argument("monomial degree exceeds dim " + space.name);
    ChowClass out(space);
    out.accumulate(exps, coeff);
    return out;
}

ChowClass ChowClass::from_terms(
    const SpaceModel& space,
    const std::vector<std::pair<std::vector<std::pair<std::string, int>>, FormalPoly>>& terms) {
    ChowClass out(space);
    for (const auto& [factors, coeff] : terms) {
        Exponents exps(space.generators.size(), 0);
        for (const auto& [name, power] : factors) {
            if (power < 0) throw std::invalid_argument("negative exponent");
            exps[space.generator_index(name)] += power;
        }
        if (total_degree(exps) > space.dimension)
            throw std::invalid_argument("monomial degree exceeds dim " + space.name);
        out.accumulate(exps, coeff);
    }
    return out;
}

ChowClass ChowClass::generator(const SpaceModel& space, std::string_view name) {
    Exponents exps(space.generators.size(), 0);
    exps[space.generator_index(name)] = 1;
    return monomial(space, exps);
}

ChowClass ChowClass::one(const SpaceModel& space) {
    return monomial(space, Exponents(space.generators.size(), 0));
}

bool ChowClass::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) return true;
    const int deg = total_degree(terms_.begin()->first);
    for (const auto& [exps, coeff] : terms_)
        if (total_degree(exps) != deg) return false;
    if (degree_out) *degree_out = deg;
    return true;
}

ChowClass ChowClass::degree_part(int k) const {
    ChowClass out(*space_);
    for (const auto& [exps, coeff] : terms_)
        if (total_degree(exps) == k) out.terms_.emplace(exps, coeff);
    return out;
}

std::vector<int> ChowClass::degrees_present() const {
    std::vector<int> out;
    for (const auto& [exps, coeff] : terms_) {
        int deg = total_degree(exps);
        if (std::find(out.begin(), out.end(), deg) == out.end()) out.push_back(deg);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ChowClass ChowClass::operator-() const {
    ChowClass out(*space_);
    for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
    return out;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    check_same_space(a, b);
    ChowClass out = a;
    for (const auto& [exps, coeff] : b.terms_) out.accumulate(exps, coeff);
    return out;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-b); }

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    check_same_space(a, b);
    ChowClass out(*a.space_);
    const std::size_t n = a.space_->generators.size();
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents exps(n);
            for (std::size_t i = 0; i < n; ++i) exps[i] = ea[i] + eb[i];
            out.accumulate(exps, ca * cb);
        }
    }
    return out;
}

ChowClass ChowClass::scaled(const FormalPoly& c) const {
    ChowClass out(*space_);
    if (c.is_zero()) return out;
    for (const auto& [exps, coeff] : terms_) out.accumulate(exps, coeff * c);
    return out;
}

ChowClass ChowClass::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    ChowClass out = one(*space_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

ChowClass ChowClass::evaluate_d(const Rational& value) const {
    ChowClass out(*space_);
    for (const auto& [exps, coeff] : terms_)
        out.accumulate(exps, FormalPoly(coeff.evaluate(value)));
    return out;
}

FormalPoly ChowClass::integrate() const {
    FormalPoly out;
    for (const auto& [exps, coeff] : terms_) {
        if (total_degree(exps) != space_->dimension) continue;
        const Rational v = space_->integral_of(exps);
        if (v != 0) out += coeff.scaled(v);
    }
    return out;
}

std::string ChowClass::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, FormalPoly>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return a.first > b.first;  // earlier generators first within a degree
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : sorted) {
        // Pull the sign of the leading coefficient out front.
        const bool negative = coeff.coeffs().back() < 0;
        const FormalPoly mag = negative ? -coeff : coeff;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += space_->generators[i];
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            out << (mag.is_constant() ? mag.str() : "(" + mag.str_compact() + ")");
        } else if (mag == FormalPoly::constant(1)) {
            out << mono;
        } else if (mag.is_constant()) {
            out << mag.str() << "*" << mono;
        } else {
            out << "(" << mag.str_compact() << ")*" << mono;
        }
    }
    return out.str();
}

bool classes_equal(const ChowClass& a, const ChowClass& b) {
    check_same_space(a, b);
    const SpaceModel& space = a.space();
    const ChowClass diff = a - b;
    if (diff.is_zero()) return true;
    for (int k : diff.degrees_present()) {
        const ChowClass part = diff.degree_part(k);
        for (const Exponents& m : space.monomials_of_degree(space.dimension - k)) {
            if (!(part * ChowClass::monomial(space, m)).integrate().is_zero()) return false;
        }
    }
    return true;
}

ChowClass psi(const SpaceModel& space, int mark) {
    if (&space == &x1_space()) {
        if (mark != 1) throw std::invalid_argument("the one-pointed space has a single mark");
        return ChowClass::generator(space, "iota") - ChowClass::generator(space, "eta").scaled(Rational(2));
    }
    if (&space == &x2_space()) {
        const ChowClass h1 = ChowClass::generator(space, "h1");
        const ChowClass h2 = ChowClass::generator(space, "h2");
        if (mark == 1) return h2 - h1;
        if (mark == 2) return h1 - h2;
        throw std::invalid_argument("mark must be 1 or 2");
    }
    throw std::invalid_argument("psi classes are modeled on the stable-map spaces only");
}

ChowClass pullback_pi(int forgotten_mark, const ChowClass& on_x1) {
    if (&on_x1.space() != &x1_space())
        throw std::invalid_argument("pullback source must be the one-pointed space");
    if (forgotten_mark != 1 && forgotten_mark != 2)
        throw std::invalid_argument("forgotten mark must be 1 or 2");
    const SpaceModel& x2 = x2_space();
    const ChowClass eta_image =
        ChowClass::generator(x2, forgotten_mark == 1 ? "h2" : "h1");
    const ChowClass iota_image = ChowClass::generator(x2, "h1") +
                                 ChowClass::generator(x2, "h2") -
                                 ChowClass::generator(x2, "e");
    ChowClass out(x2);
    for (const auto& [exps, coeff] : on_x1.terms())
        out = out + (eta_image.pow(exps[0]) * iota_image.pow(exps[1])).scaled(coeff);
    return out;
}

ChowClass pushforward_sigma(const ChowClass& on_x1) {
    if (&on_x1.space() != &x1_space())
        throw std::invalid_argument("pushforward source must be the one-pointed space");
    return ChowClass::generator(x2_space(), "e") * pullback_pi(2, on_x1);
}

ChowClass swap_marks(const ChowClass& on_x2) {
    if (&on_x2.space() != &x2_space())
        throw std::invalid_argument("mark swap lives on the two-pointed space");
    ChowClass out(x2_space());
    for (const auto& [exps, coeff] : on_x2.terms())
        out = out + ChowClass::monomial(x2_space(), {exps[1], exps[0], exps[2]}, coeff);
    return out;
}

TotalChern::TotalChern(ChowClass value) : value_(std::move(value)) {
    const ChowClass unit = ChowClass::one(value_.space());
    if (!(value_.degree_part(0) - unit).is_zero())
        throw std::invalid_argument("total Chern class must have degree-0 part 1");
}

TotalChern jet_total_chern(const ChowClass& c1_line, const ChowClass& c1_cotangent, int order) {
    check_same_space(c1_line, c1_cotangent);
    if (order < 0) throw std::invalid_argument("jet order must be >= 0");
    int deg = 0;
    if (!c1_line.is_homogeneous(&deg) || (!c1_line.is_zero() && deg != 1))
        throw std::invalid_argument("c1 of the line bundle must be a degree-1 class");
    if (!c1_cotangent.is_homogeneous(&deg) || (!c1_cotangent.is_zero() && deg != 1))
        throw std::invalid_argument("c1 of the relative cotangent must be a degree-1 class");
    const ChowClass unit = ChowClass::one(c1_line.space());
    ChowClass total = unit;
    for (int j = 0; j <= order; ++j)
        total = total * (unit + c1_line + c1_cotangent.scaled(Rational(j)));
    return TotalChern(total);
}

ChowClass chern_dual_line(const ChowClass& c1) {
    int deg = 0;
    if (!c1.is_homogeneous(&deg) || (!c1.is_zero() && deg != 1))
        throw std::invalid_argument("c1 must be a degree-1 class");
    return -c1;
}

TotalChern chern_whitney_product(const TotalChern& sub, const TotalChern& quot) {
    return TotalChern(sub.value() * quot.value());
}

long long moduli_dim(long long r, long long map_degree, long long n) {
    if (r < 0 || map_degree < 0 || n < 0) throw std::invalid_argument("inputs must be nonnegative");
    return r * map_degree + r + map_degree + n - 3;
}

} // namespace pluecker::chow
