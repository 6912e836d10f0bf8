#include "tropid/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tropid/error.hpp"
#include "tropid/lp.hpp"

namespace tropid {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw InvalidArgument("duplicate variable identifier");
}

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool operator<(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps_ < b.exps_;
}

TropPoly::TropPoly(std::shared_ptr<const VariableSet> vars) : vars_(std::move(vars)) {
    if (!vars_) throw InvalidArgument("polynomial without a variable set");
}

TropPoly TropPoly::constant(std::shared_ptr<const VariableSet> vars, const Rational& c) {
    TropPoly p(std::move(vars));
    p.add_term(Monomial(std::vector<std::uint32_t>(p.variables().size(), 0)), c);
    return p;
}

bool TropPoly::is_zero_flat() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) == 0; });
}

void TropPoly::add_term(const Monomial& m, const Rational& coefficient) {
    if (m.size() != vars_->size()) throw InvalidArgument("monomial arity does not match the variable set");
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted && it->second < coefficient) it->second = coefficient;
}

TropScalar TropPoly::evaluate(const Point& point) const {
    if (point.size() != vars_->size()) throw InvalidArgument("point arity does not match the variable set");
    TropScalar best = TropScalar::bottom();
    for (const auto& [mono, coeff] : terms_) {
        TropScalar value{coeff};
        for (std::size_t i = 0; i < mono.size() && value.is_finite(); ++i) {
            if (mono[i] == 0) continue;
            if (point[i].is_bottom()) {
                value = TropScalar::bottom();
            } else {
                value = TropScalar(Rational(value.value() + mono[i] * point[i].value()));
            }
        }
        best = oplus(best, value);
    }
    return best;
}

TropScalar TropPoly::evaluate(const RationalPoint& point) const {
    if (point.size() != vars_->size()) throw InvalidArgument("point arity does not match the variable set");
    std::optional<Rational> best;
    for (const auto& [mono, coeff] : terms_) {
        Rational value = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i] != 0) value += mono[i] * point[i];
        if (!best || *best < value) best = std::move(value);
    }
    return best ? TropScalar(*best) : TropScalar::bottom();
}

namespace {

void require_same_variables(const TropPoly& f, const TropPoly& g) {
    if (!(f.variables() == g.variables())) throw InvalidArgument("polynomials over different variable sets");
}

// Strict-exceed system: c + a.x > c_j + b_j.x for every term (b_j, c_j) of `others`.
lp::LinearSystem exceed_system(const Monomial& a, const Rational& c, const TropPoly& others,
                               const Monomial* skip = nullptr) {
    const std::size_t k = a.size();
    lp::LinearSystem sys(k);
    for (const auto& [b, cb] : others.terms()) {
        if (skip && b == *skip) continue;
        std::vector<Rational> coeffs(k);
        for (std::size_t i = 0; i < k; ++i)
            coeffs[i] = static_cast<long>(a[i]) - static_cast<long>(b[i]);
        sys.add(std::move(coeffs), Rational(c - cb));
    }
    return sys;
}

} // namespace

TropPoly poly_oplus(const TropPoly& f, const TropPoly& g) {
    require_same_variables(f, g);
    TropPoly out = f;
    for (const auto& [m, c] : g.terms()) out.add_term(m, c);
    return out;
}

TropPoly poly_otimes(const TropPoly& f, const TropPoly& g) {
    require_same_variables(f, g);
    TropPoly out(f.variables_ptr());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            std::vector<std::uint32_t> e(a.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            out.add_term(Monomial(std::move(e)), Rational(ca + cb));
        }
    }
    return out;
}

std::vector<Monomial> essential_terms(const TropPoly& f) {
    std::vector<Monomial> out;
    for (const auto& [mono, coeff] : f.terms()) {
        if (lp::strict_feasible(exceed_system(mono, coeff, f, &mono))) out.push_back(mono);
    }
    return out;
}

TropPoly essentialize(const TropPoly& f) {
    TropPoly out(f.variables_ptr());
    for (const auto& m : essential_terms(f)) out.add_term(m, f.terms().at(m));
    return out;
}

namespace {

// A point where the term (a, c) strictly exceeds every term of g, if any.
std::optional<RationalPoint> exceeding_point(const Monomial& a, const Rational& c, const TropPoly& g) {
    if (g.is_bottom()) return RationalPoint(a.size(), Rational(0));
    auto same = g.terms().find(a);
    if (same != g.terms().end() && c <= same->second) return std::nullopt;
    return lp::strict_feasible(exceed_system(a, c, g));
}

} // namespace

std::optional<RationalPoint> separating_point(const TropPoly& f, const TropPoly& g) {
    require_same_variables(f, g);
    // f and g agree as functions iff each is pointwise below the other, and a
    // polynomial is below g iff none of its terms strictly exceeds g anywhere.
    for (int side = 0; side < 2; ++side) {
        const TropPoly& lhs = side == 0 ? f : g;
        const TropPoly& rhs = side == 0 ? g : f;
        for (const auto& [mono, coeff] : lhs.terms()) {
            if (auto x = exceeding_point(mono, coeff, rhs)) {
                TROPID_ENSURE(f.evaluate(*x) != g.evaluate(*x), "separating point does not separate");
                return x;
            }
        }
    }
    return std::nullopt;
}

bool equivalent(const TropPoly& f, const TropPoly& g) { return !separating_point(f, g).has_value(); }

namespace {

void require_univariate(const TropPoly& f) {
    if (f.variables().size() != 1) throw InvalidArgument("univariate routine needs exactly one variable");
}

} // namespace

std::vector<std::pair<std::uint32_t, Rational>> univariate_hull(const TropPoly& f) {
    require_univariate(f);
    std::vector<std::pair<std::uint32_t, Rational>> hull;
    // Terms arrive in increasing exponent order. A point on or below the chord
    // of its neighbours is never a strict maximum, so collinear points go too.
    for (const auto& [mono, coeff] : f.terms()) {
        const long x = mono[0];
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            const Rational cross = Rational(static_cast<long>(a.first) - static_cast<long>(o.first)) * (coeff - o.second) -
                                   (a.second - o.second) * Rational(x - static_cast<long>(o.first));
            if (sgn(cross) >= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.emplace_back(mono[0], coeff);
    }
    return hull;
}

bool equivalent_univariate(const TropPoly& f, const TropPoly& g) {
    require_univariate(f);
    require_univariate(g);
    return univariate_hull(f) == univariate_hull(g);
}

std::optional<Rational> univariate_separating_point(const TropPoly& f, const TropPoly& g) {
    require_univariate(f);
    require_univariate(g);
    if (f.is_bottom() != g.is_bottom()) return Rational(0);
    if (f.is_bottom()) return std::nullopt;

    std::vector<Rational> candidates;
    for (const TropPoly* p : {&f, &g}) {
        const auto hull = univariate_hull(*p);
        for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
            const auto& [e1, c1] = hull[i];
            const auto& [e2, c2] = hull[i + 1];
            candidates.push_back(Rational(c1 - c2) / Rational(static_cast<long>(e2) - static_cast<long>(e1)));
        }
    }
    if (candidates.empty()) {
        candidates = {Rational(0), Rational(1)};
    } else {
        const auto [lo, hi] = std::minmax_element(candidates.begin(), candidates.end());
        const Rational below = *lo - 1, above = *hi + 1;
        candidates.push_back(below);
        candidates.push_back(above);
    }
    for (const auto& x : candidates) {
        if (f.evaluate(RationalPoint{x}) != g.evaluate(RationalPoint{x})) return x;
    }
    return std::nullopt;
}

std::string to_string(const TropPoly& f) {
    if (f.is_bottom()) return "-inf";
    std::ostringstream os;
    os << "max(";
    bool first_term = true;
    for (const auto& [mono, coeff] : f.terms()) {
        if (!first_term) os << ", ";
        first_term = false;
        std::vector<std::string> parts;
        if (sgn(coeff) != 0 || mono.degree() == 0) parts.push_back(to_string(coeff));
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            parts.push_back(mono[i] == 1 ? f.variables().name(i)
                                         : std::to_string(mono[i]) + "*" + f.variables().name(i));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
    }
    os << ')';
    return os.str();
}

} // namespace tropid
