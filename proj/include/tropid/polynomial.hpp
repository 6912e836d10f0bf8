#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropid/scalar.hpp"

namespace tropid {

/// Ordered, duplicate-free list of variable identifiers, e.g. "x(a,1)".
class VariableSet {
public:
    VariableSet() = default;
    /// Sorts and checks uniqueness. Throws InvalidArgument on duplicates.
    explicit VariableSet(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;

    friend bool operator==(const VariableSet&, const VariableSet&) = default;

private:
    std::vector<std::string> names_;
};

/// Exponent vector over a VariableSet (dense; position i is the exponent of
/// variable i). Ordered graded-lexicographically.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

    [[nodiscard]] std::size_t size() const { return exps_.size(); }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    [[nodiscard]] const std::vector<std::uint32_t>& exponents() const { return exps_; }
    [[nodiscard]] std::uint64_t degree() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> exps_;
};

/// Assignment of a value to each variable, positionally aligned with a VariableSet.
using Point = std::vector<TropScalar>;
using RationalPoint = std::vector<Rational>;

/// A formal tropical polynomial: max over terms of (coefficient + exponents . x).
/// An absent monomial has coefficient -inf; the empty map is the -inf polynomial.
class TropPoly {
public:
    explicit TropPoly(std::shared_ptr<const VariableSet> vars);

    static TropPoly constant(std::shared_ptr<const VariableSet> vars, const Rational& c);

    [[nodiscard]] const VariableSet& variables() const { return *vars_; }
    [[nodiscard]] const std::shared_ptr<const VariableSet>& variables_ptr() const { return vars_; }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_bottom() const { return terms_.empty(); }
    [[nodiscard]] bool is_zero_flat() const;

    /// Tropical sum with a single term: keeps the larger coefficient.
    void add_term(const Monomial& m, const Rational& coefficient);

    /// Throws InvalidArgument when the point has the wrong arity.
    [[nodiscard]] TropScalar evaluate(const Point& point) const;
    [[nodiscard]] TropScalar evaluate(const RationalPoint& point) const;

    friend bool operator==(const TropPoly& a, const TropPoly& b) {
        return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
    }

private:
    std::shared_ptr<const VariableSet> vars_;
    std::map<Monomial, Rational> terms_;
};

/// Tropical sum and product of polynomials over the same variables.
TropPoly poly_oplus(const TropPoly& f, const TropPoly& g);
TropPoly poly_otimes(const TropPoly& f, const TropPoly& g);

/// Terms that are the unique maximum at some real point.
std::vector<Monomial> essential_terms(const TropPoly& f);

/// Sub-polynomial on the essential terms.
TropPoly essentialize(const TropPoly& f);

/// A point at which f and g take different values, or nullopt when they are
/// equivalent as functions. Throws InvalidArgument on variable-set mismatch.
std::optional<RationalPoint> separating_point(const TropPoly& f, const TropPoly& g);

bool equivalent(const TropPoly& f, const TropPoly& g);

/// Single-variable route through the upper concave hull of
/// (exponent, coefficient) pairs. Throws InvalidArgument for more than one variable.
bool equivalent_univariate(const TropPoly& f, const TropPoly& g);
/// Hull vertices, ordered by exponent.
std::vector<std::pair<std::uint32_t, Rational>> univariate_hull(const TropPoly& f);
/// Separating abscissa for two univariate polynomials, found among hull
/// breakpoints and one point beyond each end.
std::optional<Rational> univariate_separating_point(const TropPoly& f, const TropPoly& g);

/// max(c + 2*x(a,1) + x(b,2), ...), or "-inf".
std::string to_string(const TropPoly& f);

} // namespace tropid
