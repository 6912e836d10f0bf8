#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropid {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer ceil(const Rational& value);
Integer floor(const Rational& value);

/// An element of the tropical semiring: a rational or the bottom element
/// (-inf). Bottom is neutral for oplus and absorbing for otimes.
class TropScalar {
public:
    TropScalar() = default;  // bottom
    TropScalar(const Rational& value);
    TropScalar(long value);
    TropScalar(int value) : TropScalar(static_cast<long>(value)) {}

    static TropScalar bottom() { return TropScalar(); }

    [[nodiscard]] bool is_bottom() const { return !value_.has_value(); }
    [[nodiscard]] bool is_finite() const { return value_.has_value(); }

    /// Precondition: is_finite().
    [[nodiscard]] const Rational& value() const;

    friend bool operator==(const TropScalar& a, const TropScalar& b);
    friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

private:
    std::optional<Rational> value_;
};

/// Tropical sum: max, with bottom least.
TropScalar oplus(const TropScalar& a, const TropScalar& b);
/// Tropical product: classical sum, bottom absorbing.
TropScalar otimes(const TropScalar& a, const TropScalar& b);

/// "-inf" or the rational rendering.
std::string to_string(const TropScalar& value);
/// Accepts "-inf" and anything parse_rational accepts.
TropScalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TropScalar& value);

} // namespace tropid
