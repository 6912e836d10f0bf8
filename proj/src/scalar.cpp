#include "tropid/scalar.hpp"

#include <cctype>

#include "tropid/error.hpp"

namespace tropid {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer ceil(const Rational& value) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

Integer floor(const Rational& value) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

TropScalar::TropScalar(const Rational& value) : value_(value) { value_->canonicalize(); }

TropScalar::TropScalar(long value) : value_(Rational(value)) {}

const Rational& TropScalar::value() const {
    if (!value_) throw PreconditionError("value() of the bottom element");
    return *value_;
}

bool operator==(const TropScalar& a, const TropScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
    return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
    if (a.is_bottom()) return b.is_bottom() ? std::strong_ordering::equal : std::strong_ordering::less;
    if (b.is_bottom()) return std::strong_ordering::greater;
    const int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

TropScalar oplus(const TropScalar& a, const TropScalar& b) { return a < b ? b : a; }

TropScalar otimes(const TropScalar& a, const TropScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return TropScalar::bottom();
    return TropScalar(Rational(a.value() + b.value()));
}

std::string to_string(const TropScalar& value) {
    return value.is_bottom() ? std::string("-inf") : to_string(value.value());
}

TropScalar parse_scalar(std::string_view text) {
    text = trim(text);
    if (text == "-inf" || text == "-Inf" || text == "-INF") return TropScalar::bottom();
    return TropScalar(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const TropScalar& value) { return os << to_string(value); }

} // namespace tropid
