#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropid {

using Letter = char;

/// Sorted, duplicate-free set of letters [A-Za-z].
class Alphabet {
public:
    Alphabet() = default;
    /// Throws ParseError on a character outside [A-Za-z].
    explicit Alphabet(std::string_view letters);

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] const std::string& letters() const { return letters_; }
    [[nodiscard]] bool contains(Letter c) const;
    [[nodiscard]] std::size_t index_of(Letter c) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string letters_;
};

/// A sequence of letters. Identity sides are nonempty; the empty word only
/// appears as the u of the path-indexed polynomial families.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    /// 1-based access, matching w_1 ... w_|w|.
    [[nodiscard]] Letter at(std::size_t position) const;
    [[nodiscard]] const std::string& str() const { return letters_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string letters_;
};

struct Identity {
    Word left;
    Word right;
    Alphabet alphabet;

    /// Throws InvalidArgument when a side is empty or uses a letter outside the alphabet.
    static Identity make(Word left, Word right, std::optional<Alphabet> alphabet = std::nullopt);

    [[nodiscard]] std::string to_string() const { return left.str() + " = " + right.str(); }
};

/// identity := word "=" word ; word := (letter exponent?)+ ;
/// exponent := "^"? [1-9][0-9]* ; whitespace ignored.
/// Throws ParseError. With `alphabet`, letters outside it are rejected;
/// otherwise the alphabet is the set of letters that occur.
Identity parse_identity(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);

/// A single word in the same grammar (no "=").
Word parse_word(std::string_view text);

/// Letter multiplicities (letters that occur only).
std::map<Letter, std::size_t> content(const Word& w);
bool same_content(const Word& a, const Word& b);

/// Occurrences of s among w_1 .. w_i, 0 <= i <= |w|. Throws std::out_of_range.
std::size_t prefix_count(const Word& w, Letter s, std::size_t i);

/// Occurrences of s at positions strictly between p and q, 0 <= p < q <= |w|+1.
/// Throws std::out_of_range.
std::size_t between_count(const Word& w, Letter s, std::size_t p, std::size_t q);

/// Per-letter prefix sums: table[s][i] = prefix_count(w, letter s, i).
std::vector<std::vector<std::size_t>> prefix_table(const Word& w, const Alphabet& alphabet);

/// Monoid identities reduce to the semigroup identities obtained by erasing
/// every subset of letters. Erasures that leave both sides empty are dropped;
/// erasures that leave exactly one side empty cannot be expressed as
/// semigroup identities and are counted in `unbalanced` instead.
struct MonoidReduction {
    std::vector<Identity> identities;
    std::size_t unbalanced = 0;
};
MonoidReduction monoid_reduction(const Identity& id);

/// The identity ab^2a^2bab^2a = ab^2aba^2b^2a.
Identity adjan_identity();

} // namespace tropid
