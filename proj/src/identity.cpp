#include "tropid/identity.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "tropid/error.hpp"

namespace tropid {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) && static_cast<unsigned char>(c) < 128; }

} // namespace

Alphabet::Alphabet(std::string_view letters) {
    std::set<char> set;
    for (char c : letters) {
        if (!is_letter(c)) throw ParseError(std::string("not a letter: '") + c + "'");
        set.insert(c);
    }
    letters_.assign(set.begin(), set.end());
}

bool Alphabet::contains(Letter c) const { return std::binary_search(letters_.begin(), letters_.end(), c); }

std::size_t Alphabet::index_of(Letter c) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), c);
    if (it == letters_.end() || *it != c) throw InvalidArgument(std::string("letter '") + c + "' not in alphabet");
    return static_cast<std::size_t>(it - letters_.begin());
}

Letter Word::at(std::size_t position) const {
    if (position < 1 || position > letters_.size())
        throw std::out_of_range("word position " + std::to_string(position) + " outside 1.." +
                                std::to_string(letters_.size()));
    return letters_[position - 1];
}

Identity Identity::make(Word left, Word right, std::optional<Alphabet> alphabet) {
    if (left.empty() || right.empty()) throw InvalidArgument("identity sides must be nonempty");
    Alphabet sigma = alphabet ? *alphabet : Alphabet(left.str() + right.str());
    for (const Word* w : {&left, &right})
        for (char c : w->str())
            if (!sigma.contains(c))
                throw InvalidArgument(std::string("letter '") + c + "' outside the alphabet '" + sigma.letters() + "'");
    return Identity{std::move(left), std::move(right), std::move(sigma)};
}

Word parse_word(std::string_view text) {
    std::string out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        const char c = text[i];
        if (!is_letter(c)) throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
        ++i;
        skip_ws();
        bool caret = false;
        if (i < text.size() && text[i] == '^') {
            caret = true;
            ++i;
            skip_ws();
        }
        std::size_t exponent = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (text[i] == '0') throw ParseError("exponent may not start with 0 at offset " + std::to_string(i));
            exponent = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exponent = exponent * 10 + static_cast<std::size_t>(text[i] - '0');
                if (exponent > 1'000'000) throw ParseError("exponent too large");
                ++i;
            }
        } else if (caret) {
            throw ParseError("'^' must be followed by a positive exponent");
        }
        out.append(exponent, c);
        skip_ws();
    }
    if (out.empty()) throw ParseError("empty word");
    return Word(std::move(out));
}

Identity parse_identity(std::string_view text, std::optional<Alphabet> alphabet) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError("identity must contain '='");
    if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("identity contains more than one '='");
    Word left, right;
    try {
        left = parse_word(text.substr(0, eq));
    } catch (const ParseError& e) {
        throw ParseError(std::string("left side: ") + e.what());
    }
    try {
        right = parse_word(text.substr(eq + 1));
    } catch (const ParseError& e) {
        throw ParseError(std::string("right side: ") + e.what());
    }
    try {
        return Identity::make(std::move(left), std::move(right), std::move(alphabet));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

std::map<Letter, std::size_t> content(const Word& w) {
    std::map<Letter, std::size_t> out;
    for (char c : w.str()) ++out[c];
    return out;
}

bool same_content(const Word& a, const Word& b) { return content(a) == content(b); }

std::size_t prefix_count(const Word& w, Letter s, std::size_t i) {
    if (i > w.size()) throw std::out_of_range("prefix length " + std::to_string(i) + " exceeds |w| = " + std::to_string(w.size()));
    return static_cast<std::size_t>(std::count(w.str().begin(), w.str().begin() + static_cast<std::ptrdiff_t>(i), s));
}

std::size_t between_count(const Word& w, Letter s, std::size_t p, std::size_t q) {
    if (!(p < q) || q > w.size() + 1)
        throw std::out_of_range("between_count needs 0 <= p < q <= |w|+1, got (" + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
    // positions p+1 .. q-1 (1-based) are string indices p .. q-2
    return static_cast<std::size_t>(std::count(w.str().begin() + static_cast<std::ptrdiff_t>(p),
                                               w.str().begin() + static_cast<std::ptrdiff_t>(q - 1), s));
}

std::vector<std::vector<std::size_t>> prefix_table(const Word& w, const Alphabet& alphabet) {
    std::vector<std::vector<std::size_t>> table(alphabet.size(), std::vector<std::size_t>(w.size() + 1, 0));
    for (std::size_t i = 1; i <= w.size(); ++i) {
        for (std::size_t s = 0; s < alphabet.size(); ++s) table[s][i] = table[s][i - 1];
        ++table[alphabet.index_of(w.at(i))][i];
    }
    return table;
}

MonoidReduction monoid_reduction(const Identity& id) {
    MonoidReduction out;
    const std::string& letters = id.alphabet.letters();
    if (letters.size() > 20) throw InvalidArgument("monoid reduction over more than 20 letters");
    const std::size_t subsets = std::size_t{1} << letters.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        auto erase = [&](const Word& w) {
            std::string kept;
            for (char c : w.str())
                if (!(mask & (std::size_t{1} << id.alphabet.index_of(c)))) kept.push_back(c);
            return kept;
        };
        std::string l = erase(id.left), r = erase(id.right);
        if (l.empty() && r.empty()) continue;
        if (l.empty() || r.empty()) {
            ++out.unbalanced;
            continue;
        }
        out.identities.push_back(Identity::make(Word(std::move(l)), Word(std::move(r)), id.alphabet));
    }
    return out;
}

Identity adjan_identity() { return parse_identity("ab^2a^2bab^2a = ab^2aba^2b^2a"); }

} // namespace tropid
