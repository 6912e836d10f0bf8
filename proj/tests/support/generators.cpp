#include "generators.hpp"

#include <algorithm>

namespace tropid::testing {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, std::int64_t range, std::int64_t max_den) {
    Rational r(static_cast<long>(uniform_int(rng, -range * max_den, range * max_den)),
               static_cast<unsigned long>(uniform_int(rng, 1, max_den)));
    r.canonicalize();
    return r;
}

Word random_word(Rng& rng, const std::string& letters, std::size_t length) {
    std::string s;
    for (std::size_t i = 0; i < length; ++i)
        s.push_back(letters[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(letters.size()) - 1))]);
    return Word(s);
}

Identity random_identity(Rng& rng, std::size_t max_side, std::size_t letters) {
    const std::string alphabet = std::string("abcdefghijklmnopqrstuvwxyz").substr(0, letters);
    const auto len = [&] { return static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_side))); };
    Word l = random_word(rng, alphabet, len());
    Word r = random_word(rng, alphabet, len());
    return Identity::make(l, r, Alphabet(alphabet));
}

Identity random_same_content_identity(Rng& rng, std::size_t length, const std::string& letters) {
    Word l = random_word(rng, letters, length);
    std::string r = l.str();
    std::shuffle(r.begin(), r.end(), rng);
    return Identity::make(l, Word(r), Alphabet(letters));
}

std::vector<Word> all_words(const std::string& letters, std::size_t max_len) {
    std::vector<Word> out;
    const Alphabet a(letters);
    for (std::size_t k = 1; k <= max_len; ++k) {
        std::vector<std::size_t> digits(k, 0);
        while (true) {
            std::string s;
            for (auto d : digits) s.push_back(a.letters()[d]);
            out.emplace_back(s);
            std::size_t p = k;
            while (p > 0 && ++digits[p - 1] == a.size()) digits[--p] = 0;
            if (p == 0) break;
        }
    }
    return out;
}

std::shared_ptr<const VariableSet> numbered_variables(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const VariableSet>(names);
}

namespace {

Monomial random_monomial(Rng& rng, std::size_t n, std::uint32_t max_exp) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = static_cast<std::uint32_t>(uniform_int(rng, 0, max_exp));
    return Monomial(e);
}

} // namespace

TropPoly random_poly(Rng& rng, std::shared_ptr<const VariableSet> vars, std::size_t terms, std::uint32_t max_exp,
                     std::int64_t coeff_range) {
    TropPoly f(vars);
    for (std::size_t t = 0; t < terms; ++t)
        f.add_term(random_monomial(rng, vars->size(), max_exp), Rational(static_cast<long>(uniform_int(rng, -coeff_range, coeff_range))));
    return f;
}

TropPoly random_zero_flat_poly(Rng& rng, std::shared_ptr<const VariableSet> vars, std::size_t terms,
                               std::uint32_t max_exp) {
    return random_poly(rng, std::move(vars), terms, max_exp, 0);
}

TropMatrix random_gamma_matrix(Rng& rng, const PosetPtr& index, std::int64_t range, double bottom) {
    std::bernoulli_distribution drop(bottom);
    TropMatrix m(index);
    for (std::size_t i = 0; i < index->size(); ++i)
        for (std::size_t j = 0; j < index->size(); ++j)
            if (index->leq(i, j) && !drop(rng)) m.at(i, j) = TropScalar(static_cast<long>(uniform_int(rng, -range, range)));
    return m;
}

TropMatrix random_finitary_matrix(Rng& rng, const PosetPtr& index, std::int64_t range) {
    return random_gamma_matrix(rng, index, range, 0.0);
}

Poset random_poset(Rng& rng, std::size_t size, double edge_probability) {
    std::vector<std::size_t> perm(size);
    for (std::size_t i = 0; i < size; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::string(1, static_cast<char>('p' + i)));
    std::bernoulli_distribution edge(edge_probability);
    std::vector<std::pair<std::string, std::string>> pairs;
    // Edges only go forward in the shuffled order, so the relation is acyclic.
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
            if (edge(rng)) pairs.emplace_back(labels[perm[a]], labels[perm[b]]);
    return Poset::from_relation(labels, pairs);
}

} // namespace tropid::testing
