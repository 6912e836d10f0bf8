#include "tropid/families.hpp"

#include "tropid/error.hpp"

namespace tropid {

std::string letter_variable(Letter s) { return std::string("x(") + s + ")"; }

std::string vertex_variable(Letter s, const std::string& vertex) { return std::string("x(") + s + "," + vertex + ")"; }

std::shared_ptr<const VariableSet> letter_variables(const Alphabet& alphabet) {
    std::vector<std::string> names;
    for (char s : alphabet.letters()) names.push_back(letter_variable(s));
    return std::make_shared<const VariableSet>(std::move(names));
}

std::shared_ptr<const VariableSet> path_variables(const Alphabet& alphabet, const std::vector<std::string>& path) {
    std::vector<std::string> names;
    for (char s : alphabet.letters())
        for (const auto& v : path) names.push_back(vertex_variable(s, v));
    return std::make_shared<const VariableSet>(std::move(names));
}

TropPoly build_f_t_w(const Word& w, Letter t, const Alphabet& alphabet) {
    auto vars = letter_variables(alphabet);
    std::vector<std::size_t> slot(alphabet.size());
    for (std::size_t s = 0; s < alphabet.size(); ++s) slot[s] = *vars->index_of(letter_variable(alphabet.letters()[s]));

    TropPoly f(vars);
    std::vector<std::uint32_t> seen(alphabet.size(), 0);
    const Rational zero(0);
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const Letter c = w.at(i);
        if (c == t) {
            std::vector<std::uint32_t> e(vars->size(), 0);
            for (std::size_t s = 0; s < alphabet.size(); ++s) e[slot[s]] = seen[s];
            f.add_term(Monomial(std::move(e)), zero);
        }
        ++seen[alphabet.index_of(c)];
    }
    return f;
}

namespace {

struct OccurrenceWalker {
    const Word& w;
    const Word& u;
    const std::vector<std::vector<std::size_t>>& prefix;  // [letter][i]
    const std::vector<std::vector<std::size_t>>& slot;    // [letter][path position]
    TropPoly& out;
    std::vector<std::size_t> alpha;  // alpha[0..|u|+1]

    void emit() {
        const std::size_t letters = prefix.size();
        std::vector<std::uint32_t> e(out.variables().size(), 0);
        for (std::size_t k = 0; k <= u.size(); ++k) {
            const std::size_t lo = alpha[k], hi = alpha[k + 1];
            for (std::size_t s = 0; s < letters; ++s)
                e[slot[s][k]] = static_cast<std::uint32_t>(prefix[s][hi - 1] - prefix[s][lo]);
        }
        out.add_term(Monomial(std::move(e)), Rational(0));
    }

    void walk(std::size_t k) {
        if (k > u.size()) {
            emit();
            return;
        }
        const Letter want = u.at(k);
        // Leave room for the remaining |u| - k letters.
        const std::size_t last = w.size() - (u.size() - k);
        for (std::size_t p = alpha[k - 1] + 1; p <= last; ++p) {
            if (w.at(p) != want) continue;
            alpha[k] = p;
            walk(k + 1);
        }
    }
};

} // namespace

TropPoly build_f_u_rho(const Word& w, const Word& u, const std::vector<std::string>& path, const Alphabet& alphabet) {
    if (path.size() != u.size() + 1)
        throw InvalidArgument("path has " + std::to_string(path.size()) + " vertices, expected |u| + 1 = " +
                              std::to_string(u.size() + 1));
    auto vars = path_variables(alphabet, path);
    std::vector<std::vector<std::size_t>> slot(alphabet.size(), std::vector<std::size_t>(path.size()));
    for (std::size_t s = 0; s < alphabet.size(); ++s)
        for (std::size_t k = 0; k < path.size(); ++k)
            slot[s][k] = *vars->index_of(vertex_variable(alphabet.letters()[s], path[k]));

    TropPoly f(vars);
    for (char c : u.str())
        if (!alphabet.contains(c)) return f;
    if (u.size() > w.size()) return f;

    const auto prefix = prefix_table(w, alphabet);
    OccurrenceWalker walker{w, u, prefix, slot, f, std::vector<std::size_t>(u.size() + 2, 0)};
    walker.alpha[0] = 0;
    walker.alpha[u.size() + 1] = w.size() + 1;
    walker.walk(1);
    return f;
}

TropPoly build_f_u_rho(const Word& w, const Word& u, const Poset& poset, const Path& path, const Alphabet& alphabet) {
    std::vector<std::string> labels;
    for (std::size_t v : path) labels.push_back(poset.label(v));
    return build_f_u_rho(w, u, labels, alphabet);
}

std::vector<std::string> canonical_chain(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= k; ++i) out.push_back(std::to_string(i));
    return out;
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length) {
    std::vector<Word> out;
    const std::string& letters = alphabet.letters();
    if (letters.empty()) {
        if (length == 0) out.emplace_back();
        return out;
    }
    std::vector<std::size_t> digits(length, 0);
    for (;;) {
        std::string s(length, ' ');
        for (std::size_t i = 0; i < length; ++i) s[i] = letters[digits[i]];
        out.emplace_back(std::move(s));
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < letters.size()) break;
            digits[pos] = 0;
            if (pos == 0) return out;
        }
        if (length == 0) return out;
    }
}

} // namespace tropid
