#include "tropid/checker.hpp"

#include "tropid/error.hpp"
#include "tropid/families.hpp"

namespace tropid {

std::string method_name(Verdict::Method m) {
    switch (m) {
        case Verdict::Method::PathFamilies: return "path-families";
        case Verdict::Method::LetterFamilies: return "letter-families";
        case Verdict::Method::TwoLetterFastPath: return "two-letter-fast-path";
    }
    return "?";
}

namespace {

Failure make_failure(Failure::Family family, const TropPoly& f, const TropPoly& g, RationalPoint point) {
    Failure out;
    out.family = family;
    out.variables = f.variables_ptr();
    out.left_value = f.evaluate(point);
    out.right_value = g.evaluate(point);
    out.point = std::move(point);
    out.left_poly = to_string(f);
    out.right_poly = to_string(g);
    TROPID_ENSURE(out.left_value != out.right_value, "recorded failure point does not separate");
    return out;
}

} // namespace

Verdict check_identity(const Identity& id, std::size_t n, const CheckOptions& options) {
    if (n == 0) throw InvalidArgument("n must be at least 1");
    if (options.fast_two_letter && n == 2 && id.alphabet.size() == 2) return check_ut2_two_letter(id);

    Verdict verdict;
    verdict.n = n;
    verdict.method = Verdict::Method::PathFamilies;
    for (std::size_t i = 0; i < n; ++i) {
        const auto path = canonical_chain(i + 1);
        for (const Word& u : words_of_length(id.alphabet, i)) {
            const TropPoly f = build_f_u_rho(id.left, u, path, id.alphabet);
            const TropPoly g = build_f_u_rho(id.right, u, path, id.alphabet);
            ++verdict.comparisons;
            if (f == g) continue;
            if (auto x = separating_point(f, g)) {
                Failure failure = make_failure(Failure::Family::Path, f, g, std::move(*x));
                failure.u = u;
                failure.path = path;
                verdict.holds = false;
                verdict.failure = std::move(failure);
                return verdict;
            }
        }
    }
    return verdict;
}

Verdict check_ut2_letters(const Identity& id) {
    Verdict verdict;
    verdict.n = 2;
    verdict.method = Verdict::Method::LetterFamilies;
    for (char t : id.alphabet.letters()) {
        const TropPoly f = build_f_t_w(id.left, t, id.alphabet);
        const TropPoly g = build_f_t_w(id.right, t, id.alphabet);
        ++verdict.comparisons;
        if (f == g) continue;
        if (auto x = separating_point(f, g)) {
            Failure failure = make_failure(Failure::Family::Letter, f, g, std::move(*x));
            failure.letter = t;
            verdict.holds = false;
            verdict.failure = std::move(failure);
            return verdict;
        }
    }
    return verdict;
}

namespace {

// f(x, y) with the second letter's variable pinned to y.
TropPoly restrict_second(const TropPoly& f, const Rational& y, const std::shared_ptr<const VariableSet>& single) {
    TropPoly out(single);
    for (const auto& [mono, coeff] : f.terms())
        out.add_term(Monomial({mono[0]}), Rational(coeff + y * static_cast<long>(mono[1])));
    return out;
}

} // namespace

Verdict check_ut2_two_letter(const Identity& id) {
    if (id.alphabet.size() != 2) throw InvalidArgument("two-letter fast path needs exactly two letters");
    const char first = id.alphabet.letters()[0];
    auto single = std::make_shared<const VariableSet>(std::vector<std::string>{letter_variable(first)});

    Verdict verdict;
    verdict.n = 2;
    verdict.method = Verdict::Method::TwoLetterFastPath;
    for (char t : id.alphabet.letters()) {
        const TropPoly f = build_f_t_w(id.left, t, id.alphabet);
        const TropPoly g = build_f_t_w(id.right, t, id.alphabet);
        for (long y : {1L, -1L}) {
            ++verdict.comparisons;
            const TropPoly fr = restrict_second(f, Rational(y), single);
            const TropPoly gr = restrict_second(g, Rational(y), single);
            if (equivalent_univariate(fr, gr)) continue;
            const auto x = univariate_separating_point(fr, gr);
            TROPID_ENSURE(x.has_value(), "distinct hulls without a separating abscissa");
            // Variables x(first) < x(second) in the sorted set.
            Failure failure = make_failure(Failure::Family::Letter, f, g, RationalPoint{*x, Rational(y)});
            failure.letter = t;
            verdict.holds = false;
            verdict.failure = std::move(failure);
            return verdict;
        }
    }
    return verdict;
}

Verdict check_poset(const Identity& id, const Poset& poset, const CheckOptions& options) {
    const std::size_t n = poset.max_chain_length();
    if (n == 0) throw InvalidArgument("empty poset");
    return check_identity(id, n, options);
}

Witness witness_from_failure(const Identity& id, const Failure& failure, const PosetPtr& index, Witness::Model model) {
    const VariableSet& vars = *failure.variables;
    std::map<Letter, TropMatrix> assignment;

    if (failure.family == Failure::Family::Letter) {
        if (index->size() != 2 || !index->less(0, 1))
            throw InvalidArgument("letter-family witnesses live over the 2-chain");
        for (char s : id.alphabet.letters()) {
            TropMatrix m(index);
            m.at(0, 0) = TropScalar(failure.point[*vars.index_of(letter_variable(s))]);
            m.at(1, 1) = TropScalar(0);
            if (s == failure.letter) m.at(0, 1) = TropScalar(0);
            assignment.emplace(s, std::move(m));
        }
        return make_matrix_witness(id, model, std::move(assignment), std::make_pair(std::size_t{0}, std::size_t{1}));
    }

    const Path chain = index->canonical_max_chain();
    const std::size_t len = failure.path.size();
    if (chain.size() < len) throw InvalidArgument("index poset has no chain long enough for this failure");

    for (char s : id.alphabet.letters()) {
        TropMatrix m(index);
        for (std::size_t p = 0; p < index->size(); ++p) m.at(p, p) = TropScalar(0);
        for (std::size_t k = 0; k < len; ++k)
            m.at(chain[k], chain[k]) = TropScalar(failure.point[*vars.index_of(vertex_variable(s, failure.path[k]))]);
        for (std::size_t k = 1; k < len; ++k)
            if (failure.u.at(k) == s) m.at(chain[k - 1], chain[k]) = TropScalar(0);
        assignment.emplace(s, std::move(m));
    }
    return make_matrix_witness(id, model, std::move(assignment), std::make_pair(chain[0], chain[len - 1]));
}

Witness falsifying_witness(const Identity& id, std::size_t n) {
    const Verdict v = check_identity(id, n);
    if (v.holds) throw PreconditionError("identity holds in UT_" + std::to_string(n) + "; no falsifying witness");
    Witness w = witness_from_failure(id, *v.failure, make_poset(Poset::chain(n)), Witness::Model::UpperTriangular);
    TROPID_ENSURE(verify_witness(id, w), "constructed UT_n witness does not verify");
    return w;
}

Witness falsifying_witness(const Identity& id, const PosetPtr& poset) {
    const Verdict v = check_poset(id, *poset);
    if (v.holds) throw PreconditionError("identity holds over the poset; no falsifying witness");
    Witness w = witness_from_failure(id, *v.failure, poset, Witness::Model::Poset);
    TROPID_ENSURE(verify_witness(id, w), "constructed poset witness does not verify");
    return w;
}

namespace {

Integer lcm_of_denominators(const RationalPoint& x) {
    Integer d = 1;
    for (const auto& v : x) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
    return d;
}

Integer abs_int(const Integer& v) { return sgn(v) < 0 ? Integer(-v) : v; }

} // namespace

Witness bicyclic_witness(const Identity& id) {
    const auto cl = content(id.left), cr = content(id.right);
    if (cl != cr) {
        std::map<Letter, Bicyclic> assignment;
        char z = 0;
        for (char s : id.alphabet.letters()) {
            const auto l = cl.count(s) ? cl.at(s) : 0, r = cr.count(s) ? cr.at(s) : 0;
            if (!z && l != r) z = s;
        }
        for (char s : id.alphabet.letters()) assignment.emplace(s, s == z ? bicyclic_p() : bicyclic_one());
        Witness w = make_bicyclic_witness(id, std::move(assignment));
        TROPID_ENSURE(verify_witness(id, w), "content-mismatch bicyclic witness does not verify");
        return w;
    }

    const Verdict v = check_ut2_letters(id);
    if (v.holds) throw PreconditionError("identity holds in UT_2(T), hence in the bicyclic monoid");
    const Failure& failure = *v.failure;
    const VariableSet& vars = *failure.variables;
    const std::string& letters = id.alphabet.letters();
    const std::size_t total = id.left.size() + id.right.size();

    // Even integer point: x <- 2d x, d the lcm of the denominators.
    const Integer scale = 2 * lcm_of_denominators(failure.point);
    std::map<Letter, Integer> x;
    Integer max_abs = 0;
    for (char s : letters) {
        const Rational scaled = failure.point[*vars.index_of(letter_variable(s))] * Rational(scale);
        TROPID_ENSURE(scaled.get_den() == 1, "scaled point is not integral");
        x[s] = scaled.get_num();
        if (abs_int(x[s]) > max_abs) max_abs = abs_int(x[s]);
    }
    RationalPoint xs;
    for (const auto& name : vars.names()) {
        const char s = name[2];
        xs.push_back(Rational(x.at(s)));
    }

    // Largeness bound: every x'_s = E except the failing letter's, which
    // exceeds E by more than any gap between polynomial values at x.
    Integer bound = 0;
    std::map<Letter, TropScalar> fw, fv;
    for (char s : letters) {
        fw[s] = build_f_t_w(id.left, s, id.alphabet).evaluate(xs);
        fv[s] = build_f_t_w(id.right, s, id.alphabet).evaluate(xs);
        for (const TropScalar* val : {&fw[s], &fv[s]})
            if (val->is_finite()) {
                const Integer c = ceil(abs(val->value()));
                if (c > bound) bound = c;
            }
    }
    const Integer base = 2 * max_abs * static_cast<unsigned long>(total) + 2;
    std::map<Letter, Integer> top;
    for (char s : letters) top[s] = s == failure.letter ? Integer(base + 2 * (bound + 1)) : base;

    // The 2x2 morphism psi(s) = [[x_s, x'_s], [-inf, 0]] must be dominated by the failing letter.
    {
        const PosetPtr c2 = make_poset(Poset::chain(2));
        std::map<Letter, TropMatrix> psi;
        for (char s : letters) {
            TropMatrix m(c2);
            m.at(0, 0) = TropScalar(Rational(x[s]));
            m.at(0, 1) = TropScalar(Rational(top[s]));
            m.at(1, 1) = TropScalar(0);
            psi.emplace(s, std::move(m));
        }
        const TropMatrix lw = eval_word(id.left, psi), lv = eval_word(id.right, psi);
        const TropScalar t_top{Rational(top[failure.letter])};
        TROPID_ENSURE(lw.at(0, 1) == otimes(t_top, fw[failure.letter]) && lv.at(0, 1) == otimes(t_top, fv[failure.letter]),
                      "largeness bound failed to make the failing letter dominate");
        TROPID_ENSURE(lw.at(0, 1) != lv.at(0, 1), "2x2 transfer morphism does not falsify");
    }

    std::map<Letter, Bicyclic> assignment;
    for (char s : letters) {
        TROPID_ENSURE(top[s] > x[s] && sgn(top[s]) >= 0, "x'_s must be non-negative and exceed x_s");
        Integer i = top[s] / 2;
        Integer j = (top[s] - x[s]) / 2;
        assignment.emplace(s, make_bicyclic(std::move(i), std::move(j)));
    }
    Witness w = make_bicyclic_witness(id, std::move(assignment));
    TROPID_ENSURE(verify_witness(id, w), "bicyclic witness does not falsify the identity");
    return w;
}

} // namespace tropid
