#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropid/error.hpp"
#include "tropid/identity.hpp"
#include "tropid/matrix.hpp"
#include "tropid/poset.hpp"

namespace tropid {

// ---------------------------------------------------------------------------
// Bicyclic monoid <p, q | pq = 1>, elements q^i p^j stored as (i, j).
// ---------------------------------------------------------------------------

/// (i, j) with coordinates in T: Integer for the bicyclic monoid itself
/// (i, j >= 0), Rational for its rational extension.
template <class T>
struct BicyclicPair {
    T i;
    T j;

    friend bool operator==(const BicyclicPair&, const BicyclicPair&) = default;
};

using Bicyclic = BicyclicPair<Integer>;
using BicyclicQ = BicyclicPair<Rational>;

/// Throws InvalidArgument on a negative coordinate.
Bicyclic make_bicyclic(Integer i, Integer j);

inline Bicyclic bicyclic_p() { return {0, 1}; }
inline Bicyclic bicyclic_q() { return {1, 0}; }
inline Bicyclic bicyclic_one() { return {0, 0}; }

/// (a,b)(c,d) = (a - b + max(b,c), d - c + max(b,c))
template <class T>
BicyclicPair<T> bicyclic_mul(const BicyclicPair<T>& x, const BicyclicPair<T>& y) {
    const T m = x.j < y.i ? y.i : x.j;
    return {T(x.i - x.j + m), T(y.j - y.i + m)};
}

/// q^i p^j -> [[i - j, i + j], [-inf, j - i]] over the 2-chain.
TropMatrix embed_bicyclic_ut2(const Bicyclic& x);
TropMatrix embed_bicyclic_ut2(const BicyclicQ& x);

std::string to_string(const Bicyclic& x);  // "q^i p^j"
std::string to_string(const BicyclicQ& x);

// ---------------------------------------------------------------------------
// Free monogenic inverse monoid as triples (i, j, k), i, j >= 0, -j <= k <= i.
// ---------------------------------------------------------------------------

class Fmim {
public:
    /// Throws InvalidArgument unless i, j >= 0 and -j <= k <= i.
    Fmim(std::int64_t i, std::int64_t j, std::int64_t k);

    static Fmim identity() { return {0, 0, 0}; }
    static Fmim generator() { return {1, 0, 1}; }
    static Fmim generator_inverse() { return {0, 1, -1}; }

    [[nodiscard]] std::int64_t i() const { return i_; }
    [[nodiscard]] std::int64_t j() const { return j_; }
    [[nodiscard]] std::int64_t k() const { return k_; }
    [[nodiscard]] bool is_idempotent() const { return k_ == 0; }

    friend bool operator==(const Fmim&, const Fmim&) = default;

private:
    std::int64_t i_, j_, k_;
};

/// (i,j,k)(i',j',k') = (max(i, i'+k), max(j, j'-k), k+k')
Fmim fmim_mul(const Fmim& x, const Fmim& y);

/// e <= f iff e = ef = fe (both idempotent).
bool fmim_idempotent_leq(const Fmim& e, const Fmim& f);

/// (i,j,k) -> [[k, -inf, i], [-inf, -k, j], [-inf, -inf, 0]] over the 3-chain.
TropMatrix embed_fmim_ut3(const Fmim& x);

std::string to_string(const Fmim& x);  // "(i,j,k)"

// ---------------------------------------------------------------------------
// Word evaluation
// ---------------------------------------------------------------------------

/// Left-to-right fold of `mul` over the images of the letters of w.
/// Throws InvalidArgument when a letter of w has no image.
template <class T, class Mul>
T eval_word(const Word& w, const std::map<Letter, T>& assignment, Mul mul) {
    if (w.empty()) throw InvalidArgument("cannot evaluate the empty word");
    auto image = [&](Letter c) -> const T& {
        auto it = assignment.find(c);
        if (it == assignment.end()) throw InvalidArgument(std::string("assignment has no image for letter '") + c + "'");
        return it->second;
    };
    T acc = image(w.str().front());
    for (std::size_t p = 1; p < w.size(); ++p) acc = mul(acc, image(w.str()[p]));
    return acc;
}

inline TropMatrix eval_word(const Word& w, const std::map<Letter, TropMatrix>& assignment) {
    return eval_word(w, assignment, [](const TropMatrix& a, const TropMatrix& b) { return mat_mul(a, b); });
}
inline Bicyclic eval_word(const Word& w, const std::map<Letter, Bicyclic>& assignment) {
    return eval_word(w, assignment, [](const Bicyclic& a, const Bicyclic& b) { return bicyclic_mul(a, b); });
}
inline BicyclicQ eval_word(const Word& w, const std::map<Letter, BicyclicQ>& assignment) {
    return eval_word(w, assignment, [](const BicyclicQ& a, const BicyclicQ& b) { return bicyclic_mul(a, b); });
}
inline Fmim eval_word(const Word& w, const std::map<Letter, Fmim>& assignment) {
    return eval_word(w, assignment, fmim_mul);
}

// ---------------------------------------------------------------------------
// Divisor construction: a chain-structured semigroup over a finite poset as
// the image of a subsemigroup of a direct product of upper triangular
// semigroups, one factor per path.
// ---------------------------------------------------------------------------

/// One upper triangular block per path of the poset; the block for a path is
/// indexed by the path's vertices in path order.
class DivisorElement {
public:
    DivisorElement(PosetPtr poset, std::map<Path, TropMatrix> blocks);

    [[nodiscard]] const Poset& poset() const { return *poset_; }
    [[nodiscard]] const PosetPtr& poset_ptr() const { return poset_; }
    [[nodiscard]] const std::map<Path, TropMatrix>& blocks() const { return blocks_; }
    [[nodiscard]] const TropMatrix& block(const Path& path) const;

    friend bool operator==(const DivisorElement& a, const DivisorElement& b) {
        return *a.poset_ == *b.poset_ && a.blocks_ == b.blocks_;
    }

private:
    PosetPtr poset_;
    std::map<Path, TropMatrix> blocks_;
};

/// All paths of every vertex length 1 .. max chain length.
std::vector<Path> all_paths(const Poset& poset);

/// Restriction of m to every path. Throws InvalidArgument if m is not in
/// Gamma(T) over its index poset.
DivisorElement divisor_psi(const TropMatrix& m);

/// Entrywise max over the paths containing both indices; -inf where none does.
TropMatrix divisor_phi(const DivisorElement& d);

/// Componentwise product. Throws InvalidArgument on a poset mismatch.
DivisorElement divisor_mul(const DivisorElement& a, const DivisorElement& b);

} // namespace tropid
