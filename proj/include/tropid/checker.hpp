#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropid/identity.hpp"
#include "tropid/polynomial.hpp"
#include "tropid/poset.hpp"
#include "tropid/witness.hpp"

namespace tropid {

/// Where a non-equivalent polynomial pair was found.
struct Failure {
    enum class Family {
        Path,   // f_{u,tau}: word u, canonical chain tau of |u|+1 vertices
        Letter  // f_t: letter t, the 2x2 characterisation
    };
    Family family = Family::Path;
    Word u;
    std::vector<std::string> path;
    Letter letter = 0;
    std::shared_ptr<const VariableSet> variables;
    RationalPoint point;
    TropScalar left_value;
    TropScalar right_value;
    std::string left_poly;
    std::string right_poly;
};

struct Verdict {
    enum class Method { PathFamilies, LetterFamilies, TwoLetterFastPath };
    bool holds = true;
    std::size_t n = 0;
    Method method = Method::PathFamilies;
    std::size_t comparisons = 0;
    std::optional<Failure> failure;  // set iff !holds
};

std::string method_name(Verdict::Method m);

struct CheckOptions {
    /// n = 2 over a two-letter alphabet: compare single-variable restrictions
    /// through the hull routine. Ignored elsewhere.
    bool fast_two_letter = false;
};

/// Decides whether the identity holds in UT_n(T): for i = 0 .. n-1 and every
/// u of length i (lexicographic), f_{u,tau} of both sides must be equivalent,
/// tau = (1, ..., i+1). The first failing (i, u) is reported.
/// Throws InvalidArgument for n = 0.
Verdict check_identity(const Identity& id, std::size_t n, const CheckOptions& options = {});

/// UT_2 through the letter-indexed polynomials f_t only.
Verdict check_ut2_letters(const Identity& id);

/// UT_2 for two-letter alphabets through f_t(x, 1) and f_t(x, -1).
/// Throws InvalidArgument unless the alphabet has exactly two letters.
Verdict check_ut2_two_letter(const Identity& id);

/// Chain-structured semigroup over a finite poset: the UT_n check with n the
/// poset's maximum chain length. Throws InvalidArgument for an empty poset.
Verdict check_poset(const Identity& id, const Poset& poset, const CheckOptions& options = {});

/// Builds the falsifying morphism for a failed verdict. Path failures give
/// diagonal entries from the separating point and a 0 connector on letter u_k
/// from tau_{k-1} to tau_k; letter failures give the 2x2 construction with
/// a single 0 top-right entry on the failing letter.
/// `index` must have maximum chain length >= the failing path length.
Witness witness_from_failure(const Identity& id, const Failure& failure, const PosetPtr& index,
                             Witness::Model model = Witness::Model::Poset);

/// Throws PreconditionError when the identity holds in UT_n(T).
Witness falsifying_witness(const Identity& id, std::size_t n);
/// Same, with matrices indexed by the given poset.
Witness falsifying_witness(const Identity& id, const PosetPtr& poset);

/// Transfers a UT_2 failure into the bicyclic monoid. Throws
/// PreconditionError when the identity holds in UT_2(T); an internal failure
/// of the construction raises InternalError.
Witness bicyclic_witness(const Identity& id);

} // namespace tropid
