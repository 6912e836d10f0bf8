#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropid/identity.hpp"
#include "tropid/matrix.hpp"
#include "tropid/polynomial.hpp"
#include "tropid/poset.hpp"

namespace tropid::testing {

using Rng = std::mt19937_64;

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
Rational random_rational(Rng& rng, std::int64_t range, std::int64_t max_den);

Word random_word(Rng& rng, const std::string& letters, std::size_t length);

/// Sides of length 1..max_side over the first `letters` letters of "abc...".
Identity random_identity(Rng& rng, std::size_t max_side, std::size_t letters);

/// Right side is a random permutation of the left side.
Identity random_same_content_identity(Rng& rng, std::size_t length, const std::string& letters);

/// Every word of length 1..max_len over `letters`.
std::vector<Word> all_words(const std::string& letters, std::size_t max_len);

TropPoly random_poly(Rng& rng, std::shared_ptr<const VariableSet> vars, std::size_t terms, std::uint32_t max_exp,
                     std::int64_t coeff_range);
TropPoly random_zero_flat_poly(Rng& rng, std::shared_ptr<const VariableSet> vars, std::size_t terms,
                               std::uint32_t max_exp);
std::shared_ptr<const VariableSet> numbered_variables(std::size_t n);

/// Entries finite with probability 1 - bottom where i <= j, -inf elsewhere.
TropMatrix random_gamma_matrix(Rng& rng, const PosetPtr& index, std::int64_t range, double bottom);
TropMatrix random_finitary_matrix(Rng& rng, const PosetPtr& index, std::int64_t range);

/// Random order on `size` elements from a random DAG on a random labelling.
Poset random_poset(Rng& rng, std::size_t size, double edge_probability);

} // namespace tropid::testing
