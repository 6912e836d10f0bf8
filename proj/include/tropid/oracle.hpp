#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tropid/identity.hpp"
#include "tropid/poset.hpp"
#include "tropid/witness.hpp"

namespace tropid {

/// Randomised falsification by direct evaluation. Independent of the
/// polynomial machinery, so it can cross-check the deterministic checker.
struct OracleConfig {
    Witness::Model model = Witness::Model::UpperTriangular;
    std::size_t n = 2;            // UT_n dimension
    PosetPtr poset;               // index for Model::Poset
    std::size_t trials = 1000;
    std::int64_t range = 0;       // entries drawn from [-range, range]; 0 means max(|w|, |v|)
    double bottom_probability = 0.25;  // chance that an above-diagonal comparable entry is -inf
    std::uint64_t seed = 1;
};

struct OracleResult {
    std::size_t trials_run = 0;
    std::optional<Witness> witness;  // first verified counterexample
};

/// Throws InvalidArgument on a malformed configuration.
OracleResult random_falsify(const Identity& id, const OracleConfig& config);

} // namespace tropid
