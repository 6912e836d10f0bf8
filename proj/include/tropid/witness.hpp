#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "tropid/identity.hpp"
#include "tropid/matrix.hpp"
#include "tropid/models.hpp"

namespace tropid {

/// Letter assignment into a chain-structured matrix semigroup, with both
/// evaluated sides and the coordinate at which they differ.
struct MatrixWitness {
    std::map<Letter, TropMatrix> assignment;
    TropMatrix left;
    TropMatrix right;
    std::optional<std::pair<std::size_t, std::size_t>> coordinate;
};

struct BicyclicWitness {
    std::map<Letter, Bicyclic> assignment;
    Bicyclic left;
    Bicyclic right;
};

struct FmimWitness {
    std::map<Letter, Fmim> assignment;
    Fmim left;
    Fmim right;
};

/// A letter-indexed family of model elements evaluated on both sides of an
/// identity. Built through the make_* functions, which evaluate and store.
struct Witness {
    enum class Model { UpperTriangular, Poset, Bicyclic, Fmim };
    Model model;
    std::variant<MatrixWitness, BicyclicWitness, FmimWitness> data;

    [[nodiscard]] bool sides_differ() const;
};

std::string model_name(Witness::Model m);

/// Evaluates both sides. `coordinate` pins the entry reported as differing;
/// without it the first differing entry in row-major order is recorded.
Witness make_matrix_witness(const Identity& id, Witness::Model model, std::map<Letter, TropMatrix> assignment,
                            std::optional<std::pair<std::size_t, std::size_t>> coordinate = std::nullopt);
Witness make_bicyclic_witness(const Identity& id, std::map<Letter, Bicyclic> assignment);
Witness make_fmim_witness(const Identity& id, std::map<Letter, Fmim> assignment);

/// Re-evaluates both sides directly: true iff the stored values are
/// reproduced and differ (at the stored coordinate, for matrix models).
/// Throws InvalidArgument when the assignment misses a letter.
bool verify_witness(const Identity& id, const Witness& witness);

} // namespace tropid
