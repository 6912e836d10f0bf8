#include "tropid/witness.hpp"

namespace tropid {

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const TropMatrix& a, const TropMatrix& b) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

} // namespace

bool Witness::sides_differ() const {
    return std::visit([](const auto& w) { return !(w.left == w.right); }, data);
}

std::string model_name(Witness::Model m) {
    switch (m) {
        case Witness::Model::UpperTriangular: return "utn";
        case Witness::Model::Poset: return "poset";
        case Witness::Model::Bicyclic: return "bicyclic";
        case Witness::Model::Fmim: return "fmim";
    }
    return "?";
}

Witness make_matrix_witness(const Identity& id, Witness::Model model, std::map<Letter, TropMatrix> assignment,
                            std::optional<std::pair<std::size_t, std::size_t>> coordinate) {
    TropMatrix left = eval_word(id.left, assignment);
    TropMatrix right = eval_word(id.right, assignment);
    if (!coordinate) coordinate = first_difference(left, right);
    return Witness{model, MatrixWitness{std::move(assignment), std::move(left), std::move(right), coordinate}};
}

Witness make_bicyclic_witness(const Identity& id, std::map<Letter, Bicyclic> assignment) {
    Bicyclic left = eval_word(id.left, assignment);
    Bicyclic right = eval_word(id.right, assignment);
    return Witness{Witness::Model::Bicyclic, BicyclicWitness{std::move(assignment), std::move(left), std::move(right)}};
}

Witness make_fmim_witness(const Identity& id, std::map<Letter, Fmim> assignment) {
    Fmim left = eval_word(id.left, assignment);
    Fmim right = eval_word(id.right, assignment);
    return Witness{Witness::Model::Fmim, FmimWitness{std::move(assignment), left, right}};
}

bool verify_witness(const Identity& id, const Witness& witness) {
    // eval_word throws on a missing letter.
    return std::visit(
        [&](const auto& w) -> bool {
            const auto left = eval_word(id.left, w.assignment);
            const auto right = eval_word(id.right, w.assignment);
            if (!(left == w.left) || !(right == w.right)) return false;
            if constexpr (std::is_same_v<std::decay_t<decltype(w)>, MatrixWitness>) {
                if (!w.coordinate) return false;
                const auto [i, j] = *w.coordinate;
                if (i >= left.dim() || j >= left.dim()) return false;
                return left.at(i, j) != right.at(i, j);
            } else {
                return !(left == right);
            }
        },
        witness.data);
}

} // namespace tropid
