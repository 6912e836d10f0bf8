#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropid {

/// A path in a poset: distinct element indices, each strictly below the next.
using Path = std::vector<std::size_t>;

/// A finite partial order over labelled elements. The relation is stored
/// reflexively and transitively closed; construction rejects cycles.
class Poset {
public:
    /// Builds the reflexive-transitive closure of `pairs` (given as (lower,
    /// upper) labels). Throws InvalidArgument on duplicate or unknown labels,
    /// or when the closure is not antisymmetric.
    static Poset from_relation(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

    /// Elements "1".."n" with the usual total order.
    static Poset chain(std::size_t n);
    static Poset antichain(std::size_t n);

    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

    /// i <= j in the (closed) order.
    [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return rel_[i * size() + j]; }
    [[nodiscard]] bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

    /// Non-reflexive pairs (i, j) with i < j, in row-major order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

    /// Vertex count of the longest chain; 0 only for the empty poset.
    [[nodiscard]] std::size_t max_chain_length() const;

    /// All k-vertex paths in lexicographic order of index tuples.
    [[nodiscard]] std::vector<Path> enumerate_paths(std::size_t k) const;
    /// k-vertex paths from `first` to `last`.
    [[nodiscard]] std::vector<Path> enumerate_paths(std::size_t k, std::size_t first, std::size_t last) const;

    /// Lexicographically first path of maximal vertex length.
    [[nodiscard]] Path canonical_max_chain() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.labels_ == b.labels_ && a.rel_ == b.rel_;
    }

private:
    Poset(std::vector<std::string> labels, std::vector<bool> rel)
        : labels_(std::move(labels)), rel_(std::move(rel)) {}

    std::vector<std::string> labels_;
    std::vector<bool> rel_;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr make_poset(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// The three-element order {1 <= 3, 2 <= 3} carrying the tropical image of
/// the free monogenic inverse monoid.
Poset fmim_poset();

} // namespace tropid
