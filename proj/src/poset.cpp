#include "tropid/poset.hpp"

#include <algorithm>
#include <set>

#include "tropid/error.hpp"

namespace tropid {

Poset Poset::from_relation(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    const std::size_t n = elements.size();
    {
        std::set<std::string> seen;
        for (const auto& e : elements) {
            if (!seen.insert(e).second) throw InvalidArgument("duplicate poset element '" + e + "'");
        }
    }
    auto find = [&](const std::string& label) {
        auto it = std::find(elements.begin(), elements.end(), label);
        if (it == elements.end()) throw InvalidArgument("unknown poset element '" + label + "'");
        return static_cast<std::size_t>(it - elements.begin());
    };

    std::vector<bool> rel(n * n, false);
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
    for (const auto& [lo, hi] : pairs) rel[find(lo) * n + find(hi)] = true;

    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel[k * n + j]) rel[i * n + j] = true;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel[i * n + j] && rel[j * n + i])
                throw InvalidArgument("relation has a cycle through '" + elements[i] + "' and '" +
                                      elements[j] + "'");

    return Poset(std::move(elements), std::move(rel));
}

Poset Poset::chain(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 1) pairs.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return from_relation(std::move(labels), pairs);
}

Poset Poset::antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return from_relation(std::move(labels), {});
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (less(i, j)) out.emplace_back(i, j);
    return out;
}

std::size_t Poset::max_chain_length() const {
    const std::size_t n = size();
    if (n == 0) return 0;
    // In a closed order, i < j implies i has strictly fewer elements below it,
    // so sorting by down-set size is a topological order.
    std::vector<std::size_t> order(n), below(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (leq(i, j)) ++below[j];
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

    std::vector<std::size_t> longest(n, 1);
    for (std::size_t j : order)
        for (std::size_t i = 0; i < n; ++i)
            if (less(i, j)) longest[j] = std::max(longest[j], longest[i] + 1);
    return *std::max_element(longest.begin(), longest.end());
}

namespace {

void extend_paths(const Poset& p, std::size_t k, Path& current, std::vector<Path>& out,
                  std::optional<std::size_t> last) {
    if (current.size() == k) {
        if (!last || current.back() == *last) out.push_back(current);
        return;
    }
    for (std::size_t next = 0; next < p.size(); ++next) {
        if (!p.less(current.back(), next)) continue;
        if (last && next != *last && !p.less(next, *last)) continue;
        current.push_back(next);
        extend_paths(p, k, current, out, last);
        current.pop_back();
    }
}

} // namespace

std::vector<Path> Poset::enumerate_paths(std::size_t k) const {
    std::vector<Path> out;
    if (k == 0) return out;
    Path current;
    for (std::size_t start = 0; start < size(); ++start) {
        current.assign(1, start);
        extend_paths(*this, k, current, out, std::nullopt);
    }
    return out;
}

std::vector<Path> Poset::enumerate_paths(std::size_t k, std::size_t first, std::size_t last) const {
    std::vector<Path> out;
    if (k == 0 || first >= size() || last >= size()) return out;
    if (k == 1) {
        if (first == last) out.push_back({first});
        return out;
    }
    if (!less(first, last)) return out;
    Path current{first};
    extend_paths(*this, k, current, out, last);
    return out;
}

Path Poset::canonical_max_chain() const {
    const auto paths = enumerate_paths(max_chain_length());
    if (paths.empty()) return {};
    return paths.front();
}

Poset fmim_poset() { return Poset::from_relation({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}}); }

} // namespace tropid
