#include "tropid/oracle.hpp"

#include <algorithm>
#include <random>

#include "tropid/error.hpp"

namespace tropid {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

TropMatrix random_matrix(std::mt19937_64& rng, const PosetPtr& index, std::int64_t range, double bottom) {
    std::bernoulli_distribution drop(bottom);
    TropMatrix m(index);
    for (std::size_t i = 0; i < index->size(); ++i)
        for (std::size_t j = 0; j < index->size(); ++j) {
            if (!index->leq(i, j)) continue;
            if (i != j && drop(rng)) continue;
            m.at(i, j) = TropScalar(static_cast<long>(uniform(rng, -range, range)));
        }
    return m;
}

} // namespace

OracleResult random_falsify(const Identity& id, const OracleConfig& config) {
    if (config.trials == 0) throw InvalidArgument("oracle needs at least one trial");
    if (config.range < 0) throw InvalidArgument("oracle range must not be negative");
    if (config.bottom_probability < 0.0 || config.bottom_probability > 1.0)
        throw InvalidArgument("bottom probability must lie in [0, 1]");

    const std::int64_t range = config.range > 0
                                   ? config.range
                                   : static_cast<std::int64_t>(std::max(id.left.size(), id.right.size()));
    PosetPtr index;
    if (config.model == Witness::Model::UpperTriangular) {
        if (config.n == 0) throw InvalidArgument("n must be at least 1");
        index = make_poset(Poset::chain(config.n));
    } else if (config.model == Witness::Model::Poset) {
        if (!config.poset || config.poset->size() == 0) throw InvalidArgument("poset oracle needs a nonempty poset");
        index = config.poset;
    }

    OracleResult result;
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        std::seed_seq seq{config.seed, static_cast<std::uint64_t>(trial)};
        std::mt19937_64 rng(seq);
        ++result.trials_run;

        std::optional<Witness> w;
        switch (config.model) {
            case Witness::Model::UpperTriangular:
            case Witness::Model::Poset: {
                std::map<Letter, TropMatrix> a;
                for (char s : id.alphabet.letters())
                    a.emplace(s, random_matrix(rng, index, range, config.bottom_probability));
                w = make_matrix_witness(id, config.model, std::move(a));
                break;
            }
            case Witness::Model::Bicyclic: {
                std::map<Letter, Bicyclic> a;
                for (char s : id.alphabet.letters()) {
                    const auto i = uniform(rng, 0, range), j = uniform(rng, 0, range);
                    a.emplace(s, make_bicyclic(Integer(static_cast<long>(i)), Integer(static_cast<long>(j))));
                }
                w = make_bicyclic_witness(id, std::move(a));
                break;
            }
            case Witness::Model::Fmim: {
                std::map<Letter, Fmim> a;
                for (char s : id.alphabet.letters()) {
                    const auto i = uniform(rng, 0, range), j = uniform(rng, 0, range);
                    a.emplace(s, Fmim(i, j, uniform(rng, -j, i)));
                }
                w = make_fmim_witness(id, std::move(a));
                break;
            }
        }
        if (w->sides_differ()) {
            TROPID_ENSURE(verify_witness(id, *w), "oracle counterexample does not re-verify");
            result.witness = std::move(w);
            return result;
        }
    }
    return result;
}

} // namespace tropid
