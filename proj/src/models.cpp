#include "tropid/models.hpp"

#include <algorithm>

namespace tropid {

namespace {

const PosetPtr& chain2() {
    static const PosetPtr p = make_poset(Poset::chain(2));
    return p;
}

const PosetPtr& chain3() {
    static const PosetPtr p = make_poset(Poset::chain(3));
    return p;
}

TropMatrix bicyclic_matrix(const Rational& i, const Rational& j) {
    TropMatrix m(chain2());
    m.at(0, 0) = TropScalar(Rational(i - j));
    m.at(0, 1) = TropScalar(Rational(i + j));
    m.at(1, 1) = TropScalar(Rational(j - i));
    return m;
}

} // namespace

Bicyclic make_bicyclic(Integer i, Integer j) {
    if (sgn(i) < 0 || sgn(j) < 0) throw InvalidArgument("bicyclic coordinates must be non-negative");
    return {std::move(i), std::move(j)};
}

TropMatrix embed_bicyclic_ut2(const Bicyclic& x) { return bicyclic_matrix(Rational(x.i), Rational(x.j)); }
TropMatrix embed_bicyclic_ut2(const BicyclicQ& x) { return bicyclic_matrix(x.i, x.j); }

std::string to_string(const Bicyclic& x) { return "q^" + x.i.get_str() + " p^" + x.j.get_str(); }
std::string to_string(const BicyclicQ& x) { return "q^" + x.i.get_str() + " p^" + x.j.get_str(); }

Fmim::Fmim(std::int64_t i, std::int64_t j, std::int64_t k) : i_(i), j_(j), k_(k) {
    if (i < 0 || j < 0 || k < -j || k > i)
        throw InvalidArgument("invalid free monogenic inverse monoid triple (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) + ")");
}

Fmim fmim_mul(const Fmim& x, const Fmim& y) {
    // The constructor re-validates, so closure is checked on every product.
    return Fmim(std::max(x.i(), y.i() + x.k()), std::max(x.j(), y.j() - x.k()), x.k() + y.k());
}

bool fmim_idempotent_leq(const Fmim& e, const Fmim& f) {
    if (!e.is_idempotent() || !f.is_idempotent()) throw PreconditionError("fmim_idempotent_leq on a non-idempotent");
    return fmim_mul(e, f) == e && fmim_mul(f, e) == e;
}

TropMatrix embed_fmim_ut3(const Fmim& x) {
    TropMatrix m(chain3());
    m.at(0, 0) = TropScalar(static_cast<long>(x.k()));
    m.at(0, 2) = TropScalar(static_cast<long>(x.i()));
    m.at(1, 1) = TropScalar(static_cast<long>(-x.k()));
    m.at(1, 2) = TropScalar(static_cast<long>(x.j()));
    m.at(2, 2) = TropScalar(0);
    return m;
}

std::string to_string(const Fmim& x) {
    return "(" + std::to_string(x.i()) + "," + std::to_string(x.j()) + "," + std::to_string(x.k()) + ")";
}

// ---------------------------------------------------------------------------

DivisorElement::DivisorElement(PosetPtr poset, std::map<Path, TropMatrix> blocks)
    : poset_(std::move(poset)), blocks_(std::move(blocks)) {
    if (!poset_) throw InvalidArgument("divisor element without a poset");
    for (const auto& [path, block] : blocks_) {
        if (block.dim() != path.size()) throw InvalidArgument("divisor block size does not match its path");
        if (!block.in_gamma()) throw InvalidArgument("divisor block is not upper triangular along its path");
    }
}

const TropMatrix& DivisorElement::block(const Path& path) const {
    auto it = blocks_.find(path);
    if (it == blocks_.end()) throw InvalidArgument("no block for the requested path");
    return it->second;
}

std::vector<Path> all_paths(const Poset& poset) {
    std::vector<Path> out;
    for (std::size_t k = 1; k <= poset.max_chain_length(); ++k) {
        auto paths = poset.enumerate_paths(k);
        out.insert(out.end(), paths.begin(), paths.end());
    }
    return out;
}

namespace {

PosetPtr path_chain(const Poset& poset, const Path& path) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t k = 0; k < path.size(); ++k) {
        labels.push_back(poset.label(path[k]));
        if (k) pairs.emplace_back(poset.label(path[k - 1]), poset.label(path[k]));
    }
    return make_poset(Poset::from_relation(std::move(labels), pairs));
}

} // namespace

DivisorElement divisor_psi(const TropMatrix& m) {
    if (!m.in_gamma()) throw InvalidArgument("divisor_psi needs a member of Gamma(T)");
    const Poset& poset = m.index();
    std::map<Path, TropMatrix> blocks;
    for (const Path& path : all_paths(poset)) {
        TropMatrix block(path_chain(poset, path));
        for (std::size_t a = 0; a < path.size(); ++a)
            for (std::size_t b = 0; b < path.size(); ++b) block.at(a, b) = m.at(path[a], path[b]);
        blocks.emplace(path, std::move(block));
    }
    return DivisorElement(m.index_ptr(), std::move(blocks));
}

TropMatrix divisor_phi(const DivisorElement& d) {
    TropMatrix out(d.poset_ptr());
    for (const auto& [path, block] : d.blocks())
        for (std::size_t a = 0; a < path.size(); ++a)
            for (std::size_t b = 0; b < path.size(); ++b)
                out.at(path[a], path[b]) = oplus(out.at(path[a], path[b]), block.at(a, b));
    return out;
}

DivisorElement divisor_mul(const DivisorElement& a, const DivisorElement& b) {
    if (!(a.poset() == b.poset())) throw InvalidArgument("divisor product over different posets");
    std::map<Path, TropMatrix> blocks;
    for (const auto& [path, block] : a.blocks()) blocks.emplace(path, mat_mul(block, b.block(path)));
    return DivisorElement(a.poset_ptr(), std::move(blocks));
}

} // namespace tropid
