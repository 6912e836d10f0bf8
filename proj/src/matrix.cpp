#include "tropid/matrix.hpp"

#include <sstream>

#include "tropid/error.hpp"

namespace tropid {

TropMatrix::TropMatrix(PosetPtr index) : index_(std::move(index)) {
    if (!index_) throw InvalidArgument("matrix without an index poset");
    entries_.assign(index_->size() * index_->size(), TropScalar::bottom());
}

TropMatrix::TropMatrix(PosetPtr index, std::vector<TropScalar> entries)
    : index_(std::move(index)), entries_(std::move(entries)) {
    if (!index_) throw InvalidArgument("matrix without an index poset");
    if (entries_.size() != index_->size() * index_->size())
        throw InvalidArgument("matrix entry count does not match the index set");
}

TropMatrix TropMatrix::identity(PosetPtr index) {
    TropMatrix m(std::move(index));
    for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) = TropScalar(0);
    return m;
}

TropMatrix TropMatrix::over_chain(const std::vector<std::vector<TropScalar>>& rows) {
    const std::size_t n = rows.size();
    std::vector<TropScalar> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw InvalidArgument("matrix literal is not square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return TropMatrix(make_poset(Poset::chain(n)), std::move(entries));
}

bool TropMatrix::in_gamma() const { return tropid::in_gamma(*this, *index_); }
bool TropMatrix::in_finitary_gamma() const { return tropid::in_finitary_gamma(*this, *index_); }

std::vector<std::vector<TropScalar>> TropMatrix::rows() const {
    std::vector<std::vector<TropScalar>> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * dim()),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim()));
    return out;
}

bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return same_index(a, b) && a.entries_ == b.entries_;
}

bool in_gamma(const TropMatrix& m, const Poset& order) {
    if (order.size() != m.dim()) return false;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (m.at(i, j).is_finite() && !order.leq(i, j)) return false;
    return true;
}

bool in_finitary_gamma(const TropMatrix& m, const Poset& order) {
    if (order.size() != m.dim()) return false;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (m.at(i, j).is_finite() != order.leq(i, j)) return false;
    return true;
}

bool same_index(const TropMatrix& a, const TropMatrix& b) {
    return a.index_ptr() == b.index_ptr() || a.index() == b.index();
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
    if (!same_index(a, b)) throw InvalidArgument("matrix product over different index sets");
    const std::size_t n = a.dim();
    TropMatrix out(a.index_ptr());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const TropScalar& left = a.at(i, k);
            if (left.is_bottom()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const TropScalar& right = b.at(k, j);
                if (right.is_bottom()) continue;
                TropScalar& cell = out.at(i, j);
                Rational sum = left.value() + right.value();
                if (cell.is_bottom() || cell.value() < sum) cell = TropScalar(sum);
            }
        }
    }
    return out;
}

TropMatrix scale_matrix(const Rational& mu, const TropMatrix& m) {
    TropMatrix out = m;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (m.at(i, j).is_finite()) out.at(i, j) = TropScalar(Rational(m.at(i, j).value() + mu));
    return out;
}

std::string to_string(const TropMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) os << ", ";
            os << to_string(m.at(i, j));
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string to_string(const IdempotentClass& c) {
    switch (c.kind) {
        case IdempotentClass::Kind::NotIdempotent: return "not idempotent";
        case IdempotentClass::Kind::Z: return "Z";
        case IdempotentClass::Kind::G: return "G_" + to_string(c.parameter);
        case IdempotentClass::Kind::E: return "E_" + to_string(c.parameter);
        case IdempotentClass::Kind::F: return "F_" + to_string(c.parameter);
    }
    return "?";
}

bool is_idempotent(const TropMatrix& m) { return mat_mul(m, m) == m; }

IdempotentClass classify_idempotent_ut2(const TropMatrix& m) {
    if (m.dim() != 2) throw InvalidArgument("classify_idempotent_ut2 needs a 2x2 matrix");
    using Kind = IdempotentClass::Kind;
    if (!m.at(1, 0).is_bottom() || !is_idempotent(m)) return {Kind::NotIdempotent, TropScalar::bottom()};

    const TropScalar zero(0);
    const bool top = m.at(0, 0) == zero;
    const bool bottom_right = m.at(1, 1) == zero;
    const TropScalar& x = m.at(0, 1);
    if (top && bottom_right) return {Kind::G, x};
    if (top) return {Kind::E, x};
    if (bottom_right) return {Kind::F, x};
    return {Kind::Z, TropScalar::bottom()};
}

TropMatrix ut2_idempotent(IdempotentClass::Kind kind, const TropScalar& parameter) {
    using Kind = IdempotentClass::Kind;
    const TropScalar z(0), b = TropScalar::bottom();
    switch (kind) {
        case Kind::Z: return TropMatrix::over_chain({{b, b}, {b, b}});
        case Kind::G: return TropMatrix::over_chain({{z, parameter}, {b, z}});
        case Kind::E: return TropMatrix::over_chain({{z, parameter}, {b, b}});
        case Kind::F: return TropMatrix::over_chain({{b, parameter}, {b, z}});
        case Kind::NotIdempotent: break;
    }
    throw InvalidArgument("no representative for a non-idempotent class");
}

bool idempotent_leq(const TropMatrix& e, const TropMatrix& f) {
    if (!is_idempotent(e) || !is_idempotent(f)) throw PreconditionError("idempotent_leq on a non-idempotent matrix");
    return mat_mul(e, f) == e && mat_mul(f, e) == e;
}

} // namespace tropid
