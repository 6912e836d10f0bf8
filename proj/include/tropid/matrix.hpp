#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropid/poset.hpp"
#include "tropid/scalar.hpp"

namespace tropid {

/// A square tropical matrix whose rows and columns are indexed by the
/// elements of a finite poset. Entries are stored densely, row-major.
class TropMatrix {
public:
    /// All-bottom matrix over `index`.
    explicit TropMatrix(PosetPtr index);
    TropMatrix(PosetPtr index, std::vector<TropScalar> entries);

    /// 0 on the diagonal, bottom elsewhere.
    static TropMatrix identity(PosetPtr index);
    /// Row-major literal over the n-chain. Throws InvalidArgument if not square.
    static TropMatrix over_chain(const std::vector<std::vector<TropScalar>>& rows);

    [[nodiscard]] std::size_t dim() const { return index_->size(); }
    [[nodiscard]] const Poset& index() const { return *index_; }
    [[nodiscard]] const PosetPtr& index_ptr() const { return index_; }

    [[nodiscard]] const TropScalar& at(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }
    TropScalar& at(std::size_t i, std::size_t j) { return entries_[i * dim() + j]; }
    [[nodiscard]] const std::vector<TropScalar>& entries() const { return entries_; }

    /// Finite entries only where i <= j in the index order.
    [[nodiscard]] bool in_gamma() const;
    /// Finite entries exactly where i <= j in the index order.
    [[nodiscard]] bool in_finitary_gamma() const;

    [[nodiscard]] std::vector<std::vector<TropScalar>> rows() const;

    friend bool operator==(const TropMatrix& a, const TropMatrix& b);

private:
    PosetPtr index_;
    std::vector<TropScalar> entries_;
};

/// Membership tests against an arbitrary order on the same number of indices.
bool in_gamma(const TropMatrix& m, const Poset& order);
bool in_finitary_gamma(const TropMatrix& m, const Poset& order);

bool same_index(const TropMatrix& a, const TropMatrix& b);

/// Tropical product. Throws InvalidArgument on an index-set mismatch.
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

/// Adds `mu` to every finite entry.
TropMatrix scale_matrix(const Rational& mu, const TropMatrix& m);

std::string to_string(const TropMatrix& m);

/// The four idempotent shapes of UT_2 over the 2-chain:
///   Z   = [[-inf, -inf], [-inf, -inf]]
///   G_x = [[0, x], [-inf, 0]]
///   E_x = [[0, x], [-inf, -inf]]
///   F_x = [[-inf, x], [-inf, 0]]
struct IdempotentClass {
    enum class Kind { NotIdempotent, Z, G, E, F };
    Kind kind = Kind::NotIdempotent;
    TropScalar parameter;  // the x of G_x / E_x / F_x; bottom for Z

    friend bool operator==(const IdempotentClass&, const IdempotentClass&) = default;
};

std::string to_string(const IdempotentClass& c);

/// Precondition: `m` is 2x2. Throws InvalidArgument otherwise.
IdempotentClass classify_idempotent_ut2(const TropMatrix& m);

/// Builds the representative of a class over the 2-chain.
TropMatrix ut2_idempotent(IdempotentClass::Kind kind, const TropScalar& parameter = TropScalar::bottom());

bool is_idempotent(const TropMatrix& m);

/// Natural order e <= f iff e = ef = fe. Throws PreconditionError when either
/// argument is not idempotent.
bool idempotent_leq(const TropMatrix& e, const TropMatrix& f);

} // namespace tropid
