#include "tropid/lp.hpp"

#include "tropid/error.hpp"

namespace tropid::lp {

void LinearSystem::add(StrictInequality constraint) {
    if (constraint.coefficients.size() != dimension_)
        throw InvalidArgument("constraint dimension " + std::to_string(constraint.coefficients.size()) +
                              " does not match system dimension " + std::to_string(dimension_));
    constraints_.push_back(std::move(constraint));
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& point) const {
    if (point.size() != dimension_) return false;
    for (const auto& c : constraints_) {
        Rational lhs = c.constant;
        for (std::size_t j = 0; j < dimension_; ++j) lhs += c.coefficients[j] * point[j];
        if (sgn(lhs) <= 0) return false;
    }
    return true;
}

namespace {

// Dense exact tableau. Columns [0, n) are structural, [n, n + m) artificial.
class Tableau {
public:
    Tableau(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs, std::size_t n)
        : m_(rows.size()), n_(n), t_(m_, std::vector<Rational>(n + m_)), b_(rhs), basis_(m_), active_(m_, true),
          flipped_(m_, false) {
        for (std::size_t r = 0; r < m_; ++r) {
            const bool flip = sgn(rhs[r]) < 0;
            flipped_[r] = flip;
            for (std::size_t j = 0; j < n_; ++j) t_[r][j] = flip ? Rational(-rows[r][j]) : rows[r][j];
            if (flip) b_[r] = -b_[r];
            t_[r][n_ + r] = 1;
            basis_[r] = n_ + r;
        }
        d_.assign(n_ + m_, Rational(0));
    }

    // Installs reduced costs for `cost` (one entry per column) under the current basis.
    void price(const std::vector<Rational>& cost) {
        for (std::size_t j = 0; j < n_ + m_; ++j) d_[j] = cost[j];
        obj_ = 0;
        for (std::size_t r = 0; r < m_; ++r) {
            if (!active_[r]) continue;
            const Rational& cb = cost[basis_[r]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j < n_ + m_; ++j)
                if (sgn(t_[r][j]) != 0) d_[j] -= cb * t_[r][j];
            obj_ += cb * b_[r];
        }
    }

    // Dantzig pricing over columns [0, limit); after a run of degenerate
    // pivots it switches to Bland's rule for good, which cannot cycle.
    // Returns false when unbounded.
    bool optimise(std::size_t limit) {
        bool bland = false;
        std::size_t degenerate_run = 0;
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (sgn(d_[j]) >= 0) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (enter == limit || d_[j] < d_[enter]) enter = j;
            }
            if (enter == limit) return true;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (!active_[r] || sgn(t_[r][enter]) <= 0) continue;
                Rational ratio = b_[r] / t_[r][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (leave == m_) return false;
            degenerate_run = sgn(best) == 0 ? degenerate_run + 1 : 0;
            if (degenerate_run > kDegenerateLimit) bland = true;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = t_[r][c];
        auto& row = t_[r];
        nonzero_.clear();
        for (std::size_t j = 0; j < n_ + m_; ++j)
            if (sgn(row[j]) != 0) {
                row[j] /= p;
                nonzero_.push_back(j);
            }
        b_[r] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(t_[i][c]) == 0) continue;
            const Rational f = t_[i][c];
            eliminate(t_[i], f, row);
            mpq_mul(scratch_.get_mpq_t(), f.get_mpq_t(), b_[r].get_mpq_t());
            b_[i] -= scratch_;
        }
        if (sgn(d_[c]) != 0) {
            const Rational f = d_[c];
            eliminate(d_, f, row);
            mpq_mul(scratch_.get_mpq_t(), f.get_mpq_t(), b_[r].get_mpq_t());
            obj_ += scratch_;
        }
        basis_[r] = c;
    }

    // target -= f * row over the pivot row's nonzero columns.
    void eliminate(std::vector<Rational>& target, const Rational& f, const std::vector<Rational>& row) {
        for (std::size_t j : nonzero_) {
            mpq_mul(scratch_.get_mpq_t(), f.get_mpq_t(), row[j].get_mpq_t());
            mpq_sub(target[j].get_mpq_t(), target[j].get_mpq_t(), scratch_.get_mpq_t());
        }
    }

    // Pivots artificial basics out where possible; rows where that is
    // impossible are linearly dependent on the others and are deactivated.
    void expel_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!active_[r] || basis_[r] < n_) continue;
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(t_[r][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == n_) {
                active_[r] = false;
            } else {
                pivot(r, col);
            }
        }
    }

    [[nodiscard]] const Rational& objective() const { return obj_; }

    [[nodiscard]] std::vector<Rational> solution() const {
        std::vector<Rational> y(n_, Rational(0));
        for (std::size_t r = 0; r < m_; ++r)
            if (active_[r] && basis_[r] < n_) y[basis_[r]] = b_[r];
        return y;
    }

    // pi_r = sum over active rows i of c_{B_i} (B^-1)_{i r}, read from the
    // artificial columns, which carry the accumulated row operations.
    [[nodiscard]] std::vector<Rational> duals(const std::vector<Rational>& cost) const {
        std::vector<Rational> pi(m_, Rational(0));
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t i = 0; i < m_; ++i) {
                if (!active_[i]) continue;
                const Rational& cb = cost[basis_[i]];
                if (sgn(cb) != 0 && sgn(t_[i][n_ + r]) != 0) pi[r] += cb * t_[i][n_ + r];
            }
            if (flipped_[r]) pi[r] = -pi[r];
        }
        return pi;
    }

private:
    std::size_t m_, n_;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> b_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
    std::vector<bool> flipped_;
    std::vector<Rational> d_;
    Rational obj_;
    Rational scratch_;
    std::vector<std::size_t> nonzero_;

    static constexpr std::size_t kDegenerateLimit = 50;
};

} // namespace

StandardFormResult solve_standard_form(const std::vector<std::vector<Rational>>& rows,
                                       const std::vector<Rational>& rhs,
                                       const std::vector<Rational>& cost) {
    const std::size_t m = rows.size();
    const std::size_t n = cost.size();
    if (rhs.size() != m) throw InvalidArgument("rhs size does not match row count");
    for (const auto& row : rows)
        if (row.size() != n) throw InvalidArgument("row size does not match cost size");

    StandardFormResult result;
    Tableau tab(rows, rhs, n);

    std::vector<Rational> phase1(n + m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) phase1[n + r] = 1;
    tab.price(phase1);
    tab.optimise(n);
    if (sgn(tab.objective()) > 0) {
        result.status = StandardFormResult::Status::Infeasible;
        return result;
    }
    tab.expel_artificials();

    std::vector<Rational> phase2(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = cost[j];
    tab.price(phase2);
    if (!tab.optimise(n)) {
        result.status = StandardFormResult::Status::Unbounded;
        return result;
    }
    result.status = StandardFormResult::Status::Optimal;
    result.objective = tab.objective();
    result.solution = tab.solution();
    result.duals = tab.duals(phase2);
    return result;
}

std::optional<std::vector<Rational>> strict_feasible(const LinearSystem& system) {
    const std::size_t k = system.dimension();
    const auto& cons = system.constraints();
    const std::size_t m = cons.size();
    if (m == 0) return std::vector<Rational>(k, Rational(0));

    // Columns: y_0..y_{m-1}, z.  Rows: k coordinate rows, then the simplex row.
    std::vector<std::vector<Rational>> rows(k + 1, std::vector<Rational>(m + 1, Rational(0)));
    std::vector<Rational> rhs(k + 1, Rational(0));
    std::vector<Rational> cost(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t r = 0; r < k; ++r) rows[r][i] = cons[i].coefficients[r];
        rows[k][i] = 1;
        cost[i] = cons[i].constant;
    }
    rows[k][m] = 1;
    rhs[k] = 1;
    cost[m] = 1;

    const auto res = solve_standard_form(rows, rhs, cost);
    TROPID_ENSURE(res.status == StandardFormResult::Status::Optimal, "slack LP dual must be feasible and bounded");
    if (sgn(res.objective) <= 0) return std::nullopt;

    std::vector<Rational> point(k);
    for (std::size_t r = 0; r < k; ++r) point[r] = -res.duals[r];
    TROPID_ENSURE(res.duals[k] == res.objective, "slack multiplier must equal the optimum");
    TROPID_ENSURE(system.satisfied_by(point), "strict_feasible produced a point violating the system");
    return point;
}

} // namespace tropid::lp
