#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropid/scalar.hpp"

namespace tropid::lp {

/// coefficients . x + constant > 0
struct StrictInequality {
    std::vector<Rational> coefficients;
    Rational constant;
};

/// A conjunction of strict inequalities over a fixed number of real unknowns.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t dimension) : dimension_(dimension) {}

    /// Throws InvalidArgument when the coefficient vector has the wrong size.
    void add(StrictInequality constraint);
    void add(std::vector<Rational> coefficients, Rational constant) {
        add(StrictInequality{std::move(coefficients), std::move(constant)});
    }

    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] const std::vector<StrictInequality>& constraints() const { return constraints_; }

    /// Exact check that `point` satisfies every constraint.
    [[nodiscard]] bool satisfied_by(const std::vector<Rational>& point) const;

private:
    std::size_t dimension_;
    std::vector<StrictInequality> constraints_;
};

/// Returns a rational point satisfying every strict inequality, or nullopt
/// iff no real point does.
///
/// Maximises a slack d subject to a_i.x + c_i >= d and d <= 1; the system is
/// strictly feasible iff the optimum is positive. The LP is solved in its dual
/// equality form  min sum c_i y_i + z  s.t.  sum y_i a_i = 0, sum y_i + z = 1,
/// y, z >= 0  (dimension + 1 rows) by an exact two-phase simplex with Bland's
/// rule; the point x is read off the optimal dual multipliers.
std::optional<std::vector<Rational>> strict_feasible(const LinearSystem& system);

/// Result of the standard-form solver, exposed for tests.
struct StandardFormResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rational objective;
    std::vector<Rational> solution;  // primal y
    std::vector<Rational> duals;     // one multiplier per equality row
};

/// minimise cost . y  subject to  rows . y = rhs,  y >= 0.
/// Exact two-phase simplex with Bland's rule. Linearly dependent rows are
/// dropped after phase one; the multipliers come from the final basis inverse.
StandardFormResult solve_standard_form(const std::vector<std::vector<Rational>>& rows,
                                       const std::vector<Rational>& rhs,
                                       const std::vector<Rational>& cost);

} // namespace tropid::lp
