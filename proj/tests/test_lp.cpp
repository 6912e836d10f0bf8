#include <gtest/gtest.h>

#include "fourier_motzkin.hpp"
#include "generators.hpp"
#include "tropid/error.hpp"
#include "tropid/lp.hpp"

using namespace tropid;
using namespace tropid::lp;
using namespace tropid::testing;

namespace {

std::vector<Rational> v(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

LinearSystem random_system(Rng& rng, std::size_t dim, std::size_t rows) {
    LinearSystem s(dim);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Rational> a;
        for (std::size_t i = 0; i < dim; ++i) a.emplace_back(static_cast<long>(uniform_int(rng, -3, 3)));
        s.add(a, Rational(static_cast<long>(uniform_int(rng, -4, 4))));
    }
    return s;
}

} // namespace

TEST(StrictFeasible, OpenInterval) {
    LinearSystem s(1);
    s.add(v({1}), 0);
    s.add(v({-1}), 1);
    const auto x = strict_feasible(s);
    ASSERT_TRUE(x);
    EXPECT_TRUE(s.satisfied_by(*x));
    EXPECT_GT((*x)[0], 0);
    EXPECT_LT((*x)[0], 1);
}

TEST(StrictFeasible, EmptyIntersection) {
    LinearSystem s(1);
    s.add(v({1}), -1);
    s.add(v({-1}), 0);
    EXPECT_FALSE(strict_feasible(s));
}

TEST(StrictFeasible, MiddleTermOfSquareIsNeverStrictlyMaximal) {
    // x > 2x and x > 1
    LinearSystem s(1);
    s.add(v({-1}), 0);
    s.add(v({1}), -1);
    EXPECT_FALSE(strict_feasible(s));
}

TEST(StrictFeasible, TouchingBoundaryIsNotStrict) {
    LinearSystem s(2);
    s.add(v({1, 0}), 0);
    s.add(v({-1, 0}), 0);
    EXPECT_FALSE(strict_feasible(s));
    LinearSystem t(1);
    t.add(v({0}), 0);
    EXPECT_FALSE(strict_feasible(t));
}

TEST(StrictFeasible, EmptySystemAndZeroDimension) {
    LinearSystem s(3);
    ASSERT_TRUE(strict_feasible(s));
    EXPECT_EQ(strict_feasible(s)->size(), 3u);
    LinearSystem z(0);
    z.add(std::vector<Rational>{}, 1);
    EXPECT_TRUE(strict_feasible(z));
    z.add(std::vector<Rational>{}, -1);
    EXPECT_FALSE(strict_feasible(z));
}

TEST(StrictFeasible, RejectsDimensionMismatch) {
    LinearSystem s(2);
    EXPECT_THROW(s.add(v({1}), 0), InvalidArgument);
}

TEST(StrictFeasible, DuplicateAndDependentRows) {
    LinearSystem s(2);
    s.add(v({1, 1}), 0);
    s.add(v({1, 1}), 0);
    s.add(v({2, 2}), 1);
    s.add(v({1, -1}), 3);
    const auto x = strict_feasible(s);
    ASSERT_TRUE(x);
    EXPECT_TRUE(s.satisfied_by(*x));
}

TEST(StrictFeasible, AgreesWithFourierMotzkinOnTwoVariables) {
    Rng rng(21);
    int feasible = 0;
    for (int t = 0; t < 500; ++t) {
        const LinearSystem s = random_system(rng, 2, static_cast<std::size_t>(uniform_int(rng, 1, 6)));
        const auto x = strict_feasible(s);
        ASSERT_EQ(x.has_value(), fm_strictly_feasible(s)) << "trial " << t;
        if (x) {
            EXPECT_TRUE(s.satisfied_by(*x));
            ++feasible;
        }
    }
    EXPECT_GT(feasible, 50);
    EXPECT_LT(feasible, 450);
}

TEST(StrictFeasible, AgreesWithFourierMotzkinUpToFourVariables) {
    Rng rng(22);
    for (int t = 0; t < 300; ++t) {
        const auto dim = static_cast<std::size_t>(uniform_int(rng, 3, 4));
        const LinearSystem s = random_system(rng, dim, static_cast<std::size_t>(uniform_int(rng, 2, 7)));
        const auto x = strict_feasible(s);
        ASSERT_EQ(x.has_value(), fm_strictly_feasible(s)) << "trial " << t;
        if (x) EXPECT_TRUE(s.satisfied_by(*x));
    }
}

TEST(StrictFeasible, InvariantUnderPositiveRowScaling) {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const LinearSystem s = random_system(rng, 2, 4);
        LinearSystem scaled(2);
        for (const auto& c : s.constraints()) {
            Rational k(static_cast<long>(uniform_int(rng, 1, 9)), static_cast<unsigned long>(uniform_int(rng, 1, 9)));
            k.canonicalize();
            std::vector<Rational> a;
            for (const auto& x : c.coefficients) a.push_back(k * x);
            scaled.add(a, k * c.constant);
        }
        EXPECT_EQ(strict_feasible(s).has_value(), strict_feasible(scaled).has_value());
    }
}

TEST(StandardForm, SmallOptimum) {
    // min -y0 - y1  s.t.  y0 + y1 + y2 = 4, y0 - y1 + y3 = 2
    const auto r = solve_standard_form({v({1, 1, 1, 0}), v({1, -1, 0, 1})}, v({4, 2}), v({-1, -1, 0, 0}));
    ASSERT_EQ(r.status, StandardFormResult::Status::Optimal);
    EXPECT_EQ(r.objective, Rational(-4));
    // Strong duality: rhs . duals equals the optimum.
    EXPECT_EQ(r.duals[0] * 4 + r.duals[1] * 2, r.objective);
}

TEST(StandardForm, InfeasibleAndUnbounded) {
    EXPECT_EQ(solve_standard_form({v({1, 1})}, v({-1}), v({0, 0})).status, StandardFormResult::Status::Infeasible);
    EXPECT_EQ(solve_standard_form({v({1, -1})}, v({0}), v({-1, 0})).status, StandardFormResult::Status::Unbounded);
}

TEST(StandardForm, StrongDualityOnRandomFeasibleProblems) {
    Rng rng(24);
    int optimal = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, 4)), n = m + static_cast<std::size_t>(uniform_int(rng, 1, 4));
        std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n));
        std::vector<Rational> y0(n), rhs(m, Rational(0)), cost(n);
        for (auto& y : y0) y = Rational(static_cast<long>(uniform_int(rng, 0, 3)));
        for (auto& c : cost) c = Rational(static_cast<long>(uniform_int(rng, 0, 5)));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                rows[i][j] = Rational(static_cast<long>(uniform_int(rng, -3, 3)));
                rhs[i] += rows[i][j] * y0[j];
            }
        const auto r = solve_standard_form(rows, rhs, cost);
        ASSERT_EQ(r.status, StandardFormResult::Status::Optimal);  // feasible by construction, bounded since cost >= 0
        ++optimal;
        Rational primal = 0, dual = 0;
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_GE(r.solution[j], 0);
            primal += cost[j] * r.solution[j];
        }
        for (std::size_t i = 0; i < m; ++i) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * r.solution[j];
            EXPECT_EQ(lhs, rhs[i]);
            dual += rhs[i] * r.duals[i];
        }
        EXPECT_EQ(primal, r.objective);
        EXPECT_EQ(dual, r.objective);
        // Dual feasibility: reduced costs are non-negative.
        for (std::size_t j = 0; j < n; ++j) {
            Rational red = cost[j];
            for (std::size_t i = 0; i < m; ++i) red -= r.duals[i] * rows[i][j];
            EXPECT_GE(red, 0);
        }
    }
    EXPECT_EQ(optimal, 200);
}
