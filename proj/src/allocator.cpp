#include "sshare/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sshare/error.hpp"

namespace sshare {

namespace {

double objective_unchecked(double n_a, double n_b, const AllocationProblem& problem) {
    const double dev_a = (n_a - problem.x_a) / problem.x_a;
    const double dev_b = (n_b - problem.x_b) / problem.x_b;
    return problem.gamma * dev_a * dev_a + (1.0 - problem.gamma) * dev_b * dev_b;
}

}  // namespace

void AllocationProblem::validate() const {
    if (!(x_a > 0.0) || !(x_b > 0.0) || !std::isfinite(x_a) || !std::isfinite(x_b)) {
        throw Error(ErrorCode::NonPositiveStatistic,
                    "demand statistics must be finite and > 0 (x_a = " + std::to_string(x_a) +
                        ", x_b = " + std::to_string(x_b) + ")");
    }
    if (pool_size < 0) {
        throw Error(ErrorCode::InvalidProblem, "pool size must be >= 0");
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw Error(ErrorCode::InvalidProblem,
                    "gamma must lie in [0, 1], got " + std::to_string(gamma));
    }
}

double evaluate_objective(double n_a, double n_b, const AllocationProblem& problem) {
    if (!(problem.x_a > 0.0) || !(problem.x_b > 0.0)) {
        throw Error(ErrorCode::NonPositiveStatistic, "demand statistics must be > 0");
    }
    return objective_unchecked(n_a, n_b, problem);
}

bool tie_break_prefers(std::int64_t lhs_a, std::int64_t lhs_b, std::int64_t rhs_a,
                       std::int64_t rhs_b) noexcept {
    const std::int64_t lhs_total = lhs_a + lhs_b;
    const std::int64_t rhs_total = rhs_a + rhs_b;
    if (lhs_total != rhs_total) {
        return lhs_total > rhs_total;
    }
    // Equal totals: higher Jain fairness <=> smaller sum of squares.
    const std::int64_t lhs_squares = lhs_a * lhs_a + lhs_b * lhs_b;
    const std::int64_t rhs_squares = rhs_a * rhs_a + rhs_b * rhs_b;
    if (lhs_squares != rhs_squares) {
        return lhs_squares < rhs_squares;
    }
    return lhs_a < rhs_a;
}

Allocation optimize_partition(const AllocationProblem& problem) {
    problem.validate();
    const std::int64_t pool = problem.pool_size;

    Allocation best{0, 0, objective_unchecked(0.0, 0.0, problem)};
    for (std::int64_t n_a = 0; n_a <= pool; ++n_a) {
        for (std::int64_t n_b = 0; n_a + n_b <= pool; ++n_b) {
            const double j =
                objective_unchecked(static_cast<double>(n_a), static_cast<double>(n_b), problem);
            if (j < best.objective ||
                (j == best.objective && tie_break_prefers(n_a, n_b, best.n_a, best.n_b))) {
                best = {n_a, n_b, j};
            }
        }
    }
    return best;
}

ContinuousAllocation optimize_partition_continuous(const AllocationProblem& problem) {
    problem.validate();
    const auto pool = static_cast<double>(problem.pool_size);
    const double x_a = problem.x_a;
    const double x_b = problem.x_b;

    ContinuousAllocation result;
    if (x_a + x_b <= pool) {
        result.n_a = x_a;
        result.n_b = x_b;
    } else if (problem.gamma == 0.0) {
        result.n_b = std::min(x_b, pool);
        result.n_a = std::clamp(pool - result.n_b, 0.0, pool);
    } else if (problem.gamma == 1.0) {
        result.n_a = std::min(x_a, pool);
        result.n_b = std::clamp(pool - result.n_a, 0.0, pool);
    } else {
        const double a = problem.gamma / (x_a * x_a);
        const double b = (1.0 - problem.gamma) / (x_b * x_b);
        result.n_a = std::clamp((a * x_a + b * (pool - x_b)) / (a + b), 0.0, pool);
        result.n_b = pool - result.n_a;
    }
    result.objective = objective_unchecked(result.n_a, result.n_b, problem);
    return result;
}

std::vector<double> make_gamma_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) {
        throw Error(ErrorCode::InvalidGrid, "gamma step must lie in (0, 1]");
    }
    const double steps = std::round(1.0 / step);
    if (std::abs(steps * step - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidGrid,
                    "gamma step " + std::to_string(step) + " does not divide [0, 1] evenly");
    }
    const auto n = static_cast<std::int64_t>(steps);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        grid.push_back(static_cast<double>(k) / static_cast<double>(n));
    }
    return grid;
}

void validate_gamma_grid(std::span<const double> grid) {
    if (grid.empty()) {
        throw Error(ErrorCode::InvalidGrid, "gamma grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
            throw Error(ErrorCode::InvalidGrid, "gamma grid values must lie in [0, 1]");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw Error(ErrorCode::InvalidGrid, "gamma grid must be strictly increasing");
        }
    }
}

}  // namespace sshare
