#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sshare {

struct AllocationProblem {
    std::int64_t pool_size = 0;
    double gamma = 0.5;
    double x_a = 1.0;
    double x_b = 1.0;

    /// Throws Error(NonPositiveStatistic) for x <= 0 and
    /// Error(InvalidProblem) for a negative pool or gamma outside [0, 1].
    void validate() const;
};

struct Allocation {
    std::int64_t n_a = 0;
    std::int64_t n_b = 0;
    double objective = 0.0;

    bool operator==(const Allocation&) const = default;
};

struct ContinuousAllocation {
    double n_a = 0.0;
    double n_b = 0.0;
    double objective = 0.0;
};

/// gamma * ((n_a - x_a) / x_a)^2 + (1 - gamma) * ((n_b - x_b) / x_b)^2.
/// Point-wise; the pool constraint is not checked.
double evaluate_objective(double n_a, double n_b, const AllocationProblem& problem);

/// True when (lhs_a, lhs_b) wins the tie-break against (rhs_a, rhs_b) at
/// equal objective: larger total, then larger Jain fairness, then smaller n_a.
bool tie_break_prefers(std::int64_t lhs_a, std::int64_t lhs_b,
                       std::int64_t rhs_a, std::int64_t rhs_b) noexcept;

/// Exhaustive search over every lattice point with n_a, n_b >= 0 and
/// n_a + n_b <= pool_size. The result is unique under tie_break_prefers.
Allocation optimize_partition(const AllocationProblem& problem);

/// Closed-form minimiser over the real triangle. When the unconstrained
/// optimum (x_a, x_b) is infeasible the total constraint binds, and the
/// first-order condition on n_a + n_b = N gives
///   n_a = (a x_a + b (N - x_b)) / (a + b),  a = gamma / x_a^2, b = (1 - gamma) / x_b^2
/// clamped into [0, N].
ContinuousAllocation optimize_partition_continuous(const AllocationProblem& problem);

/// k / n_steps for k = 0..n_steps, where n_steps = round(1 / step).
/// Throws Error(InvalidGrid) unless 1 / step is an integer (to 1e-9).
std::vector<double> make_gamma_grid(double step);

/// Non-empty, strictly increasing, inside [0, 1]; else Error(InvalidGrid).
void validate_gamma_grid(std::span<const double> grid);

}  // namespace sshare
