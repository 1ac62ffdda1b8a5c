#pragma once

#include "csaw/numeric.hpp"

#include <cstdint>
#include <vector>

namespace csaw::rw_exact {

/// Height kernel of the simple random walk killed outside [0, h-2]:
/// tridiagonal with 1/2 on the diagonal and 1/4 off it, diagonalized by
/// discrete sine modes.
struct StripKernel {
    int h;

    explicit StripKernel(int h_);

    int dimension() const { return h - 1; }
    /// lambda_j = 1/2 + 1/2 cos(j pi / h), j = 1..h-1, strictly decreasing.
    double eigenvalue(int j) const;
    /// Component k (0-based) of the eigenvector sin(j (k+1) pi / h).
    double eigenvector(int j, int k) const;
    /// Entry (r, y) of the kernel itself.
    static double entry(int r, int y);
};

/// J_h^n(r, y) by the spectral sum (2/h) Sum_j lambda_j^n sin sin.
double kernel_power(int h, std::int64_t n, int r, int y);

/// F_n(h) = Sum_{y=0}^{h-2} J_h^n(0, y): probability that an n-step simple
/// walk from the origin stays in the half-plane with max height <= h-2.
double survival_probability(std::int64_t n, int h);

/// <e^{-u h}> over half-plane simple walks via the telescoped sum
/// e^{2u} (1 - e^{-u}) Sum_{h>=2} e^{-uh} F_n(h), evaluated at working
/// precision with a 1e-30 relative tail cutoff.
Real rw_weighted(std::int64_t n, const Real& u);

Real rw_lambda_u(const Real& u);     // 2^{-4/3} * 3 * pi^{2/3} * u^{2/3}
Real rw_amplitude_u(const Real& u);  // 2^{8/3} * 3^{-1/2} * pi^{1/6} * u^{-1/3} e^u (e^u - 1)

/// Closed-form tail: A_u n^{-1/6} exp(-lambda_u n^{1/3}).
Real rw_asymptotic(std::int64_t n, const Real& u);

} // namespace csaw::rw_exact
