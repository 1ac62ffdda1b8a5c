#include "csaw/rw_exact.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>

namespace csaw::rw_exact {

namespace {

void check_strip(int h) {
    if (h < 2) throw std::invalid_argument("strip parameter h must be >= 2");
}

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

StripKernel::StripKernel(int h_) : h(h_) { check_strip(h_); }

double StripKernel::eigenvalue(int j) const {
    if (j < 1 || j > h - 1) throw std::invalid_argument("eigenvalue index out of range");
    return 0.5 + 0.5 * std::cos(j * kPi / h);
}

double StripKernel::eigenvector(int j, int k) const {
    if (j < 1 || j > h - 1 || k < 0 || k > h - 2)
        throw std::invalid_argument("eigenvector index out of range");
    return std::sin(static_cast<double>(j) * (k + 1) * kPi / h);
}

double StripKernel::entry(int r, int y) {
    int d = r - y;
    if (d == 0) return 0.5;
    if (d == 1 || d == -1) return 0.25;
    return 0.0;
}

double kernel_power(int h, std::int64_t n, int r, int y) {
    check_strip(h);
    if (r < 0 || r > h - 2 || y < 0 || y > h - 2)
        throw std::invalid_argument("kernel indices out of range");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    long double sum = 0;
    for (int j = 1; j <= h - 1; ++j) {
        long double lam = 0.5L + 0.5L * std::cos(static_cast<long double>(j) * kPi / h);
        long double pw;
        if (n == 0) {
            pw = 1;
        } else if (lam <= 0) {
            pw = 0; // lambda = 0 happens only at j = h/2 for even h
        } else {
            pw = std::exp(static_cast<long double>(n) * std::log(lam));
        }
        sum += pw * std::sin(static_cast<long double>(j) * (r + 1) * kPi / h) *
               std::sin(static_cast<long double>(j) * (y + 1) * kPi / h);
    }
    return static_cast<double>(2.0L / h * sum);
}

double survival_probability(std::int64_t n, int h) {
    check_strip(h);
    long double total = 0;
    for (int y = 0; y <= h - 2; ++y) total += kernel_power(h, n, 0, y);
    return static_cast<double>(total);
}

namespace {

// log F_n(h) at working precision. Factors lambda_1^n out of the spectral sum
// so deep-suppression regimes stay representable; modes more than ~50 decades
// below the leading one are dropped.
Real log_survival(std::int64_t n, int h) {
    const Real pi = boost::math::constants::pi<Real>();
    const Real half(Real(1) / 2);
    Real log_lam1 = log(half + half * cos(pi / h));
    Real sum = 0;
    for (int j = 1; j <= h - 1; ++j) {
        Real lam = half + half * cos(j * pi / h);
        if (lam <= 0) break; // later modes alternate sign and are negligible
        Real log_ratio = n * (log(lam) - log_lam1);
        if (log_ratio < -120) break;
        // Sum over y of sin(j (y+1) pi / h), in closed form.
        Real theta = j * pi / h;
        Real y_sum = sin((h - 1) * theta / 2) * sin(h * theta / 2) / sin(theta / 2);
        sum += exp(log_ratio) * sin(j * (0 + 1) * pi / h) * y_sum;
    }
    if (sum <= 0) throw std::runtime_error("survival sum collapsed to zero");
    return n * log_lam1 + log(Real(2) / h) + log(sum);
}

} // namespace

Real rw_weighted(std::int64_t n, const Real& u) {
    if (u <= 0) throw std::invalid_argument("u must be > 0");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    // Terms t_h = e^{-uh} F_n(h) rise to a single peak and then decay; stop
    // once three consecutive terms fall below 1e-30 of the running total.
    Real total = 0;
    Real log_peak = Real("-1e9");
    const Real log_cut = log(Real("1e-30"));
    int below = 0;
    const int h_cap = 200000;
    for (int h = 2; h <= h_cap; ++h) {
        Real log_term = -u * h + log_survival(n, h);
        if (log_term > log_peak) log_peak = log_term;
        Real term = exp(log_term);
        total += term;
        if (total > 0 && log_term < log(total) + log_cut && log_term < log_peak) {
            if (++below >= 3) break;
        } else {
            below = 0;
        }
        if (h == h_cap)
            throw std::runtime_error("rw_weighted tail did not converge");
    }
    return exp(2 * u) * (1 - exp(-u)) * total;
}

Real rw_lambda_u(const Real& u) {
    if (u <= 0) throw std::invalid_argument("u must be > 0");
    const Real pi = boost::math::constants::pi<Real>();
    return pow(Real(2), Real(-4) / 3) * 3 * pow(pi, Real(2) / 3) * pow(u, Real(2) / 3);
}

Real rw_amplitude_u(const Real& u) {
    if (u <= 0) throw std::invalid_argument("u must be > 0");
    const Real pi = boost::math::constants::pi<Real>();
    return pow(Real(2), Real(8) / 3) / sqrt(Real(3)) * pow(pi, Real(1) / 6) *
           pow(u, Real(-1) / 3) * exp(u) * (exp(u) - 1);
}

Real rw_asymptotic(std::int64_t n, const Real& u) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return rw_amplitude_u(u) * pow(Real(n), Real(-1) / 6) *
           exp(-rw_lambda_u(u) * pow(Real(n), Real(1) / 3));
}

} // namespace csaw::rw_exact
