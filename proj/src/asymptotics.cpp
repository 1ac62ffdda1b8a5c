#include "csaw/asymptotics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace csaw::asymptotics {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void check(const LemmaParams& p) {
    if (to_double(p.alpha) <= 0 || p.b <= 0 || p.k <= 0 || p.m <= 0)
        throw std::invalid_argument("lemma requires alpha, b, k, m > 0");
}

} // namespace

Rational rationalize(double x, long long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
    // Continued-fraction convergents until the denominator budget is spent.
    long long sign = x < 0 ? -1 : 1;
    double v = std::abs(x);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        long long a = static_cast<long long>(std::floor(v));
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = v - static_cast<double>(a);
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) throw std::invalid_argument("rationalization failed");
    return Rational(sign * p1, q1);
}

LemmaClosedForm lemma_closed_form(const LemmaParams& p) {
    check(p);
    const double r = to_double(p.r);
    const double alpha = to_double(p.alpha);
    LemmaClosedForm out;
    out.m_power = (2 * p.r + 1) / (2 * (1 + p.alpha));
    out.amplitude = std::pow(p.b, -(1.0 + r)) * std::pow(p.k, to_double(out.m_power)) *
                    std::sqrt(2.0 * kPi / (1.0 + alpha));
    out.decay_rate = (alpha + 1.0) / alpha * std::pow(p.k, 1.0 / (1.0 + alpha));
    out.log_value = std::log(out.amplitude) + to_double(out.m_power) * std::log(p.m) -
                    out.decay_rate * std::pow(p.m, 1.0 / (1.0 + alpha));
    return out;
}

QuadratureResult lemma_quadrature(const LemmaParams& p, double rel_target) {
    check(p);
    const double r = to_double(p.r);
    const double alpha = to_double(p.alpha);
    const double km = p.k * p.m;

    // phi(y) = km / (alpha (by)^alpha) + by, minimized at the saddle y*.
    const auto phi = [&](double y) {
        return km / (alpha * std::pow(p.b * y, alpha)) + p.b * y;
    };
    const double y_star = std::pow(km, 1.0 / (1.0 + alpha)) / p.b;
    const double phi_star = phi(y_star);
    const double curvature =
        (alpha + 1.0) * km * std::pow(p.b, -alpha) * std::pow(y_star, -alpha - 2.0);
    const double width = 1.0 / std::sqrt(curvature);

    // Peak-normalized integrand; all values are O(1) on the window.
    const auto integrand = [&](double y) {
        return std::exp(r * (std::log(y) - std::log(y_star)) - (phi(y) - phi_star));
    };

    double spread = 12.0;
    for (int attempt = 0; attempt < 4; ++attempt, spread *= 1.5) {
        double lo = std::max(y_star - spread * width, y_star * 1e-9);
        double hi = y_star + spread * width;
        // Tail control: the integrand must be negligible at the window edges.
        double edge = std::max(integrand(lo), integrand(hi));
        if (edge > 1e-25 && attempt < 3) continue;
        double error_est = 0;
        double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            integrand, lo, hi, 15, 1e-12, &error_est);
        if (value <= 0) break;
        double rel = error_est / value;
        // The clipped tails are bounded by edge-value times a decay length.
        double tail_bound = edge * (hi - lo);
        rel = std::max(rel, tail_bound / value);
        if (rel <= rel_target)
            return {r * std::log(y_star) - phi_star + std::log(value), rel};
        if (attempt == 3)
            throw std::runtime_error(
                "lemma quadrature reached relative error " + std::to_string(rel) +
                ", short of the requested " + std::to_string(rel_target));
    }
    throw std::runtime_error("lemma quadrature failed to produce a positive value");
}

ExponentTable prediction_exponents() {
    const Rational alpha(4, 3);
    const auto m_power = [&](const Rational& r) {
        return (2 * r + 1) / (2 * (1 + alpha));
    };
    // u enters through b = u and through k proportional to u^{4/3}; the
    // integral scale factor b^{-(1+r)} k^{m_power} then carries the u-power.
    const auto u_power = [&](const Rational& r) {
        return -(1 + r) + Rational(4, 3) * m_power(r);
    };

    ExponentTable t;
    const Rational r_bridge(-19, 12);
    const Rational r_saw(-115, 48);
    const Rational r_polygon(-13, 2);

    t.bridge_n = m_power(r_bridge);
    t.saw_n = 1 + m_power(r_saw);         // one extra n from the h-derivative
    t.polygon_n = 1 + m_power(r_polygon); // likewise
    t.bridge_u = u_power(r_bridge);
    t.saw_u = u_power(r_saw);

    // Stretched exponential lambda m^{1/(1+alpha)} with m proportional to
    // u^{4/3} n.
    t.stretch_n = 1 / (1 + alpha);
    t.stretch_u = Rational(4, 3) * t.stretch_n;

    t.q_n = Rational(11, 32);
    t.halfplane_n = Rational(-3, 64);
    t.bridge_count_n = Rational(-7, 16);

    // lambda = ((alpha+1)/alpha) k^{1/(1+alpha)} with k = (4/3) beta1 u^{4/3}:
    // normalize (7/4) (4/3)^{3/7} into 7 * 3^{-3/7} * 4^{-4/7}.
    t.lambda1_front = (1 + alpha) / alpha * 4; // = 7: (7/4) * 4
    t.lambda1_pow3 = -t.stretch_n;             // -3/7
    t.lambda1_pow4 = t.stretch_n - 1;          // -4/7
    t.lambda1_pow_beta1 = t.stretch_n;         //  3/7
    return t;
}

} // namespace csaw::asymptotics
