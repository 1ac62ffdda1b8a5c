#pragma once

#include "csaw/numeric.hpp"

#include <string>

namespace csaw::asymptotics {

/// Parameters of the integral Int_0^inf y^r exp(-(km/(alpha (by)^alpha) + by)) dy.
/// r and alpha are kept as exact rationals so the closed form's m-exponent is
/// exact; b, k, m are ordinary reals.
struct LemmaParams {
    Rational r{0, 1};
    Rational alpha{1, 1};
    double b = 1;
    double k = 1;
    double m = 1;
};

/// Best rational approximation with bounded denominator, for CLI decimal input.
Rational rationalize(double x, long long max_den = 1'000'000);

struct LemmaClosedForm {
    double amplitude = 0;   // C = b^{-(1+r)} k^{(2r+1)/(2(1+alpha))} sqrt(2 pi/(1+alpha))
    double decay_rate = 0;  // lambda = ((alpha+1)/alpha) k^{1/(1+alpha)}
    Rational m_power{0, 1}; // (2r+1) / (2 (1+alpha)), exact
    double log_value = 0;   // log of C m^{m_power} exp(-lambda m^{1/(1+alpha)})
};

/// Large-m closed form of the integral.
LemmaClosedForm lemma_closed_form(const LemmaParams& p);

struct QuadratureResult {
    double log_value = 0;
    double achieved_rel_error = 0;
};

/// Saddle-point-windowed adaptive quadrature of the integral itself, peak
/// factored out so deep-suppression regimes stay representable.
QuadratureResult lemma_quadrature(const LemmaParams& p, double rel_target = 1e-10);

/// The compressed-polymer exponent algebra, computed in exact rationals from
/// the lemma's m-power with alpha = 4/3. Walks and polygons carry one extra
/// factor of n from the height-derivative step.
struct ExponentTable {
    Rational saw_n;        //  3/16
    Rational bridge_n;     // -13/28
    Rational polygon_n;    // -11/7
    Rational saw_u;        //  5/16
    Rational bridge_u;     // -1/28
    Rational stretch_n;    //  3/7: the n-power inside the stretched exponential
    Rational stretch_u;    //  4/7: the u-power inside the stretched exponential
    Rational q_n;          //  11/32 (free SAWs)
    Rational halfplane_n;  // -3/64
    Rational bridge_count_n; // -7/16
    // lambda1 = lambda1_front * 3^lambda1_pow3 * 4^lambda1_pow4 * beta1^lambda1_pow_beta1
    Rational lambda1_front;
    Rational lambda1_pow3;
    Rational lambda1_pow4;
    Rational lambda1_pow_beta1;
    // The polygon stretched-exponential rate is an independent constant.
    std::string walks_rate = "lambda1";
    std::string bridges_rate = "lambda1";
    std::string polygons_rate = "lambda2";
};

ExponentTable prediction_exponents();

} // namespace csaw::asymptotics
