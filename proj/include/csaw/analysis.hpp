#pragma once

#include "csaw/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csaw::analysis {

/// a_n = amplitude * e^{beta n} * mu1^{n^sigma} * n^g with mu1 = e^{log_mu1}.
struct AsymptoticModel {
    double beta = 0;
    double log_mu1 = 0;
    double sigma = 3.0 / 7.0;
    double g = 0;
    double amplitude = 1;
};

enum class Mu1Method {
    ratio_fit_2,    // (i)  least-squares fit of log-ratios, 2-term expansion
    ratio_fit_3,    // (i)  3-term expansion, damped Gauss-Newton
    coeff_triples,  // (ii) exact solves on coefficient triples
    coeff_pairs,    // (ii) exact solves on coefficient pairs, const dropped
    logratio_solve, // (iii) exact pair solves on log-ratios
    s_n_gradient,   // (iv) extrapolated gradients of s_n vs n^{sigma-1}
    t_n_gradient,   // (v)  same on t_n = n s_n - (n-1) s_{n-1}
    direct_root,    // (vi) extrapolation of d_n = (a_n e^{-beta n})^{n^{-sigma}}
};

const char* to_string(Mu1Method method);
std::vector<Mu1Method> all_mu1_methods();
Mu1Method mu1_method_from_string(const std::string& s);

struct Window {
    int n_min = 0;
    int n_max = 0;
};

/// Output of one analysis pass. A record never carries a parameter its method
/// cannot identify, and a non-converged record carries no parameters at all.
struct EstimateRecord {
    Mu1Method method = Mu1Method::ratio_fit_2;
    double u = 0;
    Window window;
    std::optional<double> sigma;
    std::optional<double> log_mu1;
    std::optional<double> g;
    double residual = 0;
    bool converged = false;
};

enum class RatioMode { adjacent, sqrt_skip2 };

/// r_n = a_n/a_{n-1}, or sqrt(a_n/a_{n-2}) to damp odd-even oscillation.
std::vector<std::pair<int, double>> ratios(const partition::WeightedSeries& a,
                                           RatioMode mode);

struct SigmaEstimate {
    std::vector<std::pair<int, double>> locals;
    double value = 0;
    std::vector<int> skipped; // n where the log argument was <= 0
    bool converged = false;
};

struct ExtrapolationOptions {
    int tail_points = 10; // K: how many trailing sequence values enter the fit
};

/// Local estimates of sigma from log(1 - r_n e^{-beta}) differences.
SigmaEstimate sigma_from_ratios(const partition::WeightedSeries& a, double beta,
                                const ExtrapolationOptions& opts = {});
/// Local slopes of log|log(a_n e^{-beta n})| against log n.
SigmaEstimate sigma_from_loglog(const partition::WeightedSeries& a, double beta,
                                const ExtrapolationOptions& opts = {});

EstimateRecord fit_mu1(const partition::WeightedSeries& a, double beta, double sigma,
                       Mu1Method method, Window window,
                       const ExtrapolationOptions& opts = {});

struct CombinedMu1 {
    std::vector<EstimateRecord> records;       // everything that was run
    std::vector<EstimateRecord> method_values; // one representative per method
    double combined = 0;
    bool converged = false;
};

/// Runs all methods (window sweep for the ratio fits), takes one value per
/// method, drops outliers beyond 3 median-absolute-deviations and averages.
CombinedMu1 combined_log_mu1(const partition::WeightedSeries& a, double beta,
                             double sigma, const ExtrapolationOptions& opts = {});

struct UDependence {
    double c = 0; // prefactor in log mu1 = -c u^p
    double p = 0;
};

/// Fits log(-log mu1) = log c + p log u over >= 3 converged (u, log mu1) pairs.
UDependence fit_u_dependence(const std::vector<std::pair<double, double>>& points);

/// lambda1 = 7 * 3^{-3/7} * 4^{-4/7} * beta1^{3/7}, inverted for beta1.
double beta1_from_lambda1(double lambda1);

struct ExponentEstimate {
    std::vector<std::pair<int, double>> locals;
    double value = 0;
    double band = 0;
    bool converged = false;
};

/// Divides out e^{beta n} mu1^{n^sigma} and reads g from the ratio plot of the
/// remaining coefficients against 1/n.
ExponentEstimate estimate_g(const partition::WeightedSeries& a, double beta,
                            double sigma, double log_mu1,
                            const ExtrapolationOptions& opts = {});

/// alpha = g_SAWs - g_bridges from the term-by-term quotient v_n = c_n/b_n.
ExponentEstimate estimate_alpha(const partition::WeightedSeries& c_series,
                                const partition::WeightedSeries& b_series,
                                const ExtrapolationOptions& opts = {});

/// Pure power-law exponent from an unweighted (u = 0), normalized series.
ExponentEstimate estimate_power_exponent(const partition::WeightedSeries& a,
                                         const ExtrapolationOptions& opts = {});

/// Exact model evaluation, optionally with a (1 + c n^{-4/7}) correction
/// factor mimicking the expected size of the neglected terms.
partition::WeightedSeries synthesize_series(const AsymptoticModel& model, int n_max,
                                            double correction_amplitude = 0);

} // namespace csaw::analysis
