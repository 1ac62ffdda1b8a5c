#include "csaw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace csaw::analysis {

namespace {

// Contiguous log-view of a weighted series: la[i] = log a_{n0+i}.
struct LogSeries {
    int n0 = 0;
    std::vector<double> la;

    int n_min() const { return n0; }
    int n_max() const { return n0 + static_cast<int>(la.size()) - 1; }
    double at(int n) const { return la[static_cast<size_t>(n - n0)]; }
    bool contains(int n) const { return n >= n_min() && n <= n_max(); }
};

LogSeries log_view(const partition::WeightedSeries& a) {
    if (a.values.size() < 2) throw std::invalid_argument("series too short");
    LogSeries view;
    view.n0 = a.values.begin()->first;
    int expect = view.n0;
    for (const auto& [n, value] : a.values) {
        if (n != expect)
            throw std::invalid_argument("series has a gap at n=" + std::to_string(n));
        if (value <= 0)
            throw std::invalid_argument("series values must be positive (n=" +
                                        std::to_string(n) + ")");
        view.la.push_back(static_cast<double>(log(value)));
        ++expect;
    }
    return view;
}

// Least squares on normal equations; p <= 4 regressors, long double arithmetic.
struct LsqFit {
    std::vector<double> coeff;
    double rms = 0;
    bool ok = false;
};

bool solve_inplace(std::vector<std::vector<long double>>& m, std::vector<long double>& rhs) {
    const size_t p = rhs.size();
    for (size_t col = 0; col < p; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < p; ++r)
            if (std::abs(static_cast<double>(m[r][col])) >
                std::abs(static_cast<double>(m[piv][col])))
                piv = r;
        if (m[piv][col] == 0.0L) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            long double f = m[r][col] / m[col][col];
            for (size_t c = col; c < p; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (size_t i = 0; i < p; ++i) rhs[i] /= m[i][i];
    return true;
}

LsqFit lsq(const std::vector<std::vector<double>>& rows, const std::vector<double>& y) {
    LsqFit fit;
    if (rows.empty()) return fit;
    const size_t p = rows.front().size();
    if (rows.size() < p) return fit;
    std::vector<std::vector<long double>> xtx(p, std::vector<long double>(p, 0));
    std::vector<long double> xty(p, 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t a = 0; a < p; ++a) {
            xty[a] += static_cast<long double>(rows[i][a]) * y[i];
            for (size_t b = 0; b < p; ++b)
                xtx[a][b] += static_cast<long double>(rows[i][a]) * rows[i][b];
        }
    }
    if (!solve_inplace(xtx, xty)) return fit;
    fit.coeff.assign(xty.begin(), xty.end());
    long double sse = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        long double pred = 0;
        for (size_t a = 0; a < p; ++a) pred += static_cast<long double>(fit.coeff[a]) * rows[i][a];
        sse += (pred - y[i]) * (pred - y[i]);
    }
    fit.rms = std::sqrt(static_cast<double>(sse) / static_cast<double>(rows.size()));
    fit.ok = std::all_of(fit.coeff.begin(), fit.coeff.end(),
                         [](double c) { return std::isfinite(c); });
    return fit;
}

using Regressors = std::vector<std::function<double(double)>>;

// Intercept of a least-squares fit of the trailing K sequence values against
// {1, regs...}. This is the reproducible stand-in for the paper's visual
// extrapolation of local estimates.
LsqFit extrapolate_tail(const std::vector<std::pair<int, double>>& seq, int K,
                        const Regressors& regs) {
    LsqFit fit;
    const int use = std::min<int>(K, static_cast<int>(seq.size()));
    if (use < static_cast<int>(regs.size()) + 1) return fit;
    std::vector<std::vector<double>> rows;
    std::vector<double> ys;
    for (size_t i = seq.size() - static_cast<size_t>(use); i < seq.size(); ++i) {
        std::vector<double> row{1.0};
        for (const auto& r : regs) row.push_back(r(static_cast<double>(seq[i].first)));
        rows.push_back(std::move(row));
        ys.push_back(seq[i].second);
    }
    return lsq(rows, ys);
}

double clamp_exponent(double s) { return std::min(0.95, std::max(0.05, s)); }

} // namespace

const char* to_string(Mu1Method method) {
    switch (method) {
        case Mu1Method::ratio_fit_2: return "ratio_fit_2";
        case Mu1Method::ratio_fit_3: return "ratio_fit_3";
        case Mu1Method::coeff_triples: return "coeff_triples";
        case Mu1Method::coeff_pairs: return "coeff_pairs";
        case Mu1Method::logratio_solve: return "logratio_solve";
        case Mu1Method::s_n_gradient: return "s_n_gradient";
        case Mu1Method::t_n_gradient: return "t_n_gradient";
        case Mu1Method::direct_root: return "direct_root";
    }
    return "unknown";
}

std::vector<Mu1Method> all_mu1_methods() {
    return {Mu1Method::ratio_fit_2,  Mu1Method::ratio_fit_3,  Mu1Method::coeff_triples,
            Mu1Method::coeff_pairs,  Mu1Method::logratio_solve, Mu1Method::s_n_gradient,
            Mu1Method::t_n_gradient, Mu1Method::direct_root};
}

Mu1Method mu1_method_from_string(const std::string& s) {
    for (auto m : all_mu1_methods())
        if (s == to_string(m)) return m;
    throw std::invalid_argument("unknown mu1 method: " + s);
}

std::vector<std::pair<int, double>> ratios(const partition::WeightedSeries& a,
                                           RatioMode mode) {
    if (a.values.size() < 3) throw std::invalid_argument("need at least 3 terms");
    LogSeries v = log_view(a);
    std::vector<std::pair<int, double>> out;
    const int skip = (mode == RatioMode::adjacent) ? 1 : 2;
    for (int n = v.n_min() + skip; n <= v.n_max(); ++n) {
        double lr = v.at(n) - v.at(n - skip);
        out.emplace_back(n, std::exp(lr / skip));
    }
    return out;
}

namespace {

// Shared core of the two sigma estimators: extrapolate a local-estimate
// sequence with a correction basis built from the current sigma iterate.
SigmaEstimate extrapolate_sigma(std::vector<std::pair<int, double>> locals,
                                const std::vector<int>& skipped, int K,
                                bool loglog_basis) {
    SigmaEstimate est;
    est.locals = std::move(locals);
    est.skipped = skipped;
    if (static_cast<int>(est.locals.size()) < 4)
        throw std::invalid_argument("fewer than 4 usable points for sigma");
    LsqFit fit = extrapolate_tail(est.locals, K, {[](double n) { return 1.0 / n; }});
    if (!fit.ok) return est;
    double sigma_hat = fit.coeff[0];
    for (int iter = 0; iter < 2; ++iter) {
        double s = clamp_exponent(sigma_hat);
        Regressors regs;
        if (loglog_basis) {
            regs = {[s](double n) { return std::pow(n, -s); },
                    [s](double n) { return std::log(n) * std::pow(n, -s); }};
        } else {
            regs = {[s](double n) { return std::pow(n, -s); },
                    [s](double n) { return std::pow(n, s - 1.0); }};
        }
        LsqFit refined = extrapolate_tail(est.locals, std::max(K, 8), regs);
        if (!refined.ok) break;
        sigma_hat = refined.coeff[0];
        fit = refined;
    }
    est.value = sigma_hat;
    est.converged = std::isfinite(sigma_hat);
    return est;
}

} // namespace

SigmaEstimate sigma_from_ratios(const partition::WeightedSeries& a, double beta,
                                const ExtrapolationOptions& opts) {
    LogSeries v = log_view(a);
    std::vector<int> skipped;
    std::vector<std::pair<int, double>> z; // n -> log(1 - r_n e^{-beta})
    for (int n = v.n_min() + 1; n <= v.n_max(); ++n) {
        double arg = 1.0 - std::exp(v.at(n) - v.at(n - 1) - beta);
        if (arg <= 0) {
            skipped.push_back(n);
            continue;
        }
        z.emplace_back(n, std::log(arg));
    }
    std::vector<std::pair<int, double>> locals;
    for (size_t i = 1; i < z.size(); ++i) {
        if (z[i].first != z[i - 1].first + 1) continue; // straddles a skipped n
        int n = z[i].first;
        double slope = (z[i].second - z[i - 1].second) /
                       (std::log(static_cast<double>(n - 1)) - std::log(static_cast<double>(n)));
        locals.emplace_back(n, 1.0 - slope);
    }
    return extrapolate_sigma(std::move(locals), skipped, opts.tail_points, false);
}

SigmaEstimate sigma_from_loglog(const partition::WeightedSeries& a, double beta,
                                const ExtrapolationOptions& opts) {
    LogSeries v = log_view(a);
    std::vector<int> skipped;
    std::vector<std::pair<int, double>> z; // n -> log|log(a_n e^{-beta n})|
    for (int n = v.n_min(); n <= v.n_max(); ++n) {
        double norm_log = v.at(n) - beta * n;
        if (norm_log == 0) {
            skipped.push_back(n);
            continue;
        }
        z.emplace_back(n, std::log(std::abs(norm_log)));
    }
    std::vector<std::pair<int, double>> locals;
    for (size_t i = 1; i < z.size(); ++i) {
        if (z[i].first != z[i - 1].first + 1) continue;
        int n = z[i].first;
        double slope = (z[i].second - z[i - 1].second) /
                       (std::log(static_cast<double>(n)) - std::log(static_cast<double>(n - 1)));
        locals.emplace_back(n, slope);
    }
    return extrapolate_sigma(std::move(locals), skipped, opts.tail_points, true);
}

namespace {

struct RatioSeries {
    std::vector<int> ns;     // n for each y entry
    std::vector<double> ys;  // log(a_n/a_{n-1}) - beta
};

RatioSeries log_ratio_series(const LogSeries& v, double beta, Window w) {
    RatioSeries out;
    int lo = std::max(w.n_min, v.n_min() + 1);
    for (int n = lo; n <= std::min(w.n_max, v.n_max()); ++n) {
        out.ns.push_back(n);
        out.ys.push_back(v.at(n) - v.at(n - 1) - beta);
    }
    return out;
}

EstimateRecord base_record(const partition::WeightedSeries& a, Mu1Method method,
                           Window window) {
    EstimateRecord rec;
    rec.method = method;
    rec.u = static_cast<double>(a.u);
    rec.window = window;
    return rec;
}

void finish_linear(EstimateRecord& rec, const LsqFit& fit, double log_mu1, double g,
                   bool has_g) {
    if (!fit.ok || !std::isfinite(log_mu1)) return;
    rec.converged = true;
    rec.log_mu1 = log_mu1;
    if (has_g && std::isfinite(g)) rec.g = g;
    rec.residual = fit.rms;
}

// Damped Gauss-Newton with numerical derivatives (relative step 1e-6, update
// tolerance 1e-10, at most 200 iterations).
bool gauss_newton(std::vector<double>& params,
                  const std::function<double(const std::vector<double>&, double)>& model,
                  const std::vector<double>& xs, const std::vector<double>& ys,
                  double& rms_out) {
    const size_t p = params.size();
    auto sse = [&](const std::vector<double>& q) {
        long double s = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            long double r = ys[i] - model(q, xs[i]);
            s += r * r;
        }
        return static_cast<double>(s);
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::vector<double>> jac(xs.size(), std::vector<double>(p));
        std::vector<double> resid(xs.size());
        for (size_t i = 0; i < xs.size(); ++i)
            resid[i] = ys[i] - model(params, xs[i]);
        for (size_t j = 0; j < p; ++j) {
            std::vector<double> bumped = params;
            double step = 1e-6 * std::max(std::abs(params[j]), 1e-8);
            bumped[j] += step;
            for (size_t i = 0; i < xs.size(); ++i)
                jac[i][j] = (model(bumped, xs[i]) - model(params, xs[i])) / step;
        }
        LsqFit delta = lsq(jac, resid);
        if (!delta.ok) return false;
        double base_sse = sse(params);
        double lambda = 1.0;
        std::vector<double> trial(p);
        for (int halvings = 0; halvings < 40; ++halvings, lambda *= 0.5) {
            for (size_t j = 0; j < p; ++j) trial[j] = params[j] + lambda * delta.coeff[j];
            if (sse(trial) <= base_sse) break;
            if (halvings == 39) return false;
        }
        double max_update = 0;
        for (size_t j = 0; j < p; ++j)
            max_update = std::max(max_update, std::abs(lambda * delta.coeff[j]));
        params = trial;
        if (max_update < 1e-10) {
            rms_out = std::sqrt(sse(params) / static_cast<double>(xs.size()));
            return true;
        }
    }
    return false;
}

// Per-k exact solves shared by methods (ii) and (iii); returns the L_k
// sequence, extrapolated with the leading-correction basis.
EstimateRecord solve_and_extrapolate(EstimateRecord rec,
                                     std::vector<std::pair<int, double>> lk,
                                     std::vector<std::pair<int, double>> gk,
                                     double sigma, int K) {
    if (lk.size() < 4) return rec;
    Regressors regs{[sigma](double n) { return std::pow(n, -sigma); }};
    LsqFit fit = extrapolate_tail(lk, K, regs);
    if (!fit.ok) return rec;
    rec.converged = std::isfinite(fit.coeff[0]);
    if (!rec.converged) return rec;
    rec.log_mu1 = fit.coeff[0];
    rec.residual = fit.rms;
    LsqFit gfit = extrapolate_tail(gk, K, regs);
    if (gfit.ok && std::isfinite(gfit.coeff[0])) rec.g = gfit.coeff[0];
    return rec;
}

} // namespace

EstimateRecord fit_mu1(const partition::WeightedSeries& a, double beta, double sigma,
                       Mu1Method method, Window window, const ExtrapolationOptions& opts) {
    LogSeries v = log_view(a);
    if (window.n_min <= 0 && window.n_max <= 0)
        window = {std::max(v.n_min() + 2, v.n_max() - 30), v.n_max()};
    if (window.n_min < v.n_min() || window.n_max > v.n_max() || window.n_min >= window.n_max)
        throw std::invalid_argument("fit window outside series validity");
    EstimateRecord rec = base_record(a, method, window);
    const int K = opts.tail_points;

    switch (method) {
        case Mu1Method::ratio_fit_2: {
            RatioSeries r = log_ratio_series(v, beta, window);
            if (r.ns.size() < 3) return rec;
            std::vector<std::vector<double>> rows;
            for (int n : r.ns)
                rows.push_back({sigma * std::pow(n, sigma - 1.0), 1.0 / n});
            LsqFit fit = lsq(rows, r.ys);
            if (fit.ok) finish_linear(rec, fit, fit.coeff[0], fit.coeff[1], true);
            return rec;
        }
        case Mu1Method::ratio_fit_3: {
            RatioSeries r = log_ratio_series(v, beta, window);
            if (r.ns.size() < 4) return rec;
            std::vector<double> xs(r.ns.begin(), r.ns.end());
            // Start from the 2-term linear solution.
            std::vector<std::vector<double>> rows;
            for (int n : r.ns)
                rows.push_back({sigma * std::pow(n, sigma - 1.0), 1.0 / n});
            LsqFit init = lsq(rows, r.ys);
            if (!init.ok) return rec;
            std::vector<double> params{init.coeff[0], init.coeff[1]};
            auto model = [sigma](const std::vector<double>& q, double n) {
                return sigma * q[0] * std::pow(n, sigma - 1.0) + q[1] / n +
                       sigma * sigma * q[0] * q[0] / (2.0 * std::pow(n, 2.0 - 2.0 * sigma));
            };
            double rms = 0;
            if (!gauss_newton(params, model, xs, r.ys, rms)) return rec;
            rec.converged = std::isfinite(params[0]);
            if (rec.converged) {
                rec.log_mu1 = params[0];
                rec.g = params[1];
                rec.residual = rms;
            }
            return rec;
        }
        case Mu1Method::coeff_triples: {
            std::vector<std::pair<int, double>> lk, gk;
            for (int k = std::max(window.n_min, v.n_min() + 1); k + 1 <= window.n_max; ++k) {
                std::vector<std::vector<double>> rows;
                std::vector<double> ys;
                for (int j = k - 1; j <= k + 1; ++j) {
                    rows.push_back({std::pow(j, sigma), std::log(static_cast<double>(j)), 1.0});
                    ys.push_back(v.at(j) - beta * j);
                }
                LsqFit sol = lsq(rows, ys);
                if (!sol.ok) continue;
                lk.emplace_back(k, sol.coeff[0]);
                gk.emplace_back(k, sol.coeff[1]);
            }
            return solve_and_extrapolate(std::move(rec), std::move(lk), std::move(gk), sigma, K);
        }
        case Mu1Method::coeff_pairs: {
            std::vector<std::pair<int, double>> lk, gk;
            for (int k = std::max(window.n_min, v.n_min() + 1); k <= window.n_max; ++k) {
                std::vector<std::vector<double>> rows;
                std::vector<double> ys;
                for (int j = k - 1; j <= k; ++j) {
                    rows.push_back({std::pow(j, sigma), std::log(static_cast<double>(j))});
                    ys.push_back(v.at(j) - beta * j);
                }
                LsqFit sol = lsq(rows, ys);
                if (!sol.ok) continue;
                lk.emplace_back(k, sol.coeff[0]);
                gk.emplace_back(k, sol.coeff[1]);
            }
            return solve_and_extrapolate(std::move(rec), std::move(lk), std::move(gk), sigma, K);
        }
        case Mu1Method::logratio_solve: {
            RatioSeries r = log_ratio_series(v, beta, {v.n_min() + 1, window.n_max});
            std::vector<std::pair<int, double>> lk, gk;
            for (size_t i = 1; i < r.ns.size(); ++i) {
                if (r.ns[i] < window.n_min) continue;
                std::vector<std::vector<double>> rows;
                std::vector<double> ys;
                for (size_t j = i - 1; j <= i; ++j) {
                    rows.push_back({sigma * std::pow(r.ns[j], sigma - 1.0), 1.0 / r.ns[j]});
                    ys.push_back(r.ys[j]);
                }
                LsqFit sol = lsq(rows, ys);
                if (!sol.ok) continue;
                lk.emplace_back(r.ns[i], sol.coeff[0]);
                gk.emplace_back(r.ns[i], sol.coeff[1]);
            }
            return solve_and_extrapolate(std::move(rec), std::move(lk), std::move(gk), sigma, K);
        }
        case Mu1Method::s_n_gradient:
        case Mu1Method::t_n_gradient: {
            RatioSeries r = log_ratio_series(v, beta, {v.n_min() + 1, window.n_max});
            std::vector<std::pair<int, double>> seq; // n -> s_n or t_n
            std::vector<double> sn;
            for (size_t i = 0; i < r.ns.size(); ++i) sn.push_back(std::expm1(r.ys[i]));
            if (method == Mu1Method::s_n_gradient) {
                for (size_t i = 0; i < r.ns.size(); ++i) seq.emplace_back(r.ns[i], sn[i]);
            } else {
                for (size_t i = 1; i < r.ns.size(); ++i)
                    seq.emplace_back(r.ns[i], r.ns[i] * sn[i] - (r.ns[i] - 1) * sn[i - 1]);
            }
            std::vector<std::pair<int, double>> grad;
            for (size_t i = 1; i < seq.size(); ++i) {
                if (seq[i].first < window.n_min) continue;
                double dx = std::pow(seq[i].first, sigma - 1.0) -
                            std::pow(seq[i - 1].first, sigma - 1.0);
                grad.emplace_back(seq[i].first, (seq[i].second - seq[i - 1].second) / dx);
            }
            if (grad.size() < 4) return rec;
            Regressors regs{[sigma](double n) { return std::pow(n, sigma - 1.0); },
                            [sigma](double n) { return std::pow(n, -sigma); }};
            LsqFit fit = extrapolate_tail(grad, std::max(K, 8), regs);
            if (!fit.ok) return rec;
            double scale = (method == Mu1Method::s_n_gradient) ? sigma : sigma * sigma;
            double log_mu1 = fit.coeff[0] / scale;
            if (!std::isfinite(log_mu1)) return rec;
            rec.converged = true;
            rec.log_mu1 = log_mu1;
            rec.residual = fit.rms;
            return rec;
        }
        case Mu1Method::direct_root: {
            std::vector<std::vector<double>> rows;
            std::vector<double> ys;
            for (int n = window.n_min; n <= window.n_max; ++n) {
                double root = std::pow(n, -sigma);
                rows.push_back({1.0, std::log(static_cast<double>(n)) * root, root});
                ys.push_back((v.at(n) - beta * n) * root); // log d_n
            }
            LsqFit fit = lsq(rows, ys);
            if (fit.ok) finish_linear(rec, fit, fit.coeff[0], 0, false);
            return rec;
        }
    }
    return rec;
}

CombinedMu1 combined_log_mu1(const partition::WeightedSeries& a, double beta,
                             double sigma, const ExtrapolationOptions& opts) {
    LogSeries v = log_view(a);
    CombinedMu1 out;
    const int n_hi = v.n_max();
    const int lo_floor = v.n_min() + 3;
    Window default_window{std::max(lo_floor, n_hi - 30), n_hi};

    for (Mu1Method method : all_mu1_methods()) {
        if (method == Mu1Method::ratio_fit_2 || method == Mu1Method::ratio_fit_3) {
            // Sweep n_min upward as in the source analysis and take the median
            // of the converged window estimates as the method's view.
            std::vector<double> estimates;
            Window last{};
            for (int n_min = std::max(lo_floor, n_hi - 30);
                 n_min <= std::max(lo_floor, n_hi - 4); n_min += 2) {
                EstimateRecord rec = fit_mu1(a, beta, sigma, method, {n_min, n_hi}, opts);
                out.records.push_back(rec);
                if (rec.converged && rec.log_mu1) {
                    estimates.push_back(*rec.log_mu1);
                    last = rec.window;
                }
            }
            EstimateRecord summary = base_record(a, method, last);
            if (!estimates.empty()) {
                std::sort(estimates.begin(), estimates.end());
                summary.converged = true;
                summary.log_mu1 = estimates[estimates.size() / 2];
            }
            out.method_values.push_back(summary);
        } else {
            EstimateRecord rec = fit_mu1(a, beta, sigma, method, default_window, opts);
            out.records.push_back(rec);
            out.method_values.push_back(rec);
        }
    }

    std::vector<double> values;
    for (const auto& rec : out.method_values)
        if (rec.converged && rec.log_mu1) values.push_back(*rec.log_mu1);
    if (values.empty()) return out;
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted[sorted.size() / 2];
    std::vector<double> dev;
    for (double x : sorted) dev.push_back(std::abs(x - median));
    std::sort(dev.begin(), dev.end());
    double mad = dev[dev.size() / 2];
    double cut = std::max(3.0 * mad, 1e-9);
    double sum = 0;
    int used = 0;
    for (double x : values)
        if (std::abs(x - median) <= cut) {
            sum += x;
            ++used;
        }
    out.combined = sum / used;
    out.converged = used > 0;
    return out;
}

UDependence fit_u_dependence(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3)
        throw std::invalid_argument("u-dependence fit needs >= 3 points");
    std::vector<std::vector<double>> rows;
    std::vector<double> ys;
    for (const auto& [u, log_mu1] : points) {
        if (u <= 0 || log_mu1 >= 0)
            throw std::invalid_argument("u-dependence fit needs u > 0 and log mu1 < 0");
        rows.push_back({1.0, std::log(u)});
        ys.push_back(std::log(-log_mu1));
    }
    LsqFit fit = lsq(rows, ys);
    if (!fit.ok) throw std::runtime_error("u-dependence fit failed");
    return {std::exp(fit.coeff[0]), fit.coeff[1]};
}

double beta1_from_lambda1(double lambda1) {
    if (lambda1 <= 0) throw std::invalid_argument("lambda1 must be positive");
    double coeff = 7.0 * std::pow(3.0, -3.0 / 7.0) * std::pow(4.0, -4.0 / 7.0);
    return std::pow(lambda1 / coeff, 7.0 / 3.0);
}

namespace {

// Ratio-plot exponent read-off: local gradients of rho_n against 1/n,
// extrapolated, with the direct window slope as a cross-check for the band.
ExponentEstimate ratio_plot_exponent(const std::vector<std::pair<int, double>>& rho,
                                     int K) {
    ExponentEstimate est;
    if (rho.size() < 5) throw std::invalid_argument("too few points for a ratio plot");
    std::vector<std::pair<int, double>> grad;
    for (size_t i = 1; i < rho.size(); ++i) {
        int n = rho[i].first;
        double dx = 1.0 / n - 1.0 / rho[i - 1].first;
        grad.emplace_back(n, (rho[i].second - rho[i - 1].second) / dx);
    }
    est.locals = grad;
    LsqFit fit = extrapolate_tail(grad, K, {[](double n) { return 1.0 / n; }});
    if (!fit.ok) return est;
    // Direct slope of rho against 1/n over the same tail.
    std::vector<std::vector<double>> rows;
    std::vector<double> ys;
    const int use = std::min<int>(static_cast<int>(rho.size()), K + 1);
    for (size_t i = rho.size() - static_cast<size_t>(use); i < rho.size(); ++i) {
        rows.push_back({1.0, 1.0 / rho[i].first});
        ys.push_back(rho[i].second);
    }
    LsqFit direct = lsq(rows, ys);
    est.value = fit.coeff[0];
    est.converged = std::isfinite(est.value);
    if (direct.ok)
        est.band = std::max(std::abs(est.value - direct.coeff[1]),
                            std::abs(grad.back().second - est.value));
    return est;
}

} // namespace

ExponentEstimate estimate_g(const partition::WeightedSeries& a, double beta,
                            double sigma, double log_mu1,
                            const ExtrapolationOptions& opts) {
    if (!std::isfinite(log_mu1)) throw std::invalid_argument("log_mu1 must be finite");
    LogSeries v = log_view(a);
    std::vector<std::pair<int, double>> rho;
    for (int n = v.n_min() + 1; n <= v.n_max(); ++n) {
        double le_n = v.at(n) - beta * n - log_mu1 * std::pow(n, sigma);
        double le_p = v.at(n - 1) - beta * (n - 1) - log_mu1 * std::pow(n - 1, sigma);
        rho.emplace_back(n, std::exp(le_n - le_p));
    }
    return ratio_plot_exponent(rho, opts.tail_points);
}

ExponentEstimate estimate_alpha(const partition::WeightedSeries& c_series,
                                const partition::WeightedSeries& b_series,
                                const ExtrapolationOptions& opts) {
    if (abs(c_series.u - b_series.u) > Real("1e-30"))
        throw std::invalid_argument("series compare at different u");
    if (c_series.beta_mode != b_series.beta_mode)
        throw std::invalid_argument("series compare in different beta modes");
    LogSeries c = log_view(c_series);
    LogSeries b = log_view(b_series);
    int lo = std::max(c.n_min(), b.n_min());
    int hi = std::min(c.n_max(), b.n_max());
    if (hi - lo < 5) throw std::invalid_argument("overlapping n range too short");
    std::vector<std::pair<int, double>> rho; // v_n / v_{n-1}
    for (int n = lo + 1; n <= hi; ++n) {
        double lv_n = c.at(n) - b.at(n);
        double lv_p = c.at(n - 1) - b.at(n - 1);
        rho.emplace_back(n, std::exp(lv_n - lv_p));
    }
    return ratio_plot_exponent(rho, opts.tail_points);
}

ExponentEstimate estimate_power_exponent(const partition::WeightedSeries& a,
                                         const ExtrapolationOptions& opts) {
    if (a.u != 0) throw std::invalid_argument("power-law read-off expects u = 0");
    if (a.beta_mode != partition::BetaMode::normalized)
        throw std::invalid_argument("power-law read-off expects a normalized series");
    LogSeries v = log_view(a);
    std::vector<std::pair<int, double>> slopes;
    for (int n = v.n_min() + 1; n <= v.n_max(); ++n) {
        double dx = std::log(static_cast<double>(n)) - std::log(static_cast<double>(n - 1));
        slopes.emplace_back(n, (v.at(n) - v.at(n - 1)) / dx);
    }
    ExponentEstimate est;
    est.locals = slopes;
    LsqFit fit = extrapolate_tail(slopes, opts.tail_points, {[](double n) { return 1.0 / n; }});
    if (!fit.ok) return est;
    est.value = fit.coeff[0];
    est.converged = std::isfinite(est.value);
    est.band = std::abs(slopes.back().second - est.value);
    return est;
}

partition::WeightedSeries synthesize_series(const AsymptoticModel& model, int n_max,
                                            double correction_amplitude) {
    if (!(std::isfinite(model.beta) && std::isfinite(model.log_mu1) &&
          std::isfinite(model.sigma) && std::isfinite(model.g) &&
          std::isfinite(model.amplitude)))
        throw std::invalid_argument("model parameters must be finite");
    if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
    partition::WeightedSeries out;
    out.beta_mode = partition::BetaMode::raw;
    out.provenance = "synthetic";
    for (int n = 1; n <= n_max; ++n) {
        Real ln = Real(model.beta) * n + Real(model.log_mu1) * pow(Real(n), Real(model.sigma)) +
                  Real(model.g) * log(Real(n)) + log(Real(model.amplitude));
        Real value = exp(ln);
        if (correction_amplitude != 0)
            value *= Real(1) + Real(correction_amplitude) / pow(Real(n), Real(4) / Real(7));
        out.values[n] = value;
    }
    return out;
}

} // namespace csaw::analysis
