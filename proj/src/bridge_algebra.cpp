#include "csaw/bridge_algebra.hpp"

#include <stdexcept>
#include <string>

namespace csaw::bridge_algebra {

TwoVarSeries irreducible_from_bridges(const TwoVarSeries& bridges, int h_max) {
    if (h_max < 1) throw std::invalid_argument("h_max must be >= 1");
    for (int h = 1; h <= h_max; ++h)
        if (!bridges.has_height(h))
            throw std::invalid_argument("bridge series is missing height " +
                                        std::to_string(h));
    const int degree = bridges.degree_valid();
    TwoVarSeries irr(degree);
    for (int h = 1; h <= h_max; ++h) {
        GFPoly a = bridges.at(h);
        for (int k = 1; k <= h - 1; ++k)
            a = series_sub(a, series_mul(irr.at(h - k), bridges.at(k)));
        irr.set(h, std::move(a));
    }
    return irr;
}

TwoVarSeries extend_bridges(const TwoVarSeries& irreducible, int n_target) {
    if (irreducible.heights().empty())
        throw std::invalid_argument("empty irreducible series");
    const int w_max = irreducible.max_height();
    if (irreducible.min_height() < 1)
        throw std::invalid_argument("irreducible heights start at 1");
    if (n_target < 1) throw std::invalid_argument("n_target must be >= 1");
    if (n_target > 3 * w_max + 2)
        throw std::invalid_argument(
            "n_target " + std::to_string(n_target) + " exceeds the validity bound " +
            std::to_string(3 * w_max + 2) + " for w_max " + std::to_string(w_max));
    if (irreducible.degree_valid() < n_target)
        throw std::invalid_argument("irreducible series is too short for n_target");

    TwoVarSeries a = irreducible.truncated(n_target, w_max);
    // B = A / (1 - A) = A * Sum_{m>=0} A^m, heights adding term by term.
    TwoVarSeries geo = geometric_inverse(a, n_target);
    TwoVarSeries extended = series_mul(a, geo, n_target);
    // Drop all-zero height rows so the table view stays sparse.
    TwoVarSeries out(n_target);
    for (const auto& [h, poly] : extended.heights()) {
        bool nonzero = false;
        for (const auto& c : poly.coeffs())
            if (c != 0) { nonzero = true; break; }
        if (nonzero) out.set(h, poly);
    }
    return out;
}

} // namespace csaw::bridge_algebra
