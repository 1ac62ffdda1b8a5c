#pragma once

#include "csaw/height_series.hpp"
#include "csaw/numeric.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace csaw::partition {

/// Model constants, stored exactly as given and never re-derived.
struct Constants {
    /// Square-lattice connective constant e^beta.
    std::string mu_sq_lattice = kConnectiveConstantDecimal;
    Rational sigma{3, 7};
    /// Predicted exponents: SAWs, bridges, polygons, q_n, half-plane, bridge
    /// number decay.
    std::vector<Rational> exponents{{3, 16}, {-13, 28}, {-11, 7},
                                    {11, 32}, {-3, 64}, {-7, 16}};
};

enum class BetaMode { raw, normalized };

const char* to_string(BetaMode mode);
BetaMode beta_mode_from_string(const std::string& s);

/// One height-weighted sequence {n -> a_n(u)} at working precision.
struct WeightedSeries {
    Real u = 0;
    BetaMode beta_mode = BetaMode::raw;
    std::map<int, Real> values;
    std::string provenance;

    /// First line is a '#'-prefixed JSON header recording u, beta_mode and
    /// provenance; then CSV `n,value` with round-trip-exact reals.
    void write_csv(std::ostream& os) const;
    static WeightedSeries read_csv(std::istream& is);
};

/// a_n = Sum_h count(n,h) e^{-u h}, times e^{-beta n} when normalized.
WeightedSeries weight_by_height(const HeightSeries& table, const Real& u,
                                BetaMode beta_mode);

/// p_n = c_{2n} / c_n^2, the probability that two independent n-step SAWs
/// concatenate into a SAW of length 2n.
Real concat_probability(const std::vector<BigInt>& full_plane_counts, int n);

} // namespace csaw::partition
