#pragma once

#include "csaw/gf_poly.hpp"

namespace csaw::bridge_algebra {

/// Peels bridges into irreducible bridges, height by height:
///   A_h(z) = B_h(z) - Sum_{k=1}^{h-1} A_{h-k}(z) B_k(z),  A_1 = B_1.
/// Requires B to carry every height 1..h_max; preserves degree_valid (the min
/// over the inputs used).
TwoVarSeries irreducible_from_bridges(const TwoVarSeries& bridges, int h_max);

/// Rebuilds the bridge series from irreducibles via B = A / (1 - A), with
/// heights adding under multiplication. With A complete up to height w_max the
/// result is exact to order 3*w_max + 2; n_target beyond that is refused.
TwoVarSeries extend_bridges(const TwoVarSeries& irreducible, int n_target);

} // namespace csaw::bridge_algebra
