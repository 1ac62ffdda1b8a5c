#pragma once

#include "csaw/height_series.hpp"
#include "csaw/lattice.hpp"
#include "csaw/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace csaw::oracle {

/// Brute-force enumerators. Everything here is ground truth for the transfer
/// matrix: slow, simple, and exhaustive, with a hard cap so tests stay fast.

enum class WalkClass {
    full_plane,
    half_plane,
    strip,          // 0 <= y <= h
    centered_strip, // -ceil(h/2) <= y <= floor(h/2)
};

struct DfsOptions {
    int hard_cap = 16;
    /// Two fixed step orders; counts must agree between them.
    int step_order = 0;
    /// Spread the top-level step branches over this many workers.
    int threads = 1;
};

/// Exact per-n walk counts, index n in [0, n_max], entry 0 unused. `h` is the
/// strip parameter for the strip classes and ignored otherwise.
std::vector<BigInt> dfs_count_walks(WalkClass cls, int n_max, int h = 0,
                                    const DfsOptions& opts = {});

/// Half-plane walks tabulated by (n, max height).
HeightSeries dfs_walks_by_max_height(int n_max, const DfsOptions& opts = {});

/// b_{n,h}: bridges by length and height (h = y = max height >= 1).
HeightSeries dfs_count_bridges(int n_max, const DfsOptions& opts = {},
                               BridgeStyle style = BridgeStyle::spanning);

/// Origin-anchored half-plane polygons: (n-1)-step walks whose endpoint is
/// adjacent to the origin, tabulated by max height under length n.
HeightSeries dfs_count_polygons_halfplane(int n_max, const DfsOptions& opts = {});

/// True iff the bridge admits no split at an interior vertex t with
/// y_t = max_{j<=t} y_j = min_{j>=t} y_j and 0 < y_t < h(w), i.e. no
/// decomposition into two stacked bridges of positive height.
bool classify_irreducible(const LatticeWalk& bridge);

/// Grounded-bridge irreducibility: no interior t with y_t = max_{j<=t} y_j and
/// y_j > y_t for every j > t. Splitting at such a t yields a grounded bridge
/// followed by another grounded bridge stacked on its endpoint, and that
/// factorization is unique, which is what makes A_h exactly recoverable from
/// B_h. Inputs must be grounded bridges.
bool classify_irreducible_grounded(const LatticeWalk& bridge);

/// a_{n,h}: irreducible tally over grounded bridges, the ground truth for the
/// A_h recursion and the series extension.
std::map<std::pair<int, int>, BigInt> dfs_count_irreducible_bridges(
    int n_max, const DfsOptions& opts = {});

/// Endpoint-resolved half-plane counts for small n; used by the reflection
/// symmetry check.
std::map<std::pair<int, int>, BigInt> dfs_endpoint_counts_halfplane(
    int n, const DfsOptions& opts = {});

} // namespace csaw::oracle
