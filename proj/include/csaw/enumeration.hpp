#pragma once

#include "csaw/gf_poly.hpp"
#include "csaw/height_series.hpp"
#include "csaw/lattice.hpp"
#include "csaw/numeric.hpp"

#include <cstdint>
#include <vector>

namespace csaw::tm {

/// Cut-line state word for the transfer matrix. Slot states: 0 empty, 1 lower
/// arc-end, 2 upper arc-end, 3 free end. Arc ends form a non-crossing matching
/// in slot order; free ends are the live edges of chunks that already own a
/// placed walk endpoint.
struct CutSignature {
    std::vector<std::uint8_t> states;
    bool origin_seen = false;
    bool terminus_seen = false;

    int free_end_count() const;
    bool arcs_balanced() const;
    /// True if some state-3 slot lies strictly inside an arc pair.
    bool has_nested_free_end() const;
    /// Full invariant check; bridge mode additionally forbids nested free ends.
    bool valid(bool bridge_mode) const;
};

struct TmOptions {
    /// Live-signature budget; exceeding it raises resource_error naming the
    /// offending strip height.
    std::size_t max_signatures = 50'000'000;
    /// Check every emitted signature against the CutSignature invariants.
    bool validate_signatures = false;
};

/// B_h(z): n-step bridges from (0,0) to height exactly h (confined to the
/// strip 0 <= y <= h, endpoint on the top row). Exact to degree n_max. The
/// grounded style additionally forbids any floor vertex other than the origin.
GFPoly tm_bridges_per_height(int h, int n_max, const TmOptions& opts = {},
                             BridgeStyle style = BridgeStyle::spanning);

/// W_{n,<=h}: half-plane walks from the origin confined to 0 <= y <= h.
/// Index n in [0, n_max]; entry 0 is zero (walks have >= 1 step).
std::vector<BigInt> tm_strip_walks(int h, int n_max, const TmOptions& opts = {});

/// Walks from the origin confined to -ceil(h/2) <= y <= floor(h/2).
std::vector<BigInt> tm_strip_walks_centered(int h, int n_max,
                                            const TmOptions& opts = {});

/// c^max_{n,h} = W_{n,<=h} - W_{n,<=h-1} from per-strip counts that must share
/// n_max. strip_counts[h] is the tm_strip_walks output for height h.
HeightSeries walks_by_max_height(const std::vector<std::vector<BigInt>>& strip_counts);

/// Convenience: runs the strips for h in [0, h_max] (parallel across h) and
/// differences them.
HeightSeries walks_by_max_height(int h_max, int n_max, int threads = 0,
                                 const TmOptions& opts = {});

/// B_h(z) for h in [1, w_max], parallel across h.
TwoVarSeries bridge_series(int w_max, int n_max, int threads = 0,
                           const TmOptions& opts = {},
                           BridgeStyle style = BridgeStyle::spanning);

/// Cumulative centered-strip table: entry (n, h) = count of n-step walks in
/// the centered strip of parameter h.
HeightSeries centered_strip_table(int h_max, int n_max, int threads = 0,
                                  const TmOptions& opts = {});

} // namespace csaw::tm
