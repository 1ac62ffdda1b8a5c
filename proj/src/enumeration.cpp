#include "csaw/enumeration.hpp"

#include "csaw/errors.hpp"
#include "csaw/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace csaw::tm {

int CutSignature::free_end_count() const {
    int c = 0;
    for (auto s : states) c += (s == 3);
    return c;
}

bool CutSignature::arcs_balanced() const {
    int depth = 0;
    for (auto s : states) {
        if (s == 1) ++depth;
        if (s == 2 && --depth < 0) return false;
    }
    return depth == 0;
}

bool CutSignature::has_nested_free_end() const {
    int depth = 0;
    for (auto s : states) {
        if (s == 1) ++depth;
        if (s == 2) --depth;
        if (s == 3 && depth > 0) return true;
    }
    return false;
}

bool CutSignature::valid(bool bridge_mode) const {
    if (!arcs_balanced()) return false;
    int threes = free_end_count();
    if (threes > 2) return false;
    // Free ends carry a placed walk endpoint each.
    if (threes != int(origin_seen) + int(terminus_seen)) return false;
    if (bridge_mode && has_nested_free_end()) return false;
    return true;
}

namespace {

// Packed signature: 2 bits per slot in the low 2*S bits, origin/terminus
// flags just above. S = h + 2 slots (one horizontal edge per row plus the
// kink's vertical edge).
using Key = unsigned __int128;

struct KeyHash {
    std::size_t operator()(Key k) const noexcept {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        };
        return mix(static_cast<std::uint64_t>(k)) ^
               (mix(static_cast<std::uint64_t>(k >> 64)) * 0x85ebca77c2b2ae63ULL);
    }
};

inline int get_slot(Key k, int i) { return static_cast<int>((k >> (2 * i)) & 3); }

inline Key set_slot(Key k, int i, int v) {
    Key mask = Key(3) << (2 * i);
    return (k & ~mask) | (Key(v) << (2 * i));
}

// Partner of the lower arc-end at slot i: first unmatched upper end above.
int partner_of_lower(Key k, int i, int slots) {
    int depth = 0;
    for (int j = i + 1; j < slots; ++j) {
        int s = get_slot(k, j);
        if (s == 1) ++depth;
        if (s == 2) {
            if (depth == 0) return j;
            --depth;
        }
    }
    throw std::logic_error("unbalanced signature: lower arc-end without partner");
}

// Partner of the upper arc-end at slot i: first unmatched lower end below.
int partner_of_upper(Key k, int i, int slots) {
    int depth = 0;
    for (int j = i - 1; j >= 0; --j) {
        int s = get_slot(k, j);
        if (s == 2) ++depth;
        if (s == 1) {
            if (depth == 0) return j;
            --depth;
        }
    }
    throw std::logic_error("unbalanced signature: upper arc-end without partner");
}

struct Poly {
    std::vector<BigInt> coeff; // degree-indexed, size n_max + 1
    int min_deg = 0;
};

struct Sweep {
    int h;
    int n_max;
    int origin_row;
    int terminus_row; // -1: any row may host the terminus
    bool bridge_mode;
    bool grounded_floor; // row 0 hosts only the origin, with a vertical edge
    TmOptions opts;

    int slots;
    Key slot_mask;
    Key origin_flag, terminus_flag;

    using Map = std::unordered_map<Key, Poly, KeyHash>;
    Map cur, next;
    std::vector<BigInt> result;

    Sweep(int h_, int n_max_, int origin_row_, int terminus_row_, bool bridge_mode_,
          bool grounded_floor_, const TmOptions& opts_)
        : h(h_), n_max(n_max_), origin_row(origin_row_), terminus_row(terminus_row_),
          bridge_mode(bridge_mode_), grounded_floor(grounded_floor_), opts(opts_),
          slots(h_ + 2) {
        if (slots > 60) throw std::invalid_argument("strip height too large to pack");
        slot_mask = (Key(1) << (2 * slots)) - 1;
        origin_flag = Key(1) << (2 * slots);
        terminus_flag = Key(2) << (2 * slots);
        result.assign(static_cast<size_t>(n_max) + 1, BigInt(0));
    }

    void emit(Key key, const Poly& src, int zpow) {
        int min_deg = src.min_deg + zpow;
        if (min_deg > n_max) return;
        if (bridge_mode && has_nested_free_end_packed(key)) return;
        if (opts.validate_signatures) validate(key);
        Poly& dst = next[key];
        if (dst.coeff.empty()) {
            dst.coeff.assign(static_cast<size_t>(n_max) + 1, BigInt(0));
            dst.min_deg = min_deg;
        } else {
            dst.min_deg = std::min(dst.min_deg, min_deg);
        }
        for (int d = src.min_deg; d + zpow <= n_max; ++d)
            if (src.coeff[static_cast<size_t>(d)] != 0)
                dst.coeff[static_cast<size_t>(d + zpow)] += src.coeff[static_cast<size_t>(d)];
    }

    // Unchanged-word fast path: hands the coefficient vector over instead of
    // copying it. Only call once per source entry, after all other branches.
    void emit_move(Key key, Poly&& src) {
        if (src.min_deg > n_max) return;
        if (opts.validate_signatures) validate(key);
        auto [it, inserted] = next.try_emplace(key, std::move(src));
        if (!inserted) {
            Poly& dst = it->second;
            dst.min_deg = std::min(dst.min_deg, src.min_deg);
            for (int d = src.min_deg; d <= n_max; ++d)
                if (src.coeff[static_cast<size_t>(d)] != 0)
                    dst.coeff[static_cast<size_t>(d)] += src.coeff[static_cast<size_t>(d)];
        }
    }

    void harvest(const Poly& src, int zpow) {
        for (int d = src.min_deg; d + zpow <= n_max; ++d)
            if (src.coeff[static_cast<size_t>(d)] != 0)
                result[static_cast<size_t>(d + zpow)] += src.coeff[static_cast<size_t>(d)];
    }

    bool has_nested_free_end_packed(Key key) const {
        int depth = 0;
        for (int i = 0; i < slots; ++i) {
            int s = get_slot(key, i);
            if (s == 1) ++depth;
            if (s == 2) --depth;
            if (s == 3 && depth > 0) return true;
        }
        return false;
    }

    void validate(Key key) const {
        CutSignature sig = unpack(key);
        if (!sig.valid(bridge_mode))
            throw std::logic_error("transfer-matrix update produced an invalid signature");
    }

    CutSignature unpack(Key key) const {
        CutSignature sig;
        sig.states.resize(static_cast<size_t>(slots));
        for (int i = 0; i < slots; ++i)
            sig.states[static_cast<size_t>(i)] = static_cast<std::uint8_t>(get_slot(key, i));
        sig.origin_seen = (key & origin_flag) != 0;
        sig.terminus_seen = (key & terminus_flag) != 0;
        return sig;
    }

    // Endpoint placements available at `row` given the current flags. Each
    // entry is the flag bit to set.
    int endpoint_options(Key key, int row, Key out[2]) const {
        int n = 0;
        if (!(key & origin_flag) && row == origin_row) out[n++] = origin_flag;
        if (!(key & terminus_flag) && (terminus_row < 0 || row == terminus_row))
            out[n++] = terminus_flag;
        return n;
    }

    bool word_empty_except(Key key, int i, int j) const {
        Key cleared = set_slot(set_slot(key, i, 0), j, 0);
        return (cleared & slot_mask) == 0;
    }

    void process_vertex(int row) {
        next.clear();
        const int lo = row;      // vertical edge below the vertex
        const int hi = row + 1;  // horizontal edge entering from the left
        const bool at_top = (row == h);
        for (auto& [key, poly] : cur) {
            const int a = get_slot(key, lo);
            const int b = get_slot(key, hi);
            const Key base = set_slot(set_slot(key, lo, 0), hi, 0);
            if (grounded_floor && row == 0) {
                // Floor vertices are forbidden except for the origin itself,
                // whose single edge points up into the strip.
                if (!(key & origin_flag))
                    emit(set_slot(key, hi, 3) | origin_flag, poly, 1);
                emit_move(key, std::move(poly));
                continue;
            }
            if (a == 0 && b == 0) {
                // Walk passes through, both edges ahead of the cut.
                if (!at_top) emit(set_slot(set_slot(key, lo, 1), hi, 2), poly, 2);
                // Walk endpoint with a single new edge.
                Key flags[2];
                int nopt = endpoint_options(key, row, flags);
                for (int o = 0; o < nopt; ++o) {
                    emit(set_slot(key, lo, 3) | flags[o], poly, 1);
                    if (!at_top) emit(set_slot(key, hi, 3) | flags[o], poly, 1);
                }
                // Vertex untouched; last use of this entry, so hand it over.
                emit_move(key, std::move(poly));
            } else if (a != 0 && b != 0) {
                // The vertex joins two loose ends; no new edge.
                if (a == 1 && b == 2) {
                    // Adjacent matched pair: closing it would form a cycle.
                } else if (a == 2 && b == 1) {
                    emit(base, poly, 0);
                } else if (a == 1 && b == 1) {
                    int p = partner_of_lower(key, hi, slots);
                    emit(set_slot(base, p, 1), poly, 0);
                } else if (a == 2 && b == 2) {
                    int p = partner_of_upper(key, lo, slots);
                    emit(set_slot(base, p, 2), poly, 0);
                } else if (a == 3 && b == 3) {
                    if ((key & origin_flag) && (key & terminus_flag) &&
                        word_empty_except(key, lo, hi))
                        harvest(poly, 0);
                } else if (a == 1 || b == 1) {
                    // Free end merges with an arc through its lower end.
                    int p = partner_of_lower(key, a == 1 ? lo : hi, slots);
                    emit(set_slot(base, p, 3), poly, 0);
                } else {
                    // (2,3) or (3,2): merge through the arc's upper end.
                    int p = partner_of_upper(key, a == 2 ? lo : hi, slots);
                    emit(set_slot(base, p, 3), poly, 0);
                }
            } else {
                const int s = (a != 0) ? a : b;
                // Chunk continues through the vertex into one new edge.
                emit(set_slot(base, lo, s), poly, 1);
                if (!at_top) emit(set_slot(base, hi, s), poly, 1);
                // Chunk terminates: the vertex is a placed walk endpoint.
                Key flags[2];
                int nopt = endpoint_options(key, row, flags);
                for (int o = 0; o < nopt; ++o) {
                    if (s == 3) {
                        Key done = base | flags[o];
                        if ((done & origin_flag) && (done & terminus_flag) &&
                            (base & slot_mask) == 0)
                            harvest(poly, 0);
                    } else if (s == 1) {
                        int p = partner_of_lower(key, a != 0 ? lo : hi, slots);
                        emit(set_slot(base, p, 3) | flags[o], poly, 0);
                    } else {
                        int p = partner_of_upper(key, a != 0 ? lo : hi, slots);
                        emit(set_slot(base, p, 3) | flags[o], poly, 0);
                    }
                }
            }
        }
        cur.swap(next);
    }

    // Completion-cost lower bound at a column boundary, where slot i is the
    // horizontal edge of row i. A walk endpoint still to be placed connects to
    // the structure through some occupied slot, which costs at least the
    // vertical distance from its pinned row to the nearest occupied row. The
    // origin bound leans on the bottom of the occupied range and the terminus
    // bound on the top, so the two never charge the same slot twice.
    int completion_lower_bound(Key key) const {
        int row_min = -1, row_max = -1;
        for (int i = 0; i <= h; ++i) {
            if (get_slot(key, i) == 0) continue;
            if (row_min < 0) row_min = i;
            row_max = i;
        }
        if (row_min < 0) return 0;
        int lb = 0;
        if (!(key & origin_flag))
            lb += std::max({0, row_min - origin_row, origin_row - row_max});
        if (terminus_row >= 0 && !(key & terminus_flag))
            lb += std::max({0, row_min - terminus_row, terminus_row - row_max});
        return lb;
    }

    std::vector<BigInt> run() {
        cur.clear();
        Poly unit;
        unit.coeff.assign(static_cast<size_t>(n_max) + 1, BigInt(0));
        unit.coeff[0] = 1;
        cur.emplace(Key(0), std::move(unit));
        for (int col = 0; col <= n_max; ++col) {
            for (int row = 0; row <= h; ++row) process_vertex(row);
            // Leftmost-column anchoring: a configuration still pristine after
            // column 0 would be a translate of one counted later.
            if (col == 0) cur.erase(Key(0));
            if (cur.size() > opts.max_signatures)
                throw resource_error("signature budget exceeded in strip h=" +
                                     std::to_string(h));
            if (cur.empty()) break;
            Map shifted;
            shifted.reserve(cur.size());
            for (auto& [key, poly] : cur) {
                if (poly.min_deg + completion_lower_bound(key) > n_max) continue;
                Key flags = key & ~slot_mask;
                Key word = (key & slot_mask) << 2;
                shifted.emplace(word | flags, std::move(poly));
            }
            cur.swap(shifted);
        }
        return std::move(result);
    }
};

std::vector<BigInt> run_strip(int h, int n_max, int origin_row, int terminus_row,
                              bool bridge_mode, bool grounded_floor,
                              const TmOptions& opts) {
    Sweep sweep(h, n_max, origin_row, terminus_row, bridge_mode, grounded_floor, opts);
    return sweep.run();
}

} // namespace

GFPoly tm_bridges_per_height(int h, int n_max, const TmOptions& opts, BridgeStyle style) {
    if (h < 1) throw std::invalid_argument("bridge height must be >= 1");
    if (n_max < h) throw std::invalid_argument("n_max must be >= h");
    return GFPoly(run_strip(h, n_max, 0, h, true,
                            style == BridgeStyle::grounded, opts));
}

std::vector<BigInt> tm_strip_walks(int h, int n_max, const TmOptions& opts) {
    if (h < 0) throw std::invalid_argument("strip height must be >= 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    return run_strip(h, n_max, 0, -1, false, false, opts);
}

std::vector<BigInt> tm_strip_walks_centered(int h, int n_max, const TmOptions& opts) {
    if (h < 0) throw std::invalid_argument("strip height must be >= 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    return run_strip(h, n_max, (h + 1) / 2, -1, false, false, opts);
}

HeightSeries walks_by_max_height(const std::vector<std::vector<BigInt>>& strip_counts) {
    if (strip_counts.empty()) throw std::invalid_argument("no strip counts supplied");
    const size_t len = strip_counts.front().size();
    for (const auto& w : strip_counts)
        if (w.size() != len)
            throw std::invalid_argument("strip counts disagree on n_max");
    const int n_max = static_cast<int>(len) - 1;
    const int h_max = static_cast<int>(strip_counts.size()) - 1;
    HeightSeries series(SeriesKind::walks_max_height, n_max, h_max);
    for (int n = 1; n <= n_max; ++n) {
        for (int h = 0; h <= h_max; ++h) {
            BigInt diff = strip_counts[static_cast<size_t>(h)][static_cast<size_t>(n)];
            if (h > 0) diff -= strip_counts[static_cast<size_t>(h) - 1][static_cast<size_t>(n)];
            if (diff < 0)
                throw std::logic_error("strip counts are not monotone in h");
            series.add(n, h, diff);
        }
    }
    return series;
}

namespace {

// Runs fn(i) for i in [0, count) across workers, rethrowing the first failure.
template <typename Fn>
void parallel_tasks(int count, int threads, Fn&& fn) {
    std::mutex m;
    std::exception_ptr failure;
    parallel_for_index(count, threads, [&](int i) {
        try {
            fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(m);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);
}

} // namespace

HeightSeries walks_by_max_height(int h_max, int n_max, int threads,
                                 const TmOptions& opts) {
    if (h_max < 0) throw std::invalid_argument("h_max must be >= 0");
    std::vector<std::vector<BigInt>> strips(static_cast<size_t>(h_max) + 1);
    parallel_tasks(h_max + 1, threads,
                   [&](int h) { strips[static_cast<size_t>(h)] = tm_strip_walks(h, n_max, opts); });
    return walks_by_max_height(strips);
}

TwoVarSeries bridge_series(int w_max, int n_max, int threads, const TmOptions& opts) {
    if (w_max < 1) throw std::invalid_argument("w_max must be >= 1");
    std::vector<GFPoly> polys(static_cast<size_t>(w_max));
    parallel_tasks(w_max, threads, [&](int i) {
        polys[static_cast<size_t>(i)] = tm_bridges_per_height(i + 1, n_max, opts);
    });
    TwoVarSeries series(n_max);
    for (int h = 1; h <= w_max; ++h) series.set(h, std::move(polys[static_cast<size_t>(h) - 1]));
    return series;
}

HeightSeries centered_strip_table(int h_max, int n_max, int threads,
                                  const TmOptions& opts) {
    if (h_max < 0) throw std::invalid_argument("h_max must be >= 0");
    std::vector<std::vector<BigInt>> strips(static_cast<size_t>(h_max) + 1);
    parallel_tasks(h_max + 1, threads, [&](int h) {
        strips[static_cast<size_t>(h)] = tm_strip_walks_centered(h, n_max, opts);
    });
    HeightSeries series(SeriesKind::walks_strip_confined, n_max, h_max);
    for (int h = 0; h <= h_max; ++h)
        for (int n = 1; n <= n_max; ++n)
            series.add(n, h, strips[static_cast<size_t>(h)][static_cast<size_t>(n)]);
    return series;
}

} // namespace csaw::tm
