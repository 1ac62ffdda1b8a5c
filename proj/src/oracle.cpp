#include "csaw/oracle.hpp"

#include "csaw/errors.hpp"
#include "csaw/parallel.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace csaw::oracle {

namespace {

// Two fixed traversal orders; agreement between them is a test invariant.
constexpr int kSteps[2][4][2] = {
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
    {{0, -1}, {0, 1}, {-1, 0}, {1, 0}},
};

struct Bounds {
    int y_lo = std::numeric_limits<int>::min();
    int y_hi = std::numeric_limits<int>::max();
};

Bounds bounds_for(WalkClass cls, int h) {
    switch (cls) {
        case WalkClass::full_plane: return {};
        case WalkClass::half_plane: return {0, std::numeric_limits<int>::max()};
        case WalkClass::strip:
            if (h < 0) throw std::invalid_argument("strip height must be >= 0");
            return {0, h};
        case WalkClass::centered_strip:
            if (h < 0) throw std::invalid_argument("strip height must be >= 0");
            return {-((h + 1) / 2), h / 2};
    }
    throw std::invalid_argument("unknown walk class");
}

void check_cap(int n_max, const DfsOptions& opts) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (n_max > opts.hard_cap)
        throw resource_error("DFS refused: n_max " + std::to_string(n_max) +
                             " above hard cap " + std::to_string(opts.hard_cap));
    if (opts.step_order < 0 || opts.step_order > 1)
        throw std::invalid_argument("step_order must be 0 or 1");
}

// Occupancy grid big enough for any walk of <= cap steps from the origin.
class Grid {
public:
    explicit Grid(int cap) : cap_(cap), stride_(2 * cap + 1),
                             cells_(static_cast<size_t>(stride_) * stride_, 0) {}
    char& at(int x, int y) {
        return cells_[static_cast<size_t>(y + cap_) * stride_ + (x + cap_)];
    }

private:
    int cap_;
    int stride_;
    std::vector<char> cells_;
};

// Visits every self-avoiding extension up to n_max steps and calls
// visit(depth, x, y, max_y, path) at each node. The path includes the origin.
struct Dfs {
    int n_max;
    Bounds bounds;
    const int (*steps)[2];
    std::vector<Point> path;
    Grid grid;

    template <typename Visit>
    void run(int first_step, Visit&& visit) {
        path.clear();
        path.push_back({0, 0});
        grid.at(0, 0) = 1;
        const int dx = steps[first_step][0];
        const int dy = steps[first_step][1];
        if (dy >= bounds.y_lo && dy <= bounds.y_hi) {
            path.push_back({dx, dy});
            grid.at(dx, dy) = 1;
            descend(1, dx, dy, std::max(0, dy), visit);
            grid.at(dx, dy) = 0;
            path.pop_back();
        }
        grid.at(0, 0) = 0;
    }

    template <typename Visit>
    void descend(int depth, int x, int y, int max_y, Visit&& visit) {
        visit(depth, x, y, max_y, path);
        if (depth == n_max) return;
        for (int s = 0; s < 4; ++s) {
            int nx = x + steps[s][0];
            int ny = y + steps[s][1];
            if (ny < bounds.y_lo || ny > bounds.y_hi) continue;
            if (grid.at(nx, ny)) continue;
            grid.at(nx, ny) = 1;
            path.push_back({nx, ny});
            descend(depth + 1, nx, ny, std::max(max_y, ny), visit);
            path.pop_back();
            grid.at(nx, ny) = 0;
        }
    }
};

// Runs the four first-step branches (possibly on workers) and merges the
// per-branch accumulators in branch order.
template <typename Acc, typename Visit>
std::array<Acc, 4> run_branches(int n_max, Bounds bounds, const DfsOptions& opts,
                                Visit&& visit) {
    std::array<Acc, 4> acc{};
    parallel_for_index(4, opts.threads, [&](int branch) {
        Dfs dfs{n_max, bounds, kSteps[opts.step_order], {}, Grid(n_max)};
        dfs.run(branch, [&](int depth, int x, int y, int max_y,
                            const std::vector<Point>& path) {
            visit(acc[branch], depth, x, y, max_y, path);
        });
    });
    return acc;
}

using PerN = std::vector<std::uint64_t>;
using PerNH = std::vector<std::vector<std::uint64_t>>;

PerNH make_per_nh(int n_max) {
    return PerNH(static_cast<size_t>(n_max) + 1,
                 std::vector<std::uint64_t>(static_cast<size_t>(n_max) + 1, 0));
}

} // namespace

std::vector<BigInt> dfs_count_walks(WalkClass cls, int n_max, int h,
                                    const DfsOptions& opts) {
    check_cap(n_max, opts);
    Bounds bounds = bounds_for(cls, h);
    auto acc = run_branches<PerN>(
        n_max, bounds, opts,
        [&](PerN& a, int depth, int, int, int, const std::vector<Point>&) {
            if (a.empty()) a.assign(static_cast<size_t>(n_max) + 1, 0);
            ++a[static_cast<size_t>(depth)];
        });
    std::vector<BigInt> out(static_cast<size_t>(n_max) + 1, BigInt(0));
    for (const auto& a : acc)
        for (size_t n = 0; n < a.size(); ++n) out[n] += a[n];
    return out;
}

HeightSeries dfs_walks_by_max_height(int n_max, const DfsOptions& opts) {
    check_cap(n_max, opts);
    auto acc = run_branches<PerNH>(
        n_max, bounds_for(WalkClass::half_plane, 0), opts,
        [&](PerNH& a, int depth, int, int, int max_y, const std::vector<Point>&) {
            if (a.empty()) a = make_per_nh(n_max);
            ++a[static_cast<size_t>(depth)][static_cast<size_t>(max_y)];
        });
    HeightSeries series(SeriesKind::walks_max_height, n_max, n_max);
    for (int n = 1; n <= n_max; ++n)
        for (int hh = 0; hh <= n; ++hh) {
            BigInt total = 0;
            for (const auto& a : acc)
                if (!a.empty()) total += a[static_cast<size_t>(n)][static_cast<size_t>(hh)];
            series.add(n, hh, total);
        }
    return series;
}

HeightSeries dfs_count_bridges(int n_max, const DfsOptions& opts, BridgeStyle style) {
    check_cap(n_max, opts);
    auto acc = run_branches<PerNH>(
        n_max, bounds_for(WalkClass::half_plane, 0), opts,
        [&](PerNH& a, int depth, int, int y, int max_y, const std::vector<Point>& path) {
            if (y != max_y || max_y < 1) return;
            if (style == BridgeStyle::grounded)
                for (size_t i = 1; i < path.size(); ++i)
                    if (path[i].y == 0) return;
            if (a.empty()) a = make_per_nh(n_max);
            ++a[static_cast<size_t>(depth)][static_cast<size_t>(max_y)];
        });
    HeightSeries series(SeriesKind::bridges, n_max, n_max);
    for (int n = 1; n <= n_max; ++n)
        for (int hh = 1; hh <= n; ++hh) {
            BigInt total = 0;
            for (const auto& a : acc)
                if (!a.empty()) total += a[static_cast<size_t>(n)][static_cast<size_t>(hh)];
            series.add(n, hh, total);
        }
    return series;
}

HeightSeries dfs_count_polygons_halfplane(int n_max, const DfsOptions& opts) {
    check_cap(n_max, opts);
    auto acc = run_branches<PerNH>(
        n_max - 1, bounds_for(WalkClass::half_plane, 0), opts,
        [&](PerNH& a, int depth, int x, int y, int max_y, const std::vector<Point>&) {
            if (depth < 3 || std::abs(x) + std::abs(y) != 1) return;
            if (a.empty()) a = make_per_nh(n_max);
            // An (n-1)-step walk whose endpoint is adjacent to the origin is a
            // polygon of length n.
            ++a[static_cast<size_t>(depth) + 1][static_cast<size_t>(max_y)];
        });
    HeightSeries series(SeriesKind::polygons_max_height, n_max, n_max);
    for (int n = 4; n <= n_max; ++n)
        for (int hh = 1; hh < n; ++hh) {
            BigInt total = 0;
            for (const auto& a : acc)
                if (!a.empty()) total += a[static_cast<size_t>(n)][static_cast<size_t>(hh)];
            series.add(n, hh, total);
        }
    return series;
}

bool classify_irreducible(const LatticeWalk& bridge) {
    if (!bridge.is_bridge()) throw std::invalid_argument("input is not a bridge");
    const auto& vs = bridge.vertices();
    const int n = bridge.length();
    const int h = bridge.max_height();
    // Suffix minima of the height profile.
    std::vector<int> suffix_min(vs.size());
    suffix_min.back() = vs.back().y;
    for (int j = n - 1; j >= 0; --j)
        suffix_min[static_cast<size_t>(j)] =
            std::min(vs[static_cast<size_t>(j)].y, suffix_min[static_cast<size_t>(j) + 1]);
    int prefix_max = vs.front().y;
    for (int t = 1; t < n; ++t) {
        int y = vs[static_cast<size_t>(t)].y;
        prefix_max = std::max(prefix_max, y);
        // A split point leaves two stacked pieces of heights y and h - y; both
        // must be genuine bridges, hence 0 < y < h.
        if (y == prefix_max && y == suffix_min[static_cast<size_t>(t)] && y > 0 && y < h)
            return false;
    }
    return true;
}

bool classify_irreducible_grounded(const LatticeWalk& bridge) {
    if (!bridge.is_grounded_bridge())
        throw std::invalid_argument("input is not a grounded bridge");
    const auto& vs = bridge.vertices();
    const int n = bridge.length();
    // Strict suffix minima: min over j > t.
    std::vector<int> min_after(vs.size(), vs.back().y);
    for (int j = n - 1; j >= 1; --j)
        min_after[static_cast<size_t>(j)] =
            std::min(vs[static_cast<size_t>(j) + 1].y, min_after[static_cast<size_t>(j) + 1]);
    int prefix_max = 0;
    for (int t = 1; t < n; ++t) {
        int y = vs[static_cast<size_t>(t)].y;
        prefix_max = std::max(prefix_max, y);
        if (y == prefix_max && min_after[static_cast<size_t>(t)] > y) return false;
    }
    return true;
}

std::map<std::pair<int, int>, BigInt> dfs_count_irreducible_bridges(
    int n_max, const DfsOptions& opts) {
    check_cap(n_max, opts);
    auto acc = run_branches<PerNH>(
        n_max, bounds_for(WalkClass::half_plane, 0), opts,
        [&](PerNH& a, int depth, int, int y, int max_y, const std::vector<Point>& path) {
            if (y != max_y || max_y < 1) return;
            for (size_t i = 1; i < path.size(); ++i)
                if (path[i].y == 0) return;
            if (!classify_irreducible_grounded(LatticeWalk(path))) return;
            if (a.empty()) a = make_per_nh(n_max);
            ++a[static_cast<size_t>(depth)][static_cast<size_t>(max_y)];
        });
    std::map<std::pair<int, int>, BigInt> table;
    for (int n = 1; n <= n_max; ++n)
        for (int hh = 1; hh <= n; ++hh) {
            BigInt total = 0;
            for (const auto& a : acc)
                if (!a.empty()) total += a[static_cast<size_t>(n)][static_cast<size_t>(hh)];
            if (total != 0) table[{n, hh}] = total;
        }
    return table;
}

std::map<std::pair<int, int>, BigInt> dfs_endpoint_counts_halfplane(
    int n, const DfsOptions& opts) {
    check_cap(n, opts);
    std::array<std::map<std::pair<int, int>, std::uint64_t>, 4> acc =
        run_branches<std::map<std::pair<int, int>, std::uint64_t>>(
            n, bounds_for(WalkClass::half_plane, 0), opts,
            [&](auto& a, int depth, int x, int y, int, const std::vector<Point>&) {
                if (depth == n) ++a[{x, y}];
            });
    std::map<std::pair<int, int>, BigInt> out;
    for (const auto& a : acc)
        for (const auto& [key, v] : a) out[key] += v;
    return out;
}

} // namespace csaw::oracle
