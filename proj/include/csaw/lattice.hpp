#pragma once

#include <vector>

namespace csaw {

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

/// Two bridge families share the height-equals-endpoint property but differ at
/// the bottom boundary:
///  - spanning: the walk may revisit y = 0 anywhere (the model definition);
///  - grounded: y = 0 only at the origin. Grounded bridges concatenate freely
///    by stacking, which is what the irreducible-bridge factorization and the
///    series extension rely on.
enum class BridgeStyle { spanning, grounded };

/// A self-avoiding walk on Z^2 anchored at the origin. Construction validates
/// unit steps and vertex distinctness.
class LatticeWalk {
public:
    explicit LatticeWalk(std::vector<Point> vertices);

    int length() const { return static_cast<int>(vs_.size()) - 1; }
    const std::vector<Point>& vertices() const { return vs_; }

    /// h(w): maximum y coordinate visited.
    int max_height() const;
    /// y(w): y coordinate of the final vertex.
    int final_height() const { return vs_.back().y; }

    bool stays_in_half_plane() const;
    /// Bridge: half-plane walk with h(w) == y(w) >= 1.
    bool is_bridge() const;
    /// Bridge that touches the bottom boundary only at the origin.
    bool is_grounded_bridge() const;

private:
    std::vector<Point> vs_;
};

} // namespace csaw
