#include "csaw/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace csaw {

LatticeWalk::LatticeWalk(std::vector<Point> vertices) : vs_(std::move(vertices)) {
    if (vs_.empty() || !(vs_.front() == Point{0, 0}))
        throw std::invalid_argument("walk must start at the origin");
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < vs_.size(); ++i) {
        if (!seen.insert({vs_[i].x, vs_[i].y}).second)
            throw std::invalid_argument("walk revisits a vertex");
        if (i > 0) {
            int dx = std::abs(vs_[i].x - vs_[i - 1].x);
            int dy = std::abs(vs_[i].y - vs_[i - 1].y);
            if (dx + dy != 1)
                throw std::invalid_argument("walk steps must be unit lattice steps");
        }
    }
}

int LatticeWalk::max_height() const {
    int h = vs_.front().y;
    for (const auto& p : vs_) h = std::max(h, p.y);
    return h;
}

bool LatticeWalk::stays_in_half_plane() const {
    return std::all_of(vs_.begin(), vs_.end(), [](Point p) { return p.y >= 0; });
}

bool LatticeWalk::is_bridge() const {
    return stays_in_half_plane() && final_height() == max_height() &&
           max_height() >= 1;
}

bool LatticeWalk::is_grounded_bridge() const {
    if (!is_bridge()) return false;
    for (size_t i = 1; i < vs_.size(); ++i)
        if (vs_[i].y == 0) return false;
    return true;
}

} // namespace csaw
