#pragma once

#include "csaw/numeric.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

namespace csaw {

enum class SeriesKind {
    bridges,
    walks_max_height,
    walks_strip_confined,
    polygons_max_height,
};

const char* to_string(SeriesKind kind);
SeriesKind series_kind_from_string(const std::string& s);

/// Exact table {(n, h) -> count}. Zero entries are not stored.
class HeightSeries {
public:
    HeightSeries() = default;
    HeightSeries(SeriesKind kind, int n_max, int h_max)
        : kind_(kind), n_max_(n_max), h_max_(h_max) {}

    SeriesKind kind() const { return kind_; }
    int n_max() const { return n_max_; }
    int h_max() const { return h_max_; }

    void add(int n, int h, const BigInt& count);
    /// Returns 0 for absent entries.
    BigInt count(int n, int h) const;
    /// Sum over h at fixed n.
    BigInt row_total(int n) const;

    const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

    bool operator==(const HeightSeries& other) const {
        return entries_ == other.entries_;
    }

    /// CSV with header `n,h,count`, counts as decimal strings, rows sorted by
    /// (n, h). Byte-stable across runs.
    void write_csv(std::ostream& os) const;
    static HeightSeries read_csv(std::istream& is, SeriesKind kind);

private:
    SeriesKind kind_ = SeriesKind::bridges;
    int n_max_ = 0;
    int h_max_ = 0;
    std::map<std::pair<int, int>, BigInt> entries_;
};

} // namespace csaw
