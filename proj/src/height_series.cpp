#include "csaw/height_series.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csaw {

const char* to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::bridges: return "bridges";
        case SeriesKind::walks_max_height: return "walks_max_height";
        case SeriesKind::walks_strip_confined: return "walks_strip_confined";
        case SeriesKind::polygons_max_height: return "polygons_max_height";
    }
    return "unknown";
}

SeriesKind series_kind_from_string(const std::string& s) {
    if (s == "bridges") return SeriesKind::bridges;
    if (s == "walks_max_height") return SeriesKind::walks_max_height;
    if (s == "walks_strip_confined") return SeriesKind::walks_strip_confined;
    if (s == "polygons_max_height") return SeriesKind::polygons_max_height;
    throw std::invalid_argument("unknown series kind: " + s);
}

void HeightSeries::add(int n, int h, const BigInt& count) {
    if (count < 0) throw std::invalid_argument("counts are nonnegative");
    if (count == 0) return;
    entries_[{n, h}] += count;
    if (n > n_max_) n_max_ = n;
    if (h > h_max_) h_max_ = h;
}

BigInt HeightSeries::count(int n, int h) const {
    auto it = entries_.find({n, h});
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt HeightSeries::row_total(int n) const {
    BigInt total = 0;
    for (auto it = entries_.lower_bound({n, 0});
         it != entries_.end() && it->first.first == n; ++it)
        total += it->second;
    return total;
}

void HeightSeries::write_csv(std::ostream& os) const {
    os << "n,h,count\n";
    for (const auto& [key, count] : entries_)
        os << key.first << ',' << key.second << ',' << count.str() << '\n';
}

HeightSeries HeightSeries::read_csv(std::istream& is, SeriesKind kind) {
    HeightSeries series(kind, 0, 0);
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != "n,h,count")
                throw std::invalid_argument("expected header 'n,h,count', got '" + line + "'");
            saw_header = true;
            continue;
        }
        std::istringstream row(line);
        std::string n_s, h_s, c_s;
        if (!std::getline(row, n_s, ',') || !std::getline(row, h_s, ',') ||
            !std::getline(row, c_s))
            throw std::invalid_argument("malformed CSV row: '" + line + "'");
        series.add(std::stoi(n_s), std::stoi(h_s), BigInt(c_s));
    }
    if (!saw_header) throw std::invalid_argument("empty height-series CSV");
    return series;
}

} // namespace csaw
