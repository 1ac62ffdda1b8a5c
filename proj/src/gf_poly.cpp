#include "csaw/gf_poly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace csaw {

GFPoly::GFPoly(int degree_valid) {
    if (degree_valid < 0) throw std::invalid_argument("degree_valid must be >= 0");
    coeffs_.assign(static_cast<size_t>(degree_valid) + 1, BigInt(0));
}

GFPoly::GFPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("a polynomial needs at least the constant term");
}

GFPoly GFPoly::truncated(int degree) const {
    if (degree < 0 || degree > degree_valid())
        throw std::invalid_argument("truncation degree outside validity");
    return GFPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

namespace {
void require_matching(const GFPoly& a, const GFPoly& b) {
    if (a.degree_valid() != b.degree_valid())
        throw std::invalid_argument("degree_valid mismatch between operands");
}
} // namespace

GFPoly series_add(const GFPoly& a, const GFPoly& b) {
    require_matching(a, b);
    GFPoly out(a.degree_valid());
    for (int k = 0; k <= a.degree_valid(); ++k) out[k] = a[k] + b[k];
    return out;
}

GFPoly series_sub(const GFPoly& a, const GFPoly& b) {
    require_matching(a, b);
    GFPoly out(a.degree_valid());
    for (int k = 0; k <= a.degree_valid(); ++k) out[k] = a[k] - b[k];
    return out;
}

GFPoly series_mul(const GFPoly& a, const GFPoly& b) {
    require_matching(a, b);
    int d = a.degree_valid();
    GFPoly out(d);
    for (int i = 0; i <= d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= d; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

GFPoly geometric_inverse(const GFPoly& a) {
    if (a[0] != 0)
        throw std::invalid_argument("geometric_inverse needs a vanishing constant term");
    int d = a.degree_valid();
    GFPoly out(d);
    out[0] = 1;
    GFPoly power(d);
    power[0] = 1;
    for (int m = 1; m <= d; ++m) {
        power = series_mul(power, a);
        out = series_add(out, power);
    }
    return out;
}

int TwoVarSeries::min_height() const {
    if (by_height_.empty()) throw std::invalid_argument("empty series");
    return by_height_.begin()->first;
}

int TwoVarSeries::max_height() const {
    if (by_height_.empty()) throw std::invalid_argument("empty series");
    return by_height_.rbegin()->first;
}

GFPoly TwoVarSeries::at(int h) const {
    auto it = by_height_.find(h);
    if (it != by_height_.end()) return it->second;
    return GFPoly(degree_valid_);
}

void TwoVarSeries::set(int h, GFPoly poly) {
    if (h < 0) throw std::invalid_argument("negative height");
    if (degree_valid_ < 0) degree_valid_ = poly.degree_valid();
    if (poly.degree_valid() != degree_valid_)
        throw std::invalid_argument("member polynomials must share degree_valid");
    by_height_[h] = std::move(poly);
}

TwoVarSeries TwoVarSeries::truncated(int degree, int h_max) const {
    TwoVarSeries out(degree);
    for (const auto& [h, poly] : by_height_) {
        if (h > h_max) break;
        out.set(h, poly.truncated(degree));
    }
    return out;
}

std::map<std::pair<int, int>, BigInt> TwoVarSeries::as_table() const {
    std::map<std::pair<int, int>, BigInt> table;
    for (const auto& [h, poly] : by_height_)
        for (int n = 0; n <= poly.degree_valid(); ++n)
            if (poly[n] != 0) table[{n, h}] = poly[n];
    return table;
}

void TwoVarSeries::write_json(std::ostream& os) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [h, poly] : by_height_) {
        nlohmann::json entry;
        entry["h"] = h;
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
        entry["coeffs"] = std::move(coeffs);
        arr.push_back(std::move(entry));
    }
    os << arr.dump(1) << '\n';
}

TwoVarSeries TwoVarSeries::read_json(std::istream& is) {
    nlohmann::json arr = nlohmann::json::parse(is);
    if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of heights");
    TwoVarSeries out;
    for (const auto& entry : arr) {
        int h = entry.at("h").get<int>();
        std::vector<BigInt> coeffs;
        for (const auto& c : entry.at("coeffs"))
            coeffs.emplace_back(c.get<std::string>());
        out.set(h, GFPoly(std::move(coeffs)));
    }
    if (out.heights().empty()) throw std::invalid_argument("empty per-height series");
    return out;
}

TwoVarSeries series_add(const TwoVarSeries& a, const TwoVarSeries& b) {
    if (a.degree_valid() != b.degree_valid())
        throw std::invalid_argument("degree_valid mismatch between operands");
    TwoVarSeries out(a.degree_valid());
    for (const auto& [h, poly] : a.heights()) out.set(h, poly);
    for (const auto& [h, poly] : b.heights())
        out.set(h, out.has_height(h) ? series_add(out.at(h), poly) : poly);
    return out;
}

TwoVarSeries series_mul(const TwoVarSeries& a, const TwoVarSeries& b, int h_cap) {
    if (a.degree_valid() != b.degree_valid())
        throw std::invalid_argument("degree_valid mismatch between operands");
    TwoVarSeries out(a.degree_valid());
    for (const auto& [ha, pa] : a.heights()) {
        if (ha > h_cap) break;
        for (const auto& [hb, pb] : b.heights()) {
            int h = ha + hb;
            if (h > h_cap) break;
            GFPoly prod = series_mul(pa, pb);
            out.set(h, out.has_height(h) ? series_add(out.at(h), prod) : std::move(prod));
        }
    }
    return out;
}

TwoVarSeries geometric_inverse(const TwoVarSeries& a, int h_cap) {
    if (a.heights().empty()) throw std::invalid_argument("empty series");
    if (a.min_height() < 1)
        throw std::invalid_argument("geometric_inverse needs heights >= 1");
    int d = a.degree_valid();
    TwoVarSeries out(d);
    GFPoly unit(d);
    unit[0] = 1;
    out.set(0, unit);
    TwoVarSeries power(d);
    power.set(0, unit);
    // Each factor carries height >= 1 and degree >= 1, so both caps bound the
    // number of terms.
    int m_cap = std::min(h_cap, d);
    for (int m = 1; m <= m_cap; ++m) {
        power = series_mul(power, a, h_cap);
        if (power.heights().empty()) break;
        out = series_add(out, power);
    }
    return out;
}

} // namespace csaw
