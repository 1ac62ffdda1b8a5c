#pragma once

#include "csaw/numeric.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace csaw {

/// Truncated one-variable power series with exact integer coefficients.
/// Coefficients are stored for powers 0..degree_valid and are exact on that
/// range; no operation reports anything beyond it.
class GFPoly {
public:
    GFPoly() = default;
    explicit GFPoly(int degree_valid);
    GFPoly(std::vector<BigInt> coeffs);

    int degree_valid() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    BigInt& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    GFPoly truncated(int degree) const;

    bool operator==(const GFPoly& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<BigInt> coeffs_;
};

/// Exact truncated arithmetic. Operands must share degree_valid; composite
/// routines align degrees with truncated() first.
GFPoly series_add(const GFPoly& a, const GFPoly& b);
GFPoly series_sub(const GFPoly& a, const GFPoly& b);
GFPoly series_mul(const GFPoly& a, const GFPoly& b);
/// Sum_{m>=0} a^m truncated; requires a(0) == 0.
GFPoly geometric_inverse(const GFPoly& a);

/// A family {h -> f_h(z)} standing for Sum_h f_h(z) e^{-uh}. Bridge series use
/// heights >= 1; geometric_inverse introduces an h = 0 unit term.
class TwoVarSeries {
public:
    TwoVarSeries() = default;
    explicit TwoVarSeries(int degree_valid) : degree_valid_(degree_valid) {}

    int degree_valid() const { return degree_valid_; }
    int min_height() const;
    int max_height() const;

    bool has_height(int h) const { return by_height_.count(h) != 0; }
    /// Missing heights read as the zero polynomial.
    GFPoly at(int h) const;
    void set(int h, GFPoly poly);

    const std::map<int, GFPoly>& heights() const { return by_height_; }

    /// Drops heights above h_max and truncates every member to `degree`.
    TwoVarSeries truncated(int degree, int h_max) const;

    /// Exact table view (n, h) -> coefficient, zero entries skipped.
    std::map<std::pair<int, int>, BigInt> as_table() const;

    /// JSON array of {"h": <int>, "coeffs": ["<dec>", ...]} objects, index =
    /// power of z, heights ascending.
    void write_json(std::ostream& os) const;
    static TwoVarSeries read_json(std::istream& is);

private:
    int degree_valid_ = -1;
    std::map<int, GFPoly> by_height_;
};

TwoVarSeries series_add(const TwoVarSeries& a, const TwoVarSeries& b);
/// Heights add under multiplication; the result is truncated to `h_cap`.
TwoVarSeries series_mul(const TwoVarSeries& a, const TwoVarSeries& b, int h_cap);
/// Sum_{m>=0} a^m with height bookkeeping; requires min_height >= 1.
TwoVarSeries geometric_inverse(const TwoVarSeries& a, int h_cap);

} // namespace csaw
