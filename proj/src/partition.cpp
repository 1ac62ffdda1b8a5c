#include "csaw/partition.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csaw::partition {

const char* to_string(BetaMode mode) {
    return mode == BetaMode::raw ? "raw" : "normalized";
}

BetaMode beta_mode_from_string(const std::string& s) {
    if (s == "raw") return BetaMode::raw;
    if (s == "normalized") return BetaMode::normalized;
    throw std::invalid_argument("unknown beta mode: " + s);
}

void WeightedSeries::write_csv(std::ostream& os) const {
    nlohmann::json header;
    header["u"] = format_real(u);
    header["beta_mode"] = to_string(beta_mode);
    header["provenance"] = provenance;
    os << "# " << header.dump() << '\n';
    os << "n,value\n";
    for (const auto& [n, value] : values)
        os << n << ',' << format_real(value) << '\n';
}

WeightedSeries WeightedSeries::read_csv(std::istream& is) {
    WeightedSeries series;
    std::string line;
    bool saw_header_json = false, saw_header_row = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto header = nlohmann::json::parse(line.substr(1));
            series.u = parse_real(header.at("u").get<std::string>());
            series.beta_mode = beta_mode_from_string(header.at("beta_mode").get<std::string>());
            series.provenance = header.value("provenance", "");
            saw_header_json = true;
            continue;
        }
        if (!saw_header_row) {
            if (line != "n,value")
                throw std::invalid_argument("expected header 'n,value', got '" + line + "'");
            saw_header_row = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("malformed CSV row: '" + line + "'");
        series.values[std::stoi(line.substr(0, comma))] = parse_real(line.substr(comma + 1));
    }
    if (!saw_header_json || !saw_header_row)
        throw std::invalid_argument("weighted-series CSV missing header");
    return series;
}

WeightedSeries weight_by_height(const HeightSeries& table, const Real& u,
                                BetaMode beta_mode) {
    if (table.entries().empty()) throw std::invalid_argument("empty height table");
    if (u < 0) throw std::invalid_argument("compression parameter u must be >= 0");
    WeightedSeries out;
    out.u = u;
    out.beta_mode = beta_mode;
    out.provenance = to_string(table.kind());

    // e^{-uh} by repeated multiplication keeps the weights exact at working
    // precision and h-independent of evaluation order.
    const Real weight_step = exp(-u);
    const Real beta = beta_log_mu();
    std::map<int, Real> row_sums;
    for (const auto& [key, count] : table.entries()) {
        const auto [n, h] = key;
        Real weight = pow(weight_step, h);
        row_sums[n] += Real(count) * weight;
    }
    for (auto& [n, value] : row_sums) {
        if (beta_mode == BetaMode::normalized) value *= exp(-beta * n);
        out.values[n] = value;
    }
    return out;
}

Real concat_probability(const std::vector<BigInt>& full_plane_counts, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (static_cast<size_t>(2 * n) >= full_plane_counts.size())
        throw std::invalid_argument("need counts up to order 2n");
    const BigInt& cn = full_plane_counts[static_cast<size_t>(n)];
    const BigInt& c2n = full_plane_counts[static_cast<size_t>(2 * n)];
    if (cn <= 0 || c2n <= 0) throw std::invalid_argument("counts must be positive");
    return Real(c2n) / (Real(cn) * Real(cn));
}

} // namespace csaw::partition
