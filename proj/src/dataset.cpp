#include "qwalk/dataset.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qwalk {

Dataset make_dataset(const LiftedState& s, const SiteLabeling& labeling) {
    if (labeling.sites != s.sites)
        throw std::invalid_argument("dataset: labeling and state sizes differ");
    Dataset d;
    d.dist = site_distribution(s);
    d.site.resize(s.sites);
    for (std::size_t k = 0; k < s.sites; ++k) d.site[k] = labeling.to_label(k);
    return d;
}

DataFormat data_format_from_string(std::string_view s) {
    if (s == "csv") return DataFormat::Csv;
    if (s == "json") return DataFormat::Json;
    throw std::invalid_argument("format: must be 'csv' or 'json'");
}

namespace {

constexpr int kNumericColumns = 14;

std::array<double, kNumericColumns> row_values(const Dataset& d, std::size_t k) {
    const SiteDistribution& t = d.dist;
    return {static_cast<double>(t.p0[k].real()), static_cast<double>(t.p0[k].imag()),
            static_cast<double>(t.p1[k].real()), static_cast<double>(t.p1[k].imag()),
            static_cast<double>(t.m1[k].real()), static_cast<double>(t.m1[k].imag()),
            static_cast<double>(t.m0[k].real()), static_cast<double>(t.m0[k].imag()),
            static_cast<double>(t.prob0[k]),     static_cast<double>(t.prob1[k]),
            static_cast<double>(t.prob_total[k]), static_cast<double>(t.classical[k]),
            static_cast<double>(t.phase0[k]),    static_cast<double>(t.phase1[k])};
}

constexpr const char* kFieldNames[kNumericColumns] = {
    "p0_re", "p0_im", "p1_re", "p1_im", "m1_re", "m1_im", "m0_re", "m0_im",
    "prob0", "prob1", "prob_total", "classical", "phase0", "phase1"};

void write_csv(const Dataset& d, std::ostream& out) {
    out << kDatasetHeader << '\n';
    char buf[32];
    for (std::size_t k = 0; k < d.rows(); ++k) {
        out << d.site[k];
        for (double v : row_values(d, k)) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
}

void write_json(const Dataset& d, std::ostream& out) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < d.rows(); ++k) {
        nlohmann::ordered_json row;
        row["site"] = d.site[k];
        const auto vals = row_values(d, k);
        for (int c = 0; c < kNumericColumns; ++c) row[kFieldNames[c]] = vals[c];
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

}  // namespace

void write_dataset(const Dataset& d, DataFormat fmt, std::ostream& out) {
    if (fmt == DataFormat::Csv)
        write_csv(d, out);
    else
        write_json(d, out);
}

std::string dataset_to_string(const Dataset& d, DataFormat fmt) {
    std::ostringstream os;
    write_dataset(d, fmt, os);
    return os.str();
}

Dataset parse_csv_dataset(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kDatasetHeader)
        throw std::invalid_argument("csv: missing or wrong header row");

    Dataset d;
    const auto push_row = [&d](const std::array<double, kNumericColumns>& v) {
        SiteDistribution& t = d.dist;
        t.p0.emplace_back(v[0], v[1]);
        t.p1.emplace_back(v[2], v[3]);
        t.m1.emplace_back(v[4], v[5]);
        t.m0.emplace_back(v[6], v[7]);
        t.prob0.push_back(v[8]);
        t.prob1.push_back(v[9]);
        t.prob_total.push_back(v[10]);
        t.classical.push_back(v[11]);
        t.phase0.push_back(v[12]);
        t.phase1.push_back(v[13]);
    };

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string_view s = line;
        long long site = 0;
        auto [p0, ec0] = std::from_chars(s.data(), s.data() + s.size(), site);
        if (ec0 != std::errc{}) throw std::invalid_argument("csv: bad site column");
        s.remove_prefix(static_cast<std::size_t>(p0 - s.data()));
        std::array<double, kNumericColumns> vals{};
        for (int c = 0; c < kNumericColumns; ++c) {
            if (s.empty() || s.front() != ',') throw std::invalid_argument("csv: short row");
            s.remove_prefix(1);
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), vals[c]);
            if (ec != std::errc{}) throw std::invalid_argument("csv: bad numeric column");
            s.remove_prefix(static_cast<std::size_t>(p - s.data()));
        }
        if (!s.empty()) throw std::invalid_argument("csv: trailing characters");
        d.site.push_back(site);
        push_row(vals);
    }
    return d;
}

}  // namespace qwalk
