#pragma once

#include <iosfwd>
#include <string>

#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr const char* kDatasetHeader =
    "site,p0_re,p0_im,p1_re,p1_im,m1_re,m1_im,m0_re,m0_im,"
    "prob0,prob1,prob_total,classical,phase0,phase1";

// One row per site, columns exactly as in kDatasetHeader.
struct Dataset {
    std::vector<long long> site;
    SiteDistribution dist;

    std::size_t rows() const { return site.size(); }
};

Dataset make_dataset(const LiftedState&, const SiteLabeling&);

enum class DataFormat { Csv, Json };
DataFormat data_format_from_string(std::string_view);  // throws std::invalid_argument

// CSV values are printed with %.17g (lossless double round-trip); JSON is an
// array of objects with the same field names.
void write_dataset(const Dataset&, DataFormat, std::ostream&);
std::string dataset_to_string(const Dataset&, DataFormat);

// Strict reader for the CSV form (round-trip checks).
Dataset parse_csv_dataset(std::istream&);

}  // namespace qwalk
