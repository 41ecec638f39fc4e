#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/dataset.hpp"
#include "qwalk/initial_spec.hpp"

namespace qwalk {

// Command layer behind the CLI. Exit codes: 0 success, 1 verification
// failure, 2 usage/parse error.

struct RunRequest {
    std::uint64_t steps = 0;
    std::optional<std::size_t> sites;  // nullopt: auto, 2*steps+3 centered
    BoundarySpec boundary;
    std::string initial;
    Scaling scaling = Scaling::SqrtTwoPerStep;
    std::string output;
    DataFormat format = DataFormat::Csv;
};

// Evolves the lifted system for the request and assembles the dataset.
// Throws std::invalid_argument / std::out_of_range with a message naming the
// offending field.
Dataset build_run_dataset(const RunRequest&);

int cmd_verify(std::uint64_t seed, bool json, std::ostream& out);
int cmd_run(const RunRequest&, std::ostream& diag);
int cmd_compare(std::size_t sites, std::uint64_t steps, const BoundarySpec&,
                const std::string& initial, std::ostream& out);
int cmd_figure(int id, const std::string& output_dir, std::ostream& out);
int cmd_bench(const std::vector<std::size_t>& sites, const std::vector<std::uint64_t>& steps,
              std::ostream& out);

}  // namespace qwalk
