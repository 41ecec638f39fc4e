#pragma once

#include <string>
#include <vector>

#include "qwalk/dataset.hpp"

namespace qwalk {

// Bundled dataset presets (ids 3, 4, 5, 8, 9):
//   3, 4: 100 steps from the origin in |0>, auto lattice (coin-state
//         distributions / classical-vs-quantum contrast)
//   5:    50 steps from the origin in (|0> + i|1>)/sqrt(2) (phases)
//   8:    25-site reflecting line, uniform (|0> - |1>)/sqrt(46) start on the
//         interior, after 35 and 65 steps (two files)
//   9:    same line after 65 steps; classical column normalized to the
//         initial population mass (random-walk probability between two
//         partial traps)
// Auto-lattice presets are trimmed to the reachable core of 2n+1 sites.

struct FigureOutput {
    std::string filename;
    Dataset data;
};

std::vector<int> figure_ids();
const char* figure_note(int id);                 // one-line description
std::vector<FigureOutput> build_figure(int id);  // throws std::invalid_argument on unknown id

}  // namespace qwalk
