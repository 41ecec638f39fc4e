#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qwalk/boundary.hpp"

namespace qwalk {

// Site-major layouts: the four (two) coin components of site k occupy
// indices 4k..4k+3 (2k..2k+1), coins ordered as in coin.hpp.
struct Lattice {
    std::size_t sites = 0;

    std::size_t lifted_dim() const { return 4 * sites; }
    std::size_t wave_dim() const { return 2 * sites; }
    std::size_t lifted_index(std::size_t site, int coin) const { return 4 * site + static_cast<std::size_t>(coin); }
    std::size_t wave_index(std::size_t site, int coin) const { return 2 * site + static_cast<std::size_t>(coin); }
};

// Maps user-facing site labels to lattice indices: explicit lattices use
// locations 1..m (boundaries at 1 and m), auto lattices use signed offsets
// from the center site, which is labeled 0.
struct SiteLabeling {
    std::size_t sites = 0;
    bool centered = false;

    std::size_t to_index(long long label) const;  // throws std::out_of_range
    long long to_label(std::size_t index) const;
};

enum class Scaling {
    Unscaled,        // populations evolve as written; quantum reads need 2^n
    SqrtTwoPerStep,  // state carries sqrt(2)^n; quantum reads need no factor
};

struct LiftedState {
    std::size_t sites = 0;
    std::vector<cplx> v;  // 4*sites, site-major
    std::uint64_t step = 0;
    Scaling scaling = Scaling::SqrtTwoPerStep;
};
LiftedState make_lifted_state(std::size_t sites, Scaling scaling = Scaling::SqrtTwoPerStep);

struct WaveState {
    std::size_t sites = 0;
    std::vector<cplx> w;  // 2*sites
    std::uint64_t step = 0;
};
WaveState make_wave_state(std::size_t sites);

// One-step walk operator, held structurally: per-site coin blocks plus the
// shift wiring. Never materialized as a dense matrix on the evolution path
// (the dense Kronecker form lives in the oracle).
template <int NC>
struct StepOperator {
    std::size_t sites = 0;
    bool cyclic = false;
    Mat<NC> interior;
    Mat<NC> edge;  // coin applied at sites 0 and m-1
};
using MarkovStep = StepOperator<4>;   // X * (I x A), lifted system
using UnitaryStep = StepOperator<2>;  // x * (I x H), quantum system

MarkovStep make_markov_step(const Lattice&, const BoundarySpec&);
UnitaryStep make_unitary_step(const Lattice&, const BoundarySpec&);

// Structural shift factors. Right has ones on the superdiagonal (moves
// content from site j+1 to site j), Left on the subdiagonal (j to j+1);
// cyclic closure adds Right(m-1,0) = Left(0,m-1) = 1.
enum class ShiftDir { Right, Left };
struct ShiftOperator {
    std::size_t size = 0;
    bool cyclic = false;
    ShiftDir dir = ShiftDir::Right;

    std::vector<cplx> apply(const std::vector<cplx>& in) const;
};
std::pair<ShiftOperator, ShiftOperator> make_shift_matrices(std::size_t size, bool cyclic);

// Serial is the reference implementation; Parallel runs the same arithmetic
// with OpenMP over sites (disjoint writes, so the results are identical).
enum class Engine { Serial, Parallel };

// Applies the step operator `steps` times, O(sites) work per step. Lifted
// states in SqrtTwoPerStep mode pick up one factor sqrt(2) per step.
void evolve(LiftedState&, const MarkovStep&, std::uint64_t steps, Engine = Engine::Parallel);
void evolve(WaveState&, const UnitaryStep&, std::uint64_t steps, Engine = Engine::Parallel);

// Per-site reads of a lifted state. Complex vectors are the four coin-state
// distributions; prob0/prob1 are the quantum probabilities; classical is the
// random-walk occupation; phases are the |0>- and |1>-channel phase
// differences (two-argument arctangent, theta(0) = 0).
struct SiteDistribution {
    std::vector<cplx> p0, p1, m1, m0;
    std::vector<real> prob0, prob1, prob_total;
    std::vector<real> classical;
    std::vector<real> phase0, phase1;
};

// The four coin-state distributions only, as raw state entries (re-interleaving
// them reproduces the state exactly).
SiteDistribution unfold(const LiftedState&);

// prob0(k) = s|p0(k)-m0(k)|^2, prob1(k) = s|p1(k)-m1(k)|^2 with s = 2^step in
// Unscaled mode (rejected past step 512) and s = 1 in SqrtTwoPerStep mode.
SiteDistribution quantum_probabilities(const LiftedState&);

// Per-site signed amplitudes sqrt(2)^step * B applied blockwise.
std::vector<cplx> project_amplitudes(const LiftedState&);
std::vector<cplx> interference_collapse(const std::vector<cplx>& lifted);  // (I x B) v, unscaled

// Random-walk occupation p0+p1+m1+m0 per site, rescaled to the unscaled
// populations. Rejects states with complex content (the classical reading
// then applies per real/imaginary walker).
std::vector<real> classical_distribution(const LiftedState&);

SiteDistribution phases(const LiftedState&);

// Everything at once, as written to datasets. Population columns are
// rescaled to the unscaled distributions, and the classical column is the
// real part of their sum (the real walker's distribution when the state is
// complex) rather than an error.
SiteDistribution site_distribution(const LiftedState&);

std::vector<real> wave_probabilities(const WaveState&);  // |w0|^2+|w1|^2 per site

// Dense check of the lifted/unitary equivalence: evolves u^n (I x B) P0 and
// sqrt(2)^n (I x B) U^n P0 with the oracle's dense operators and returns the
// max-norm difference. Limited to sites <= 64, steps <= 20.
real lift_equivalence_residual(std::size_t sites, std::uint64_t steps,
                               const LiftedState& p0, const BoundarySpec&);

}  // namespace qwalk
