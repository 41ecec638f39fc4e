#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

// The 4-state coin lift. Basis order, fixed everywhere in this library:
//
//   0: |0>   1: |1>   2: -|1>   3: -|0>
//
// Signed coin amplitudes become separate nonnegative populations in this
// basis; the interference matrix B collapses them back to the two signed
// quantum amplitudes.

inline constexpr int kCoinStates = 4;

// Doubly stochastic transition matrix of the four-site chain with two
// reflecting endpoints and hop probability 1/2.
Mat4 make_transition_matrix();

Mat4 make_zero_state();  // diag(1,0,0,1): picks the |0>, -|0> components
Mat4 make_one_state();   // diag(0,1,1,0): picks the |1>, -|1> components
Mat4 make_reversal();    // antidiagonal ones

Mat2 make_zero();  // diag(1,0)
Mat2 make_one();   // diag(0,1)
Mat2 make_hadamard();

// The fixed 2x4 integer collapse matrix [[1,0,0,-1],[0,1,-1,0]].
struct InterferenceMatrix {
    std::array<std::array<int, 4>, 2> e;

    std::array<cplx, 2> apply(const std::array<cplx, 4>& p) const {
        std::array<cplx, 2> out{};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 4; ++c) out[r] += static_cast<real>(e[r][c]) * p[c];
        return out;
    }

    Mat4 gram() const;   // B^T B
    Mat2 outer() const;  // B B^T
};

InterferenceMatrix make_interference_matrix();

// (1/sqrt 2) B A B^T; must reproduce the Hadamard coin.
Mat2 hadamard_via_lift();

// max-norm of H^n B - sqrt(2)^n B A^n, for 0 <= n <= 64.
real power_relation_residual(int n);

// max-norm of (B^T B / 2)^2 - B^T B / 2. Dyadic arithmetic, exactly zero.
real idempotent_check();

// Commutators of B^T B with A, ZeroState, OneState, R1, R2 (max-norms).
std::vector<std::pair<std::string, real>> commutation_residuals();

struct QubitState {
    cplx a0{};
    cplx a1{};
};

// Population weights over the four lift states, ordered as above.
struct CoinPopulation {
    std::array<cplx, 4> p{};
};

enum class LiftMode {
    // Real and imaginary parts of each amplitude are split by sign:
    // nonnegative parts land in the |0>/|1> slots, negated negative parts in
    // the -|0>/-|1> slots, so a real state lifts to nonnegative populations.
    SignSplit,
    // P = (a0, a1, 0, 0).
    Raw,
};

CoinPopulation lift(const QubitState& q, LiftMode mode);

// sqrt(2)^n B p, as the two coin amplitudes.
QubitState project(const CoinPopulation& p, std::uint64_t n);

}  // namespace qwalk
