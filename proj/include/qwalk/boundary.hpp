#pragma once

#include <stdexcept>
#include <string_view>

#include "qwalk/coin.hpp"

namespace qwalk {

enum class BoundaryKind { None, Cyclic, Reflect1, Reflect2, Trap };

// Boundary coins act at the two extreme lattice sites (indices 0 and m-1).
struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::None;

    // Wraparound of the shift operator independent of the coin boundary
    // (Right(m-1,0) = Left(0,m-1) = 1). Implied by kind Cyclic. With
    // reflecting ends it is dynamically inert for interior starts, which
    // no_leak_check verifies.
    bool cyclic_shift = false;
};

inline bool shift_is_cyclic(const BoundarySpec& b) {
    return b.kind == BoundaryKind::Cyclic || b.cyclic_shift;
}

inline bool has_edge_coin(BoundaryKind k) {
    return k == BoundaryKind::Reflect1 || k == BoundaryKind::Reflect2 ||
           k == BoundaryKind::Trap;
}

const char* to_string(BoundaryKind k);
BoundaryKind boundary_kind_from_string(std::string_view s);  // throws std::invalid_argument

// The two reflecting coin pairs. R1 exchanges |0> <-> |1> and -|0> <-> -|1>,
// R2 exchanges across signs (|0> <-> -|1>, |1> <-> -|0>). The lifted forms
// carry an explicit 1/sqrt(2); r1, r2 (without it) are unitary and satisfy
// r = (1/sqrt 2) B R B^T.
struct Reflectors {
    Mat4 R1, R2;
    Mat2 r1, r2;
};
Reflectors make_reflectors();

// Absorbing coin: the 4x4 zero matrix.
Mat4 make_trap();

// Coin layer with the endpoint mask applied: interior sites get the plain
// coin (A lifted, H unitary), the two extreme sites get the boundary coin.
struct MaskedCoinLayer {
    Mat4 lifted_interior, lifted_edge;
    Mat2 wave_interior, wave_edge;
};

// kind must be Reflect1, Reflect2 or Trap; requires sites >= 3.
MaskedCoinLayer make_masked_coin_layer(std::size_t sites, const BoundarySpec& b);

// Raised when a walk that requires an interior start is given a boundary
// site (the one case where open and cyclic shift closure differ).
struct BoundaryStartError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evolves the same interior start under open and cyclic shift closure with
// reflecting ends (both the lifted and the unitary system) and returns the
// max-norm state difference after `steps` steps.
real no_leak_check(std::size_t sites, std::uint64_t steps, std::size_t start,
                   BoundaryKind kind = BoundaryKind::Reflect1);

// Uniform (|0> - |1>)/sqrt(2(m-2)) start on all interior sites of a
// reflecting line; returns |total quantum probability - 1| after `steps`.
real reflecting_norm_check(std::uint64_t steps, std::size_t sites = 25);

}  // namespace qwalk
