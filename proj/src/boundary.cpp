#include "qwalk/boundary.hpp"

#include <string>

#include "qwalk/walk.hpp"

namespace qwalk {

const char* to_string(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::None: return "none";
        case BoundaryKind::Cyclic: return "cyclic";
        case BoundaryKind::Reflect1: return "reflect1";
        case BoundaryKind::Reflect2: return "reflect2";
        case BoundaryKind::Trap: return "trap";
    }
    return "?";
}

BoundaryKind boundary_kind_from_string(std::string_view s) {
    if (s == "none") return BoundaryKind::None;
    if (s == "cyclic") return BoundaryKind::Cyclic;
    if (s == "reflect1") return BoundaryKind::Reflect1;
    if (s == "reflect2") return BoundaryKind::Reflect2;
    if (s == "trap") return BoundaryKind::Trap;
    throw std::invalid_argument("boundary: unknown kind '" + std::string(s) + "'");
}

Reflectors make_reflectors() {
    const real s = 1 / std::sqrt(static_cast<real>(2));
    Reflectors r;
    // |0> <-> |1> and -|1> <-> -|0>
    r.R1(0, 1) = s; r.R1(1, 0) = s;
    r.R1(2, 3) = s; r.R1(3, 2) = s;
    // |0> <-> -|1> and |1> <-> -|0>
    r.R2(0, 2) = s; r.R2(2, 0) = s;
    r.R2(1, 3) = s; r.R2(3, 1) = s;
    r.r1(0, 1) = 1; r.r1(1, 0) = 1;
    r.r2(0, 1) = -1; r.r2(1, 0) = -1;
    return r;
}

Mat4 make_trap() { return Mat4{}; }

MaskedCoinLayer make_masked_coin_layer(std::size_t sites, const BoundarySpec& b) {
    if (!has_edge_coin(b.kind))
        throw std::invalid_argument("boundary: masked coin layer needs reflect1, reflect2 or trap");
    if (sites < 3)
        throw std::invalid_argument("boundary: reflect/trap kinds need at least 3 sites");

    MaskedCoinLayer layer;
    layer.lifted_interior = make_transition_matrix();
    layer.wave_interior = make_hadamard();
    const Reflectors refl = make_reflectors();
    switch (b.kind) {
        case BoundaryKind::Reflect1:
            layer.lifted_edge = refl.R1;
            layer.wave_edge = refl.r1;
            break;
        case BoundaryKind::Reflect2:
            layer.lifted_edge = refl.R2;
            layer.wave_edge = refl.r2;
            break;
        default:  // Trap: annihilate, both systems
            layer.lifted_edge = make_trap();
            layer.wave_edge = Mat2{};
            break;
    }
    return layer;
}

real no_leak_check(std::size_t sites, std::uint64_t steps, std::size_t start, BoundaryKind kind) {
    if (kind != BoundaryKind::Reflect1 && kind != BoundaryKind::Reflect2)
        throw std::invalid_argument("no_leak_check: kind must be reflect1 or reflect2");
    if (start >= sites)
        throw std::invalid_argument("no_leak_check: start outside lattice");
    if (start == 0 || start == sites - 1)
        throw BoundaryStartError(
            "no_leak_check: start at a boundary site; open and cyclic closures may differ there");

    const Lattice lat{sites};
    const BoundarySpec open{kind, false};
    const BoundarySpec wrapped{kind, true};

    real mx = 0;
    {
        LiftedState a = make_lifted_state(sites, Scaling::Unscaled);
        const CoinPopulation p = lift({1, 0}, LiftMode::SignSplit);
        for (int c = 0; c < 4; ++c) a.v[lat.lifted_index(start, c)] = p.p[c];
        LiftedState b = a;
        evolve(a, make_markov_step(lat, open), steps);
        evolve(b, make_markov_step(lat, wrapped), steps);
        mx = std::max(mx, max_abs_diff(a.v.data(), b.v.data(), a.v.size()));
    }
    {
        WaveState a = make_wave_state(sites);
        a.w[lat.wave_index(start, 0)] = 1;
        WaveState b = a;
        evolve(a, make_unitary_step(lat, open), steps);
        evolve(b, make_unitary_step(lat, wrapped), steps);
        mx = std::max(mx, max_abs_diff(a.w.data(), b.w.data(), a.w.size()));
    }
    return mx;
}

real reflecting_norm_check(std::uint64_t steps, std::size_t sites) {
    if (sites < 3) throw std::invalid_argument("reflecting_norm_check: need at least 3 sites");
    const Lattice lat{sites};
    const real amp = 1 / std::sqrt(static_cast<real>(2 * (sites - 2)));

    LiftedState s = make_lifted_state(sites, Scaling::SqrtTwoPerStep);
    const CoinPopulation p = lift({amp, -amp}, LiftMode::SignSplit);
    for (std::size_t k = 1; k + 1 < sites; ++k)
        for (int c = 0; c < 4; ++c) s.v[lat.lifted_index(k, c)] = p.p[c];

    evolve(s, make_markov_step(lat, BoundarySpec{BoundaryKind::Reflect1, false}), steps);

    const SiteDistribution q = quantum_probabilities(s);
    real total = 0;
    for (real x : q.prob_total) total += x;
    return std::fabs(total - 1);
}

}  // namespace qwalk
