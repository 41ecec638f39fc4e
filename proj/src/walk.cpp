#include "qwalk/walk.hpp"

#include <limits>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr std::size_t kNoSite = std::numeric_limits<std::size_t>::max();

// Which coin components ride the Right factor (content moves from site j+1
// to site j); the rest ride Left (j to j+1). Lifted: |0> and -|0> move
// right, |1> and -|1> move left. Unitary: |0> right, |1> left.
template <int NC>
constexpr bool moves_right(int coin);
template <>
constexpr bool moves_right<4>(int coin) { return coin == 0 || coin == 3; }
template <>
constexpr bool moves_right<2>(int coin) { return coin == 0; }

template <int NC>
inline void coin_site(const StepOperator<NC>& op, const cplx* in, cplx* out, std::size_t k) {
    const Mat<NC>& m = (k == 0 || k + 1 == op.sites) ? op.edge : op.interior;
    m.apply(in + NC * k, out + NC * k);
}

template <int NC>
inline void gather_site(const StepOperator<NC>& op, const cplx* w, cplx* out, std::size_t j,
                        real scale) {
    const std::size_t m = op.sites;
    const std::size_t up = (j + 1 < m) ? j + 1 : (op.cyclic ? 0 : kNoSite);
    const std::size_t dn = (j > 0) ? j - 1 : (op.cyclic ? m - 1 : kNoSite);
    for (int c = 0; c < NC; ++c) {
        const std::size_t src = moves_right<NC>(c) ? up : dn;
        out[NC * j + c] = (src == kNoSite) ? cplx{} : w[NC * src + c] * scale;
    }
}

template <int NC>
void run_serial(const StepOperator<NC>& op, cplx* v, cplx* scratch, real scale,
                std::uint64_t steps) {
    const std::size_t m = op.sites;
    for (std::uint64_t t = 0; t < steps; ++t) {
        for (std::size_t k = 0; k < m; ++k) coin_site(op, v, scratch, k);
        for (std::size_t j = 0; j < m; ++j) gather_site(op, scratch, v, j, scale);
    }
}

// Same arithmetic as run_serial inside one persistent parallel region (one
// fork for the whole walk, barriers between the coin and shift phases). All
// writes are disjoint, so the result is bit-identical to the serial path.
template <int NC>
void run_parallel(const StepOperator<NC>& op, cplx* v, cplx* scratch, real scale,
                  std::uint64_t steps) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(op.sites);
#pragma omp parallel
    for (std::uint64_t t = 0; t < steps; ++t) {
#pragma omp for schedule(static)
        for (std::ptrdiff_t k = 0; k < m; ++k)
            coin_site(op, v, scratch, static_cast<std::size_t>(k));
#pragma omp for schedule(static)
        for (std::ptrdiff_t j = 0; j < m; ++j)
            gather_site(op, scratch, v, static_cast<std::size_t>(j), scale);
    }
}

// below this the fork/barrier cost outweighs two-way parallelism
constexpr std::size_t kParallelCutoff = 256;

template <int NC, typename State>
void evolve_impl(State& s, std::vector<cplx>& v, const StepOperator<NC>& op, std::uint64_t steps,
                 Engine engine, real scale) {
    if (s.sites != op.sites) throw std::invalid_argument("evolve: state and operator lattices differ");
    std::vector<cplx> scratch(v.size());
    if (engine == Engine::Parallel && op.sites >= kParallelCutoff)
        run_parallel(op, v.data(), scratch.data(), scale, steps);
    else
        run_serial(op, v.data(), scratch.data(), scale, steps);
    s.step += steps;
}

}  // namespace

std::size_t SiteLabeling::to_index(long long label) const {
    long long idx;
    if (centered)
        idx = label + static_cast<long long>(sites / 2);
    else
        idx = label - 1;  // locations 1..m
    if (idx < 0 || idx >= static_cast<long long>(sites))
        throw std::out_of_range("site: label " + std::to_string(label) + " outside the lattice");
    return static_cast<std::size_t>(idx);
}

long long SiteLabeling::to_label(std::size_t index) const {
    return centered ? static_cast<long long>(index) - static_cast<long long>(sites / 2)
                    : static_cast<long long>(index) + 1;
}

LiftedState make_lifted_state(std::size_t sites, Scaling scaling) {
    if (sites < 2) throw std::invalid_argument("lattice: need at least 2 sites");
    return {sites, std::vector<cplx>(4 * sites), 0, scaling};
}

WaveState make_wave_state(std::size_t sites) {
    if (sites < 2) throw std::invalid_argument("lattice: need at least 2 sites");
    return {sites, std::vector<cplx>(2 * sites), 0};
}

MarkovStep make_markov_step(const Lattice& lat, const BoundarySpec& b) {
    if (lat.sites < 2) throw std::invalid_argument("lattice: need at least 2 sites");
    MarkovStep op;
    op.sites = lat.sites;
    op.cyclic = shift_is_cyclic(b);
    op.interior = make_transition_matrix();
    op.edge = has_edge_coin(b.kind) ? make_masked_coin_layer(lat.sites, b).lifted_edge
                                    : op.interior;
    return op;
}

UnitaryStep make_unitary_step(const Lattice& lat, const BoundarySpec& b) {
    if (lat.sites < 2) throw std::invalid_argument("lattice: need at least 2 sites");
    UnitaryStep op;
    op.sites = lat.sites;
    op.cyclic = shift_is_cyclic(b);
    op.interior = make_hadamard();
    op.edge = has_edge_coin(b.kind) ? make_masked_coin_layer(lat.sites, b).wave_edge
                                    : op.interior;
    return op;
}

std::vector<cplx> ShiftOperator::apply(const std::vector<cplx>& in) const {
    if (in.size() != size) throw std::invalid_argument("shift: dimension mismatch");
    std::vector<cplx> out(size);
    for (std::size_t j = 0; j < size; ++j) {
        if (dir == ShiftDir::Right) {
            if (j + 1 < size) out[j] = in[j + 1];
            else if (cyclic) out[j] = in[0];
        } else {
            if (j > 0) out[j] = in[j - 1];
            else if (cyclic) out[j] = in[size - 1];
        }
    }
    return out;
}

std::pair<ShiftOperator, ShiftOperator> make_shift_matrices(std::size_t size, bool cyclic) {
    if (size < 2) throw std::invalid_argument("shift: need at least 2 sites");
    return {ShiftOperator{size, cyclic, ShiftDir::Right},
            ShiftOperator{size, cyclic, ShiftDir::Left}};
}

void evolve(LiftedState& s, const MarkovStep& op, std::uint64_t steps, Engine engine) {
    const real scale =
        s.scaling == Scaling::SqrtTwoPerStep ? std::sqrt(static_cast<real>(2)) : static_cast<real>(1);
    evolve_impl(s, s.v, op, steps, engine, scale);
}

void evolve(WaveState& s, const UnitaryStep& op, std::uint64_t steps, Engine engine) {
    evolve_impl(s, s.w, op, steps, engine, static_cast<real>(1));
}

namespace {

// scale applied to interference differences before squaring
real amplitude_scale(const LiftedState& s) {
    if (s.scaling == Scaling::SqrtTwoPerStep) return 1;
    if (s.step > 512)
        throw std::domain_error(
            "quantum read: unscaled mode past step 512 (2^n overflows); use sqrt2-per-step scaling");
    return sqrt2_pow(s.step);
}

real population_descale(const LiftedState& s) {
    return s.scaling == Scaling::SqrtTwoPerStep ? 1 / sqrt2_pow(s.step) : static_cast<real>(1);
}

real phase_of(cplx z) {
    if (z.real() == 0 && z.imag() == 0) return 0;
    return std::atan2(z.imag(), z.real());
}

}  // namespace

SiteDistribution unfold(const LiftedState& s) {
    const std::size_t m = s.sites;
    SiteDistribution d;
    d.p0.resize(m); d.p1.resize(m); d.m1.resize(m); d.m0.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        d.p0[k] = s.v[4 * k];
        d.p1[k] = s.v[4 * k + 1];
        d.m1[k] = s.v[4 * k + 2];
        d.m0[k] = s.v[4 * k + 3];
    }
    return d;
}

SiteDistribution quantum_probabilities(const LiftedState& s) {
    const real a = amplitude_scale(s);
    const std::size_t m = s.sites;
    SiteDistribution d;
    d.prob0.resize(m); d.prob1.resize(m); d.prob_total.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        d.prob0[k] = std::norm(a * (s.v[4 * k] - s.v[4 * k + 3]));
        d.prob1[k] = std::norm(a * (s.v[4 * k + 1] - s.v[4 * k + 2]));
        d.prob_total[k] = d.prob0[k] + d.prob1[k];
    }
    return d;
}

std::vector<cplx> project_amplitudes(const LiftedState& s) {
    const real a = amplitude_scale(s);
    std::vector<cplx> out(2 * s.sites);
    for (std::size_t k = 0; k < s.sites; ++k) {
        out[2 * k] = a * (s.v[4 * k] - s.v[4 * k + 3]);
        out[2 * k + 1] = a * (s.v[4 * k + 1] - s.v[4 * k + 2]);
    }
    return out;
}

std::vector<cplx> interference_collapse(const std::vector<cplx>& lifted) {
    if (lifted.size() % 4 != 0) throw std::invalid_argument("collapse: length not a multiple of 4");
    std::vector<cplx> out(lifted.size() / 2);
    for (std::size_t k = 0; k < lifted.size() / 4; ++k) {
        out[2 * k] = lifted[4 * k] - lifted[4 * k + 3];
        out[2 * k + 1] = lifted[4 * k + 1] - lifted[4 * k + 2];
    }
    return out;
}

std::vector<real> classical_distribution(const LiftedState& s) {
    real abs_max = 0, imag_max = 0;
    for (const cplx& z : s.v) {
        abs_max = std::max(abs_max, std::abs(z));
        imag_max = std::max(imag_max, std::fabs(z.imag()));
    }
    if (imag_max > 1e-12L * (1 + abs_max))
        throw std::invalid_argument(
            "classical_distribution: complex state; the classical reading applies per "
            "real/imaginary walker");
    const real d = population_descale(s);
    std::vector<real> out(s.sites);
    for (std::size_t k = 0; k < s.sites; ++k)
        out[k] = d * (s.v[4 * k].real() + s.v[4 * k + 1].real() + s.v[4 * k + 2].real() +
                      s.v[4 * k + 3].real());
    return out;
}

SiteDistribution phases(const LiftedState& s) {
    const std::size_t m = s.sites;
    SiteDistribution d;
    d.phase0.resize(m); d.phase1.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        d.phase0[k] = phase_of(s.v[4 * k]) - phase_of(s.v[4 * k + 3]);
        d.phase1[k] = phase_of(s.v[4 * k + 1]) - phase_of(s.v[4 * k + 2]);
    }
    return d;
}

SiteDistribution site_distribution(const LiftedState& s) {
    const real a = amplitude_scale(s);
    const real desc = population_descale(s);
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(s.sites);

    SiteDistribution d;
    d.p0.resize(s.sites); d.p1.resize(s.sites); d.m1.resize(s.sites); d.m0.resize(s.sites);
    d.prob0.resize(s.sites); d.prob1.resize(s.sites); d.prob_total.resize(s.sites);
    d.classical.resize(s.sites); d.phase0.resize(s.sites); d.phase1.resize(s.sites);

#pragma omp parallel for schedule(static) if (m >= 4096)
    for (std::ptrdiff_t kk = 0; kk < m; ++kk) {
        const std::size_t k = static_cast<std::size_t>(kk);
        const cplx p0 = s.v[4 * k], p1 = s.v[4 * k + 1], m1 = s.v[4 * k + 2], m0 = s.v[4 * k + 3];
        // population columns report the unscaled distributions whatever the
        // evolution scaling (unfold is the raw layout view instead)
        d.p0[k] = desc * p0; d.p1[k] = desc * p1; d.m1[k] = desc * m1; d.m0[k] = desc * m0;
        d.prob0[k] = std::norm(a * (p0 - m0));
        d.prob1[k] = std::norm(a * (p1 - m1));
        d.prob_total[k] = d.prob0[k] + d.prob1[k];
        d.classical[k] = desc * (p0.real() + p1.real() + m1.real() + m0.real());
        d.phase0[k] = phase_of(p0) - phase_of(m0);
        d.phase1[k] = phase_of(p1) - phase_of(m1);
    }
    return d;
}

std::vector<real> wave_probabilities(const WaveState& s) {
    std::vector<real> out(s.sites);
    for (std::size_t k = 0; k < s.sites; ++k)
        out[k] = std::norm(s.w[2 * k]) + std::norm(s.w[2 * k + 1]);
    return out;
}

}  // namespace qwalk
