#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/oracle.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

const real kSqrtHalf = 1 / std::sqrt(static_cast<real>(2));

LiftedState point_start(std::size_t m, std::size_t site, QubitState q, Scaling scaling,
                        LiftMode mode = LiftMode::SignSplit) {
    LiftedState s = make_lifted_state(m, scaling);
    const CoinPopulation p = lift(q, mode);
    for (int c = 0; c < 4; ++c) s.v[4 * site + static_cast<std::size_t>(c)] = p.p[c];
    return s;
}

real sum_real(const std::vector<cplx>& v) {
    real acc = 0;
    for (const cplx& z : v) acc += z.real();
    return acc;
}

// local maxima of the occupied-parity sublattice (the raw arrays alternate
// with exact zeros because every step moves all population one site)
int local_maxima_on_support(const std::vector<cplx>& arr, std::size_t parity) {
    std::vector<real> sub;
    for (std::size_t k = parity; k < arr.size(); k += 2) sub.push_back(arr[k].real());
    while (!sub.empty() && sub.front() == 0) sub.erase(sub.begin());
    while (!sub.empty() && sub.back() == 0) sub.pop_back();
    std::vector<int> signs;
    for (std::size_t i = 0; i + 1 < sub.size(); ++i) {
        const real d = sub[i + 1] - sub[i];
        if (std::fabs(d) > 1e-12L) signs.push_back(d > 0 ? 1 : -1);
    }
    int flips = 0;
    for (std::size_t i = 0; i + 1 < signs.size(); ++i)
        if (signs[i + 1] != signs[i]) ++flips;
    // one descending run means flips == 0 with a leading +1; unimodal means
    // at most one sign change +1 -> -1
    return flips;
}

}  // namespace

TEST_CASE("lattice index maps are bijections") {
    const Lattice lat{5};
    std::vector<bool> hit4(lat.lifted_dim(), false), hit2(lat.wave_dim(), false);
    for (std::size_t k = 0; k < lat.sites; ++k) {
        for (int c = 0; c < 4; ++c) hit4[lat.lifted_index(k, c)] = true;
        for (int c = 0; c < 2; ++c) hit2[lat.wave_index(k, c)] = true;
    }
    for (bool b : hit4) CHECK(b);
    for (bool b : hit2) CHECK(b);
    CHECK_THROWS_AS(make_lifted_state(1), std::invalid_argument);
}

TEST_CASE("shift operators") {
    CHECK_THROWS_AS(make_shift_matrices(1, false), std::invalid_argument);

    const auto [right, left] = make_shift_matrices(3, false);
    CHECK(right.apply({0, 1, 0}) == std::vector<cplx>{1, 0, 0});
    CHECK(left.apply({0, 1, 0}) == std::vector<cplx>{0, 0, 1});

    const auto [cright, cleft] = make_shift_matrices(3, true);
    CHECK(cright.apply({1, 0, 0}) == std::vector<cplx>{0, 0, 1});
    CHECK(cleft.apply({0, 0, 1}) == std::vector<cplx>{1, 0, 0});

    // open edges lose content: Right then Left is not the identity
    const auto rl = left.apply(right.apply({1, 1, 1}));
    CHECK(rl != std::vector<cplx>{1, 1, 1});
}

TEST_CASE("one lifted step from a point population") {
    // unit population at site k in |0>: half stays |0> and moves to k-1,
    // half flips to |1> and moves to k+1
    const std::size_t m = 5, k = 2;
    LiftedState s = point_start(m, k, {1, 0}, Scaling::Unscaled);
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), 1);
    CHECK(s.v[4 * (k - 1) + 0] == cplx{0.5L});
    CHECK(s.v[4 * (k + 1) + 1] == cplx{0.5L});
    real total = 0;
    for (const auto& z : s.v) total += std::abs(z);
    CHECK(total == 1);
}

TEST_CASE("one unitary step from a point amplitude") {
    const std::size_t m = 5, k = 2;
    WaveState s = make_wave_state(m);
    s.w[2 * k] = 1;
    evolve(s, make_unitary_step(Lattice{m}, BoundarySpec{}), 1);
    CHECK(std::abs(s.w[2 * (k - 1)] - cplx{kSqrtHalf}) < 1e-18L);
    CHECK(std::abs(s.w[2 * (k + 1) + 1] - cplx{kSqrtHalf}) < 1e-18L);
}

TEST_CASE("zero steps leave the state untouched") {
    LiftedState s = point_start(7, 3, {kSqrtHalf, cplx{0, kSqrtHalf}}, Scaling::SqrtTwoPerStep);
    const auto before = s.v;
    evolve(s, make_markov_step(Lattice{7}, BoundarySpec{}), 0);
    CHECK(s.v == before);
    CHECK(s.step == 0);
}

TEST_CASE("lattice mismatch is rejected") {
    LiftedState s = make_lifted_state(8);
    const MarkovStep op = make_markov_step(Lattice{9}, BoundarySpec{});
    CHECK_THROWS_AS(evolve(s, op, 1), std::invalid_argument);
}

TEST_CASE("population sum is conserved over a long walk") {
    const std::size_t n = 100, m = 2 * n + 3;
    LiftedState s = point_start(m, m / 2, {1, 0}, Scaling::Unscaled);
    const real sum0 = sum_real(s.v);
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
    CHECK(std::fabs(sum_real(s.v) - sum0) < 1e-7L);
}

TEST_CASE("serial and parallel engines produce identical states") {
    const std::size_t m = 1000;
    LiftedState a = point_start(m, m / 2, {kSqrtHalf, cplx{0, -kSqrtHalf}}, Scaling::SqrtTwoPerStep);
    LiftedState b = a;
    const MarkovStep op = make_markov_step(Lattice{m}, BoundarySpec{});
    evolve(a, op, 200, Engine::Serial);
    evolve(b, op, 200, Engine::Parallel);
    CHECK(a.v == b.v);
}

TEST_CASE("structural evolution matches the dense matrix power") {
    const std::size_t m = 8;
    const std::uint64_t n = 6;
    LiftedState s = point_start(m, 3, {0.6L, cplx{0, 0.8L}}, Scaling::Unscaled);
    std::vector<cplx> dense_v = s.v;
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
    const auto op = oracle::dense_assemble(m, BoundarySpec{}, oracle::SystemKind::Lifted);
    const auto expect = oracle::dense_evolve(op, dense_v, n);
    CHECK(max_abs_diff(s.v.data(), expect.data(), expect.size()) < 1e-12L);
}

TEST_CASE("unfold layout and partition of entries") {
    LiftedState s = make_lifted_state(3);
    s.v[3] = 1;  // index 3 = site 0, coin -|0>
    const SiteDistribution d = unfold(s);
    CHECK(d.m0[0] == cplx{1});
    CHECK(d.p0[0] == cplx{0});
    CHECK(d.m0[1] == cplx{0});

    // the four arrays partition the state entries
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& z : s.v) z = cplx{static_cast<real>(dist(gen)), static_cast<real>(dist(gen))};
    const SiteDistribution full = unfold(s);
    cplx direct{}, via{};
    for (const auto& z : s.v) direct += z;
    for (std::size_t k = 0; k < 3; ++k) via += full.p0[k] + full.p1[k] + full.m1[k] + full.m0[k];
    CHECK(std::abs(direct - via) == 0);
}

TEST_CASE("unfold round trip reproduces the state exactly") {
    std::mt19937_64 gen(29);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    LiftedState s = make_lifted_state(17);
    for (auto& z : s.v) z = cplx{static_cast<real>(dist(gen)), static_cast<real>(dist(gen))};
    const SiteDistribution d = unfold(s);
    for (std::size_t k = 0; k < s.sites; ++k) {
        CHECK(s.v[4 * k] == d.p0[k]);
        CHECK(s.v[4 * k + 1] == d.p1[k]);
        CHECK(s.v[4 * k + 2] == d.m1[k]);
        CHECK(s.v[4 * k + 3] == d.m0[k]);
    }
}

TEST_CASE("coin-state distributions are unimodal at n=100") {
    const std::size_t n = 100, m = 2 * n + 3, c = m / 2;
    LiftedState s = point_start(m, c, {1, 0}, Scaling::Unscaled);
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
    const SiteDistribution d = unfold(s);
    const std::size_t parity = (c + n) % 2;
    CHECK(local_maxima_on_support(d.p0, parity) <= 1);
    CHECK(local_maxima_on_support(d.p1, parity) <= 1);
    CHECK(local_maxima_on_support(d.m1, parity) <= 1);
    CHECK(local_maxima_on_support(d.m0, parity) <= 1);
}

TEST_CASE("quantum probabilities at step 0 and after 100 steps") {
    const std::size_t n = 100, m = 2 * n + 3, c = m / 2;
    LiftedState s = point_start(m, c, {1, 0}, Scaling::SqrtTwoPerStep);
    {
        const SiteDistribution d = quantum_probabilities(s);
        CHECK(d.prob0[c] == 1);
        real total = 0;
        for (real x : d.prob_total) total += x;
        CHECK(total == 1);
    }
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
    const SiteDistribution d = quantum_probabilities(s);
    real total = 0;
    for (real x : d.prob_total) total += x;
    CHECK(std::fabs(total - 1) < 1e-6L);
}

TEST_CASE("unscaled quantum read agrees with per-step scaling and is capped") {
    const std::size_t n = 40, m = 2 * n + 3, c = m / 2;
    LiftedState a = point_start(m, c, {1, 0}, Scaling::Unscaled);
    LiftedState b = point_start(m, c, {1, 0}, Scaling::SqrtTwoPerStep);
    const MarkovStep op = make_markov_step(Lattice{m}, BoundarySpec{});
    evolve(a, op, n);
    evolve(b, op, n);

    // per-step state equals the unscaled state times sqrt2^n
    const real s = sqrt2_pow(n);
    for (std::size_t i = 0; i < a.v.size(); ++i) {
        const real mag = std::abs(b.v[i]);
        CHECK(std::abs(b.v[i] - s * a.v[i]) <= 1e-12L * (mag > 1 ? mag : 1));
    }

    const SiteDistribution da = quantum_probabilities(a);
    const SiteDistribution db = quantum_probabilities(b);
    for (std::size_t k = 0; k < m; ++k)
        CHECK(std::fabs(da.prob_total[k] - db.prob_total[k]) < 1e-12L);

    LiftedState deep = point_start(5, 2, {1, 0}, Scaling::Unscaled);
    deep.step = 513;
    CHECK_THROWS_AS(quantum_probabilities(deep), std::domain_error);
}

TEST_CASE("classical distribution") {
    const std::size_t n = 100, m = 2 * n + 3, c = m / 2;

    LiftedState s0 = point_start(m, c, {0.5L, -0.5L}, Scaling::Unscaled);
    const auto ind = classical_distribution(s0);
    CHECK(ind[c] == 1);  // |a0| + |a1| = 1: a unit population
    CHECK(ind[c + 1] == 0);

    LiftedState s = point_start(m, c, {1, 0}, Scaling::Unscaled);
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
    const auto cls = classical_distribution(s);
    const auto expect = oracle::binomial_walk(n, m, c);
    real mx = 0, total = 0;
    for (std::size_t k = 0; k < m; ++k) {
        mx = std::max(mx, std::fabs(cls[k] - expect[k]));
        total += cls[k];
    }
    CHECK(mx < 1e-9L);
    CHECK(std::fabs(total - 1) < 1e-9L);

    // same walk in per-step scaling: the classical read rescales internally
    LiftedState ps = point_start(m, c, {1, 0}, Scaling::SqrtTwoPerStep);
    evolve(ps, make_markov_step(Lattice{m}, BoundarySpec{}), n);
    const auto cls2 = classical_distribution(ps);
    for (std::size_t k = 0; k < m; ++k) CHECK(std::fabs(cls2[k] - cls[k]) < 1e-12L);

    LiftedState cx = point_start(m, c, {kSqrtHalf, cplx{0, kSqrtHalf}}, Scaling::Unscaled);
    CHECK_THROWS_AS(classical_distribution(cx), std::invalid_argument);
}

TEST_CASE("phases") {
    LiftedState s = make_lifted_state(3);
    s.v[0] = cplx{0, 1};  // p0 = i
    s.v[3] = cplx{1, 0};  // m0 = 1
    const SiteDistribution d = phases(s);
    CHECK(std::fabs(d.phase0[0] - std::acos(static_cast<real>(-1)) / 2) < 1e-18L);  // pi/2
    CHECK(d.phase0[1] == 0);  // theta(0) - theta(0)

    // all-real positive populations have zero phase everywhere
    LiftedState r = point_start(11, 5, {1, 0}, Scaling::Unscaled);
    evolve(r, make_markov_step(Lattice{11}, BoundarySpec{}), 4);
    const SiteDistribution dr = phases(r);
    for (std::size_t k = 0; k < 11; ++k) {
        CHECK(dr.phase0[k] == 0);
        CHECK(dr.phase1[k] == 0);
    }
}

TEST_CASE("phase differences concentrate at the propagation front") {
    const std::size_t n = 50, m = 2 * n + 3, c = m / 2;
    LiftedState s = point_start(m, c, {kSqrtHalf, cplx{0, kSqrtHalf}}, Scaling::SqrtTwoPerStep);
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
    const SiteDistribution d = site_distribution(s);

    std::size_t lo = m, hi = 0, argmax = 0;
    real best = -1;
    for (std::size_t k = 0; k < m; ++k) {
        if (d.prob_total[k] > 1e-12L) {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
    }
    for (std::size_t k = lo; k <= hi; ++k) {
        const real mag = std::max(std::fabs(d.phase0[k]), std::fabs(d.phase1[k]));
        if (mag > best) {
            best = mag;
            argmax = k;
        }
    }
    const real half_span = static_cast<real>(hi - lo) / 2;
    const real rel = std::fabs(static_cast<real>(argmax) - static_cast<real>(c)) / half_span;
    CHECK(rel >= 0.5L);  // outer quartile of the occupied span
}

TEST_CASE("classical spread grows as sqrt(n), quantum spread linearly") {
    const auto classical_std = [](std::size_t n) {
        const std::size_t m = 2 * n + 3;
        LiftedState s = point_start(m, m / 2, {1, 0}, Scaling::Unscaled);
        evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
        return oracle::moments(classical_distribution(s)).std;
    };
    const real ratio_c = classical_std(400) / classical_std(100);
    CHECK(std::fabs(ratio_c - 2) < 0.05L * 2);

    const auto quantum_std = [](std::size_t n) {
        const std::size_t m = 2 * n + 3;
        LiftedState s = point_start(m, m / 2, {1, 0}, Scaling::SqrtTwoPerStep);
        evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), n);
        return oracle::moments(quantum_probabilities(s).prob_total).std;
    };
    const real ratio_q = quantum_std(100) / quantum_std(50);
    CHECK(std::fabs(ratio_q - 2) < 0.1L * 2);
}

TEST_CASE("lift equivalence against the dense oracle") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    {
        LiftedState p0 = make_lifted_state(16, Scaling::Unscaled);
        for (auto& z : p0.v) z = cplx{static_cast<real>(dist(gen)), static_cast<real>(dist(gen))};
        CHECK(lift_equivalence_residual(16, 10, p0, BoundarySpec{}) < 1e-9L);
        CHECK(lift_equivalence_residual(16, 0, p0, BoundarySpec{}) == 0);
        CHECK_THROWS_AS(lift_equivalence_residual(16, 21, p0, BoundarySpec{}), std::domain_error);
    }
    {
        LiftedState p0 = make_lifted_state(25, Scaling::Unscaled);
        for (auto& z : p0.v) z = cplx{static_cast<real>(dist(gen)), static_cast<real>(dist(gen))};
        CHECK(lift_equivalence_residual(25, 8, p0, BoundarySpec{BoundaryKind::Reflect1, false}) < 1e-9L);
    }
    for (std::size_t m : {4, 8, 16}) {
        LiftedState p0 = make_lifted_state(m, Scaling::Unscaled);
        for (auto& z : p0.v) z = cplx{static_cast<real>(dist(gen)), static_cast<real>(dist(gen))};
        for (std::uint64_t n : {1, 5, 10})
            CHECK(lift_equivalence_residual(m, n, p0, BoundarySpec{}) < 1e-9L);
    }
}

TEST_CASE("projected amplitudes match a directly evolved wave state") {
    const std::size_t m = 41, c = m / 2;
    LiftedState lift_s = point_start(m, c, {0.6L, cplx{0, 0.8L}}, Scaling::SqrtTwoPerStep);
    WaveState wave_s = make_wave_state(m);
    wave_s.w[2 * c] = 0.6L;
    wave_s.w[2 * c + 1] = cplx{0, 0.8L};

    evolve(lift_s, make_markov_step(Lattice{m}, BoundarySpec{}), 15);
    evolve(wave_s, make_unitary_step(Lattice{m}, BoundarySpec{}), 15);

    const auto projected = project_amplitudes(lift_s);
    CHECK(max_abs_diff(projected.data(), wave_s.w.data(), projected.size()) < 1e-12L);
}
