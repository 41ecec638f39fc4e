#include "qwalk/oracle.hpp"

#include <stdexcept>

namespace qwalk::oracle {

namespace {

using DenseReal = std::vector<real>;  // row-major square

DenseReal zeros(std::size_t d) { return DenseReal(d * d, 0); }

DenseReal identity(std::size_t d) {
    DenseReal m = zeros(d);
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1;
    return m;
}

DenseReal right_shift(std::size_t d, bool cyclic) {
    DenseReal m = zeros(d);
    for (std::size_t j = 0; j + 1 < d; ++j) m[j * d + (j + 1)] = 1;
    if (cyclic) m[(d - 1) * d + 0] = 1;
    return m;
}

DenseReal left_shift(std::size_t d, bool cyclic) {
    DenseReal m = zeros(d);
    for (std::size_t j = 0; j + 1 < d; ++j) m[(j + 1) * d + j] = 1;
    if (cyclic) m[0 * d + (d - 1)] = 1;
    return m;
}

DenseReal endpoint_mask(std::size_t d) {
    DenseReal m = zeros(d);
    m[0] = 1;
    m[(d - 1) * d + (d - 1)] = 1;
    return m;
}

template <int NC>
void add_kron(DenseOperator& out, const DenseReal& pos, std::size_t m, const Mat<NC>& coin) {
    const std::size_t d = out.dim;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            const real p = pos[r * m + c];
            if (p == 0) continue;
            for (int i = 0; i < NC; ++i)
                for (int j = 0; j < NC; ++j)
                    out.a[(NC * r + i) * d + (NC * c + j)] += p * coin(i, j);
        }
}

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b) {
    const std::size_t d = a.dim;
    DenseOperator out{d, std::vector<cplx>(d * d)};
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
            const cplx v = a.a[r * d + k];
            if (v == cplx{}) continue;
            for (std::size_t c = 0; c < d; ++c) out.a[r * d + c] += v * b.a[k * d + c];
        }
    return out;
}

template <int NC>
DenseOperator assemble(std::size_t m, const BoundarySpec& b, const Mat<NC>& shift_pick0,
                       const Mat<NC>& shift_pick1, const Mat<NC>& coin, const Mat<NC>& edge_coin) {
    const std::size_t d = m * NC;
    const bool cyc = shift_is_cyclic(b);

    DenseOperator shift_op{d, std::vector<cplx>(d * d)};
    add_kron(shift_op, right_shift(m, cyc), m, shift_pick0);
    add_kron(shift_op, left_shift(m, cyc), m, shift_pick1);

    DenseOperator coin_op{d, std::vector<cplx>(d * d)};
    if (has_edge_coin(b.kind)) {
        const DenseReal z = endpoint_mask(m);
        DenseReal interior = identity(m);
        for (std::size_t i = 0; i < m * m; ++i) interior[i] -= z[i];
        add_kron(coin_op, interior, m, coin);
        add_kron(coin_op, z, m, edge_coin);
    } else {
        add_kron(coin_op, identity(m), m, coin);
    }
    return matmul(shift_op, coin_op);
}

}  // namespace

DenseOperator dense_assemble(std::size_t sites, const BoundarySpec& b, SystemKind kind) {
    if (sites < 2) throw std::invalid_argument("dense_assemble: need at least 2 sites");
    if (sites > kMaxDenseSites) throw std::domain_error("dense_assemble: sites > 64");
    if (has_edge_coin(b.kind) && sites < 3)
        throw std::invalid_argument("dense_assemble: reflect/trap kinds need at least 3 sites");

    if (kind == SystemKind::Lifted) {
        Mat4 edge = make_transition_matrix();
        if (has_edge_coin(b.kind)) edge = make_masked_coin_layer(sites, b).lifted_edge;
        return assemble<4>(sites, b, make_zero_state(), make_one_state(), make_transition_matrix(),
                           edge);
    }
    Mat2 edge = make_hadamard();
    if (has_edge_coin(b.kind)) edge = make_masked_coin_layer(sites, b).wave_edge;
    return assemble<2>(sites, b, make_zero(), make_one(), make_hadamard(), edge);
}

std::vector<cplx> dense_evolve(const DenseOperator& op, std::vector<cplx> v, std::uint64_t steps) {
    if (v.size() != op.dim) throw std::invalid_argument("dense_evolve: dimension mismatch");
    if (steps > kMaxDenseSteps) throw std::domain_error("dense_evolve: steps > 200");
    std::vector<cplx> next(v.size());
    for (std::uint64_t t = 0; t < steps; ++t) {
        for (std::size_t r = 0; r < op.dim; ++r) {
            cplx acc{};
            const cplx* row = &op.a[r * op.dim];
            for (std::size_t c = 0; c < op.dim; ++c) acc += row[c] * v[c];
            next[r] = acc;
        }
        v.swap(next);
    }
    return v;
}

std::vector<real> binomial_walk(std::uint64_t steps, std::size_t sites, std::size_t start) {
    if (start >= sites) throw std::invalid_argument("binomial_walk: start outside lattice");
    if (steps > 10000) throw std::domain_error("binomial_walk: steps > 10000");
    std::vector<real> d(sites, 0), next(sites, 0);
    d[start] = 1;
    for (std::uint64_t t = 0; t < steps; ++t) {
        for (std::size_t k = 0; k < sites; ++k) {
            real acc = 0;
            if (k > 0) acc += 0.5L * d[k - 1];
            if (k + 1 < sites) acc += 0.5L * d[k + 1];
            next[k] = acc;
        }
        d.swap(next);
    }
    return d;
}

MomentReport moments(const std::vector<real>& dist) {
    real total = 0;
    for (real x : dist) {
        if (x < 0) throw std::invalid_argument("moments: negative entry");
        total += x;
    }
    if (total == 0) throw std::invalid_argument("moments: all-zero distribution");
    real mean = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) mean += static_cast<real>(k) * dist[k];
    mean /= total;
    real var = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
        const real dk = static_cast<real>(k) - mean;
        var += dk * dk * dist[k];
    }
    return {mean, std::sqrt(var / total), total};
}

WaveWalkReport naive_wave_walk(std::uint64_t steps, cplx a0, cplx a1) {
    const std::size_t m = 2 * static_cast<std::size_t>(steps) + 3;
    const std::size_t c = m / 2;
    const Mat2 h = make_hadamard();
    std::vector<cplx> w(2 * m), next(2 * m);
    w[2 * c] = a0;
    w[2 * c + 1] = a1;
    for (std::uint64_t t = 0; t < steps; ++t) {
        for (std::size_t k = 0; k < m; ++k) {
            const cplx c0 = h(0, 0) * w[2 * k] + h(0, 1) * w[2 * k + 1];
            const cplx c1 = h(1, 0) * w[2 * k] + h(1, 1) * w[2 * k + 1];
            next[2 * k] = c0;
            next[2 * k + 1] = c1;
        }
        for (std::size_t j = 0; j < m; ++j) {
            w[2 * j] = (j + 1 < m) ? next[2 * (j + 1)] : cplx{};
            w[2 * j + 1] = (j > 0) ? next[2 * (j - 1) + 1] : cplx{};
        }
    }
    WaveWalkReport rep;
    rep.origin = c;
    rep.prob0.resize(m);
    rep.prob1.resize(m);
    rep.prob_total.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        rep.prob0[k] = std::norm(w[2 * k]);
        rep.prob1[k] = std::norm(w[2 * k + 1]);
        rep.prob_total[k] = rep.prob0[k] + rep.prob1[k];
    }
    return rep;
}

real lifted_commutation_residual(std::size_t sites) {
    const DenseOperator u = dense_assemble(sites, BoundarySpec{}, SystemKind::Lifted);
    DenseOperator k{u.dim, std::vector<cplx>(u.dim * u.dim)};
    add_kron(k, identity(sites), sites, make_interference_matrix().gram());
    const DenseOperator uk = matmul(u, k);
    const DenseOperator ku = matmul(k, u);
    real mx = 0;
    for (std::size_t i = 0; i < uk.a.size(); ++i)
        mx = std::max(mx, std::abs(uk.a[i] - ku.a[i]));
    return mx;
}

namespace {

std::vector<cplx> random_vector(SplitMix64& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& z : v) z = rng.complex_uniform();
    return v;
}

IdentityCheck check_eq14() {
    const real r = (hadamard_via_lift() - make_hadamard()).max_abs();
    return {"Eq14", r, 1e-12L, r < 1e-12L};
}

IdentityCheck check_eq21() {
    real mx = 0;
    for (int n = 0; n <= 32; ++n) mx = std::max(mx, power_relation_residual(n));
    return {"Eq21", mx, 1e-9L, mx < 1e-9L};
}

// population conservation of the dense lifted evolution, random nonnegative start
IdentityCheck check_eq27(SplitMix64& rng) {
    const std::size_t m = 61;
    const std::uint64_t steps = 25;  // support 28..32 spreads to 3..57, inside the open edges
    const DenseOperator u = dense_assemble(m, BoundarySpec{}, SystemKind::Lifted);
    std::vector<cplx> p(4 * m);
    for (std::size_t k = 28 * 4; k < 33 * 4; ++k) p[k] = std::fabs(rng.uniform());
    auto q = dense_evolve(u, p, steps);
    cplx s0{}, s1{};
    for (const auto& z : p) s0 += z;
    for (const auto& z : q) s1 += z;
    const real r = std::abs(s1 - s0);
    const real tol = 1e-9L * static_cast<real>(steps);
    return {"Eq27", r, tol, r < tol};
}

// 2^n |B A^n P|^2 = |B P|^2 at the coin level, random complex P
IdentityCheck check_eq28(SplitMix64& rng) {
    const Mat4 a = make_transition_matrix();
    const InterferenceMatrix b = make_interference_matrix();
    CoinPopulation p;
    for (auto& z : p.p) z = rng.complex_uniform();
    const auto bp = b.apply(p.p);
    const real ref = std::norm(bp[0]) + std::norm(bp[1]);
    real mx = 0;
    CoinPopulation cur = p;
    for (int n = 1; n <= 40; ++n) {
        cur.p = a.apply(cur.p);
        const auto ban = b.apply(cur.p);
        const real scaled = std::ldexp(std::norm(ban[0]) + std::norm(ban[1]), n);
        mx = std::max(mx, std::fabs(scaled - ref) / ref);
    }
    return {"Eq28", mx, 1e-8L, mx < 1e-8L};
}

IdentityCheck check_eq52(SplitMix64& rng) {
    const std::size_t m = 16;
    const std::uint64_t n = 10;
    const DenseOperator bigu = dense_assemble(m, BoundarySpec{}, SystemKind::Lifted);
    const DenseOperator u = dense_assemble(m, BoundarySpec{}, SystemKind::Unitary);
    const auto p0 = random_vector(rng, 4 * m);
    const auto lhs = dense_evolve(u, interference_collapse(p0), n);
    auto rhs = interference_collapse(dense_evolve(bigu, p0, n));
    const real s = sqrt2_pow(n);
    for (auto& z : rhs) z *= s;
    const real r = max_abs_diff(lhs.data(), rhs.data(), lhs.size());
    return {"Eq52", r, 1e-9L, r < 1e-9L};
}

IdentityCheck check_eq76() {
    const Reflectors refl = make_reflectors();
    const InterferenceMatrix b = make_interference_matrix();
    const real s = 1 / std::sqrt(static_cast<real>(2));
    const auto conj_residual = [&](const Mat4& big, const Mat2& small) {
        real mx = 0;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                real acc = 0;
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        acc += static_cast<real>(b.e[r][i]) * big(i, j) * static_cast<real>(b.e[c][j]);
                mx = std::max(mx, std::fabs(s * acc - small(r, c)));
            }
        return mx;
    };
    const real r = std::max(conj_residual(refl.R1, refl.r1), conj_residual(refl.R2, refl.r2));
    return {"Eq76", r, 1e-12L, r < 1e-12L};
}

// one-step operator identity u_rp (I x B) = sqrt(2) (I x B) U_rp, reflecting ends
IdentityCheck check_eq83() {
    const std::size_t m = 9;
    real mx = 0;
    for (BoundaryKind kind : {BoundaryKind::Reflect1, BoundaryKind::Reflect2}) {
        const BoundarySpec b{kind, false};
        const DenseOperator bigu = dense_assemble(m, b, SystemKind::Lifted);
        const DenseOperator u = dense_assemble(m, b, SystemKind::Unitary);
        // compare columnwise on the lifted basis
        for (std::size_t c = 0; c < 4 * m; ++c) {
            std::vector<cplx> e(4 * m);
            e[c] = 1;
            const auto lhs = dense_evolve(u, interference_collapse(e), 1);
            auto rhs = interference_collapse(dense_evolve(bigu, e, 1));
            const real s = std::sqrt(static_cast<real>(2));
            for (auto& z : rhs) z *= s;
            mx = std::max(mx, max_abs_diff(lhs.data(), rhs.data(), lhs.size()));
        }
    }
    return {"Eq83", mx, 1e-12L, mx < 1e-12L};
}

}  // namespace

std::vector<IdentityCheck> equivalence_suite(std::uint64_t seed) {
    SplitMix64 rng{seed};
    std::vector<IdentityCheck> out;
    out.push_back(check_eq14());
    out.push_back(check_eq21());
    out.push_back(check_eq27(rng));
    out.push_back(check_eq28(rng));
    out.push_back(check_eq52(rng));
    out.push_back(check_eq76());
    out.push_back(check_eq83());
    return out;
}

}  // namespace qwalk::oracle
