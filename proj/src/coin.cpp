#include "qwalk/coin.hpp"

#include <stdexcept>

#include "qwalk/boundary.hpp"

namespace qwalk {

Mat4 make_transition_matrix() {
    Mat4 a;
    const real h = 0.5L;
    a(0, 0) = h; a(0, 1) = h;
    a(1, 0) = h; a(1, 2) = h;
    a(2, 1) = h; a(2, 3) = h;
    a(3, 2) = h; a(3, 3) = h;
    return a;
}

Mat4 make_zero_state() {
    Mat4 m;
    m(0, 0) = 1;
    m(3, 3) = 1;
    return m;
}

Mat4 make_one_state() {
    Mat4 m;
    m(1, 1) = 1;
    m(2, 2) = 1;
    return m;
}

Mat4 make_reversal() {
    Mat4 j;
    for (int i = 0; i < 4; ++i) j(i, 3 - i) = 1;
    return j;
}

Mat2 make_zero() {
    Mat2 m;
    m(0, 0) = 1;
    return m;
}

Mat2 make_one() {
    Mat2 m;
    m(1, 1) = 1;
    return m;
}

Mat2 make_hadamard() {
    const real s = 1 / std::sqrt(static_cast<real>(2));
    Mat2 h;
    h(0, 0) = s; h(0, 1) = s;
    h(1, 0) = s; h(1, 1) = -s;
    return h;
}

InterferenceMatrix make_interference_matrix() {
    return InterferenceMatrix{{{{1, 0, 0, -1}, {0, 1, -1, 0}}}};
}

Mat4 InterferenceMatrix::gram() const {
    Mat4 g;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            real acc = 0;
            for (int k = 0; k < 2; ++k) acc += static_cast<real>(e[k][r] * e[k][c]);
            g(r, c) = acc;
        }
    return g;
}

Mat2 InterferenceMatrix::outer() const {
    Mat2 o;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            real acc = 0;
            for (int k = 0; k < 4; ++k) acc += static_cast<real>(e[r][k] * e[c][k]);
            o(r, c) = acc;
        }
    return o;
}

namespace {

// rows of B * M (2x4)
std::array<std::array<real, 4>, 2> left_collapse(const InterferenceMatrix& b, const Mat4& m) {
    std::array<std::array<real, 4>, 2> out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) {
            real acc = 0;
            for (int k = 0; k < 4; ++k) acc += static_cast<real>(b.e[r][k]) * m(k, c);
            out[r][c] = acc;
        }
    return out;
}

}  // namespace

Mat2 hadamard_via_lift() {
    const InterferenceMatrix b = make_interference_matrix();
    const auto ba = left_collapse(b, make_transition_matrix());
    // (B A) B^T / sqrt(2)
    Mat2 h;
    const real s = 1 / std::sqrt(static_cast<real>(2));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            real acc = 0;
            for (int k = 0; k < 4; ++k) acc += ba[r][k] * static_cast<real>(b.e[c][k]);
            h(r, c) = s * acc;
        }
    return h;
}

real power_relation_residual(int n) {
    if (n < 0 || n > 64) throw std::domain_error("power_relation_residual: n out of [0, 64]");
    const InterferenceMatrix b = make_interference_matrix();
    const Mat2 hn = matrix_power(make_hadamard(), static_cast<std::uint64_t>(n));
    const Mat4 an = matrix_power(make_transition_matrix(), static_cast<std::uint64_t>(n));
    const real scale = sqrt2_pow(static_cast<std::uint64_t>(n));

    real mx = 0;
    const auto ban = left_collapse(b, an);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) {
            real lhs = 0;  // (H^n B)(r, c)
            for (int k = 0; k < 2; ++k) lhs += hn(r, k) * static_cast<real>(b.e[k][c]);
            const real d = std::fabs(lhs - scale * ban[r][c]);
            if (d > mx) mx = d;
        }
    return mx;
}

real idempotent_check() {
    const Mat4 half_gram = 0.5L * make_interference_matrix().gram();
    return (half_gram * half_gram - half_gram).max_abs();
}

std::vector<std::pair<std::string, real>> commutation_residuals() {
    const Mat4 k = make_interference_matrix().gram();
    const Reflectors refl = make_reflectors();
    const auto comm = [&k](const Mat4& m) { return (m * k - k * m).max_abs(); };
    return {
        {"[A,BtB]", comm(make_transition_matrix())},
        {"[ZeroState,BtB]", comm(make_zero_state())},
        {"[OneState,BtB]", comm(make_one_state())},
        {"[R1,BtB]", comm(refl.R1)},
        {"[R2,BtB]", comm(refl.R2)},
    };
}

CoinPopulation lift(const QubitState& q, LiftMode mode) {
    CoinPopulation out;
    if (mode == LiftMode::Raw) {
        out.p[0] = q.a0;
        out.p[1] = q.a1;
        return out;
    }
    const auto pos = [](real x) { return x > 0 ? x : static_cast<real>(0); };
    const auto split = [&pos](cplx a, cplx& plus, cplx& minus) {
        plus = {pos(a.real()), pos(a.imag())};
        minus = {pos(-a.real()), pos(-a.imag())};
    };
    split(q.a0, out.p[0], out.p[3]);
    split(q.a1, out.p[1], out.p[2]);
    return out;
}

QubitState project(const CoinPopulation& p, std::uint64_t n) {
    const auto amps = make_interference_matrix().apply(p.p);
    const real s = sqrt2_pow(n);
    return {s * amps[0], s * amps[1]};
}

}  // namespace qwalk
