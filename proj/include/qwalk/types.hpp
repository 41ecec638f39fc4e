#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>

namespace qwalk {

// Evolution scalar. Interference differences extracted from the lifted
// populations shrink like 2^(-n/2) while the populations themselves stay
// O(1), so reading quantum probabilities at step n amplifies accumulated
// state rounding by 2^(n/2). The x86 80-bit long double keeps that amplified
// error below 1e-6 out to n ~ 120; plain double only reaches n ~ 70.
using real = long double;
using cplx = std::complex<real>;

// sqrt(2)^n, exact for even n.
inline real sqrt2_pow(std::uint64_t n) {
    const real base = std::ldexp(static_cast<real>(1), static_cast<int>(n / 2));
    return (n % 2 == 0) ? base : base * std::sqrt(static_cast<real>(2));
}

// Small fixed-size real matrix, row-major.
template <int N>
struct Mat {
    std::array<real, static_cast<std::size_t>(N) * N> e{};

    real& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * N + c]; }
    real operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * N + c]; }

    static Mat identity() {
        Mat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1;
        return m;
    }

    Mat transposed() const {
        Mat t;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat p;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                real acc = 0;
                for (int k = 0; k < N; ++k) acc += a(r, k) * b(k, c);
                p(r, c) = acc;
            }
        return p;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat d;
        for (std::size_t i = 0; i < a.e.size(); ++i) d.e[i] = a.e[i] - b.e[i];
        return d;
    }

    friend Mat operator*(real s, const Mat& m) {
        Mat p;
        for (std::size_t i = 0; i < m.e.size(); ++i) p.e[i] = s * m.e[i];
        return p;
    }

    // entrywise max |.|
    real max_abs() const {
        real mx = 0;
        for (real x : e) {
            const real a = std::fabs(x);
            if (a > mx) mx = a;
        }
        return mx;
    }

    void apply(const cplx* in, cplx* out) const {
        for (int r = 0; r < N; ++r) {
            cplx acc{};
            for (int c = 0; c < N; ++c) acc += (*this)(r, c) * in[c];
            out[r] = acc;
        }
    }

    std::array<cplx, N> apply(const std::array<cplx, N>& in) const {
        std::array<cplx, N> out;
        apply(in.data(), out.data());
        return out;
    }
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

template <int N>
Mat<N> matrix_power(Mat<N> base, std::uint64_t n) {
    Mat<N> acc = Mat<N>::identity();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

inline real max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
    real mx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const real d = std::abs(a[i] - b[i]);
        if (d > mx) mx = d;
    }
    return mx;
}

}  // namespace qwalk
