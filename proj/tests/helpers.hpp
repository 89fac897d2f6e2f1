// Shared helpers for the test suites: small random instances and direct
// (definition-level) objective evaluations kept independent of the library's
// computation paths.

#pragma once

#include "bqcut/instance.hpp"
#include "bqcut/linalg.hpp"

namespace testutil {

using bqcut::Matrix;
using bqcut::Rng;
using bqcut::Vector;

// Random symmetric integer weight matrix with zero diagonal.
inline Matrix random_weights(Rng& rng, int n, double density, int lo, int hi) {
    Matrix W = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < density) {
                const double w = static_cast<double>(rng.uniform_int(lo, hi));
                W(i, j) = W(j, i) = w;
            }
    return W;
}

inline Matrix complete_graph(int n, double w = 1.0) {
    Matrix W = Matrix::Constant(n, n, w);
    W.diagonal().setZero();
    return W;
}

inline Matrix cycle_graph(int n, double w = 1.0) {
    Matrix W = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        W(i, j) = W(j, i) = w;
    }
    return W;
}

// Cut weight by direct edge loop: sum of w_ij over oppositely signed pairs.
inline double cut_weight(const Matrix& W, const Vector& x) {
    double s = 0.0;
    for (int i = 0; i < W.rows(); ++i)
        for (int j = i + 1; j < W.cols(); ++j)
            if (x[i] * x[j] < 0.0) s += W(i, j);
    return s;
}

inline Vector random_pm1(Rng& rng, int n) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return x;
}

inline bqcut::BqpInstance random_bqp(Rng& rng, int n, int m, int f_lo = -5, int f_hi = 5,
                                     int a_lo = 0, int a_hi = 1, int b_lo = 0, int b_hi = 3,
                                     double density = 0.8) {
    bqcut::BqpInstance inst;
    inst.n = n;
    inst.m = m;
    inst.F = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < density) {
                const double v = static_cast<double>(rng.uniform_int(f_lo, f_hi));
                inst.F(i, j) = inst.F(j, i) = v;
            }
    inst.c = Vector::Zero(n);
    for (int i = 0; i < n; ++i) inst.c[i] = static_cast<double>(rng.uniform_int(f_lo, f_hi));
    inst.A = Matrix::Zero(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            inst.A(i, j) = static_cast<double>(rng.uniform_int(a_lo, a_hi));
    inst.b = Vector::Zero(m);
    for (int i = 0; i < m; ++i) inst.b[i] = static_cast<double>(rng.uniform_int(b_lo, b_hi));
    inst.integral = true;
    return inst;
}

}  // namespace testutil
