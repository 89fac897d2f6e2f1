// Core problem representations: linearly constrained binary quadratic programs
// in 0/1 variables, +-1 quadratic maximization (Max-Cut form), conversions
// between the two, and exhaustive reference solvers used as ground truth.

#pragma once

#include "bqcut/linalg.hpp"

#include <optional>
#include <vector>

namespace bqcut {

// min z^T F z + c^T z  s.t.  A z = b,  z in {0,1}^n
struct BqpInstance {
    int n = 0;
    int m = 0;
    Matrix F;  // n x n, symmetric
    Vector c;  // n
    Matrix A;  // m x n
    Vector b;  // m
    bool integral = false;

    double objective(const Vector& z) const { return z.dot(F * z) + c.dot(z); }

    void validate() const {
        if (F.rows() != n || F.cols() != n) throw InvalidInput("F must be n x n");
        if (!is_symmetric(F)) throw InvalidInput("F must be symmetric");
        if (c.size() != n) throw InvalidInput("c must have length n");
        if (A.rows() != m || (m > 0 && A.cols() != n)) throw InvalidInput("A must be m x n");
        if (b.size() != m) throw InvalidInput("b must have length m");
    }
};

// max x^T M x + offset over x in {-1,1}^size.  Covers both the Laplacian/4
// form of a graph cut and the negated penalty matrix of a reformulated BQP.
// `integral` means every objective value on {-1,1}^size is an integer.
struct MaxCutProblem {
    int size = 0;
    Matrix M;  // size x size, symmetric
    double offset = 0.0;
    bool integral = false;

    double objective(const Vector& x) const { return x.dot(M * x) + offset; }
};

struct CutSolution {
    Vector x;  // entries in {-1, +1}
    double value = 0.0;
};

struct BinarySolution {
    Vector z;  // entries in {0, 1}
    double value = 0.0;
    bool feasible = false;
};

// L = Diag(We) - W.  Requires a symmetric weight matrix with zero diagonal.
inline Matrix laplacian(const Matrix& W) {
    if (!is_symmetric(W)) throw InvalidInput("weight matrix must be symmetric");
    for (Eigen::Index i = 0; i < W.rows(); ++i)
        if (W(i, i) != 0.0) throw InvalidInput("weight matrix must have zero diagonal");
    Matrix L = -W;
    L.diagonal() += W.rowwise().sum();
    return L;
}

// Cut weight of the bipartition induced by sign(x) equals x^T (L/4) x.
inline MaxCutProblem maxcut_from_graph(const Matrix& W) {
    MaxCutProblem p;
    p.size = static_cast<int>(W.rows());
    p.M = laplacian(W) / 4.0;
    p.offset = 0.0;
    p.integral = is_integral(W);
    return p;
}

// BQP data rewritten over x in {-1,1}^n via z = (x + e)/2:
//   z^T F z + c^T z = x^T Fp x + cp^T x + constant,   A z = b  <=>  Ap x = bp.
struct Pm1Form {
    Matrix Fp;
    Vector cp;
    Matrix Ap;
    Vector bp;
    double constant = 0.0;
    bool integral = false;
};

inline Pm1Form bqp_to_pm1(const BqpInstance& inst) {
    inst.validate();
    Pm1Form f;
    const Vector Fe = inst.F.rowwise().sum();
    f.Fp = inst.F / 4.0;
    f.cp = Fe / 2.0 + inst.c / 2.0;
    f.constant = Fe.sum() / 4.0 + inst.c.sum() / 2.0;
    f.Ap = inst.A;
    f.bp = 2.0 * inst.b - inst.A.rowwise().sum();
    f.integral = inst.integral;
    return f;
}

// Exhaustive Max-Cut solver.  The first variable is fixed to +1; the rest are
// enumerated in Gray-code order with O(size) objective updates per flip.
inline CutSolution brute_force_maxcut(const MaxCutProblem& p) {
    if (p.size > 25) throw InvalidInput("brute_force_maxcut: size cap is 25");
    const int n = p.size;
    if (n == 0) return {Vector(0), p.offset};

    Vector x = Vector::Ones(n);
    Vector g = p.M * x;  // gradient cache, g = M x
    double value = x.dot(g);
    Vector best_x = x;
    double best_value = value;

    const std::uint64_t total = (n > 1) ? (1ULL << (n - 1)) : 1;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t changed = gray ^ next;
        gray = next;
        int v = 1;  // flipped variable: bit index + 1 (variable 0 stays fixed)
        for (std::uint64_t bit = changed; bit > 1; bit >>= 1) ++v;
        value += 4.0 * (p.M(v, v) - x[v] * g[v]);
        g -= 2.0 * x[v] * p.M.col(v);
        x[v] = -x[v];
        if (value > best_value) {
            best_value = value;
            best_x = x;
        }
    }
    return {best_x, best_value + p.offset};
}

// Exhaustive BQP solver; returns nullopt when no z satisfies Az = b.
// Equality is exact for integral data, within 1e-8 otherwise.
inline std::optional<BinarySolution> brute_force_bqp(const BqpInstance& inst) {
    if (inst.n > 22) throw InvalidInput("brute_force_bqp: size cap is 22");
    inst.validate();
    const int n = inst.n;
    const double tol = inst.integral ? 0.0 : 1e-8;

    std::optional<BinarySolution> best;
    Vector z(n);
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t k = 0; k < total; ++k) {
        for (int i = 0; i < n; ++i) z[i] = (k >> i) & 1 ? 1.0 : 0.0;
        if (inst.m > 0) {
            const Vector r = inst.A * z - inst.b;
            if (r.lpNorm<Eigen::Infinity>() > tol) continue;
        }
        const double v = inst.objective(z);
        if (!best || v < best->value) best = BinarySolution{z, v, true};
    }
    return best;
}

}  // namespace bqcut
