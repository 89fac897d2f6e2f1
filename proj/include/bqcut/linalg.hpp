// Dense linear-algebra aliases and small numeric utilities shared by the solver.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <stdexcept>
#include <string>

namespace bqcut {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_symmetric(const Matrix& A, double tol = 0.0) {
    if (A.rows() != A.cols()) return false;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = i + 1; j < A.cols(); ++j)
            if (std::abs(A(i, j) - A(j, i)) > tol) return false;
    return true;
}

inline bool is_integral(double v) { return v == std::floor(v); }

inline bool is_integral(const Matrix& A) {
    for (Eigen::Index i = 0; i < A.size(); ++i)
        if (!is_integral(A.data()[i])) return false;
    return true;
}

inline bool is_integral(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!is_integral(v[i])) return false;
    return true;
}

// splitmix64; used to combine seeds deterministically.
inline std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
    std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + v;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t hash_matrix(const Matrix& A) {
    std::uint64_t h = fnv1a(&A, 0);
    auto r = static_cast<std::uint64_t>(A.rows());
    h = fnv1a(&r, sizeof r, h);
    return fnv1a(A.data(), sizeof(double) * static_cast<std::size_t>(A.size()), h);
}

// Deterministic RNG with explicit distributions; std:: distribution objects are
// implementation-defined, which would break reproducible instance generation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi], inclusive
    long uniform_int(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

    // standard normal via Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // uniform direction on the unit sphere in R^n
    Vector sphere(int n) {
        Vector r(n);
        double nrm = 0.0;
        while (nrm < 1e-12) {
            for (int i = 0; i < n; ++i) r[i] = normal();
            nrm = r.norm();
        }
        return r / nrm;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace bqcut
