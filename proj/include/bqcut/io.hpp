// Instance file parsing and writing, random instance generation, and the
// machine-readable result record.
//
// Formats (1-based indices in files, 0-based in memory):
//   edge list:   "n m" then m lines "i j w", one entry per unordered pair
//   sparse bqp:  "n m"; "nF" then nF lines "i j v" (symmetric, either order);
//                "nc" then nc lines "i v"; m blocks "k rhs" with k lines "i v"

#pragma once

#include "bqcut/instance.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace bqcut {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

// Token reader that tracks line numbers for diagnostics.
class LineReader {
public:
    explicit LineReader(const std::string& text) : in_(text) {}

    // next non-empty line as a stream
    std::istringstream line() {
        std::string s;
        while (std::getline(in_, s)) {
            ++lineno_;
            if (s.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(s);
        }
        throw ParseError(lineno_, "unexpected end of input");
    }

    int lineno() const { return lineno_; }

    template <typename T>
    T get(std::istringstream& ls, const char* what) {
        T v;
        if (!(ls >> v)) throw ParseError(lineno_, std::string("expected ") + what);
        return v;
    }

private:
    std::istringstream in_;
    int lineno_ = 0;
};

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// ---- Max-Cut edge lists ----------------------------------------------------

inline Matrix parse_maxcut_weights(const std::string& text) {
    detail::LineReader r(text);
    auto head = r.line();
    const int n = r.get<int>(head, "vertex count");
    const long m = r.get<long>(head, "edge count");
    if (n < 0 || m < 0) throw ParseError(r.lineno(), "negative size");
    Matrix W = Matrix::Zero(n, n);
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen(n, n);
    seen.setConstant(false);
    for (long e = 0; e < m; ++e) {
        auto ls = r.line();
        const int i = r.get<int>(ls, "edge endpoint");
        const int j = r.get<int>(ls, "edge endpoint");
        const double w = r.get<double>(ls, "edge weight");
        if (i < 1 || i > n || j < 1 || j > n) throw ParseError(r.lineno(), "vertex index out of range");
        if (i == j) throw ParseError(r.lineno(), "self-loop not allowed");
        if (seen(i - 1, j - 1)) throw ParseError(r.lineno(), "duplicate edge");
        seen(i - 1, j - 1) = seen(j - 1, i - 1) = true;
        W(i - 1, j - 1) = W(j - 1, i - 1) = w;
    }
    return W;
}

inline MaxCutProblem parse_maxcut(const std::string& text) {
    return maxcut_from_graph(parse_maxcut_weights(text));
}

inline std::string write_maxcut(const Matrix& W) {
    const int n = static_cast<int>(W.rows());
    std::vector<std::string> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (W(i, j) != 0.0)
                edges.push_back(std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                                detail::fmt(W(i, j)));
    std::string out = std::to_string(n) + " " + std::to_string(edges.size()) + "\n";
    for (const auto& e : edges) out += e + "\n";
    return out;
}

// ---- Sparse BQP ------------------------------------------------------------

inline BqpInstance parse_bqp(const std::string& text) {
    detail::LineReader r(text);
    auto head = r.line();
    const int n = r.get<int>(head, "variable count");
    const int m = r.get<int>(head, "constraint count");
    if (n < 0 || m < 0) throw ParseError(r.lineno(), "negative size");

    BqpInstance inst;
    inst.n = n;
    inst.m = m;
    inst.F = Matrix::Zero(n, n);
    inst.c = Vector::Zero(n);
    inst.A = Matrix::Zero(m, n);
    inst.b = Vector::Zero(m);

    auto fh = r.line();
    const long nF = r.get<long>(fh, "F entry count");
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen(n, n);
    seen.setConstant(false);
    for (long e = 0; e < nF; ++e) {
        auto ls = r.line();
        const int i = r.get<int>(ls, "row index");
        const int j = r.get<int>(ls, "column index");
        const double v = r.get<double>(ls, "value");
        if (i < 1 || i > n || j < 1 || j > n) throw ParseError(r.lineno(), "F index out of range");
        if (seen(i - 1, j - 1)) throw ParseError(r.lineno(), "duplicate F entry");
        seen(i - 1, j - 1) = seen(j - 1, i - 1) = true;
        inst.F(i - 1, j - 1) = inst.F(j - 1, i - 1) = v;
    }

    auto ch = r.line();
    const long nc = r.get<long>(ch, "c entry count");
    for (long e = 0; e < nc; ++e) {
        auto ls = r.line();
        const int i = r.get<int>(ls, "index");
        const double v = r.get<double>(ls, "value");
        if (i < 1 || i > n) throw ParseError(r.lineno(), "c index out of range");
        inst.c[i - 1] = v;
    }

    for (int row = 0; row < m; ++row) {
        auto bh = r.line();
        const long k = r.get<long>(bh, "row entry count");
        inst.b[row] = r.get<double>(bh, "right-hand side");
        for (long e = 0; e < k; ++e) {
            auto ls = r.line();
            const int i = r.get<int>(ls, "index");
            const double v = r.get<double>(ls, "value");
            if (i < 1 || i > n) throw ParseError(r.lineno(), "constraint index out of range");
            inst.A(row, i - 1) = v;
        }
    }

    inst.integral = is_integral(inst.F) && is_integral(inst.c) && is_integral(inst.A) &&
                    is_integral(inst.b);
    inst.validate();
    return inst;
}

inline std::string write_bqp(const BqpInstance& inst) {
    std::string out = std::to_string(inst.n) + " " + std::to_string(inst.m) + "\n";
    std::vector<std::string> fe;
    for (int i = 0; i < inst.n; ++i)
        for (int j = i; j < inst.n; ++j)
            if (inst.F(i, j) != 0.0)
                fe.push_back(std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                             detail::fmt(inst.F(i, j)));
    out += std::to_string(fe.size()) + "\n";
    for (const auto& e : fe) out += e + "\n";
    std::vector<std::string> ce;
    for (int i = 0; i < inst.n; ++i)
        if (inst.c[i] != 0.0)
            ce.push_back(std::to_string(i + 1) + " " + detail::fmt(inst.c[i]));
    out += std::to_string(ce.size()) + "\n";
    for (const auto& e : ce) out += e + "\n";
    for (int row = 0; row < inst.m; ++row) {
        std::vector<std::string> ae;
        for (int i = 0; i < inst.n; ++i)
            if (inst.A(row, i) != 0.0)
                ae.push_back(std::to_string(i + 1) + " " + detail::fmt(inst.A(row, i)));
        out += std::to_string(ae.size()) + " " + detail::fmt(inst.b[row]) + "\n";
        for (const auto& e : ae) out += e + "\n";
    }
    return out;
}

// ---- Derived instances -----------------------------------------------------

// Densest-k-subgraph as a minimization BQP: F = -W/2, single row e^T z = k.
inline BqpInstance encode_dks(const Matrix& W, int k) {
    const int n = static_cast<int>(W.rows());
    if (k < 0 || k > n) throw InvalidInput("k must be between 0 and n");
    laplacian(W);  // validates symmetry and zero diagonal
    BqpInstance inst;
    inst.n = n;
    inst.m = 1;
    inst.F = -W / 2.0;
    inst.c = Vector::Zero(n);
    inst.A = Matrix::Ones(1, n);
    inst.b = Vector::Constant(1, static_cast<double>(k));
    inst.integral = is_integral(inst.F);
    return inst;
}

struct IntRange {
    long lo = 0;
    long hi = 0;
};

// Random integral BQP in the style of the constrained benchmark families.
inline BqpInstance gen_random_bqp(int n, double density_f, IntRange range_f, IntRange range_a,
                                  IntRange range_b, int m, std::uint64_t seed) {
    Rng rng(mix_seed(0x42715ULL, seed));
    BqpInstance inst;
    inst.n = n;
    inst.m = m;
    inst.F = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < density_f) {
                const auto v = static_cast<double>(rng.uniform_int(range_f.lo, range_f.hi));
                inst.F(i, j) = inst.F(j, i) = v;
            }
    inst.c = Vector::Zero(n);
    inst.A = Matrix::Zero(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            inst.A(i, j) = static_cast<double>(rng.uniform_int(range_a.lo, range_a.hi));
    inst.b = Vector::Zero(m);
    for (int i = 0; i < m; ++i)
        inst.b[i] = static_cast<double>(rng.uniform_int(range_b.lo, range_b.hi));
    inst.integral = true;
    return inst;
}

// Random weighted graph for Max-Cut benchmarks.
inline Matrix gen_random_graph(int n, double density, IntRange weights, std::uint64_t seed) {
    Rng rng(mix_seed(0x6d63ULL, seed));
    Matrix W = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < density) {
                const auto w = static_cast<double>(rng.uniform_int(weights.lo, weights.hi));
                W(i, j) = W(j, i) = w;
            }
    return W;
}

// ---- Result record ----------------------------------------------------------

struct Report {
    std::string status;  // optimal | infeasible | unproven-timeout
    double value = 0.0;
    std::vector<int> solution;
    long nodes = 0;
    double wall_seconds = 0.0;
    double root_bound = 0.0;
    double root_gap_percent = 0.0;
    bool has_penalty = false;
    double sigma = 0.0, rho = 0.0, u_tilde = 0.0, l_tilde = 0.0;
};

// Fixed key order and %.17g doubles so identical runs serialize identically.
inline std::string report_json(const Report& r) {
    using detail::fmt;
    std::string s = "{";
    s += "\"status\":\"" + r.status + "\",";
    s += "\"value\":" + fmt(r.value) + ",";
    s += "\"solution\":[";
    for (std::size_t i = 0; i < r.solution.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r.solution[i]);
    }
    s += "],";
    s += "\"nodes\":" + std::to_string(r.nodes) + ",";
    s += "\"wall_seconds\":" + fmt(r.wall_seconds) + ",";
    s += "\"root_bound\":" + fmt(r.root_bound) + ",";
    s += "\"root_gap_percent\":" + fmt(r.root_gap_percent);
    if (r.has_penalty) {
        s += ",\"sigma\":" + fmt(r.sigma);
        s += ",\"rho\":" + fmt(r.rho);
        s += ",\"u_tilde\":" + fmt(r.u_tilde);
        s += ",\"l_tilde\":" + fmt(r.l_tilde);
    }
    s += "}";
    return s;
}

inline std::string report_text(const Report& r) {
    std::string s;
    s += "status:       " + r.status + "\n";
    s += "value:        " + detail::fmt(r.value) + "\n";
    s += "nodes:        " + std::to_string(r.nodes) + "\n";
    s += "wall seconds: " + detail::fmt(r.wall_seconds) + "\n";
    s += "root bound:   " + detail::fmt(r.root_bound) + "\n";
    s += "root gap:     " + detail::fmt(r.root_gap_percent) + "%\n";
    if (r.has_penalty) {
        s += "sigma:        " + detail::fmt(r.sigma) + "\n";
        s += "rho:          " + detail::fmt(r.rho) + "\n";
        s += "u_tilde:      " + detail::fmt(r.u_tilde) + "\n";
        s += "l_tilde:      " + detail::fmt(r.l_tilde) + "\n";
    }
    s += "solution:     ";
    for (std::size_t i = 0; i < r.solution.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(r.solution[i]);
    }
    s += "\n";
    return s;
}

}  // namespace bqcut
