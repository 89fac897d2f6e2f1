// Hypermetric cutting planes <bb^T, X> >= 1 for integer b with odd entry sum,
// restricted to b_i in {-1,0,1} with 3, 5, or 7 nonzeros (triangle, pentagonal,
// heptagonal inequalities).  Triangles are separated exhaustively; higher
// orders heuristically by simulated annealing over placements of a fixed sign
// pattern, which is the quadratic-assignment view min <H, X(p,p)>.

#pragma once

#include "bqcut/linalg.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace bqcut {

struct HypermetricCut {
    std::vector<int> support;  // sorted, distinct indices; size 3, 5, or 7
    std::vector<int> signs;    // +-1 per support entry; normalized so signs[0] = +1
    double violation = 0.0;    // 1 - <bb^T, X> at the X it was separated from

    int order() const { return static_cast<int>(support.size()); }

    // <bb^T, X> assuming unit diagonal
    double bbt_inner(const Matrix& X) const {
        double s = static_cast<double>(order());
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = a + 1; b < support.size(); ++b)
                s += 2.0 * signs[a] * signs[b] * X(support[a], support[b]);
        return s;
    }

    // Row of the inequality operator normalized as A(X) <= e:
    //   <B, X> <= 1 with B = -(bb^T - Diag(b o b)) / (order - 1),
    // equivalent to <bb^T, X> >= 1 when diag(X) = e.
    double a_form(const Matrix& X) const {
        return (static_cast<double>(order()) - bbt_inner(X)) / (order() - 1);
    }

    // target += coeff * B
    void add_coefficient(Matrix& target, double coeff) const {
        const double s = -coeff / (order() - 1);
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = a + 1; b < support.size(); ++b) {
                const double v = s * signs[a] * signs[b];
                target(support[a], support[b]) += v;
                target(support[b], support[a]) += v;
            }
    }

    // dedup key; global sign flips leave (b^T x)^2 unchanged, hence the
    // signs[0] = +1 normalization
    std::string key() const {
        std::string k;
        for (std::size_t a = 0; a < support.size(); ++a) {
            k += std::to_string(support[a]);
            k += signs[a] > 0 ? '+' : '-';
        }
        return k;
    }
};

inline bool cut_less(const HypermetricCut& a, const HypermetricCut& b) {
    if (a.violation != b.violation) return a.violation > b.violation;
    if (a.support != b.support) return a.support < b.support;
    return a.signs < b.signs;
}

namespace detail {

inline HypermetricCut make_cut(std::vector<int> support, std::vector<int> signs,
                               double violation) {
    std::vector<std::size_t> idx(support.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return support[a] < support[b];
    });
    HypermetricCut cut;
    cut.violation = violation;
    for (std::size_t i : idx) {
        cut.support.push_back(support[i]);
        cut.signs.push_back(signs[i]);
    }
    if (cut.signs[0] < 0)
        for (auto& s : cut.signs) s = -s;
    return cut;
}

}  // namespace detail

struct TriangleSeparation {
    std::vector<HypermetricCut> cuts;  // violation > threshold, sorted, at most `limit`
    double max_violation = 0.0;        // over all 4 C(n,3) inequalities
};

inline TriangleSeparation separate_triangles(const Matrix& X, int limit,
                                             double threshold = 1e-4) {
    const int n = static_cast<int>(X.rows());
    TriangleSeparation out;
    out.max_violation = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double a = X(i, j), b = X(i, k), c = X(j, k);
                const double t[4] = {a + b + c, -a - b + c, -a + b - c, a - b - c};
                static constexpr int sgn[4][3] = {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
                for (int p = 0; p < 4; ++p) {
                    const double v = -2.0 - 2.0 * t[p];
                    if (v > out.max_violation) out.max_violation = v;
                    if (v > threshold)
                        out.cuts.push_back(detail::make_cut(
                            {i, j, k}, {sgn[p][0], sgn[p][1], sgn[p][2]}, v));
                }
            }
    std::sort(out.cuts.begin(), out.cuts.end(), cut_less);
    if (limit >= 0 && static_cast<int>(out.cuts.size()) > limit) out.cuts.resize(limit);
    return out;
}

struct SaParams {
    int restarts = 5;
    int moves_per_vertex = 60;  // proposals per restart = moves_per_vertex * n
    double cooling = 0.95;      // applied every n proposals
    int temperature_samples = 100;
};

namespace detail {

// E(p) = <bb^T, X(p,p)> for the placement p with the pattern's signs.
inline double placement_energy(const Matrix& X, const std::vector<int>& p,
                               const std::vector<int>& s) {
    double e = static_cast<double>(p.size());
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            e += 2.0 * s[a] * s[b] * X(p[a], p[b]);
    return e;
}

}  // namespace detail

// Heuristic separation of pentagonal/heptagonal inequalities.  For each sign
// pattern (0, 1, 2[, 3] minus entries) simulated annealing searches injective
// placements of the support minimizing <bb^T, X(p,p)>; any placement with
// positive violation is recorded.  Deterministic for a fixed seed.
inline std::vector<HypermetricCut> separate_kgonal(const Matrix& X, int order, int count,
                                                   const SaParams& sa, std::uint64_t seed,
                                                   double threshold = 1e-4) {
    const int n = static_cast<int>(X.rows());
    std::vector<HypermetricCut> empty;
    if (count <= 0 || (order != 5 && order != 7) || n < order) return empty;

    Rng rng(mix_seed(0x59a1ULL + order, seed));
    std::map<std::string, HypermetricCut> found;

    auto record = [&](const std::vector<int>& p, const std::vector<int>& s, double energy) {
        const double v = 1.0 - energy;
        if (v <= threshold) return;
        HypermetricCut cut = detail::make_cut(p, s, v);
        auto [it, inserted] = found.emplace(cut.key(), cut);
        if (!inserted && v > it->second.violation) it->second.violation = v;
    };

    const int num_patterns = order == 5 ? 3 : 4;
    for (int minus = 0; minus < num_patterns; ++minus) {
        std::vector<int> signs(order, 1);
        for (int q = 0; q < minus; ++q) signs[q] = -1;

        auto random_placement = [&]() {
            std::vector<int> pool(n);
            for (int i = 0; i < n; ++i) pool[i] = i;
            for (int i = 0; i < order; ++i) {
                const int j = i + static_cast<int>(rng.uniform_int(0, n - 1 - i));
                std::swap(pool[i], pool[j]);
            }
            return std::pair(std::vector<int>(pool.begin(), pool.begin() + order),
                             std::vector<int>(pool.begin() + order, pool.end()));
        };

        // scale-aware initial temperature
        double mean = 0.0, sq = 0.0;
        for (int t = 0; t < sa.temperature_samples; ++t) {
            auto [p, rest] = random_placement();
            const double e = detail::placement_energy(X, p, signs);
            mean += e;
            sq += e * e;
        }
        mean /= sa.temperature_samples;
        const double var = std::max(0.0, sq / sa.temperature_samples - mean * mean);
        const double t0 = std::max(1e-3, std::sqrt(var));

        for (int restart = 0; restart < sa.restarts; ++restart) {
            auto [p, pool] = random_placement();
            double energy = detail::placement_energy(X, p, signs);
            record(p, signs, energy);
            double temp = t0;
            const long moves = static_cast<long>(sa.moves_per_vertex) * n;
            for (long mv = 0; mv < moves; ++mv) {
                double delta;
                int slot, other;
                if (!pool.empty()) {
                    // swap a placed vertex with an unplaced one
                    slot = static_cast<int>(rng.uniform_int(0, order - 1));
                    other = static_cast<int>(rng.uniform_int(0, static_cast<long>(pool.size()) - 1));
                    const int v = pool[other];
                    delta = 0.0;
                    for (int b = 0; b < order; ++b)
                        if (b != slot)
                            delta += 2.0 * signs[slot] * signs[b] * (X(v, p[b]) - X(p[slot], p[b]));
                } else {
                    // support covers the whole vertex set: exchange two slots
                    // of opposite sign (same-sign exchanges leave E unchanged)
                    if (minus == 0) break;
                    slot = static_cast<int>(rng.uniform_int(0, minus - 1));
                    other = minus + static_cast<int>(rng.uniform_int(0, order - 1 - minus));
                    std::vector<int> q = p;
                    std::swap(q[slot], q[other]);
                    delta = detail::placement_energy(X, q, signs) - energy;
                }
                if (delta < 0.0 || rng.uniform() < std::exp(-delta / temp)) {
                    if (!pool.empty()) {
                        std::swap(p[slot], pool[other]);
                    } else {
                        std::swap(p[slot], p[other]);
                    }
                    energy += delta;
                    record(p, signs, energy);
                }
                if ((mv + 1) % n == 0) temp *= sa.cooling;
            }
        }
    }

    std::vector<HypermetricCut> cuts;
    cuts.reserve(found.size());
    for (auto& [key, cut] : found) cuts.push_back(cut);
    std::sort(cuts.begin(), cuts.end(), cut_less);
    if (static_cast<int>(cuts.size()) > count) cuts.resize(count);
    return cuts;
}

// Drop cuts whose dual multiplier is below `threshold`; such constraints are
// inactive in the current bound.
inline std::pair<std::vector<HypermetricCut>, Vector> purge(
    const std::vector<HypermetricCut>& cuts, const Vector& gamma, double threshold = 1e-5) {
    if (static_cast<Eigen::Index>(cuts.size()) != gamma.size())
        throw InvalidInput("purge: cuts and gamma must have equal length");
    std::vector<HypermetricCut> kept;
    std::vector<double> kept_gamma;
    for (std::size_t i = 0; i < cuts.size(); ++i)
        if (gamma[static_cast<Eigen::Index>(i)] >= threshold) {
            kept.push_back(cuts[i]);
            kept_gamma.push_back(gamma[static_cast<Eigen::Index>(i)]);
        }
    Vector g(static_cast<Eigen::Index>(kept_gamma.size()));
    for (std::size_t i = 0; i < kept_gamma.size(); ++i) g[static_cast<Eigen::Index>(i)] = kept_gamma[i];
    return {std::move(kept), std::move(g)};
}

}  // namespace bqcut
