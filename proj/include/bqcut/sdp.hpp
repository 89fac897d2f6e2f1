// Interior-point solver for the diagonally constrained SDP
//
//     max <C, X>   s.t.  diag(X) = e,  <G_k, X> = r_k (optional),  X psd,
//
// and the dual-function evaluation used by the bundle bounding routine.
//
// The method is HKM predictor-corrector path following.  With the diagonal
// operator the Schur complement is the n x n matrix X o S^-1 (Hadamard);
// general equalities append a dense border, giving an (n+K) x (n+K) system
// per iteration.  The start is primal X = I (exactly diagonal-feasible) and
// dual S = Diag(y) - C with y chosen diagonally dominant, so dual feasibility
// holds throughout and every iterate's dual objective is a valid bound.

#pragma once

#include "bqcut/cuts.hpp"
#include "bqcut/linalg.hpp"

#include <limits>
#include <vector>

namespace bqcut {

struct SdpEquality {
    Matrix G;  // symmetric coefficient matrix
    double rhs = 0.0;
};

struct SdpSolution {
    Matrix X;           // primal matrix, unit diagonal, psd
    double value = 0.0; // <C, X>
    double dual_value = 0.0;  // e^T y + r^T u; upper bound on the optimum
    Vector dual_diag;   // multipliers y of diag(X) = e
    Vector dual_eq;     // multipliers u of the extra equalities
    double gap = 0.0;   // relative duality gap at termination
    int iterations = 0;
};

class SdpFailure : public SolverError {
public:
    SdpFailure(const std::string& what, double best_bound, bool likely_infeasible)
        : SolverError(what), best_bound(best_bound), likely_infeasible(likely_infeasible) {}
    double best_bound;       // tightest dual bound reached (valid upper bound)
    bool likely_infeasible;  // dual objective diverged: empty primal feasible set
};

namespace detail {

// Largest alpha with M + alpha * dM psd, via lambda_min of L^-1 dM L^-T.
inline double max_psd_step(const Eigen::LLT<Matrix>& llt, const Matrix& dM) {
    const auto& L = llt.matrixL();
    Matrix W = L.solve(dM);
    Matrix A = L.solve(W.transpose());
    Matrix As = 0.5 * (A + A.transpose());
    A.swap(As);
    Eigen::SelfAdjointEigenSolver<Matrix> es(A, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / lmin;
}

}  // namespace detail

inline SdpSolution solve_diag_sdp(const Matrix& C_in, const std::vector<SdpEquality>& eqs = {},
                                  double tol = 1e-9, int max_iters = 100) {
    const int n = static_cast<int>(C_in.rows());
    if (C_in.cols() != n) throw InvalidInput("cost matrix must be square");
    if (!is_symmetric(C_in, 1e-9)) throw InvalidInput("cost matrix must be symmetric");
    const Matrix C = 0.5 * (C_in + C_in.transpose());
    const int K = static_cast<int>(eqs.size());

    SdpSolution out;
    if (n == 0) return out;
    if (n == 1 && K == 0) {
        out.X = Matrix::Ones(1, 1);
        out.value = out.dual_value = C(0, 0);
        out.dual_diag = Vector::Constant(1, C(0, 0));
        out.dual_eq = Vector(0);
        return out;
    }

    const double cscale = std::max(1.0, C.cwiseAbs().maxCoeff());
    Vector rhs(K);
    for (int k = 0; k < K; ++k) rhs[k] = eqs[k].rhs;

    Matrix X = Matrix::Identity(n, n);
    Vector y = C.cwiseAbs().rowwise().sum() + Vector::Ones(n);
    Vector u = Vector::Zero(K);
    Matrix S = Matrix(y.asDiagonal()) - C;

    const double feas_tol = std::min(1e-8, tol * 10.0);
    const double accept_gap = std::max(tol, 1e-7);
    double best_bound = std::numeric_limits<double>::infinity();
    double prev_mu = std::numeric_limits<double>::infinity();
    int stall = 0;

    // best iterate meeting the acceptance gap; returned if polishing to the
    // target tolerance later breaks down numerically
    SdpSolution snapshot;
    bool have_snapshot = false;

    auto fail = [&](const std::string& what, bool infeasible) -> SdpSolution {
        if (have_snapshot && !infeasible) return snapshot;
        throw SdpFailure(what, best_bound, infeasible);
    };

    for (int iter = 0; iter < max_iters; ++iter) {
        const double pobj = C.cwiseProduct(X).sum();
        double dobj = y.sum();
        for (int k = 0; k < K; ++k) dobj += u[k] * rhs[k];

        Vector rp_d = Vector::Ones(n) - X.diagonal();
        Vector rp_g(K);
        for (int k = 0; k < K; ++k) rp_g[k] = rhs[k] - eqs[k].G.cwiseProduct(X).sum();
        Matrix E = Matrix(y.asDiagonal()) - C - S;
        for (int k = 0; k < K; ++k) E += u[k] * eqs[k].G;

        const double pfeas = std::max(rp_d.lpNorm<Eigen::Infinity>(),
                                      K ? rp_g.lpNorm<Eigen::Infinity>() : 0.0);
        const double dfeas = E.cwiseAbs().maxCoeff() / cscale;
        const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));

        if (dfeas <= 1e-7) best_bound = std::min(best_bound, dobj);

        const bool feasible_enough = pfeas <= feas_tol && dfeas <= feas_tol;
        if (feasible_enough && relgap <= accept_gap &&
            (!have_snapshot || relgap < snapshot.gap)) {
            snapshot.X = X;
            snapshot.value = pobj;
            snapshot.dual_value = dobj;
            snapshot.dual_diag = y;
            snapshot.dual_eq = u;
            snapshot.gap = relgap;
            snapshot.iterations = iter;
            have_snapshot = true;
        }
        if (feasible_enough && relgap <= tol) return snapshot;

        // an unbounded dual certifies an empty primal feasible set
        if (dobj < -1e13 * cscale * n)
            return fail("dual objective diverged (relaxation empty)", true);

        const double mu = X.cwiseProduct(S).sum() / n;
        if (mu < prev_mu * 0.99999) {
            stall = 0;
        } else if (++stall > 20) {
            return fail("no progress in interior-point iterations", false);
        }
        prev_mu = mu;

        Eigen::LLT<Matrix> sllt(S);
        if (sllt.info() != Eigen::Success)
            return fail("dual slack matrix lost definiteness", false);
        const Matrix Sinv = sllt.solve(Matrix::Identity(n, n));

        // Schur complement: [X o Sinv, border; border^T, tr(G_k X G_l Sinv)]
        Matrix Mschur(n + K, n + K);
        Mschur.topLeftCorner(n, n) = X.cwiseProduct(Sinv);
        std::vector<Matrix> P(K);  // P_k = X G_k Sinv
        for (int k = 0; k < K; ++k) {
            P[k] = X * eqs[k].G * Sinv;
            Mschur.block(0, n + k, n, 1) = P[k].diagonal();
            Mschur.block(n + k, 0, 1, n) = P[k].diagonal().transpose();
            for (int l = 0; l <= k; ++l) {
                const double v = eqs[l].G.cwiseProduct(P[k].transpose()).sum();
                Mschur(n + k, n + l) = v;
                Mschur(n + l, n + k) = v;
            }
        }
        Eigen::LDLT<Matrix> mldlt(Mschur);
        if (mldlt.info() != Eigen::Success) {
            Mschur.diagonal().array() += 1e-12 * Mschur.diagonal().maxCoeff();
            mldlt.compute(Mschur);
            if (mldlt.info() != Eigen::Success)
                return fail("schur complement factorization failed", false);
        }

        const Matrix XE = X * E;
        auto solve_direction = [&](const Matrix& R, Matrix& dX, Matrix& dS, Vector& dy,
                                   Vector& du) {
            const Matrix T = (R - XE) * Sinv;
            Vector h(n + K);
            h.head(n) = T.diagonal() - rp_d;
            for (int k = 0; k < K; ++k)
                h[n + k] = eqs[k].G.cwiseProduct(T.transpose()).sum() - rp_g[k];
            const Vector sol = mldlt.solve(h);
            dy = sol.head(n);
            du = sol.tail(K);
            dS = Matrix(dy.asDiagonal()) + E;
            for (int k = 0; k < K; ++k) dS += du[k] * eqs[k].G;
            dX = (R - X * dS) * Sinv;
            Matrix dXs = 0.5 * (dX + dX.transpose());
            dX.swap(dXs);
        };

        Eigen::LLT<Matrix> xllt(X);
        if (xllt.info() != Eigen::Success)
            return fail("primal matrix lost definiteness", false);

        // predictor
        Matrix dX, dS;
        Vector dy, du;
        solve_direction(-X * S, dX, dS, dy, du);
        const double ap_aff = std::min(1.0, 0.98 * detail::max_psd_step(xllt, dX));
        const double ad_aff = std::min(1.0, 0.98 * detail::max_psd_step(sllt, dS));
        const double mu_aff = (X + ap_aff * dX).cwiseProduct(S + ad_aff * dS).sum() / n;
        const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 1e-8, 1.0);

        // corrector
        Matrix R = sigma * mu * Matrix::Identity(n, n) - X * S - dX * dS;
        solve_direction(R, dX, dS, dy, du);
        const double ap = std::min(1.0, 0.98 * detail::max_psd_step(xllt, dX));
        const double ad = std::min(1.0, 0.98 * detail::max_psd_step(sllt, dS));

        X += ap * dX;
        y += ad * dy;
        u += ad * du;
        S += ad * dS;
    }
    return fail("interior-point method did not converge", false);
}

// ---- Partial-dual evaluation -------------------------------------------------

// f(gamma) = e^T gamma + max{ <C - sum_i gamma_i B_i, X> : diag(X)=e, X psd }
// with B_i the A(X) <= e coefficient matrix of cut i.  The reported value uses
// the inner solve's dual objective, so it is an upper bound on the exact f.
struct DualEval {
    Vector gamma;
    double f_value = 0.0;
    Matrix X_gamma;
    Vector subgrad;  // e - A_HYP(X_gamma)
};

inline DualEval eval_dual(const Matrix& C, const std::vector<HypermetricCut>& cuts,
                          const Vector& gamma, double tol = 1e-7) {
    if (gamma.size() != static_cast<Eigen::Index>(cuts.size()))
        throw InvalidInput("eval_dual: gamma length must match cut count");
    if (gamma.size() > 0 && gamma.minCoeff() < -1e-12)
        throw InvalidInput("eval_dual: gamma must be nonnegative");

    Matrix cost = C;
    for (std::size_t i = 0; i < cuts.size(); ++i)
        cuts[i].add_coefficient(cost, -gamma[static_cast<Eigen::Index>(i)]);

    SdpSolution sol = solve_diag_sdp(cost, {}, tol);
    DualEval ev;
    ev.gamma = gamma;
    ev.f_value = gamma.sum() + sol.dual_value;
    ev.X_gamma = std::move(sol.X);
    ev.subgrad = Vector(static_cast<Eigen::Index>(cuts.size()));
    for (std::size_t i = 0; i < cuts.size(); ++i)
        ev.subgrad[static_cast<Eigen::Index>(i)] = 1.0 - cuts[i].a_form(ev.X_gamma);
    return ev;
}

}  // namespace bqcut
