#pragma once

// Smallest nonzero eigenvalue of L x = lambda M x for a stiffness L with
// constant kernel and a positive diagonal mass M.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "sgb/error.hpp"
#include "sgb/laplacian.hpp"

namespace sgb {

struct EigenOptions {
  double tol = 1e-8;
  int block_size = 4;
  int iter_cap = 5000;
  std::uint64_t seed = 20240607;
};

struct EigenResult {
  double lambda1 = 0.0;
  Eigen::VectorXd vector;  ///< M-normalized, M-orthogonal to constants
  int iterations = 0;
  double residual = 0.0;  ///< ||L x - lambda M x|| / ||L x||
};

namespace detail {

/// Remove the M-weighted mean from every column.
inline void deflate_constants(Eigen::MatrixXd& X, const Eigen::VectorXd& m, double total_mass) {
  const Eigen::RowVectorXd coeff = (m.transpose() * X) / total_mass;
  X.rowwise() -= coeff;
}

/// M-orthonormalize the columns of S (scaled eigen-decomposition of the
/// Gram matrix), dropping numerically dependent directions. A second pass
/// runs only when the Gram matrix was badly conditioned.
inline Eigen::MatrixXd m_orthonormalize(const Eigen::MatrixXd& S, const Eigen::VectorXd& m) {
  Eigen::MatrixXd basis = S;
  const Eigen::VectorXd sqrt_m = m.cwiseSqrt();
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::MatrixXd Y = sqrt_m.asDiagonal() * basis;
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(basis.cols(), basis.cols());
    G.selfadjointView<Eigen::Lower>().rankUpdate(Y.transpose());
    G = G.selfadjointView<Eigen::Lower>();
    const double gmax = G.diagonal().maxCoeff();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index j = 0; j < G.rows(); ++j)
      if (G(j, j) > 1e-28 * gmax) keep.push_back(j);
    const auto k = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXd Gk(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b) Gk(a, b) = G(keep[a], keep[b]);
    const Eigen::VectorXd d = Gk.diagonal().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd Gs = d.asDiagonal() * Gk * d.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Gs);
    const Eigen::VectorXd& theta = es.eigenvalues();
    const double tmax = theta.maxCoeff();
    std::vector<Eigen::Index> good;
    for (Eigen::Index j = 0; j < theta.size(); ++j)
      if (theta[j] > 1e-13 * tmax) good.push_back(j);
    // Small transform acting on all columns of `basis` (dropped ones get zero rows).
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(basis.cols(), static_cast<Eigen::Index>(good.size()));
    for (std::size_t j = 0; j < good.size(); ++j)
      for (Eigen::Index a = 0; a < k; ++a)
        T(keep[a], static_cast<Eigen::Index>(j)) = d[a] * es.eigenvectors()(a, good[j]) / std::sqrt(theta[good[j]]);
    basis = basis * T;
    if (theta[good.front()] > 1e-6 * tmax && k == G.rows()) break;
  }
  return basis;
}

inline void check_operators(const SparseSym& L, const DiagMass& M) {
  if (L.dimension() != M.dimension()) throw DomainError("eigensolver: L and M dimensions differ");
  if (L.dimension() < 2) throw DomainError("eigensolver: dimension must be at least 2");
  if (!(M.weights.minCoeff() > 0.0)) throw DomainError("eigensolver: mass entries must be positive");
  if (M.weights.maxCoeff() > 1e12 * M.weights.minCoeff())
    throw IllConditionedError("eigensolver: mass entries span more than 1e12");
}

}  // namespace detail

/// Blocked preconditioned conjugate-gradient eigeniteration (LOBPCG form)
/// with Jacobi preconditioning and M-orthogonal deflation of constants.
/// Converged once the smallest Ritz value changes by less than tol
/// (relative) and its residual satisfies ||L x - lambda M x|| <= tol ||L x||.
inline EigenResult smallest_nonzero_eig(const SparseSym& L, const DiagMass& M, const EigenOptions& opt = {}) {
  detail::check_operators(L, M);
  if (!(opt.tol > 1e-14 && opt.tol < 1e-4)) throw DomainError("smallest_nonzero_eig: tol must lie in (1e-14, 1e-4)");
  if (opt.block_size < 1 || opt.iter_cap < 1) throw DomainError("smallest_nonzero_eig: invalid block size or iteration cap");

  const Eigen::Index n = L.dimension();
  const Eigen::VectorXd& m = M.weights;
  const double total_mass = m.sum();
  const Eigen::VectorXd diag = L.matrix.diagonal();
  if (!(diag.minCoeff() > 0.0)) throw DomainError("smallest_nonzero_eig: stiffness diagonal must be positive");
  const Eigen::VectorXd precond = diag.cwiseInverse();
  const Eigen::Index b = std::min<Eigen::Index>(opt.block_size, n - 1);
  // Eigenvalues below this are the (leaked) kernel.
  const double floor = 1e-8 * diag.sum() / static_cast<double>(n);

  // Fixed linear-congruential start block.
  std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(opt.seed % 2147483647ULL));
  Eigen::MatrixXd X(n, b);
  for (Eigen::Index j = 0; j < b; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      X(i, j) = 2.0 * static_cast<double>(rng() - rng.min()) / static_cast<double>(rng.max() - rng.min()) - 1.0;
  detail::deflate_constants(X, m, total_mass);
  X = detail::m_orthonormalize(X, m);

  const auto rayleigh_ritz = [&](const Eigen::MatrixXd& S, Eigen::Index keep, Eigen::MatrixXd& Xout,
                                 Eigen::MatrixXd& LXout, Eigen::VectorXd& lam) {
    const Eigen::MatrixXd LS = L.matrix * S;
    Eigen::MatrixXd A = S.transpose() * LS;
    A = 0.5 * (A + A.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    keep = std::min(keep, A.rows());
    const Eigen::MatrixXd C = es.eigenvectors().leftCols(keep);
    Xout = S * C;
    LXout = LS * C;
    lam = es.eigenvalues().head(keep);
  };

  Eigen::MatrixXd LX;
  Eigen::VectorXd lam;
  rayleigh_ritz(X, X.cols(), X, LX, lam);
  Eigen::MatrixXd P;
  double prev = lam[0];

  EigenResult res;
  for (int it = 1; it <= opt.iter_cap; ++it) {
    const Eigen::MatrixXd R = LX - m.asDiagonal() * X * lam.asDiagonal();
    const double scale = std::max(LX.col(0).norm(), floor * (m.asDiagonal() * X.col(0)).norm());
    res.residual = R.col(0).norm() / scale;
    const double change = std::abs(lam[0] - prev) / std::max(std::abs(lam[0]), floor);
    if (it > 1 && change < opt.tol && res.residual <= opt.tol) {
      res.iterations = it - 1;
      break;
    }
    if (it == opt.iter_cap)
      throw ConvergenceError("smallest_nonzero_eig: no convergence after " + std::to_string(opt.iter_cap) +
                             " iterations (residual " + std::to_string(res.residual) + ")");
    prev = lam[0];

    Eigen::MatrixXd W = precond.asDiagonal() * R;
    detail::deflate_constants(W, m, total_mass);

    Eigen::MatrixXd S(n, X.cols() + W.cols() + P.cols());
    S.leftCols(X.cols()) = X;
    S.middleCols(X.cols(), W.cols()) = W;
    if (P.cols() > 0) S.rightCols(P.cols()) = P;
    S = detail::m_orthonormalize(S, m);

    Eigen::MatrixXd Xn, LXn;
    rayleigh_ritz(S, b, Xn, LXn, lam);
    // Search direction: part of the new block M-orthogonal to the old one.
    P = Xn - X * (X.transpose() * (m.asDiagonal() * Xn));
    X = std::move(Xn);
    LX = std::move(LXn);
    detail::deflate_constants(X, m, total_mass);
    detail::deflate_constants(P, m, total_mass);
  }

  res.lambda1 = lam[0];
  res.vector = X.col(0);
  const double mnorm = std::sqrt(res.vector.dot(m.cwiseProduct(res.vector)));
  res.vector /= mnorm;
  if (!(res.lambda1 > floor)) throw DeflationError("smallest_nonzero_eig: constant mode leaked into the result");
  return res;
}

/// Full generalized spectrum through the similarity M^{-1/2} L M^{-1/2} and
/// cyclic Jacobi rotations. Sorted ascending. Intended as a test oracle.
inline Eigen::VectorXd dense_eig_oracle(const SparseSym& L, const DiagMass& M) {
  detail::check_operators(L, M);
  const Eigen::Index n = L.dimension();
  if (n > 400) throw SizeError("dense_eig_oracle: dimension " + std::to_string(n) + " exceeds 400");

  const Eigen::VectorXd s = M.weights.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd A = s.asDiagonal() * Eigen::MatrixXd(L.matrix) * s.asDiagonal();
  A = 0.5 * (A + A.transpose()).eval();

  const double fro = A.norm();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (std::sqrt(2.0 * off) <= 1e-15 * fro) break;

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        // Symmetric 2x2 Schur decomposition.
        const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - sn * akq;
          A(k, q) = sn * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = c * apk - sn * aqk;
          A(q, k) = sn * apk + c * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
      }
    }
  }
  Eigen::VectorXd ev = A.diagonal();
  std::sort(ev.data(), ev.data() + ev.size());
  return ev;
}

}  // namespace sgb
