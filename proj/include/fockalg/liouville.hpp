#pragma once

#include "fockalg/fock.hpp"
#include "fockalg/report.hpp"

namespace fockalg {

/// Four-index generator acting on density matrices, stored as the N^2 x N^2
/// matrix over row-major vectorized states:
///   Theta_{mn,jk} = H_{mj} d_{nk} - d_{mj} H_{kn} - d_{kn} V_{mj}
struct SuperOp {
  int dim = 0;
  Matrix theta;  // N^2 x N^2

  Matrix apply(const Matrix& rho) const;
};

/// i (H rho - rho H); trace-free by construction.
Matrix von_neumann_rhs(const FockMatrix& h, const Matrix& rho);
Matrix von_neumann_rhs(const FockMatrix& h, const DensityMatrix& rho);

/// Assembles the generator tensor. With include_v = false the contraction
/// reproduces the commutator [H, rho] exactly.
SuperOp build_liouvillian(const FockMatrix& h, const FockMatrix& v, bool include_v);

/// Truncated series sum_{j<=order} (i t)^j Theta^j rho0 / j!.
Matrix series_evolve(const SuperOp& theta, const Matrix& rho0, double t, int order);

/// Exact conjugation flow exp(i t H) rho exp(-i t H) (the series oracle).
Matrix conjugation_evolve(const FockMatrix& h, const Matrix& rho0, double t);

/// (1/2)(p x + x p) with p = (a - a+)/(sqrt(2) i) materialized: the
/// balanced left/right momentum action playing the role of divergence.
Matrix parity_divergence(const Matrix& x, int dim);

/// v = i (dH/da - d(H+)/da+); equals i(dH/da - dH/da+) for hermitian H.
NormalPoly velocity_operator(const NormalPoly& h);

/// j = v rho.
Matrix current(const NormalPoly& h, const Matrix& rho, int dim);

/// Continuity diagnostic: compares i[H, rho] against -div(v rho) and the
/// full-tensor image against the factorized form. Reporting only.
DiagReport continuity_residual(const NormalPoly& h, const Matrix& rho, int dim);

/// Hermite-function realization of the boundary lemma on [-L, L]: the
/// endpoint current values for levels k, j and the two sides of the
/// volume/boundary identity, integrated with Gauss-Legendre quadrature.
DiagReport gauss_boundary_check(const NormalPoly& h, int levels, double half_width, int nodes);

}  // namespace fockalg
