#include "fockalg/liouville.hpp"

#include "fockalg/dynamics.hpp"

#include <cmath>

namespace fockalg {

namespace {

const Complex kI(0.0, 1.0);

Eigen::VectorXcd vectorize(const Matrix& rho) {
  const int n = static_cast<int>(rho.rows());
  Eigen::VectorXcd v(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) v(j * n + k) = rho(j, k);
  return v;
}

Matrix unvectorize(const Eigen::VectorXcd& v, int n) {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = v(j * n + k);
  return m;
}

NormalPoly momentum_poly() {
  // p = (a - a+)/(sqrt(2) i)
  NormalPoly p = NormalPoly::annihilator() - NormalPoly::creator();
  return p * Complex(0.0, -1.0 / std::sqrt(2.0));
}

}  // namespace

Matrix SuperOp::apply(const Matrix& rho) const {
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("SuperOp: dimension mismatch");
  return unvectorize(theta * vectorize(rho), dim);
}

Matrix von_neumann_rhs(const FockMatrix& h, const Matrix& rho) {
  if (h.dim() != rho.rows() || rho.rows() != rho.cols())
    throw std::invalid_argument("von_neumann_rhs: dimension mismatch");
  return kI * (h.entries * rho - rho * h.entries);
}

Matrix von_neumann_rhs(const FockMatrix& h, const DensityMatrix& rho) {
  return von_neumann_rhs(h, rho.rho);
}

SuperOp build_liouvillian(const FockMatrix& h, const FockMatrix& v, bool include_v) {
  const int n = h.dim();
  if (v.dim() != n) throw std::invalid_argument("build_liouvillian: dimension mismatch");
  const double scale = std::max({1.0, max_abs(h.entries), max_abs(v.entries)});
  if (max_abs(h.entries - h.entries.adjoint().eval()) > 1e-10 * scale ||
      max_abs(v.entries - v.entries.adjoint().eval()) > 1e-10 * scale)
    throw std::invalid_argument("build_liouvillian: H and V must be hermitian");

  SuperOp out;
  out.dim = n;
  out.theta = Matrix::Zero(n * n, n * n);
  for (int m = 0; m < n; ++m) {
    for (int nn = 0; nn < n; ++nn) {
      const int row = m * n + nn;
      for (int j = 0; j < n; ++j) out.theta(row, j * n + nn) += h.entries(m, j);
      for (int k = 0; k < n; ++k) out.theta(row, m * n + k) -= h.entries(k, nn);
      if (include_v) {
        for (int j = 0; j < n; ++j) out.theta(row, j * n + nn) -= v.entries(m, j);
      }
    }
  }
  return out;
}

Matrix series_evolve(const SuperOp& theta, const Matrix& rho0, double t, int order) {
  if (order < 1) throw std::invalid_argument("series_evolve: order must be >= 1");
  Eigen::VectorXcd term = vectorize(rho0);
  Eigen::VectorXcd acc = term;
  for (int j = 1; j <= order; ++j) {
    term = (kI * t / double(j)) * (theta.theta * term);
    acc += term;
  }
  return unvectorize(acc, theta.dim);
}

Matrix conjugation_evolve(const FockMatrix& h, const Matrix& rho0, double t) {
  const Matrix u = hermitian_exp(h.entries, kI * t);
  return u * rho0 * u.adjoint();
}

Matrix parity_divergence(const Matrix& x, int dim) {
  if (x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("parity_divergence: dimension mismatch");
  const Matrix p = materialize(momentum_poly(), dim).entries;
  return 0.5 * (p * x + x * p);
}

NormalPoly velocity_operator(const NormalPoly& h) {
  return kI * (delta_deriv(h, Var::A) - delta_deriv(hermitian_conjugate(h), Var::ADag));
}

Matrix current(const NormalPoly& h, const Matrix& rho, int dim) {
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("current: dimension mismatch");
  const NormalPoly v = velocity_operator(h);
  if (v.is_zero()) return Matrix::Zero(dim, dim);
  return materialize(v, dim).entries * rho;
}

DiagReport continuity_residual(const NormalPoly& h, const Matrix& rho, int dim) {
  const FockMatrix hm = materialize(h, dim);
  const Matrix lhs = von_neumann_rhs(hm, rho);
  const Matrix rhs = -parity_divergence(current(h, rho, dim), dim);

  const NormalPoly vc = covariant_velocity(h);
  const FockMatrix vm = materialize(vc, dim);
  const SuperOp theta = build_liouvillian(hm, vm, true);
  const Matrix factored = kI * theta.apply(rho);

  DiagReport r;
  r.mode = "continuity";
  r.dim = dim;
  r.exact_upto = dim - 2 - h.max_total_degree();
  r.residual = lhs - rhs;
  r.terms["lhs_norm"] = max_abs(lhs);
  r.terms["rhs_norm"] = max_abs(rhs);
  r.terms["continuity_gap"] = FockMatrix(lhs - rhs, r.exact_upto).exact_block_max();
  r.terms["factorization_gap"] = FockMatrix(factored - rhs, r.exact_upto).exact_block_max();
  r.residual_norm = r.terms["continuity_gap"];
  return r;
}

DiagReport gauss_boundary_check(const NormalPoly& h, int levels, double half_width, int nodes) {
  if (half_width < 6.0) throw std::invalid_argument("gauss_boundary_check: need L >= 6");
  if (nodes < 512) throw std::invalid_argument("gauss_boundary_check: need at least 512 nodes");
  if (levels < 0) throw std::invalid_argument("gauss_boundary_check: negative level");

  const NormalPoly v = velocity_operator(h);
  const int deg_v = v.is_zero() ? 0 : v.max_total_degree();
  // Gaussian tails must be negligible at the endpoints for every level
  // the current can reach.
  const double reach = std::sqrt(2.0 * (levels + deg_v) + 3.0) + 2.5;
  if (half_width < reach)
    throw std::invalid_argument("gauss_boundary_check: L too small for the requested levels");

  const int top = levels + deg_v;
  const int mat_dim = std::max(top + 2, h.max_total_degree() + 2);
  const Matrix vm = v.is_zero() ? Matrix::Zero(mat_dim, mat_dim)
                                : materialize(v, mat_dim).entries;

  std::vector<double> psi_plus(top + 1), psi_minus(top + 1);
  for (int k = 0; k <= top; ++k) {
    psi_plus[k] = hermite_function(k, half_width);
    psi_minus[k] = hermite_function(k, -half_width);
  }

  // (i) outward-oriented endpoint currents psi_k (v psi_j)
  double boundary_max = 0.0;
  for (int k = 0; k <= levels; ++k) {
    for (int j = 0; j <= levels; ++j) {
      Complex vp(0.0, 0.0), vmn(0.0, 0.0);
      for (int i = 0; i <= top; ++i) {
        vp += vm(i, j) * psi_plus[i];
        vmn += vm(i, j) * psi_minus[i];
      }
      const double b = std::abs(psi_plus[k] * vp - psi_minus[k] * vmn);
      boundary_max = std::max(boundary_max, b);
    }
  }

  // (ii) volume integral of the generator image against the boundary term
  const int theta_dim = levels + 1 + std::max(h.max_total_degree(), 1);
  const FockMatrix hm = materialize(h, theta_dim);
  const FockMatrix vcm = materialize(covariant_velocity(h), theta_dim);
  const SuperOp theta = build_liouvillian(hm, vcm, true);

  const Quadrature quad = gauss_legendre(nodes, -half_width, half_width);
  std::vector<double> psi_integral(theta_dim, 0.0);
  for (int k = 0; k < theta_dim; ++k) {
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) acc += quad.weights[i] * hermite_function(k, quad.nodes[i]);
    psi_integral[k] = acc;
  }
  std::vector<double> psi_jump(theta_dim);
  for (int k = 0; k < theta_dim; ++k)
    psi_jump[k] = hermite_function(k, half_width) - hermite_function(k, -half_width);

  double lhs_max = 0.0, rhs_max = 0.0, gap_max = 0.0;
  const int n = theta.dim;
  for (int m = 0; m <= levels; ++m) {
    for (int nn = 0; nn <= levels; ++nn) {
      for (int j = 0; j <= levels; ++j) {
        Complex lhs(0.0, 0.0), rhs(0.0, 0.0);
        for (int k = 0; k < n; ++k) {
          const Complex t = theta.theta(m * n + nn, j * n + k);
          lhs += t * psi_integral[k];
          rhs -= t * psi_jump[k];
        }
        lhs_max = std::max(lhs_max, std::abs(lhs));
        rhs_max = std::max(rhs_max, std::abs(rhs));
        gap_max = std::max(gap_max, std::abs(lhs - rhs));
      }
    }
  }

  DiagReport r;
  r.mode = "gauss-boundary";
  r.dim = levels;
  r.terms["boundary_current_max"] = boundary_max;
  r.terms["volume_side_max"] = lhs_max;
  r.terms["boundary_side_max"] = rhs_max;
  r.terms["gauss_gap"] = gap_max;
  r.residual_norm = gap_max;
  return r;
}

}  // namespace fockalg
