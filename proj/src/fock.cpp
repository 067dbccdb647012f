#include "fockalg/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

namespace fockalg {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  return max_abs(m - m.adjoint().eval()) <= tol;
}

void FockMatrix::tag_hermitian() {
  if (!is_hermitian(entries, 1e-12))
    throw std::invalid_argument("FockMatrix: hermitian tag rejected");
  hermitian_tag = true;
}

void FockMatrix::tag_unitary() {
  Matrix g = entries.adjoint() * entries;
  g.diagonal().array() -= 1.0;
  if (max_abs(g) > 1e-10) throw std::invalid_argument("FockMatrix: unitary tag rejected");
  unitary_tag = true;
}

double FockMatrix::exact_block_max() const {
  if (exact_upto < 0) return max_abs(entries);
  int k = std::min(exact_upto + 1, dim());
  if (k <= 0) return 0.0;
  return max_abs(entries.topLeftCorner(k, k));
}

FockMatrix identity_op(int dim) {
  return FockMatrix(Matrix::Identity(dim, dim), dim - 1);
}

FockMatrix annihilation_op(int dim) {
  if (dim < 2) throw std::invalid_argument("annihilation_op: dim must be >= 2");
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return FockMatrix(std::move(a), dim - 1);
}

FockMatrix creation_op(int dim) {
  FockMatrix a = annihilation_op(dim);
  return FockMatrix(a.entries.adjoint(), dim - 1);
}

FockMatrix materialize(const NormalPoly& p, int dim) {
  if (dim < 2) throw std::invalid_argument("materialize: dim must be >= 2");
  const int degree = p.max_total_degree();
  if (!p.is_zero() && degree >= dim)
    throw std::invalid_argument("materialize: polynomial degree must be < dim");

  int max_m = 0, max_n = 0;
  for (const auto& [key, c] : p.terms()) {
    max_m = std::max(max_m, key.first);
    max_n = std::max(max_n, key.second);
  }
  Matrix a = annihilation_op(dim).entries;
  std::vector<Matrix> a_pow(max_n + 1), ad_pow(max_m + 1);
  a_pow[0] = Matrix::Identity(dim, dim);
  for (int k = 1; k <= max_n; ++k) a_pow[k] = a_pow[k - 1] * a;
  ad_pow[0] = Matrix::Identity(dim, dim);
  Matrix ad = a.adjoint();
  for (int k = 1; k <= max_m; ++k) ad_pow[k] = ad_pow[k - 1] * ad;

  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [key, c] : p.terms()) out += c * (ad_pow[key.first] * a_pow[key.second]);
  return FockMatrix(std::move(out), dim - 1 - degree);
}

double hermite_function(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_function: negative level");
  const double psi0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return psi0;
  double prev = psi0;
  double cur = std::numbers::sqrt2 * x * psi0;
  for (int k = 2; k <= n; ++k) {
    double next = std::sqrt(2.0 / k) * x * cur - std::sqrt(double(k - 1) / k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Quadrature gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    q.nodes[i] = mid - half * x;
    q.nodes[n - 1 - i] = mid + half * x;
    q.weights[i] = half * w;
    q.weights[n - 1 - i] = half * w;
  }
  return q;
}

DensityMatrix::DensityMatrix(Matrix m) : rho(std::move(m)) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("DensityMatrix: not square");
  if (!is_hermitian(rho, 1e-12)) throw std::invalid_argument("DensityMatrix: not hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-12)
    throw std::invalid_argument("DensityMatrix: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-12)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(int level, int dim) {
  if (level < 0 || level >= dim) throw std::invalid_argument("DensityMatrix: level out of range");
  Matrix m = Matrix::Zero(dim, dim);
  m(level, level) = 1.0;
  return DensityMatrix(std::move(m));
}

GibbsState gibbs_state(const FockMatrix& h, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("gibbs_state: beta must be > 0");
  const double scale = std::max(1.0, max_abs(h.entries));
  if (max_abs(h.entries - h.entries.adjoint().eval()) > 1e-10 * scale)
    throw std::invalid_argument("gibbs_state: Hamiltonian must be hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(h.entries);
  const auto& lambda = eig.eigenvalues();
  const double lmin = lambda.minCoeff();

  double z = 0.0;
  Eigen::VectorXd w(lambda.size());
  double wsum = 0.0;
  for (int i = 0; i < lambda.size(); ++i) {
    z += std::exp(-beta * lambda(i));
    w(i) = std::exp(-beta * (lambda(i) - lmin));  // overflow-safe weights
    wsum += w(i);
  }
  if (!(z > 0.0)) throw std::runtime_error("gibbs_state: partition value underflowed");
  w /= wsum;

  Matrix rho = eig.eigenvectors() * w.asDiagonal() * eig.eigenvectors().adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());
  rho /= rho.trace().real();  // renormalize the trace exactly once
  return GibbsState{DensityMatrix(std::move(rho)), beta, z, h};
}

Complex gns_inner(const FockMatrix& a, const FockMatrix& b, const GibbsState& g) {
  if (a.dim() != b.dim() || a.dim() != g.rho.dim())
    throw std::invalid_argument("gns_inner: dimension mismatch");
  return (a.entries * b.entries.adjoint() * g.rho.rho).trace();
}

Complex expectation(const FockMatrix& a, const DensityMatrix& rho) {
  if (a.dim() != rho.dim()) throw std::invalid_argument("expectation: dimension mismatch");
  return (a.entries * rho.rho).trace();
}

Complex matrix_element(const NormalPoly& p, const StateVec& phi, const StateVec& psi) {
  if (phi.size() != psi.size()) throw std::invalid_argument("matrix_element: dimension mismatch");
  const int dim = static_cast<int>(phi.size());
  if (p.is_zero()) return Complex(0.0, 0.0);
  return phi.adjoint() * materialize(p, dim).entries * psi;
}

Matrix hermitian_exp(const Matrix& h, Complex scale) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  Eigen::VectorXcd d(eig.eigenvalues().size());
  for (int i = 0; i < d.size(); ++i) d(i) = std::exp(scale * eig.eigenvalues()(i));
  return eig.eigenvectors() * d.asDiagonal() * eig.eigenvectors().adjoint();
}

Matrix matrix_exp(const Matrix& m) { return m.exp(); }

}  // namespace fockalg
