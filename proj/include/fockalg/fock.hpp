#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fockalg/poly.hpp"

namespace fockalg {

using Matrix = Eigen::MatrixXcd;
using StateVec = Eigen::VectorXcd;

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = 1e-12);

/// Dense realization of an operator on the N-level truncated Fock space.
/// exact_upto is the largest basis index whose rows and columns carry the
/// untruncated operator values; -1 means no guarantee.
struct FockMatrix {
  Matrix entries;
  int exact_upto = -1;
  bool hermitian_tag = false;
  bool unitary_tag = false;

  FockMatrix() = default;
  FockMatrix(Matrix m, int exact) : entries(std::move(m)), exact_upto(exact) {}

  int dim() const { return static_cast<int>(entries.rows()); }

  /// Verified advisory tags; throw when the matrix does not qualify.
  void tag_hermitian();
  void tag_unitary();

  /// Max-norm restricted to the guaranteed-exact block (whole matrix if
  /// no guarantee is recorded).
  double exact_block_max() const;
};

FockMatrix identity_op(int dim);
FockMatrix annihilation_op(int dim);
FockMatrix creation_op(int dim);

/// Maps a normal polynomial to its truncated matrix: a[n-1,n] = sqrt(n),
/// a+ the adjoint, monomials become products in normal order. Rejects
/// polynomials of total degree >= dim (all entries would be truncation
/// artifact). Entries with both indices <= dim-1-degree are exact.
FockMatrix materialize(const NormalPoly& p, int dim);

/// Normalized Hermite function psi_n, orthonormal on the line.
double hermite_function(int n, double x);

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [a, b].
Quadrature gauss_legendre(int n, double a, double b);

/// Positive unit-trace hermitian state. Construction validates the
/// invariants (hermitian to 1e-12, trace 1 to 1e-12, eigenvalues >= -1e-12).
struct DensityMatrix {
  Matrix rho;

  explicit DensityMatrix(Matrix m);
  static DensityMatrix pure(int level, int dim);
  int dim() const { return static_cast<int>(rho.rows()); }
};

struct GibbsState {
  DensityMatrix rho;
  double beta;
  double z;
  FockMatrix h_ref;
};

/// rho = exp(-beta H)/Z via eigendecomposition of hermitian H.
GibbsState gibbs_state(const FockMatrix& h, double beta);

/// <A,B> = Tr(A B+ rho): the state-induced scalar product on operators.
Complex gns_inner(const FockMatrix& a, const FockMatrix& b, const GibbsState& g);

/// Tr(A rho).
Complex expectation(const FockMatrix& a, const DensityMatrix& rho);

/// <phi, P psi> with P materialized at the states' dimension.
Complex matrix_element(const NormalPoly& p, const StateVec& phi, const StateVec& psi);

/// V exp(scale * Lambda) V+ for hermitian h.
Matrix hermitian_exp(const Matrix& h, Complex scale);

/// General matrix exponential (scaling and squaring).
Matrix matrix_exp(const Matrix& m);

}  // namespace fockalg
