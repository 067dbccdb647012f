#include "fockalg/dynamics.hpp"

#include <cmath>

namespace fockalg {

namespace {
const Complex kI(0.0, 1.0);
}

HamiltonianSpec::HamiltonianSpec(NormalPoly p, std::optional<double> w)
    : poly(std::move(p)), omega(w) {
  if (hermitian_conjugate(poly) != poly)
    throw std::invalid_argument("HamiltonianSpec: polynomial is not hermitian");
}

HamiltonianSpec free_hamiltonian(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("free_hamiltonian: omega must be > 0");
  NormalPoly h = NormalPoly::monomial(1, 1, omega) + NormalPoly::scalar(0.5 * omega);
  return HamiltonianSpec(std::move(h), omega);
}

StateVec evolve_state(const HamiltonianSpec& h, const StateVec& phi, double time,
                      EvolutionMode mode, int dim) {
  if (phi.size() != dim) throw std::invalid_argument("evolve_state: state size mismatch");
  if (mode == EvolutionMode::Real && std::abs(phi.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("evolve_state: real mode needs a unit state");
  const Matrix hm = materialize(h.poly, dim).entries;
  const Complex scale = mode == EvolutionMode::Real ? kI * time : Complex(-time, 0.0);
  return hermitian_exp(hm, scale) * phi;
}

std::vector<Complex> ou_evolve(const std::vector<Complex>& c, double omega, double tau) {
  if (!(omega > 0.0)) throw std::invalid_argument("ou_evolve: omega must be > 0");
  if (tau < 0.0) throw std::invalid_argument("ou_evolve: tau must be >= 0");
  std::vector<Complex> out(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    out[n] = c[n] * std::exp(-omega * (double(n) + 0.5) * tau);
  }
  return out;
}

FockMatrix heisenberg_evolve(const HamiltonianSpec& h, const FockMatrix& a, double t) {
  const int dim = a.dim();
  const Matrix hm = materialize(h.poly, dim).entries;
  const Matrix u = hermitian_exp(hm, -kI * t);
  return FockMatrix(u.adjoint() * a.entries * u, -1);
}

NormalPoly heisenberg_rhs(const NormalPoly& h, const NormalPoly& a) {
  return kI * commutator(h, a);
}

HamiltonRhs hamilton_rhs(const NormalPoly& h) {
  return HamiltonRhs{-kI * delta_deriv(h, Var::ADag), kI * delta_deriv(h, Var::A)};
}

HamiltonRhs hamilton_rhs_literal(const NormalPoly& h) {
  return HamiltonRhs{-kI * delta_deriv(h, Var::A), kI * delta_deriv(h, Var::ADag)};
}

std::vector<double> energy_series(const HamiltonianSpec& h, const StateVec& phi0,
                                  const std::vector<double>& times, int dim) {
  if (phi0.size() != dim) throw std::invalid_argument("energy_series: state size mismatch");
  const Matrix hm = materialize(h.poly, dim).entries;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hm);
  const StateVec modal = eig.eigenvectors().adjoint() * phi0;
  std::vector<double> energies;
  energies.reserve(times.size());
  for (double t : times) {
    StateVec evolved(modal.size());
    for (int i = 0; i < modal.size(); ++i)
      evolved(i) = std::exp(kI * t * eig.eigenvalues()(i)) * modal(i);
    const StateVec phi = eig.eigenvectors() * evolved;
    energies.push_back((phi.adjoint() * hm * phi)(0, 0).real());
  }
  return energies;
}

ActionOperator action_operator(double omega, double t, double energy, int dim) {
  if (!(omega > 0.0)) throw std::invalid_argument("action_operator: omega must be > 0");
  const Matrix a = annihilation_op(dim).entries;
  const Matrix a2 = a * a;
  const Complex rot = std::exp(-2.0 * kI * omega * t);
  Matrix s = (rot * a2 - std::conj(rot) * a2.adjoint()) / (4.0 * kI);
  s += (Complex(-energy * t, 0.0) + 1.0 / (2.0 * kI)) * Matrix::Identity(dim, dim);
  FockMatrix fm(std::move(s), dim - 3);
  return ActionOperator{std::move(fm), energy, t};
}

NormalPoly lagrangian_density(const NormalPoly& h, const NormalPoly& adot,
                              const NormalPoly& adagdot) {
  const NormalPoly lhs =
      NormalPoly::annihilator() * adot - NormalPoly::creator() * adagdot;
  return lhs * (1.0 / (2.0 * kI)) - h;
}

DiagReport euler_lagrange_residual(const NormalPoly& h) {
  const NormalPoly a = NormalPoly::annihilator();
  const NormalPoly ad = NormalPoly::creator();
  const HamiltonRhs adopted = hamilton_rhs(h);
  const HamiltonRhs literal = hamilton_rhs_literal(h);

  DiagReport r;
  r.mode = "euler-lagrange";
  r.dim = 32;
  r.polys["residual_a"] = adopted.da_dt - heisenberg_rhs(h, a);
  r.polys["residual_adag"] = adopted.dadag_dt - heisenberg_rhs(h, ad);
  r.polys["literal_residual_a"] = literal.da_dt - heisenberg_rhs(h, a);
  r.polys["literal_residual_adag"] = literal.dadag_dt - heisenberg_rhs(h, ad);

  double worst = 0.0;
  int exact = r.dim - 1;
  for (const auto& [name, poly] : r.polys) {
    const FockMatrix m = materialize(poly, r.dim);
    const double norm = m.exact_block_max();
    r.terms[name] = norm;
    exact = std::min(exact, m.exact_upto);
    if (name.rfind("literal", 0) != 0) worst = std::max(worst, norm);
  }
  r.residual_norm = worst;
  r.exact_upto = exact;
  r.residual = materialize(r.polys["residual_a"], r.dim).entries;
  return r;
}

DiagReport hj_residual(double omega, double t, int dim) {
  if (!(omega > 0.0)) throw std::invalid_argument("hj_residual: omega must be > 0");
  const double h = 1e-5;  // second-order central difference
  const double energy = 0.5 * omega;  // ground state reference
  const Matrix s_plus = action_operator(omega, t + h, energy, dim).s.entries;
  const Matrix s_minus = action_operator(omega, t - h, energy, dim).s.entries;
  const Matrix ds_dt = (s_plus - s_minus) / (2.0 * h);

  const HamiltonianSpec h0 = free_hamiltonian(omega);
  const Matrix hm = materialize(h0.poly, dim).entries;
  const Matrix vm = materialize(covariant_velocity(h0.poly), dim).entries;
  const Matrix residual = ds_dt - vm + hm;

  DiagReport r;
  r.mode = "hamilton-jacobi";
  r.dim = dim;
  r.exact_upto = dim - 3;
  r.residual = residual;
  r.terms["ds_dt_norm"] = FockMatrix(ds_dt, r.exact_upto).exact_block_max();
  r.terms["covariant_norm"] = FockMatrix(vm, r.exact_upto).exact_block_max();
  r.terms["hamiltonian_norm"] = FockMatrix(hm, r.exact_upto).exact_block_max();
  r.residual_norm = FockMatrix(residual, r.exact_upto).exact_block_max();
  return r;
}

NormalPoly covariant_velocity(const NormalPoly& h) {
  const NormalPoly raw = (delta_deriv(h, Var::A) * NormalPoly::annihilator() +
                          NormalPoly::creator() * delta_deriv(h, Var::ADag)) *
                         Complex(0.5, 0.0);
  return (raw + hermitian_conjugate(raw)) * Complex(0.5, 0.0);
}

double semigroup_check(const HamiltonianSpec& h, double t, double T, int dim) {
  if (t < 0.0 || t > T) throw std::invalid_argument("semigroup_check: need 0 <= t <= T");
  const Matrix hm = materialize(h.poly, dim).entries;
  const Matrix whole = hermitian_exp(hm, Complex(-T, 0.0));
  const Matrix split =
      hermitian_exp(hm, Complex(-t, 0.0)) * hermitian_exp(hm, Complex(-(T - t), 0.0));
  return max_abs(whole - split);
}

NormalPoly clark_ocone_residual(const NormalPoly& h, Complex lambda) {
  NormalPoly reconstruction = delta_integral(delta_deriv(h, Var::A), Var::A) +
                              delta_integral(delta_deriv(h, Var::ADag), Var::ADag) +
                              NormalPoly::scalar(lambda);
  return h - reconstruction;
}

}  // namespace fockalg
