#pragma once

#include <optional>
#include <vector>

#include "fockalg/fock.hpp"
#include "fockalg/report.hpp"

namespace fockalg {

/// Self-adjoint generator of the evolution. Construction requires the
/// polynomial to equal its conjugate exactly (coefficient-level check).
struct HamiltonianSpec {
  NormalPoly poly;
  std::optional<double> omega;

  explicit HamiltonianSpec(NormalPoly p, std::optional<double> w = std::nullopt);
};

/// omega (a+ a + 1/2), the free oscillator.
HamiltonianSpec free_hamiltonian(double omega);

enum class EvolutionMode { Real, Euclidean };

/// Real mode: phi -> exp(i t H) phi (norm preserving). Euclidean mode:
/// phi -> exp(-tau H) phi, the contraction semigroup.
StateVec evolve_state(const HamiltonianSpec& h, const StateVec& phi, double time,
                      EvolutionMode mode, int dim);

/// Spectral form of the Euclidean flow: c_n -> exp(-omega (n + 1/2) tau) c_n.
std::vector<Complex> ou_evolve(const std::vector<Complex>& c, double omega, double tau);

/// A(t) = U+ A U with U = exp(-i t H), so that dA/dt = i [H, A].
FockMatrix heisenberg_evolve(const HamiltonianSpec& h, const FockMatrix& a, double t);

/// i [H, A], symbolically.
NormalPoly heisenberg_rhs(const NormalPoly& h, const NormalPoly& a);

struct HamiltonRhs {
  NormalPoly da_dt;
  NormalPoly dadag_dt;
};

/// Hamilton form of the equations of motion with the pairing that
/// reproduces the Heisenberg flow: da/dt = -i dH/da+, da+/dt = i dH/da.
HamiltonRhs hamilton_rhs(const NormalPoly& h);

/// The unswapped pairing (da/dt = -i dH/da) kept for comparison; it does
/// not match the Heisenberg flow in general.
HamiltonRhs hamilton_rhs_literal(const NormalPoly& h);

/// <phi(t), H phi(t)> along the real-time flow for each requested time.
std::vector<double> energy_series(const HamiltonianSpec& h, const StateVec& phi0,
                                  const std::vector<double>& times, int dim);

/// S_t = (a(t)^2 - a+(t)^2)/(4i) - E t + 1/(2i) with a(t) = exp(-i omega t) a.
struct ActionOperator {
  FockMatrix s;
  double energy;
  double time;
};
ActionOperator action_operator(double omega, double t, double energy, int dim);

/// (1/2i)(a adot - a+ adagdot) - H, with the supplied time derivatives
/// treated as independent polynomials.
NormalPoly lagrangian_density(const NormalPoly& h, const NormalPoly& adot,
                              const NormalPoly& adagdot);

/// Compares the Hamilton-form equations of motion against the Heisenberg
/// commutator, for both the adopted and the unswapped pairing. Reports the
/// symbolic residuals and their materialized norms at dim 32; nothing is
/// asserted.
DiagReport euler_lagrange_residual(const NormalPoly& h);

/// Finite-difference dS/dt against the covariant correction and H for the
/// free oscillator. Reporting only.
DiagReport hj_residual(double omega, double t, int dim);

/// (1/2)(dH/da a + a+ dH/da+), symmetrized to make it exactly self-adjoint.
NormalPoly covariant_velocity(const NormalPoly& h);

/// max-norm of exp(-T H) - exp(-t H) exp(-(T-t) H).
double semigroup_check(const HamiltonianSpec& h, double t, double T, int dim);

/// H - [int dH/da da + int dH/da+ da+ + lambda]. The reconstruction gap of
/// the mean-value identity; returned symbolically.
NormalPoly clark_ocone_residual(const NormalPoly& h, Complex lambda);

}  // namespace fockalg
