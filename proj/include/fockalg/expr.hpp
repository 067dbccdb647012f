#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fockalg/poly.hpp"

namespace fockalg {

/// Term tree over the atoms {a, a+, q, p} and complex scalars, closed under
/// sum, product, non-negative integer power, commutator and conjugation.
/// Immutable; cheap to copy (shared nodes).
class OpExpr {
 public:
  enum class Kind { Atom, Scalar, Sum, Prod, Pow, Commutator, Conjugate };
  enum class Atom { A, ADag, Q, P };

  static OpExpr atom(Atom a);
  static OpExpr a() { return atom(Atom::A); }
  static OpExpr ad() { return atom(Atom::ADag); }
  static OpExpr position() { return atom(Atom::Q); }
  static OpExpr momentum() { return atom(Atom::P); }
  static OpExpr scalar(Complex c);
  static OpExpr sum(std::vector<OpExpr> children);
  static OpExpr prod(std::vector<OpExpr> children);
  static OpExpr pow(OpExpr base, int exponent);
  static OpExpr commutator(OpExpr lhs, OpExpr rhs);
  static OpExpr conjugate(OpExpr inner);

  Kind kind() const;
  Atom atom_value() const;
  Complex scalar_value() const;
  const std::vector<OpExpr>& children() const;
  int exponent() const;

 private:
  struct Node;
  explicit OpExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluates the tree to the canonical normal-ordered form under the
/// relation a a+ = q a+ a + 1. Expressions containing q/p atoms are
/// rejected for q != 1 (the deformed p-q conversion is undefined).
NormalPoly normal_order(const OpExpr& expr, QParam q = QParam());

/// Substitution a = (q + ip)/sqrt(2), a+ = (q - ip)/sqrt(2) applied to a
/// normal polynomial, producing a q/p expression tree.
OpExpr to_pq(const NormalPoly& p);

/// Inverse substitution q = (a+ + a)/sqrt(2), p = (a - a+)/(sqrt(2) i);
/// from_pq(to_pq(x)) == x up to roundoff.
NormalPoly from_pq(const OpExpr& expr);

/// Canonical text form in the CLI grammar. Conjugate nodes have no
/// surface syntax and are rejected.
std::string to_string(const OpExpr& expr);

/// Structural equality of trees (used by the parser round-trip tests).
bool structurally_equal(const OpExpr& x, const OpExpr& y);

}  // namespace fockalg
