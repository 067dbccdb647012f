#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace fockalg {

using Complex = std::complex<double>;

/// Deformation parameter of the commutation relation a a+ = q a+ a + 1.
/// q = 1 is the canonical bosonic case.
struct QParam {
  double value = 1.0;

  QParam() = default;
  explicit QParam(double q) : value(q) {
    if (!(q > 0.0)) throw std::invalid_argument("QParam: q must be > 0");
  }
  bool deformed() const { return value != 1.0; }
};

/// Differentiation / integration variable of the delta calculus.
enum class Var { A, ADag };

// (creation power m, annihilation power n) for normal-ordered monomials,
// (annihilation power n, creation power m) for anti-normal ones.
using MonomialKey = std::pair<int, int>;

/// Polynomial in normal order: sum of c_{m,n} (a+)^m a^n.
///
/// Canonical form: no zero coefficients are stored and every key appears
/// once, so operator== decides algebraic equality. All coefficients are
/// finite complex doubles; ordering words of length <= 16 stays inside
/// the exact integer range of a double.
class NormalPoly {
 public:
  NormalPoly() = default;

  static NormalPoly scalar(Complex c);
  static NormalPoly monomial(int m, int n, Complex c = Complex(1.0, 0.0));
  static NormalPoly annihilator() { return monomial(0, 1); }
  static NormalPoly creator() { return monomial(1, 0); }

  const std::map<MonomialKey, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest m+n over stored monomials; 0 for the zero polynomial.
  int max_total_degree() const;

  Complex coeff(int m, int n) const;
  void add_term(int m, int n, Complex c);

  NormalPoly& operator+=(const NormalPoly& rhs);
  NormalPoly& operator-=(const NormalPoly& rhs);
  NormalPoly& operator*=(Complex c);

  friend NormalPoly operator+(NormalPoly lhs, const NormalPoly& rhs) { return lhs += rhs; }
  friend NormalPoly operator-(NormalPoly lhs, const NormalPoly& rhs) { return lhs -= rhs; }
  friend NormalPoly operator-(NormalPoly p) { return p *= Complex(-1.0, 0.0); }
  friend NormalPoly operator*(NormalPoly p, Complex c) { return p *= c; }
  friend NormalPoly operator*(Complex c, NormalPoly p) { return p *= c; }
  friend NormalPoly operator*(const NormalPoly& lhs, const NormalPoly& rhs);

  bool operator==(const NormalPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const NormalPoly& rhs) const { return !(*this == rhs); }

 private:
  std::map<MonomialKey, Complex> terms_;
};

/// Polynomial in anti-normal order: sum of c_{n,m} a^n (a+)^m.
class AntiNormalPoly {
 public:
  AntiNormalPoly() = default;

  static AntiNormalPoly monomial(int n, int m, Complex c = Complex(1.0, 0.0));

  const std::map<MonomialKey, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex coeff(int n, int m) const;
  void add_term(int n, int m, Complex c);

  AntiNormalPoly& operator+=(const AntiNormalPoly& rhs);
  AntiNormalPoly& operator*=(Complex c);

  bool operator==(const AntiNormalPoly& rhs) const { return terms_ == rhs.terms_; }

 private:
  std::map<MonomialKey, Complex> terms_;
};

/// Normal product of two normal-ordered polynomials under a a+ = q a+ a + 1.
NormalPoly normal_product(const NormalPoly& x, const NormalPoly& y, QParam q = QParam());

/// Rewrites with all annihilators to the left, using a+ a = (a a+ - 1)/q.
AntiNormalPoly anti_normal_order(const NormalPoly& p, QParam q = QParam());

/// Inverse rewriting; normal_order(anti_normal_order(p)) == p.
NormalPoly normal_order(const AntiNormalPoly& p, QParam q = QParam());

/// Word reversal with a <-> a+ and conjugated coefficients. An involution
/// and an anti-homomorphism: (xy)+ = y+ x+.
NormalPoly hermitian_conjugate(const NormalPoly& p);

/// normal_order(x y - y x) under the q-deformed relation.
NormalPoly commutator(const NormalPoly& x, const NormalPoly& y, QParam q = QParam());

/// Delta derivative: d/da acts on the normal representative by
/// (a+)^m a^n -> n (a+)^m a^{n-1}; d/da+ acts on the anti-normal one by
/// a^n (a+)^m -> m a^n (a+)^{m-1}. Both maps are evaluated through their
/// closed forms on normal monomials, which keeps integer coefficients exact.
NormalPoly delta_deriv(const NormalPoly& p, Var wrt);

/// Delta integral, the right inverse of delta_deriv for the same variable:
/// delta_deriv(delta_integral(p, v), v) == p with exact coefficients for
/// monomial powers <= 10.
NormalPoly delta_integral(const NormalPoly& p, Var wrt);

/// Canonical text form, parseable by the expression grammar.
std::string to_string(const NormalPoly& p);

/// Componentwise max coefficient distance (for tolerant comparisons).
double max_coeff_distance(const NormalPoly& x, const NormalPoly& y);

}  // namespace fockalg
