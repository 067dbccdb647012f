#include "fockalg/poly.hpp"

#include <cmath>
#include <sstream>

namespace fockalg {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// [m]_q = 1 + q + ... + q^{m-1}. Exact for q in {0.5, 1, 2} and small m.
double q_integer(int m, double q) {
  double acc = 0.0, pw = 1.0;
  for (int i = 0; i < m; ++i) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

double q_power(int m, double q) {
  double pw = 1.0;
  for (int i = 0; i < m; ++i) pw *= q;
  return pw;
}

// Appends one annihilator on the right: (a+)^m a^n -> (a+)^m a^{n+1}.
NormalPoly shift_annihilator(const NormalPoly& p) {
  NormalPoly out;
  for (const auto& [key, c] : p.terms()) out.add_term(key.first, key.second + 1, c);
  return out;
}

// Appends one creator on the right of an anti-normal poly:
// a^n (a+)^m -> a^n (a+)^{m+1}.
AntiNormalPoly shift_creator(const AntiNormalPoly& p) {
  AntiNormalPoly out;
  for (const auto& [key, c] : p.terms()) out.add_term(key.first, key.second + 1, c);
  return out;
}

// Normal form of the word a^n (a+)^m. Recursion on the leftmost a:
//   a (a+)^m = q^m (a+)^m a + [m]_q (a+)^{m-1}
NormalPoly cross_normal(int n, int m, double q) {
  if (n == 0 || m == 0) return NormalPoly::monomial(m, n);
  NormalPoly out = shift_annihilator(cross_normal(n - 1, m, q));
  out *= Complex(q_power(m, q), 0.0);
  NormalPoly lower = cross_normal(n - 1, m - 1, q);
  lower *= Complex(q_integer(m, q), 0.0);
  out += lower;
  return out;
}

// Anti-normal form of the word (a+)^m a^n. With r = 1/q:
//   a+ a^n = r^n a^n a+ - r [n]_r a^{n-1}
AntiNormalPoly cross_anti(int m, int n, double r) {
  if (n == 0 || m == 0) return AntiNormalPoly::monomial(n, m);
  AntiNormalPoly out = shift_creator(cross_anti(m - 1, n, r));
  out *= Complex(q_power(n, r), 0.0);
  AntiNormalPoly lower = cross_anti(m - 1, n - 1, r);
  lower *= Complex(-r * q_integer(n, r), 0.0);
  out += lower;
  return out;
}

}  // namespace

NormalPoly NormalPoly::scalar(Complex c) { return monomial(0, 0, c); }

NormalPoly NormalPoly::monomial(int m, int n, Complex c) {
  if (m < 0 || n < 0) throw std::invalid_argument("NormalPoly: negative power");
  NormalPoly p;
  p.add_term(m, n, c);
  return p;
}

int NormalPoly::max_total_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

Complex NormalPoly::coeff(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void NormalPoly::add_term(int m, int n, Complex c) {
  if (m < 0 || n < 0) throw std::invalid_argument("NormalPoly: negative power");
  if (!finite(c)) throw std::invalid_argument("NormalPoly: non-finite coefficient");
  auto it = terms_.find({m, n});
  if (it == terms_.end()) {
    if (c != Complex(0.0, 0.0)) terms_.emplace(MonomialKey{m, n}, c);
    return;
  }
  it->second += c;
  if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

NormalPoly& NormalPoly::operator+=(const NormalPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

NormalPoly& NormalPoly::operator-=(const NormalPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

NormalPoly& NormalPoly::operator*=(Complex c) {
  if (!finite(c)) throw std::invalid_argument("NormalPoly: non-finite coefficient");
  if (c == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  // scaling can round a coefficient to zero
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second == Complex(0.0, 0.0) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

NormalPoly operator*(const NormalPoly& lhs, const NormalPoly& rhs) {
  return normal_product(lhs, rhs, QParam());
}

AntiNormalPoly AntiNormalPoly::monomial(int n, int m, Complex c) {
  AntiNormalPoly p;
  p.add_term(n, m, c);
  return p;
}

Complex AntiNormalPoly::coeff(int n, int m) const {
  auto it = terms_.find({n, m});
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void AntiNormalPoly::add_term(int n, int m, Complex c) {
  if (m < 0 || n < 0) throw std::invalid_argument("AntiNormalPoly: negative power");
  if (!finite(c)) throw std::invalid_argument("AntiNormalPoly: non-finite coefficient");
  auto it = terms_.find({n, m});
  if (it == terms_.end()) {
    if (c != Complex(0.0, 0.0)) terms_.emplace(MonomialKey{n, m}, c);
    return;
  }
  it->second += c;
  if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

AntiNormalPoly& AntiNormalPoly::operator+=(const AntiNormalPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

AntiNormalPoly& AntiNormalPoly::operator*=(Complex c) {
  if (!finite(c)) throw std::invalid_argument("AntiNormalPoly: non-finite coefficient");
  if (c == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second == Complex(0.0, 0.0) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

NormalPoly normal_product(const NormalPoly& x, const NormalPoly& y, QParam q) {
  NormalPoly out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      // (a+)^m1 a^n1 (a+)^m2 a^n2 = (a+)^m1 [a^n1 (a+)^m2] a^n2
      NormalPoly mid = cross_normal(kx.second, ky.first, q.value);
      Complex c = cx * cy;
      for (const auto& [km, cm] : mid.terms()) {
        out.add_term(kx.first + km.first, km.second + ky.second, c * cm);
      }
    }
  }
  return out;
}

AntiNormalPoly anti_normal_order(const NormalPoly& p, QParam q) {
  AntiNormalPoly out;
  const double r = 1.0 / q.value;
  for (const auto& [key, c] : p.terms()) {
    AntiNormalPoly w = cross_anti(key.first, key.second, r);
    w *= c;
    out += w;
  }
  return out;
}

NormalPoly normal_order(const AntiNormalPoly& p, QParam q) {
  NormalPoly out;
  for (const auto& [key, c] : p.terms()) {
    NormalPoly w = cross_normal(key.first, key.second, q.value);
    w *= c;
    out += w;
  }
  return out;
}

NormalPoly hermitian_conjugate(const NormalPoly& p) {
  // ((a+)^m a^n)+ = (a+)^n a^m, already normal ordered.
  NormalPoly out;
  for (const auto& [key, c] : p.terms()) out.add_term(key.second, key.first, std::conj(c));
  return out;
}

NormalPoly commutator(const NormalPoly& x, const NormalPoly& y, QParam q) {
  return normal_product(x, y, q) - normal_product(y, x, q);
}

NormalPoly delta_deriv(const NormalPoly& p, Var wrt) {
  // d/da+ on the anti-normal representative equals -[., a] and therefore
  // acts on normal monomials as (a+)^m a^n -> m (a+)^{m-1} a^n; evaluating
  // it this way avoids the basis change and keeps integers exact.
  NormalPoly out;
  for (const auto& [key, c] : p.terms()) {
    const auto [m, n] = key;
    if (wrt == Var::A) {
      if (n >= 1) out.add_term(m, n - 1, c * double(n));
    } else {
      if (m >= 1) out.add_term(m - 1, n, c * double(m));
    }
  }
  return out;
}

NormalPoly delta_integral(const NormalPoly& p, Var wrt) {
  NormalPoly out;
  for (const auto& [key, c] : p.terms()) {
    const auto [m, n] = key;
    if (wrt == Var::A) {
      out.add_term(m, n + 1, c / double(n + 1));
    } else {
      // Integrating c (a+)^m a^n in the anti-normal representative and
      // re-ordering gives (a+)^{m+1} a^n / (m+1) plus a pure-annihilator
      // correction: the lifted monomial's full contraction survives at
      // (0, n-m-1) whenever n >= m+1.
      out.add_term(m + 1, n, c / double(m + 1));
      if (n >= m + 1) {
        AntiNormalPoly anti = cross_anti(m + 1, n, 1.0);
        Complex full = anti.coeff(n - m - 1, 0);
        if (full != Complex(0.0, 0.0)) {
          out.add_term(0, n - m - 1, -c * full / double(m + 1));
        }
      }
    }
  }
  return out;
}

std::string to_string(const NormalPoly& p) {
  auto format_real = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  auto format_complex = [&](Complex c) {
    std::string s = "(" + format_real(c.real());
    s += c.imag() < 0.0 || std::signbit(c.imag()) ? "-" : "+";
    s += format_real(std::abs(c.imag())) + "i)";
    return s;
  };
  if (p.is_zero()) return "(0+0i)";
  std::string out;
  // highest creation power first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [m, n] = it->first;
    if (!out.empty()) out += " + ";
    out += format_complex(it->second);
    if (m == 1) out += "*ad";
    if (m > 1) out += "*ad^" + std::to_string(m);
    if (n == 1) out += "*a";
    if (n > 1) out += "*a^" + std::to_string(n);
  }
  return out;
}

double max_coeff_distance(const NormalPoly& x, const NormalPoly& y) {
  double d = 0.0;
  for (const auto& [key, c] : x.terms()) d = std::max(d, std::abs(c - y.coeff(key.first, key.second)));
  for (const auto& [key, c] : y.terms()) d = std::max(d, std::abs(c - x.coeff(key.first, key.second)));
  return d;
}

}  // namespace fockalg
