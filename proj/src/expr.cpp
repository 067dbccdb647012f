#include "fockalg/expr.hpp"

#include <cmath>
#include <numbers>

namespace fockalg {

struct OpExpr::Node {
  Kind kind;
  Atom atom = Atom::A;
  Complex value{0.0, 0.0};
  int exponent = 0;
  std::vector<OpExpr> children;
};

OpExpr OpExpr::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = a;
  return OpExpr(std::move(n));
}

OpExpr OpExpr::scalar(Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw std::invalid_argument("OpExpr: non-finite scalar");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scalar;
  n->value = c;
  return OpExpr(std::move(n));
}

OpExpr OpExpr::sum(std::vector<OpExpr> children) {
  if (children.empty()) return scalar(Complex(0.0, 0.0));
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(children);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::prod(std::vector<OpExpr> children) {
  if (children.empty()) return scalar(Complex(1.0, 0.0));
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->children = std::move(children);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::pow(OpExpr base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("OpExpr: negative power");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = exponent;
  n->children = {std::move(base)};
  return OpExpr(std::move(n));
}

OpExpr OpExpr::commutator(OpExpr lhs, OpExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Commutator;
  n->children = {std::move(lhs), std::move(rhs)};
  return OpExpr(std::move(n));
}

OpExpr OpExpr::conjugate(OpExpr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Conjugate;
  n->children = {std::move(inner)};
  return OpExpr(std::move(n));
}

OpExpr::Kind OpExpr::kind() const { return node_->kind; }
OpExpr::Atom OpExpr::atom_value() const { return node_->atom; }
Complex OpExpr::scalar_value() const { return node_->value; }
const std::vector<OpExpr>& OpExpr::children() const { return node_->children; }
int OpExpr::exponent() const { return node_->exponent; }

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

NormalPoly eval(const OpExpr& e, QParam q) {
  switch (e.kind()) {
    case OpExpr::Kind::Atom:
      switch (e.atom_value()) {
        case OpExpr::Atom::A:
          return NormalPoly::annihilator();
        case OpExpr::Atom::ADag:
          return NormalPoly::creator();
        case OpExpr::Atom::Q: {
          if (q.deformed())
            throw std::invalid_argument("normal_order: q/p atoms undefined for deformed q != 1");
          NormalPoly p = NormalPoly::creator() + NormalPoly::annihilator();
          return p * Complex(kInvSqrt2, 0.0);
        }
        case OpExpr::Atom::P: {
          if (q.deformed())
            throw std::invalid_argument("normal_order: q/p atoms undefined for deformed q != 1");
          // p = (a - a+)/(sqrt(2) i)
          NormalPoly p = NormalPoly::annihilator() - NormalPoly::creator();
          return p * Complex(0.0, -kInvSqrt2);
        }
      }
      throw std::logic_error("unreachable");
    case OpExpr::Kind::Scalar:
      return NormalPoly::scalar(e.scalar_value());
    case OpExpr::Kind::Sum: {
      NormalPoly acc;
      for (const auto& c : e.children()) acc += eval(c, q);
      return acc;
    }
    case OpExpr::Kind::Prod: {
      NormalPoly acc = NormalPoly::scalar(Complex(1.0, 0.0));
      for (const auto& c : e.children()) acc = normal_product(acc, eval(c, q), q);
      return acc;
    }
    case OpExpr::Kind::Pow: {
      NormalPoly base = eval(e.children().front(), q);
      NormalPoly acc = NormalPoly::scalar(Complex(1.0, 0.0));
      for (int i = 0; i < e.exponent(); ++i) acc = normal_product(acc, base, q);
      return acc;
    }
    case OpExpr::Kind::Commutator:
      return commutator(eval(e.children()[0], q), eval(e.children()[1], q), q);
    case OpExpr::Kind::Conjugate:
      return hermitian_conjugate(eval(e.children().front(), q));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

NormalPoly normal_order(const OpExpr& expr, QParam q) { return eval(expr, q); }

OpExpr to_pq(const NormalPoly& p) {
  // a = (q + ip)/sqrt(2), a+ = (q - ip)/sqrt(2)
  OpExpr a_pq = OpExpr::prod(
      {OpExpr::scalar(Complex(kInvSqrt2, 0.0)),
       OpExpr::sum({OpExpr::position(),
                    OpExpr::prod({OpExpr::scalar(Complex(0.0, 1.0)), OpExpr::momentum()})})});
  OpExpr ad_pq = OpExpr::prod(
      {OpExpr::scalar(Complex(kInvSqrt2, 0.0)),
       OpExpr::sum({OpExpr::position(),
                    OpExpr::prod({OpExpr::scalar(Complex(0.0, -1.0)), OpExpr::momentum()})})});

  std::vector<OpExpr> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [m, n] = it->first;
    std::vector<OpExpr> factors{OpExpr::scalar(it->second)};
    if (m == 1) factors.push_back(ad_pq);
    if (m > 1) factors.push_back(OpExpr::pow(ad_pq, m));
    if (n == 1) factors.push_back(a_pq);
    if (n > 1) factors.push_back(OpExpr::pow(a_pq, n));
    terms.push_back(OpExpr::prod(std::move(factors)));
  }
  return OpExpr::sum(std::move(terms));
}

NormalPoly from_pq(const OpExpr& expr) { return normal_order(expr, QParam()); }

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string format_complex(Complex c) {
  std::string s = "(" + format_real(c.real());
  s += std::signbit(c.imag()) ? "-" : "+";
  s += format_real(std::abs(c.imag())) + "i)";
  return s;
}

void print(const OpExpr& e, std::string& out, bool parenthesize_sum) {
  switch (e.kind()) {
    case OpExpr::Kind::Atom:
      switch (e.atom_value()) {
        case OpExpr::Atom::A: out += "a"; return;
        case OpExpr::Atom::ADag: out += "ad"; return;
        case OpExpr::Atom::Q: out += "q"; return;
        case OpExpr::Atom::P: out += "p"; return;
      }
      return;
    case OpExpr::Kind::Scalar:
      out += format_complex(e.scalar_value());
      return;
    case OpExpr::Kind::Sum: {
      if (parenthesize_sum) out += "(";
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out += " + ";
        first = false;
        print(c, out, false);
      }
      if (parenthesize_sum) out += ")";
      return;
    }
    case OpExpr::Kind::Prod: {
      bool first = true;
      for (const auto& c : e.children()) {
        if (!first) out += "*";
        first = false;
        print(c, out, true);
      }
      return;
    }
    case OpExpr::Kind::Pow: {
      const OpExpr& base = e.children().front();
      if (base.kind() == OpExpr::Kind::Atom) {
        print(base, out, true);
      } else {
        out += "(";
        print(base, out, false);
        out += ")";
      }
      out += "^" + std::to_string(e.exponent());
      return;
    }
    case OpExpr::Kind::Commutator:
      out += "[";
      print(e.children()[0], out, false);
      out += ",";
      print(e.children()[1], out, false);
      out += "]";
      return;
    case OpExpr::Kind::Conjugate:
      throw std::logic_error("to_string: conjugate nodes have no text form");
  }
}

}  // namespace

std::string to_string(const OpExpr& expr) {
  std::string out;
  print(expr, out, false);
  return out;
}

bool structurally_equal(const OpExpr& x, const OpExpr& y) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case OpExpr::Kind::Atom:
      return x.atom_value() == y.atom_value();
    case OpExpr::Kind::Scalar:
      return x.scalar_value() == y.scalar_value();
    case OpExpr::Kind::Pow:
      if (x.exponent() != y.exponent()) return false;
      [[fallthrough]];
    default: {
      if (x.children().size() != y.children().size()) return false;
      for (std::size_t i = 0; i < x.children().size(); ++i) {
        if (!structurally_equal(x.children()[i], y.children()[i])) return false;
      }
      return true;
    }
  }
}

}  // namespace fockalg
