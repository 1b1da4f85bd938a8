#include "pvialg/ratfunc.hpp"

#include <cmath>

namespace pvialg {

namespace {

QPoly constant_poly(const GaussRational& c, char var) { return QPoly(c, var); }

char merge_rf_var(const RatFunc& a, const RatFunc& b) {
  char va = a.var(), vb = b.var();
  bool ca = a.is_constant(), cb = b.is_constant();
  if (!ca && !cb && va && vb && va != vb) {
    throw FieldMismatch(std::string("rational functions in different variables: ") + va + " vs " + vb);
  }
  if (!ca && va) return va;
  if (!cb && vb) return vb;
  return va ? va : vb;
}

}  // namespace

RatFunc::RatFunc(QPoly num) : num_(std::move(num)), den_(GaussRational(1), num_.var()) {}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  char v = var();
  if (num_.is_zero()) {
    num_ = QPoly(v);
    den_ = constant_poly(GaussRational(1), v);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    GcdResult g = gcd_cofactors(num_, den_);
    if (!g.gcd.is_one()) {
      num_ = std::move(g.cofactor_a);
      den_ = std::move(g.cofactor_b);
    }
  }
  if (!den_.lc().is_one()) {
    GaussRational inv = den_.lc().inverse();
    num_ *= inv;
    den_ = den_.monic();
  }
  num_.set_var(v);
  den_.set_var(v);
}

GaussRational RatFunc::constant_value() const {
  if (!is_constant()) throw AlgebraError("rational function is not constant: " + str());
  return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  char v = merge_rf_var(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ += o.num_;
    num_.set_var(v);
    if (num_.is_zero()) den_ = constant_poly(GaussRational(1), v);
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    *this = RatFunc(std::move(num_), std::move(den_));
    return *this;
  }
  GcdResult g = gcd_cofactors(den_, o.den_);
  if (g.gcd.is_one()) {
    QPoly n = num_ * o.den_ + o.num_ * den_;
    QPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = constant_poly(GaussRational(1), v);
    num_.set_var(v);
    den_.set_var(v);
    return *this;
  }
  QPoly n = num_ * g.cofactor_b + o.num_ * g.cofactor_a;
  if (n.is_zero()) {
    num_ = QPoly(v);
    den_ = constant_poly(GaussRational(1), v);
    return *this;
  }
  GcdResult h = gcd_cofactors(n, g.gcd);
  num_ = std::move(h.cofactor_a);
  den_ = g.cofactor_a * exact_div(o.den_, h.gcd);
  num_.set_var(v);
  den_.set_var(v);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc(QPoly(var()));
  char v = merge_rf_var(*this, o);
  QPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (a.degree() > 0 && d.degree() > 0) {
    GcdResult g = gcd_cofactors(a, d);
    a = std::move(g.cofactor_a);
    d = std::move(g.cofactor_b);
  }
  if (c.degree() > 0 && b.degree() > 0) {
    GcdResult g = gcd_cofactors(c, b);
    c = std::move(g.cofactor_a);
    b = std::move(g.cofactor_b);
  }
  num_ = a * c;
  den_ = b * d;
  if (!den_.lc().is_one()) {
    GaussRational inv = den_.lc().inverse();
    num_ *= inv;
    den_ = den_.monic();
  }
  num_.set_var(v);
  den_.set_var(v);
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RatFunc r;
  GaussRational inv = num_.lc().inverse();
  r.num_ = den_ * inv;
  r.den_ = num_.monic();
  char v = var();
  r.num_.set_var(v);
  r.den_.set_var(v);
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  char v = var();
  r.num_.set_var(v);
  r.den_.set_var(v);
  if (r.num_.is_zero()) r.den_ = constant_poly(GaussRational(1), v);
  return r;
}

RatFunc RatFunc::derivative() const {
  if (den_.degree() == 0) return RatFunc(num_.derivative() * den_.lc().inverse());
  // (n/d)' = (n' d - n d') / d^2; only the squarefree part of d can cancel.
  QPoly n = num_.derivative() * den_ - num_ * den_.derivative();
  return RatFunc(std::move(n), den_ * den_);
}

QPoly homogenized_compose(const QPoly& p, const QPoly& a, const QPoly& b, int n) {
  if (n < p.degree()) throw AlgebraError("homogenized_compose: bound below degree");
  char v = QPoly::merge_var(a, b);
  if (p.is_zero()) return QPoly(v);
  std::vector<QPoly> bpow{QPoly(GaussRational(1), v)};
  for (int k = 1; k <= n; ++k) bpow.push_back(bpow.back() * b);
  QPoly acc(v);
  QPoly apow(GaussRational(1), v);
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) apow *= a;
    const GaussRational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    acc += (apow * bpow[static_cast<std::size_t>(n - k)]) * c;
  }
  acc.set_var(v);
  return acc;
}

RatFunc RatFunc::compose(const RatFunc& r) const {
  if (is_constant()) return *this;
  int n = std::max(num_.degree(), den_.degree());
  QPoly top = homogenized_compose(num_, r.num(), r.den(), n);
  QPoly bottom = homogenized_compose(den_, r.num(), r.den(), n);
  return RatFunc(std::move(top), std::move(bottom));
}

GaussRational RatFunc::eval(const GaussRational& at) const {
  GaussRational d = den_.eval(at);
  if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

std::complex<double> RatFunc::eval_complex(std::complex<double> at) const {
  std::complex<double> d = pvialg::eval_complex(den_, at);
  double scale = eval_magnitude(den_, std::abs(at));
  if (std::abs(d) <= 1e-14 * scale) throw EvaluationError("rational function evaluated at a pole");
  return pvialg::eval_complex(num_, at) / d;
}

std::string RatFunc::str() const {
  QPoly n = num_, d = den_;
  char v = var() ? var() : 'u';
  n.set_var(v);
  d.set_var(v);
  if (d.degree() == 0) return n.str();
  std::string ns = n.str();
  std::string ds = d.str();
  if (detail::needs_parens(ns)) ns = "(" + ns + ")";
  if (ds.find_first_of("+-*/") != std::string::npos) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace pvialg
