#include "pvialg/ratx.hpp"

#include <random>

#include "modular.hpp"

namespace pvialg {

namespace {

using u64 = std::uint64_t;

struct ModPoint {
  u64 p = 0;
  u64 i_root = 0;  // image of i
  u64 u0 = 0;      // image of the parameter
  u64 w0 = 0;      // image of w
};

bool image_q(const mpq_class& q, u64 p, u64& out) {
  u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return false;
  u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  out = n * modular::invmod(d, p) % p;
  return true;
}

bool image_poly(const QPoly& f, const ModPoint& pt, u64& out) {
  u64 acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    u64 re = 0, im = 0;
    if (!image_q(it->re(), pt.p, re)) return false;
    if (!it->is_real() && !image_q(it->im(), pt.p, im)) return false;
    u64 c = (re + im * pt.i_root) % pt.p;
    acc = (acc * pt.u0 + c) % pt.p;
  }
  out = acc;
  return true;
}

bool image_rf(const RatFunc& r, const ModPoint& pt, u64& out) {
  u64 n = 0, d = 0;
  if (!image_poly(r.num(), pt, n) || !image_poly(r.den(), pt, d) || d == 0) return false;
  out = n * modular::invmod(d, pt.p) % pt.p;
  return true;
}

bool image_coeffs(const XPoly& f, const ModPoint& pt, std::vector<u64>& out) {
  out.clear();
  for (const auto& c : f.coeffs()) {
    u64 a = 0, b = 0;
    if (!image_rf(c.a(), pt, a)) return false;
    if (!c.b().is_zero() && !image_rf(c.b(), pt, b)) return false;
    out.push_back((a + b * pt.w0) % pt.p);
  }
  return true;
}

int gcd_degree_modp(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    u64 inv = modular::invmod(b.back(), p);
    std::size_t db = b.size() - 1;
    for (std::size_t k = a.size(); k-- > db;) {
      if (a[k] == 0) continue;
      u64 f = a[k] * inv % p;
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = (a[k - db + j] + p - f * b[j] % p) % p;
    }
    a.resize(std::min(a.size(), db));
    trim(a);
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

const FieldPtr* find_field(const XPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (c.field()) return &c.field();
  }
  return nullptr;
}

}  // namespace

bool certainly_coprime(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.degree() == 0 || b.degree() == 0) return true;
  const FieldPtr* fa = find_field(a);
  const FieldPtr* fb = find_field(b);
  FieldPtr field = fa ? *fa : (fb ? *fb : nullptr);
  std::mt19937_64 rng(0x5eed1234u + static_cast<unsigned>(a.degree() * 131 + b.degree()));
  for (std::size_t attempt = 0; attempt < 6; ++attempt) {
    modular::PrimeInfo info = modular::prime_at(attempt * 7 + 3);
    ModPoint pt;
    pt.p = info.p;
    pt.i_root = info.root;
    pt.u0 = rng() % pt.p;
    if (field) {
      u64 dv = 0;
      if (!image_poly(field->modulus(), pt, dv) || dv == 0) continue;
      if (!modular::sqrt_mod(dv, pt.p, pt.w0)) continue;
    }
    std::vector<u64> ia, ib;
    if (!image_coeffs(a, pt, ia) || !image_coeffs(b, pt, ib)) continue;
    if (ia.back() == 0 || ib.back() == 0) continue;
    return gcd_degree_modp(ia, ib, pt.p) == 0;
  }
  return false;
}

XPoly gcd(XPoly a, XPoly b) {
  char v = XPoly::merge_var(a, b);
  if (!a.is_zero() && !b.is_zero() && certainly_coprime(a, b)) return XPoly(ExtScalar(1L), v);
  while (!b.is_zero()) {
    XPoly r = divrem(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  XPoly g = a.monic();
  g.set_var(v);
  return g;
}

XPoly apply(const ParamSubstitution& sub, const XPoly& p) {
  return p.map_coeffs([&](const ExtScalar& c) { return apply(sub, c); }, p.var());
}

RatX::RatX(XPoly num) : num_(std::move(num)), den_(ExtScalar(1L), 'x') { num_.set_var('x'); }

RatX::RatX(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function in x with zero denominator");
  num_.set_var('x');
  den_.set_var('x');
  if (num_.is_zero()) {
    den_ = XPoly(ExtScalar(1L), 'x');
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    XPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  normalize_den();
}

RatX RatX::coprime(XPoly num, XPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function in x with zero denominator");
  RatX r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.num_.set_var('x');
  r.den_.set_var('x');
  if (r.num_.is_zero()) r.den_ = XPoly(ExtScalar(1L), 'x');
  r.normalize_den();
  return r;
}

void RatX::normalize_den() {
  if (den_.lc().is_one()) return;
  ExtScalar inv = den_.lc().inverse();
  num_ *= inv;
  den_ = den_.monic();
}

ExtScalar RatX::constant_value() const {
  if (!is_constant()) throw AlgebraError("expression depends on x: " + str());
  return num_.constant_term();
}

RatX RatX::operator-() const {
  RatX r = *this;
  r.num_ = -r.num_;
  return r;
}

RatX& RatX::operator+=(const RatX& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = RatX(num_ + o.num_, den_);
  XPoly g = gcd(den_, o.den_);
  if (g.degree() == 0) return *this = RatX(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  XPoly b1 = exact_div(den_, g);
  XPoly d1 = exact_div(o.den_, g);
  return *this = RatX(num_ * d1 + o.num_ * b1, b1 * o.den_);
}

RatX& RatX::operator-=(const RatX& o) { return *this += -o; }

RatX& RatX::operator*=(const RatX& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatX();
  XPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (a.degree() > 0 && d.degree() > 0) {
    XPoly g = gcd(a, d);
    if (g.degree() > 0) {
      a = exact_div(a, g);
      d = exact_div(d, g);
    }
  }
  if (c.degree() > 0 && b.degree() > 0) {
    XPoly g = gcd(c, b);
    if (g.degree() > 0) {
      c = exact_div(c, g);
      b = exact_div(b, g);
    }
  }
  return *this = coprime(a * c, b * d);
}

RatX RatX::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function in x");
  return coprime(den_, num_);
}

RatX& RatX::operator/=(const RatX& o) { return *this *= o.inverse(); }

RatX RatX::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return coprime(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatX RatX::derivative() const {
  if (den_.degree() == 0) return RatX(num_.derivative());
  return RatX(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatX RatX::moebius(const ExtScalar& a, const ExtScalar& b, const ExtScalar& c, const ExtScalar& d) const {
  if ((a * d - b * c).is_zero()) throw AlgebraError("degenerate fractional-linear map");
  int n = degree();
  return coprime(num_.moebius_numerator(a, b, c, d, n), den_.moebius_numerator(a, b, c, d, n));
}

RatX RatX::compose(const RatX& r) const {
  int n = degree();
  return RatX(homogenize_compose(num_, r.num(), r.den(), n), homogenize_compose(den_, r.num(), r.den(), n));
}

RatX RatX::apply(const ParamSubstitution& sub) const {
  return coprime(pvialg::apply(sub, num_), pvialg::apply(sub, den_));
}

ExtScalar RatX::eval(const ExtScalar& x) const {
  ExtScalar d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("rational function in x evaluated at a pole");
  return num_.eval(x) / d;
}

std::string RatX::str() const {
  if (den_.degree() == 0) return num_.str();
  std::string ns = num_.str();
  std::string ds = den_.str();
  if (detail::needs_parens(ns)) ns = "(" + ns + ")";
  if (ds.find_first_of("+-*/") != std::string::npos) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace pvialg
