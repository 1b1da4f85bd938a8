#include "pvialg/quadext.hpp"

#include <cmath>

namespace pvialg {

QuadField::QuadField(QPoly modulus) : d_(std::move(modulus)) {
  if (d_.degree() < 1) throw AlgebraError("quadratic extension needs a nonconstant modulus");
  if (!gcd(d_, d_.derivative()).is_one()) throw AlgebraError("extension modulus is not squarefree: " + d_.str());
  d_rf_ = RatFunc(d_);
  dlog_ = RatFunc(d_.derivative(), d_ * GaussRational(2));
}

FieldPtr make_field(QPoly modulus) { return std::make_shared<const QuadField>(std::move(modulus)); }

ExtScalar::ExtScalar(RatFunc a, RatFunc b, FieldPtr field)
    : a_(std::move(a)), b_(std::move(b)), field_(std::move(field)) {
  if (!b_.is_zero() && !field_) throw AlgebraError("w-component without a quadratic extension");
}

ExtScalar ExtScalar::generator(const FieldPtr& field) {
  if (!field) throw AlgebraError("no quadratic extension declared");
  return ExtScalar(RatFunc(0L), RatFunc(1L), field);
}

char ExtScalar::var() const {
  if (!a_.is_constant() && a_.var()) return a_.var();
  if (!b_.is_constant() && b_.var()) return b_.var();
  if (field_) return field_->var();
  return a_.var() ? a_.var() : b_.var();
}

FieldPtr ExtScalar::merge_field(const ExtScalar& x, const ExtScalar& y) {
  if (x.field_ && y.field_ && x.field_ != y.field_ && !x.field_->same_as(*y.field_)) {
    if (x.is_base()) return y.field_;
    if (y.is_base()) return x.field_;
    throw FieldMismatch("elements of different quadratic extensions: " + x.field_->str() + " vs " +
                        y.field_->str());
  }
  return x.field_ ? x.field_ : y.field_;
}

ExtScalar ExtScalar::operator-() const {
  ExtScalar r = *this;
  r.a_ = -r.a_;
  if (!r.b_.is_zero()) r.b_ = -r.b_;
  return r;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
  field_ = merge_field(*this, o);
  a_ += o.a_;
  if (!o.b_.is_zero()) b_ += o.b_;
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
  field_ = merge_field(*this, o);
  a_ -= o.a_;
  if (!o.b_.is_zero()) b_ -= o.b_;
  return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
  FieldPtr f = merge_field(*this, o);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
  } else if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
  } else if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
  } else {
    RatFunc na = a_ * o.a_ + b_ * o.b_ * f->modulus_rf();
    RatFunc nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
  }
  field_ = std::move(f);
  return *this;
}

RatFunc ExtScalar::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * field_->modulus_rf();
}

ExtScalar ExtScalar::conj() const {
  ExtScalar r = *this;
  if (!r.b_.is_zero()) r.b_ = -r.b_;
  return r;
}

ExtScalar ExtScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (b_.is_zero()) return ExtScalar(a_.inverse(), RatFunc(), field_);
  RatFunc n = norm();
  if (n.is_zero()) throw DivisionByZero("element of zero norm");
  RatFunc ninv = n.inverse();
  return ExtScalar(a_ * ninv, -(b_ * ninv), field_);
}

ExtScalar& ExtScalar::operator/=(const ExtScalar& o) {
  if (o.b_.is_zero()) {
    if (o.a_.is_zero()) throw DivisionByZero("division by zero field element");
    field_ = merge_field(*this, o);
    a_ /= o.a_;
    if (!b_.is_zero()) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

ExtScalar ExtScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ExtScalar result(1L);
  result.field_ = field_;
  ExtScalar base = *this;
  auto n = static_cast<unsigned>(e);
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

ExtScalar ExtScalar::derive() const {
  ExtScalar r;
  r.field_ = field_;
  r.a_ = a_.derivative();
  if (!b_.is_zero()) r.b_ = b_.derivative() + b_ * field_->log_derivative();
  return r;
}

std::complex<double> ExtScalar::eval_numeric(std::complex<double> u0, int branch) const {
  std::complex<double> v = a_.eval_complex(u0);
  if (b_.is_zero()) return v;
  std::complex<double> dv = pvialg::eval_complex(field_->modulus(), u0);
  double scale = eval_magnitude(field_->modulus(), std::abs(u0));
  if (std::abs(dv) <= 1e-14 * scale) throw EvaluationError("evaluation at a branch point of w");
  std::complex<double> w = std::sqrt(dv) * static_cast<double>(branch >= 0 ? 1 : -1);
  return v + b_.eval_complex(u0) * w;
}

std::string ExtScalar::str() const {
  if (b_.is_zero()) return a_.str();
  std::string bpart;
  std::string bs = b_.str();
  if (bs == "1") bpart = "w";
  else if (bs == "-1") bpart = "-w";
  else bpart = detail::as_factor(bs) + "*w";
  if (a_.is_zero()) return bpart;
  std::string out = a_.str();
  if (bpart[0] != '-') out += "+";
  return out + bpart;
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = mpq_class(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

bool gauss_sqrt(const GaussRational& c, GaussRational& out) {
  if (c.is_real()) {
    mpq_class r;
    if (rational_sqrt(c.re(), r)) {
      out = GaussRational(r);
      return true;
    }
    if (rational_sqrt(-c.re(), r)) {
      out = GaussRational(mpq_class(0), r);
      return true;
    }
    return false;
  }
  mpq_class modulus;
  if (!rational_sqrt(c.norm(), modulus)) return false;
  mpq_class x2 = (c.re() + modulus) / 2;
  mpq_class x;
  if (!rational_sqrt(x2, x) || sgn(x) == 0) return false;
  mpq_class y = c.im() / (2 * x);
  out = GaussRational(x, y);
  return true;
}

ParamSubstitution make_param_substitution(const RatFunc& image, const FieldPtr& source, const FieldPtr& target) {
  ParamSubstitution sub;
  sub.image = image;
  sub.source = source;
  sub.w_factor = RatFunc(1L);
  if (!source) return sub;
  const QPoly& d = source->modulus();
  const int n = d.degree();
  QPoly a = image.num(), b = image.den();
  char v = image.var() ? image.var() : 'u';
  a.set_var(v);
  b.set_var(v);
  // D(a/b) = M / b^(2m) with M = hom(D) or hom(D) * b.
  QPoly m_poly = homogenized_compose(d, a, b, n);
  int half = n / 2;
  if (n % 2 != 0) {
    m_poly = m_poly * b;
    half = (n + 1) / 2;
  }
  if (m_poly.is_zero()) throw AlgebraError("substitution sends the extension modulus to zero");
  GaussRational lc = m_poly.lc();
  QPoly q(GaussRational(1), v);
  QPoly dnew(GaussRational(1), v);
  for (const auto& f : squarefree_decomposition(m_poly)) {
    if (f.multiplicity / 2 > 0) q *= f.factor.pow(static_cast<unsigned>(f.multiplicity / 2));
    if (f.multiplicity % 2 != 0) dnew *= f.factor;
  }
  RatFunc w_factor = RatFunc(q, b.pow(static_cast<unsigned>(half)));
  GaussRational root;
  if (dnew.degree() == 0) {
    if (!gauss_sqrt(lc, root)) {
      throw AlgebraError("image of w is not expressible: constant " + lc.str() + " is not a square in Q(i)");
    }
    sub.w_factor = w_factor * RatFunc(root);
    sub.target = nullptr;
    if (target) throw AlgebraError("image of w is rational but a target extension was requested");
    return sub;
  }
  if (gauss_sqrt(lc, root)) {
    w_factor *= RatFunc(root);
  } else {
    dnew *= lc;
  }
  if (target) {
    RatFunc ratio(dnew, target->modulus());
    if (!ratio.is_constant() || !gauss_sqrt(ratio.constant_value(), root)) {
      throw AlgebraError("image of w does not live in the target extension " + target->str());
    }
    sub.target = target;
    sub.w_factor = w_factor * RatFunc(root);
    return sub;
  }
  sub.target = make_field(dnew);
  sub.w_factor = w_factor;
  return sub;
}

ExtScalar apply(const ParamSubstitution& sub, const ExtScalar& e) {
  RatFunc a = e.a().compose(sub.image);
  if (e.b().is_zero()) return ExtScalar(a, RatFunc(), sub.target);
  if (!sub.source) throw AlgebraError("substitution has no source extension for a w-term");
  RatFunc b = e.b().compose(sub.image) * sub.w_factor;
  if (!sub.target) return ExtScalar(a + b);
  return ExtScalar(std::move(a), std::move(b), sub.target);
}

}  // namespace pvialg
