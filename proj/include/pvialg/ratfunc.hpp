#pragma once

#include <complex>
#include <string>

#include "pvialg/qpoly.hpp"

namespace pvialg {

/// Element num/den of Q(i)(u). Always reduced: gcd(num, den) = 1 and den is
/// monic, so two equal values have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(GaussRational(1), 0) {}
  RatFunc(long c) : num_(GaussRational(c), 0), den_(GaussRational(1), 0) {}  // NOLINT
  RatFunc(int c) : RatFunc(static_cast<long>(c)) {}                          // NOLINT
  RatFunc(const GaussRational& c) : num_(c, 0), den_(GaussRational(1), 0) {}  // NOLINT
  RatFunc(QPoly num);                                                         // NOLINT
  RatFunc(QPoly num, QPoly den);

  static RatFunc variable(char var) { return RatFunc(QPoly::variable(var)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  char var() const { return QPoly::merge_var(num_, den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Constant value; throws unless is_constant().
  GaussRational constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc derivative() const;

  /// Substitute the variable by r.
  RatFunc compose(const RatFunc& r) const;

  GaussRational eval(const GaussRational& at) const;
  std::complex<double> eval_complex(std::complex<double> at) const;

  std::string str() const;

 private:
  void reduce();

  QPoly num_;
  QPoly den_;
};

/// sum_k p_k a^k b^(n-k): the numerator of p(a/b) * b^n. Requires n >= deg p.
QPoly homogenized_compose(const QPoly& p, const QPoly& a, const QPoly& b, int n);

}  // namespace pvialg
