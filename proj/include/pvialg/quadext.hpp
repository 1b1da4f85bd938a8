#pragma once

#include <complex>
#include <memory>
#include <string>

#include "pvialg/ratfunc.hpp"

namespace pvialg {

/// Q(i)(u)(w) with w^2 = D(u). D must be squarefree of positive degree.
class QuadField {
 public:
  explicit QuadField(QPoly modulus);

  const QPoly& modulus() const { return d_; }
  const RatFunc& modulus_rf() const { return d_rf_; }
  /// D'/(2D), the logarithmic derivative of w.
  const RatFunc& log_derivative() const { return dlog_; }
  char var() const { return d_.var(); }
  std::string str() const { return "w^2 = " + d_.str(); }

  bool same_as(const QuadField& o) const { return d_ == o.d_; }

 private:
  QPoly d_;
  RatFunc d_rf_;
  RatFunc dlog_;
};

using FieldPtr = std::shared_ptr<const QuadField>;

FieldPtr make_field(QPoly modulus);

/// a + b*w with a, b in Q(i)(u). A null field pointer means b = 0 and the
/// value lives in the base field; such values combine with any extension.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(long c) : a_(c) {}                  // NOLINT
  ExtScalar(int c) : a_(static_cast<long>(c)) {}  // NOLINT
  ExtScalar(const GaussRational& c) : a_(c) {}  // NOLINT
  ExtScalar(RatFunc a) : a_(std::move(a)) {}    // NOLINT
  ExtScalar(RatFunc a, RatFunc b, FieldPtr field);

  static ExtScalar generator(const FieldPtr& field);

  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  const FieldPtr& field() const { return field_; }
  bool is_base() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_.is_one(); }
  bool is_constant() const { return b_.is_zero() && a_.is_constant(); }
  char var() const;

  ExtScalar operator-() const;
  ExtScalar& operator+=(const ExtScalar& o);
  ExtScalar& operator-=(const ExtScalar& o);
  ExtScalar& operator*=(const ExtScalar& o);
  ExtScalar& operator/=(const ExtScalar& o);
  friend ExtScalar operator+(ExtScalar x, const ExtScalar& y) { return x += y; }
  friend ExtScalar operator-(ExtScalar x, const ExtScalar& y) { return x -= y; }
  friend ExtScalar operator*(ExtScalar x, const ExtScalar& y) { return x *= y; }
  friend ExtScalar operator/(ExtScalar x, const ExtScalar& y) { return x /= y; }
  friend bool operator==(const ExtScalar& x, const ExtScalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const ExtScalar& x, const ExtScalar& y) { return !(x == y); }

  ExtScalar inverse() const;
  ExtScalar pow(int e) const;
  /// Conjugate a - b*w.
  ExtScalar conj() const;
  /// a^2 - b^2 D, in the base field.
  RatFunc norm() const;

  /// d/du with w' = D' w / (2D).
  ExtScalar derive() const;

  /// Floating value with w := branch * sqrt(D(u0)) (principal root).
  std::complex<double> eval_numeric(std::complex<double> u0, int branch = 1) const;

  std::string str() const;

 private:
  static FieldPtr merge_field(const ExtScalar& x, const ExtScalar& y);

  RatFunc a_;
  RatFunc b_;
  FieldPtr field_;
};

/// Square root inside Q(i), if there is one.
bool gauss_sqrt(const GaussRational& c, GaussRational& out);

/// Result of substituting u := R(s) into a field element.
struct ParamSubstitution {
  RatFunc image;          // R(s)
  FieldPtr source;        // extension over u (may be null)
  FieldPtr target;        // extension over s (null if the image of w is rational)
  RatFunc w_factor;       // image of w = w_factor * w_target
};

/// Builds the substitution u := image. When `source` is set, D(image) is
/// split into q^2 * D_new with D_new squarefree; if `target` is given it
/// must satisfy D_new / target = c^2 for a rational c, otherwise a new
/// field is created from D_new (none when D_new is constant 1 up to
/// squares in Q(i)).
ParamSubstitution make_param_substitution(const RatFunc& image, const FieldPtr& source, const FieldPtr& target);

ExtScalar apply(const ParamSubstitution& sub, const ExtScalar& e);

}  // namespace pvialg
