#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "pvialg/errors.hpp"

namespace pvialg {

/// Exact element re + im*i of Q(i). Both parts are kept canonical by GMP,
/// so equality is a field-by-field comparison.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRational inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_real()) return GaussRational(mpq_class(1) / re_);
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_real()) {
      if (sgn(o.re_) == 0) throw DivisionByZero();
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Grammar form: "3", "-1/2", "i", "-2*i", "(1/2+3*i)".
  std::string str() const;

  /// True when the value prints without surrounding parentheses as a
  /// factor (a single real or single imaginary term).
  bool is_monomial() const { return sgn(re_) == 0 || sgn(im_) == 0; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace pvialg
