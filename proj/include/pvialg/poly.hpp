#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pvialg/errors.hpp"

namespace pvialg {

namespace detail {

/// True if `s` has a '+' or '-' outside parentheses after its first char,
/// i.e. it has to be wrapped before being used as a factor.
inline bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && k > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

inline std::string as_factor(const std::string& s) {
  return needs_parens(s) ? "(" + s + ")" : s;
}

}  // namespace detail

/// Dense univariate polynomial over a field K, coefficients stored from the
/// constant term upward. The zero polynomial has no coefficients and degree
/// -1; otherwise the leading coefficient is nonzero.
///
/// `var` is a one-letter symbol tag. Polynomials of degree <= 0 are
/// compatible with any tag.
template <class K>
class Poly {
 public:
  using Scalar = K;

  Poly() = default;
  explicit Poly(char var) : var_(var) {}
  Poly(K c, char var) : var_(var) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  Poly(std::vector<K> coeffs, char var) : c_(std::move(coeffs)), var_(var) { trim(); }

  static Poly variable(char var) {
    std::vector<K> c{K(0), K(1)};
    return Poly(std::move(c), var);
  }
  static Poly monomial(K c, int deg, char var) {
    if (c.is_zero()) return Poly(var);
    std::vector<K> v(static_cast<std::size_t>(deg) + 1, K(0));
    v.back() = std::move(c);
    return Poly(std::move(v), var);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }
  char var() const { return var_; }
  void set_var(char v) { var_ = v; }

  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const K& lc() const {
    if (c_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
    return c_.back();
  }
  K constant_term() const { return coeff(0); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    var_ = merge_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    var_ = merge_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  Poly& operator*=(const Poly& o) { return *this = multiply(*this, o); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Multiply by var^k.
  Poly shift(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<K> v(static_cast<std::size_t>(k), K(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v), var_);
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(var_);
    std::vector<K> v;
    v.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * K(static_cast<long>(k)));
    return Poly(std::move(v), var_);
  }

  template <class T>
  T eval_as(const T& x) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }
  K eval(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lc();
    Poly r = *this;
    for (auto& c : r.c_) c *= inv;
    r.c_.back() = K(1);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly result(K(1), var_);
    Poly base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Substitute var := q (another polynomial).
  Poly compose(const Poly& q) const {
    Poly acc(q.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * q;
      acc += Poly(*it, q.var());
    }
    return acc;
  }

  /// Homogenised Moebius substitution: returns
  ///   sum_k c_k (a x + b)^k (c x + d)^(n-k)
  /// which equals p((a x + b)/(c x + d)) * (c x + d)^n. Requires n >= degree.
  Poly moebius_numerator(const K& a, const K& b, const K& c, const K& d, int n) const {
    if (n < degree()) throw AlgebraError("moebius_numerator: bound below degree");
    Poly top(std::vector<K>{b, a}, var_);
    Poly bottom(std::vector<K>{d, c}, var_);
    std::vector<Poly> top_pows{Poly(K(1), var_)};
    for (int k = 1; k <= degree(); ++k) top_pows.push_back(top_pows.back() * top);
    std::vector<Poly> bot_pows{Poly(K(1), var_)};
    for (int k = 1; k <= n; ++k) bot_pows.push_back(bot_pows.back() * bottom);
    Poly acc(var_);
    for (int k = 0; k <= degree(); ++k) {
      const K& ck = c_[static_cast<std::size_t>(k)];
      if (ck.is_zero()) continue;
      acc += (top_pows[static_cast<std::size_t>(k)] * bot_pows[static_cast<std::size_t>(n - k)]) * ck;
    }
    return acc;
  }

  template <class F>
  auto map_coeffs(F&& f, char var) const {
    using R = decltype(f(std::declval<const K&>()));
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<R>(std::move(v), var);
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const K& c = c_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      std::string term;
      std::string cs = c.str();
      std::string mono;
      if (k >= 1) {
        mono = std::string(1, var_ ? var_ : 'x');
        if (k > 1) mono += "^" + std::to_string(k);
      }
      if (k == 0) {
        term = cs;
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = detail::as_factor(cs) + "*" + mono;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  static char merge_var(const Poly& a, const Poly& b) {
    if (a.degree() >= 1 && b.degree() >= 1 && a.var_ != b.var_ && a.var_ && b.var_) {
      throw FieldMismatch(std::string("polynomials in different variables: ") + a.var_ + " vs " + b.var_);
    }
    if (a.degree() >= 1 && a.var_) return a.var_;
    if (b.degree() >= 1 && b.var_) return b.var_;
    return a.var_ ? a.var_ : b.var_;
  }

 private:
  static Poly multiply(const Poly& a, const Poly& b);

  std::vector<K> c_;
  char var_ = 0;
};

template <class K>
Poly<K> Poly<K>::multiply(const Poly& a, const Poly& b) {
  char v = merge_var(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(v);
  std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(r), v);
}

/// Quotient and remainder of a by b over the field K.
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  char v = Poly<K>::merge_var(a, b);
  if (a.degree() < b.degree()) return {Poly<K>(v), a};
  std::vector<K> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  K inv = K(1) / b.lc();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - db + 1), K(0));
  for (int k = a.degree(); k >= db; --k) {
    K& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    K f = top * inv;
    for (int j = 0; j < db; ++j) {
      const K& bj = bc[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      rem[static_cast<std::size_t>(k - db + j)] -= f * bj;
    }
    top = K(0);
    q[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<K>(std::move(q), v), Poly<K>(std::move(rem), v)};
}

/// Quotient a / b; throws if the remainder is nonzero.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw AlgebraError("exact_div: nonzero remainder");
  return q;
}

/// Monic gcd by Euclid's algorithm over the field K. gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  char v = Poly<K>::merge_var(a, b);
  while (!b.is_zero()) {
    Poly<K> r = divrem(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  Poly<K> g = a.monic();
  g.set_var(v);
  return g;
}

template <class K>
struct SquarefreeFactor {
  Poly<K> factor;  // monic, squarefree
  int multiplicity;
};

/// Yun's squarefree decomposition: p = lc(p) * prod factor^multiplicity.
template <class K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const Poly<K>& p) {
  if (p.is_zero()) throw AlgebraError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor<K>> out;
  if (p.degree() == 0) return out;
  Poly<K> f = p.monic();
  Poly<K> df = f.derivative();
  Poly<K> g = gcd(f, df);
  Poly<K> c = exact_div(f, g);
  Poly<K> d = exact_div(df, g) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly<K> b = gcd(c, d);
    if (b.degree() > 0) out.push_back({b, i});
    c = exact_div(c, b);
    d = exact_div(d, b) - c.derivative();
    ++i;
  }
  return out;
}

}  // namespace pvialg
