#include "pvialg/qpoly.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>

#include "pvialg/kernels/modp.hpp"
#include "modular.hpp"

namespace pvialg {

std::string GaussRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) imag = "i";
  else if (im_ == -1) imag = "-i";
  else imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (imag[0] != '-') out += "+";
  out += imag + ")";
  return out;
}

namespace {

QPoly schoolbook(const QPoly& a, const QPoly& b, char v) {
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<GaussRational> r(ac.size() + bc.size() - 1, GaussRational(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j].is_zero()) continue;
      r[i + j] += ac[i] * bc[j];
    }
  }
  return QPoly(std::move(r), v);
}

void int_product(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y, std::vector<mpz_class>& out,
                 bool subtract) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      if (subtract) mpz_submul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
      else mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
}

}  // namespace

IntegerImage integer_image(const QPoly& p) {
  IntegerImage img;
  img.scale = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(img.scale.get_mpz_t(), img.scale.get_mpz_t(), c.re().get_den_mpz_t());
    if (!c.is_real()) {
      img.real = false;
      mpz_lcm(img.scale.get_mpz_t(), img.scale.get_mpz_t(), c.im().get_den_mpz_t());
    }
  }
  img.re.resize(p.coeffs().size());
  if (!img.real) img.im.resize(p.coeffs().size());
  mpz_class t;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const auto& c = p.coeffs()[k];
    mpz_divexact(t.get_mpz_t(), img.scale.get_mpz_t(), c.re().get_den_mpz_t());
    img.re[k] = t * c.re().get_num();
    if (!img.real) {
      mpz_divexact(t.get_mpz_t(), img.scale.get_mpz_t(), c.im().get_den_mpz_t());
      img.im[k] = t * c.im().get_num();
    }
  }
  return img;
}

template <>
QPoly QPoly::multiply(const QPoly& a, const QPoly& b) {
  char v = merge_var(a, b);
  if (a.is_zero() || b.is_zero()) return QPoly(v);
  if (a.coeffs().size() < 6 || b.coeffs().size() < 6) return schoolbook(a, b, v);
  IntegerImage ia = integer_image(a);
  IntegerImage ib = integer_image(b);
  std::size_t n = ia.re.size() + ib.re.size() - 1;
  std::vector<mpz_class> re(n), im;
  int_product(ia.re, ib.re, re, false);
  if (!ia.real && !ib.real) int_product(ia.im, ib.im, re, true);
  if (!ia.real || !ib.real) {
    im.resize(n);
    if (!ib.real) int_product(ia.re, ib.im, im, false);
    if (!ia.real) int_product(ia.im, ib.re, im, false);
  }
  mpz_class den = ia.scale * ib.scale;
  std::vector<GaussRational> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class r(re[k], den);
    r.canonicalize();
    if (im.empty() || sgn(im[k]) == 0) {
      out.emplace_back(std::move(r));
    } else {
      mpq_class i(im[k], den);
      i.canonicalize();
      out.emplace_back(std::move(r), std::move(i));
    }
  }
  return QPoly(std::move(out), v);
}

std::complex<double> eval_complex(const QPoly& p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

double eval_magnitude(const QPoly& p, double abs_x) {
  double acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * abs_x + std::abs(it->to_complex());
  return acc;
}

QPoly gcd_euclid(QPoly a, QPoly b) {
  char v = QPoly::merge_var(a, b);
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  QPoly g = a.monic();
  g.set_var(v);
  return g;
}

namespace {

using kernels::Modulus;
using modular::invmod;
using modular::PrimeInfo;
using modular::prime_at;
using ModVec = std::vector<double>;

void trim(ModVec& v) {
  while (!v.empty() && v.back() == 0.0) v.pop_back();
}

ModVec image(const IntegerImage& img, std::uint64_t p, std::uint64_t root) {
  ModVec out(img.re.size());
  for (std::size_t k = 0; k < img.re.size(); ++k) {
    std::uint64_t r = mpz_fdiv_ui(img.re[k].get_mpz_t(), p);
    if (!img.real) {
      std::uint64_t i = mpz_fdiv_ui(img.im[k].get_mpz_t(), p);
      r = (r + root * i) % p;
    }
    out[k] = static_cast<double>(r);
  }
  return out;
}

ModVec gcd_modp(ModVec a, ModVec b, const Modulus& m) {
  const auto& kern = kernels::active_kernels();
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::size_t db = b.size() - 1;
    const double inv = static_cast<double>(invmod(static_cast<std::uint64_t>(b.back()), m.p));
    for (std::size_t k = a.size(); k-- > db;) {
      if (a[k] == 0.0) continue;
      double f = static_cast<double>(static_cast<std::uint64_t>(a[k]) * static_cast<std::uint64_t>(inv) % m.p);
      kern.submul(a.data() + (k - db), b.data(), f, m, db + 1);
    }
    a.resize(db);
    trim(a);
    std::swap(a, b);
  }
  if (!a.empty()) {
    double inv = static_cast<double>(invmod(static_cast<std::uint64_t>(a.back()), m.p));
    kern.scale(a.data(), inv, m, a.size());
  }
  return a;
}

bool rational_reconstruct(const mpz_class& c, const mpz_class& modulus, mpq_class& out) {
  mpz_class bound;
  mpz_class half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = modulus, r1 = c;
  mpz_class t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || sgn(t1) == 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace

GcdResult gcd_cofactors(const QPoly& a, const QPoly& b) {
  char v = QPoly::merge_var(a, b);
  if (a.is_zero() && b.is_zero()) return {QPoly(v), QPoly(v), QPoly(v)};
  if (a.is_zero()) return {b.monic(), QPoly(v), QPoly(b.lc(), v)};
  if (b.is_zero()) return {a.monic(), QPoly(a.lc(), v), QPoly(v)};
  QPoly one(GaussRational(1), v);
  if (a.degree() == 0 || b.degree() == 0) return {one, a, b};

  const IntegerImage ia = integer_image(a);
  const IntegerImage ib = integer_image(b);
  const bool real = ia.real && ib.real;

  int best = std::min(a.degree(), b.degree()) + 1;
  std::vector<mpz_class> acc_re, acc_im;
  mpz_class modulus = 1;
  QPoly last;
  bool have_last = false;

  for (std::size_t idx = 0; idx < 4000; ++idx) {
    const PrimeInfo info = prime_at(idx);
    const std::uint64_t p = info.p;
    const Modulus m(info.p);

    ModVec a1 = image(ia, p, info.root);
    ModVec b1 = image(ib, p, info.root);
    if (a1.back() == 0.0 || b1.back() == 0.0) continue;
    ModVec g1 = gcd_modp(a1, b1, m);
    if (g1.size() == 1) return {one, a, b};

    ModVec g2;
    if (!real) {
      ModVec a2 = image(ia, p, p - info.root);
      ModVec b2 = image(ib, p, p - info.root);
      if (a2.back() == 0.0 || b2.back() == 0.0) continue;
      g2 = gcd_modp(a2, b2, m);
      if (g2.size() == 1) return {one, a, b};
      if (g2.size() != g1.size()) continue;
    }
    const int d = static_cast<int>(g1.size()) - 1;
    if (d > best) continue;
    if (d < best) {
      best = d;
      modulus = 1;
      acc_re.assign(g1.size(), mpz_class(0));
      acc_im.assign(real ? 0 : g1.size(), mpz_class(0));
      have_last = false;
    }

    // Residues of the real and imaginary coefficient parts modulo p.
    const std::uint64_t inv2 = invmod(2, p);
    const std::uint64_t inv2r = invmod(2 * info.root % p, p);
    const std::uint64_t mmod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const std::uint64_t minv = invmod(mmod, p);
    auto crt = [&](mpz_class& acc, std::uint64_t residue) {
      std::uint64_t cur = mpz_fdiv_ui(acc.get_mpz_t(), p);
      std::uint64_t diff = (residue + p - cur) % p;
      std::uint64_t h = diff * minv % p;
      acc += modulus * static_cast<unsigned long>(h);
    };
    for (std::size_t k = 0; k < g1.size(); ++k) {
      auto x = static_cast<std::uint64_t>(g1[k]);
      if (real) {
        crt(acc_re[k], x);
      } else {
        auto y = static_cast<std::uint64_t>(g2[k]);
        crt(acc_re[k], (x + y) % p * inv2 % p);
        crt(acc_im[k], (x + p - y) % p * inv2r % p);
      }
    }
    modulus *= static_cast<unsigned long>(p);

    std::vector<GaussRational> cand(g1.size());
    bool ok = true;
    for (std::size_t k = 0; k < g1.size() && ok; ++k) {
      mpq_class re, im;
      ok = rational_reconstruct(acc_re[k], modulus, re);
      if (ok && !real) ok = rational_reconstruct(acc_im[k], modulus, im);
      if (ok) cand[k] = GaussRational(re, im);
    }
    if (!ok) continue;
    QPoly candidate(std::move(cand), v);
    if (have_last && candidate == last) {
      auto [qa, ra] = divrem(a, candidate);
      if (ra.is_zero()) {
        auto [qb, rb] = divrem(b, candidate);
        if (rb.is_zero()) return {candidate, qa, qb};
      }
    }
    last = std::move(candidate);
    have_last = true;
  }
  QPoly g = gcd_euclid(a, b);
  return {g, exact_div(a, g), exact_div(b, g)};
}

QPoly gcd(QPoly a, QPoly b) { return gcd_cofactors(a, b).gcd; }

}  // namespace pvialg
