#include "pvialg/syzygy.hpp"

#include <algorithm>

namespace pvialg {

std::string SyzygyBounds::str() const {
  static const char* names[] = {"U", "V", "W"};
  std::string s;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k) s += ", ";
    s += std::string("deg ") + names[k] + (max[k] < 0 ? " = -oo" : (exact[k] ? " = " : " <= ") + std::to_string(max[k]));
  }
  return s;
}

SyzygyBounds syzygy_bounds(const XPoly& F, const XPoly& G, const XPoly& H, int delta, int pole_order) {
  if (F.is_zero() || G.is_zero() || H.is_zero()) throw AlgebraError("F, G, H must be nonzero");
  if (delta < 0) throw AlgebraError("delta must be nonnegative");
  if (delta > std::max(2, pole_order)) {
    throw AlgebraError("delta = " + std::to_string(delta) + " exceeds max(2, k) = " +
                       std::to_string(std::max(2, pole_order)));
  }
  const int dF = F.degree(), dG = G.degree(), dH = H.degree();
  const int Delta = dF + dG + dH;
  if ((Delta + delta) % 2 != 0) {
    throw AlgebraError("Delta + delta must be even (Delta = " + std::to_string(Delta) + ")");
  }
  SyzygyBounds b;
  if (delta == 0) {
    b.max = {Delta / 2 - dF, Delta / 2 - dG, Delta / 2 - dH - 1};
    b.exact = {true, true, false};
  } else {
    b.max = {(Delta + delta) / 2 - dF - 1, (Delta + delta) / 2 - dG - 1, (Delta - delta) / 2 - dH};
    b.exact = {false, false, true};
  }
  return b;
}

namespace {

using Row = std::vector<QPoly>;

RatFunc base_coeff(const ExtScalar& c) {
  if (!c.is_base()) throw AlgebraError("syzygy solver needs coefficients in the base field");
  return c.a();
}

// Divide a row by the gcd of its entries and make the first nonzero entry
// have leading coefficient 1.
void strip_content(Row& row) {
  QPoly g;
  bool first = true;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    if (first) {
      g = e.monic();
      first = false;
    } else if (g.degree() > 0) {
      g = gcd(g, e);
    }
  }
  if (first) return;
  GaussRational lead;
  for (const auto& e : row) {
    if (!e.is_zero()) {
      lead = e.lc();
      break;
    }
  }
  GaussRational inv = lead.inverse();
  if (g.degree() > 0) {
    for (auto& e : row) {
      if (!e.is_zero()) e = exact_div(e, g);
    }
  }
  for (auto& e : row) e *= inv;
}

}  // namespace

SyzygyKernel syzygy_kernel(const XPoly& F, const XPoly& G, const XPoly& H, const SyzygyBounds& b) {
  const std::array<const XPoly*, 3> polys = {&F, &G, &H};
  std::array<int, 3> count{}, offset{};
  int n = 0;
  int top = -1;
  for (std::size_t k = 0; k < 3; ++k) {
    count[k] = std::max(b.max[k] + 1, 0);
    offset[k] = n;
    n += count[k];
    if (count[k] > 0) top = std::max(top, polys[k]->degree() + b.max[k]);
  }
  SyzygyKernel out;
  out.unknowns = n;
  out.equations = top + 1;
  if (n == 0) return out;

  // Rows: coefficient of x^j in sum_k P_k * X_k.
  std::vector<Row> rows;
  for (int j = 0; j <= top; ++j) {
    std::vector<RatFunc> r(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < 3; ++k) {
      for (int i = 0; i < count[k]; ++i) {
        int d = j - i;
        if (d < 0 || d > polys[k]->degree()) continue;
        r[static_cast<std::size_t>(offset[k] + i)] = base_coeff(polys[k]->coeff(d));
      }
    }
    QPoly L(GaussRational(1), 0);
    bool any = false;
    for (const auto& e : r) {
      if (e.is_zero()) continue;
      any = true;
      if (e.den().degree() > 0) L = exact_div(L * e.den(), gcd(L, e.den()));
    }
    if (!any) continue;
    Row row(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (!r[c].is_zero()) row[c] = r[c].num() * exact_div(L, r[c].den());
    }
    strip_content(row);
    rows.push_back(std::move(row));
  }

  // Fraction-free row echelon form.
  std::vector<int> pivcol;
  std::size_t cur = 0;
  for (int col = 0; col < n && cur < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = cur; r < rows.size(); ++r) {
      const QPoly& e = rows[r][static_cast<std::size_t>(col)];
      if (e.is_zero()) continue;
      if (best == rows.size() || e.degree() < rows[best][static_cast<std::size_t>(col)].degree()) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[cur], rows[best]);
    const Row& piv = rows[cur];
    const QPoly& p = piv[static_cast<std::size_t>(col)];
    for (std::size_t r = cur + 1; r < rows.size(); ++r) {
      QPoly m = rows[r][static_cast<std::size_t>(col)];
      if (m.is_zero()) continue;
      QPoly g = gcd(p, m);
      QPoly pa = exact_div(p, g), ma = exact_div(m, g);
      for (std::size_t c = static_cast<std::size_t>(col); c < static_cast<std::size_t>(n); ++c) {
        rows[r][c] = rows[r][c] * pa - piv[c] * ma;
      }
      strip_content(rows[r]);
    }
    pivcol.push_back(col);
    ++cur;
  }
  out.rank = static_cast<int>(pivcol.size());

  std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
  for (int c : pivcol) isPivot[static_cast<std::size_t>(c)] = true;
  for (int freeCol = 0; freeCol < n; ++freeCol) {
    if (isPivot[static_cast<std::size_t>(freeCol)]) continue;
    std::vector<RatFunc> x(static_cast<std::size_t>(n));
    x[static_cast<std::size_t>(freeCol)] = RatFunc(1L);
    for (std::size_t r = pivcol.size(); r-- > 0;) {
      std::size_t pc = static_cast<std::size_t>(pivcol[r]);
      RatFunc acc;
      for (std::size_t c = pc + 1; c < static_cast<std::size_t>(n); ++c) {
        if (!rows[r][c].is_zero() && !x[c].is_zero()) acc += RatFunc(rows[r][c]) * x[c];
      }
      x[pc] = -acc / RatFunc(rows[r][pc]);
    }
    Syzygy s;
    std::array<XPoly*, 3> comps = {&s.U, &s.V, &s.W};
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<ExtScalar> cs;
      for (int i = 0; i < count[k]; ++i) cs.emplace_back(x[static_cast<std::size_t>(offset[k] + i)]);
      *comps[k] = XPoly(std::move(cs), 'x');
    }
    out.basis.push_back(std::move(s));
  }
  return out;
}

bool verify_syzygy(const XPoly& F, const XPoly& G, const XPoly& H, const Syzygy& s) {
  return (s.U * F + s.V * G + s.W * H).is_zero();
}

bool syzygy_proportional(const Syzygy& a, const Syzygy& b) {
  const std::array<const XPoly*, 3> pa = {&a.U, &a.V, &a.W};
  const std::array<const XPoly*, 3> pb = {&b.U, &b.V, &b.W};
  ExtScalar ratio;
  bool have = false;
  for (std::size_t k = 0; k < 3; ++k) {
    if (pa[k]->is_zero() != pb[k]->is_zero()) return false;
    if (!have && !pa[k]->is_zero()) {
      ratio = pb[k]->lc() / pa[k]->lc();
      have = true;
    }
  }
  if (!have) return true;
  for (std::size_t k = 0; k < 3; ++k) {
    if (*pa[k] * ratio != *pb[k]) return false;
  }
  return true;
}

Syzygy solve_syzygy(const XPoly& F, const XPoly& G, const XPoly& H, int delta, int pole_order) {
  SyzygyBounds b = syzygy_bounds(F, G, H, delta, pole_order);
  SyzygyKernel k = syzygy_kernel(F, G, H, b);
  if (k.dimension() == 0) throw AlgebraError("no syzygy within bounds (" + b.str() + ")");
  if (k.dimension() > 1) {
    throw AlgebraError("bounds non-generic: kernel dimension " + std::to_string(k.dimension()) + " (" + b.str() + ")");
  }
  Syzygy s = k.basis.front();
  std::array<XPoly*, 3> comps = {&s.U, &s.V, &s.W};
  static const char* names[] = {"U", "V", "W"};
  for (std::size_t c = 0; c < 3; ++c) {
    if (b.exact[c] && b.max[c] >= 0 && comps[c]->degree() != b.max[c]) {
      throw AlgebraError(std::string("bounds non-generic: deg ") + names[c] + " = " +
                         std::to_string(comps[c]->degree()) + " instead of " + std::to_string(b.max[c]));
    }
  }
  ExtScalar lead;
  if (!s.W.is_zero()) lead = s.W.lc();
  else if (!s.U.is_zero()) lead = s.U.lc();
  else lead = s.V.lc();
  ExtScalar inv = lead.inverse();
  for (auto* c : comps) *c *= inv;
  return s;
}

}  // namespace pvialg
