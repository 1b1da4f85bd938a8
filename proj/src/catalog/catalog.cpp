#include "pvialg/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "pvialg/parser.hpp"

namespace pvialg {

extern const char* const kEmbeddedCatalog;

namespace {

const std::vector<std::pair<EntryKind, const char*>> kKinds = {
    {EntryKind::Field, "field"},
    {EntryKind::Poly, "poly"},
    {EntryKind::Scalar, "scalar"},
    {EntryKind::Identity, "identity"},
    {EntryKind::Covering, "covering"},
    {EntryKind::Substitution, "substitution"},
    {EntryKind::XMap, "xmap"},
    {EntryKind::Normalized, "normalized"},
    {EntryKind::Syzygy, "syzygy"},
    {EntryKind::Expression, "expression"},
    {EntryKind::Root, "root"},
    {EntryKind::Solution, "solution"},
    {EntryKind::Orbit, "orbit"},
    {EntryKind::Reparam, "reparam"},
    {EntryKind::Pattern, "pattern"},
    {EntryKind::Composite, "composite"},
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string collapse(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : trim(s)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void record_error(int line, const std::string& what) {
  throw ParseError("catalog line " + std::to_string(line) + ": " + what, 0);
}

XPoly as_poly(const RatX& r, const std::string& what) {
  if (!r.is_polynomial()) throw AlgebraError(what + " is not a polynomial in x");
  return r.num() * XPoly(r.den().coeff(0).inverse(), 'x');
}

std::array<int, 3> parse_int3(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3) throw ParseError("expected three comma-separated integers: '" + s + "'", 0);
  std::array<int, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) out[k] = std::stoi(parts[k]);
  return out;
}

std::array<int, 4> parse_int4(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 4) throw ParseError("expected four comma-separated integers: '" + s + "'", 0);
  std::array<int, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = std::stoi(parts[k]);
  return out;
}

std::array<mpq_class, 3> parse_rat3(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3) throw ParseError("expected three comma-separated rationals: '" + s + "'", 0);
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

}  // namespace

std::string kind_name(EntryKind k) {
  for (const auto& [kind, name] : kKinds) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<EntryKind> kind_from_name(const std::string& s) {
  for (const auto& [kind, name] : kKinds) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

const std::string* CatalogEntry::attr(const std::string& key) const {
  for (const auto& [k, v] : attrs) {
    if (k == key) return &v;
  }
  return nullptr;
}

const std::string& CatalogEntry::require(const std::string& key) const {
  if (const std::string* v = attr(key)) return *v;
  throw AlgebraError("catalog entry '" + name + "' lacks the key '" + key + "'");
}

std::vector<CatalogEntry> parse_catalog_text(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::istringstream is(text);
  std::string line, record;
  int lineNo = 0, start = 0;
  auto flush = [&]() {
    std::string r = trim(record);
    record.clear();
    if (r.empty()) return;
    CatalogEntry e;
    e.line = start;
    std::size_t eq = r.find('=');
    if (eq == std::string::npos) record_error(start, "expected 'name = kind : body'");
    e.name = trim(r.substr(0, eq));
    if (e.name.size() < 2 || !std::isalpha(static_cast<unsigned char>(e.name[0])) ||
        !std::all_of(e.name.begin(), e.name.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; })) {
      record_error(start, "bad entry name '" + e.name + "'");
    }
    std::size_t colon = r.find(':', eq);
    if (colon == std::string::npos) record_error(start, "expected ':' after the kind");
    std::string kind = trim(r.substr(eq + 1, colon - eq - 1));
    auto k = kind_from_name(kind);
    if (!k) record_error(start, "unknown kind '" + kind + "'");
    e.kind = *k;
    auto fields = split(r.substr(colon + 1), ';');
    e.body = collapse(fields[0]);
    if (e.body.empty()) record_error(start, "empty body");
    for (std::size_t f = 1; f < fields.size(); ++f) {
      std::size_t q = fields[f].find('=');
      if (q == std::string::npos) record_error(start, "attribute without '=': '" + fields[f] + "'");
      std::string key = trim(fields[f].substr(0, q));
      if (key.empty()) record_error(start, "empty attribute name");
      if (e.attr(key)) record_error(start, "repeated attribute '" + key + "'");
      e.attrs.emplace_back(key, collapse(fields[f].substr(q + 1)));
    }
    out.push_back(std::move(e));
  };
  while (std::getline(is, line)) {
    ++lineNo;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (record.empty()) start = lineNo;
    bool cont = !t.empty() && t.back() == '\\';
    if (cont) t.pop_back();
    record += " " + t;
    if (!cont) flush();
  }
  if (!trim(record).empty()) flush();
  return out;
}

UnknownEntry::UnknownEntry(const std::string& name, const std::vector<std::string>& available)
    : std::runtime_error("unknown catalog entry '" + name + "'; available: " + join(available, ", ")) {}

// ---------------------------------------------------------------------------

Catalog::Catalog(const std::string& text) : entries_(parse_catalog_text(text)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!index_.emplace(entries_[k].name, k).second) {
      record_error(entries_[k].line, "duplicate entry '" + entries_[k].name + "'");
    }
  }
  for (const auto& e : entries_) {
    try {
      load(e);
    } catch (const std::exception& ex) {
      record_error(e.line, "entry '" + e.name + "': " + ex.what());
    }
  }
}

const Catalog& Catalog::builtin() {
  static const Catalog cat(kEmbeddedCatalog);
  return cat;
}

const CatalogEntry& Catalog::lookup(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownEntry(name, names());
  return entries_[it->second];
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

std::vector<std::string> Catalog::names(EntryKind kind) const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.kind == kind) out.push_back(e.name);
  }
  return out;
}

ParseContext Catalog::context(const CatalogEntry& e) const {
  ParseContext ctx;
  if (const std::string* p = e.attr("param")) {
    if (p->size() != 1) throw ParseError("param must be a single letter", 0);
    ctx.param = (*p)[0];
  }
  if (const std::string* f = e.attr("field")) ctx.field = field(*f);
  ctx.lookup = [this](const std::string& n) -> const RatX* {
    auto it = values_.find(n);
    return it == values_.end() ? nullptr : &it->second;
  };
  return ctx;
}

RatX Catalog::parse_in(const CatalogEntry& e, const std::string& text) const {
  ParseContext ctx = context(e);
  return parse_expression(text, ctx);
}

void Catalog::load(const CatalogEntry& e) {
  switch (e.kind) {
    case EntryKind::Field: {
      std::size_t eq = e.body.find('=');
      if (eq == std::string::npos || collapse(e.body.substr(0, eq)) != "w^2") {
        throw ParseError("field body must read 'w^2 = <polynomial>'", 0);
      }
      ParseContext ctx;
      if (const std::string* p = e.attr("param")) ctx.param = (*p)[0];
      fields_[e.name] = make_field(parse_param_poly(e.body.substr(eq + 1), ctx));
      return;
    }
    case EntryKind::Poly:
    case EntryKind::Covering:
      values_.emplace(e.name, parse_in(e, e.body));
      if (e.kind == EntryKind::Covering) {
        if (values_.at(e.name).degree() < 1) throw AlgebraError("constant covering");
        pattern(e.require("pattern"));
      }
      return;
    case EntryKind::Scalar:
    case EntryKind::Solution: {
      RatX v = parse_in(e, e.body);
      if (!v.is_constant()) throw ParseError("value depends on x", 0);
      values_.emplace(e.name, v);
      if (e.kind == EntryKind::Solution) solution(e.name);
      return;
    }
    case EntryKind::Identity: {
      auto sides = e.body.find("==");
      if (sides == std::string::npos) throw ParseError("identity needs 'lhs == rhs'", 0);
      parse_in(e, e.body.substr(0, sides));
      parse_in(e, e.body.substr(sides + 2));
      return;
    }
    case EntryKind::Substitution:
      if (!parse_in(e, e.body).is_constant()) throw ParseError("substitution depends on x", 0);
      return;
    case EntryKind::XMap:
      moebius_from(parse_in(e, e.body));
      return;
    case EntryKind::Normalized:
      normalized(e.name);
      if (const std::string* c = e.attr("closed")) parse_in(e, *c);
      return;
    case EntryKind::Syzygy:
      syzygy(e.name);
      return;
    case EntryKind::Expression:
    case EntryKind::Root:
      syzygy(e.require("syzygy"));
      parse_rat3(e.require("e"));
      parse_in(e, e.body);
      return;
    case EntryKind::Orbit:
      parse_permutation(e.body);
      solution(e.require("solution"));
      return;
    case EntryKind::Reparam:
      solution(e.require("solution"));
      return;
    case EntryKind::Pattern:
      pattern(e.name);
      return;
    case EntryKind::Composite:
      compose_chain(e.body);
      return;
  }
}

FieldPtr Catalog::field(const std::string& name) const {
  auto it = fields_.find(name);
  if (it == fields_.end()) {
    lookup(name);
    throw AlgebraError("'" + name + "' is not a field");
  }
  return it->second;
}

const RatX& Catalog::value(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) {
    lookup(name);
    throw AlgebraError("'" + name + "' has no expression value");
  }
  return it->second;
}

Covering Catalog::covering(const std::string& name) const {
  const CatalogEntry& e = lookup(name);
  if (e.kind != EntryKind::Covering) throw AlgebraError("'" + name + "' is not a covering");
  return {name, value(name)};
}

NormalizedCovering Catalog::normalized(const std::string& name) const {
  const CatalogEntry& e = lookup(name);
  if (e.kind != EntryKind::Normalized) throw AlgebraError("'" + name + "' is not a normalized covering");
  NormalizedCovering n;
  n.base = covering(e.body);
  n.k = parse_int3(e.require("k"));
  FieldPtr current;
  for (const auto& s : split_words(e.require("stages"))) {
    const CatalogEntry& st = lookup(s);
    if (st.kind == EntryKind::Substitution) {
      FieldPtr target = st.attr("field") ? field(*st.attr("field")) : nullptr;
      RatX image = parse_in(st, st.body);
      NormalizationStage stage;
      stage.param = make_param_substitution(image.constant_value().a(), current, target);
      current = stage.param->target;
      n.stages.push_back(stage);
    } else if (st.kind == EntryKind::XMap) {
      if (n.stages.empty() || !n.stages.back().xmap.is_identity()) n.stages.emplace_back();
      n.stages.back().xmap = moebius_from(parse_in(st, st.body));
    } else {
      throw AlgebraError("stage '" + s + "' is neither a substitution nor an xmap");
    }
  }
  return n;
}

std::optional<std::string> Catalog::normalization_of(const std::string& cov) const {
  for (const auto& e : entries_) {
    if (e.kind == EntryKind::Normalized && e.body == cov) return e.name;
  }
  return std::nullopt;
}

RamificationPattern Catalog::pattern(const std::string& name) const {
  const CatalogEntry& e = lookup(name);
  if (e.kind != EntryKind::Pattern) throw AlgebraError("'" + name + "' is not a pattern");
  return parse_pattern(e.body);
}

SyzygyRecord Catalog::syzygy(const std::string& name) const {
  const CatalogEntry& e = lookup(name);
  if (e.kind != EntryKind::Syzygy) throw AlgebraError("'" + name + "' is not a syzygy");
  auto comps = split(e.body, '|');
  auto against = split(e.require("against"), '|');
  if (comps.size() != 3 || against.size() != 3) throw ParseError("syzygy needs three '|'-separated parts", 0);
  SyzygyRecord r;
  r.syzygy.U = as_poly(parse_in(e, comps[0]), "U");
  r.syzygy.V = as_poly(parse_in(e, comps[1]), "V");
  r.syzygy.W = as_poly(parse_in(e, comps[2]), "W");
  r.F = as_poly(parse_in(e, against[0]), "F");
  r.G = as_poly(parse_in(e, against[1]), "G");
  r.H = as_poly(parse_in(e, against[2]), "H");
  r.delta = std::stoi(e.require("delta"));
  const std::string* b = e.attr("bounded");
  r.bounded = b && *b == "yes";
  r.covering = e.require("covering");
  covering(r.covering);
  return r;
}

AlgebraicSolution Catalog::solution(const std::string& name) const {
  const CatalogEntry& e = lookup(name);
  if (e.kind != EntryKind::Solution) throw AlgebraError("'" + name + "' is not a solution");
  AlgebraicSolution s;
  s.label = name;
  s.y = value(name).constant_value();
  const std::string& t = e.require("t");
  s.t = value(t).constant_value();
  s.theta = parse_theta(e.require("theta"));
  return s;
}

// ---------------------------------------------------------------------------

std::vector<std::string> Catalog::expected_checks(const CatalogEntry& e) const {
  switch (e.kind) {
    case EntryKind::Field: return {"squarefree"};
    case EntryKind::Poly:
    case EntryKind::Scalar:
    case EntryKind::Substitution: return {"parse"};
    case EntryKind::XMap: return {"invertible"};
    case EntryKind::Identity: return {"identity"};
    case EntryKind::Covering: {
      std::vector<std::string> c{"pattern"};
      if (e.attr("extra")) c.push_back("extra-point");
      return c;
    }
    case EntryKind::Normalized: {
      std::vector<std::string> c;
      if (e.attr("closed")) c.push_back("closed-form");
      c.push_back("special-points");
      return c;
    }
    case EntryKind::Syzygy: {
      std::vector<std::string> c{"identity"};
      const std::string* b = e.attr("bounded");
      if (b && *b == "yes") {
        c.push_back("bounds");
        c.push_back("solver");
      }
      return c;
    }
    case EntryKind::Expression: return {"expression"};
    case EntryKind::Root: return {"root"};
    case EntryKind::Solution: {
      std::vector<std::string> c{"residual"};
      if (e.attr("extra")) c.push_back("extra-point");
      if (e.attr("derive")) c.push_back("derive");
      return c;
    }
    case EntryKind::Orbit: return {"residual", "theta"};
    case EntryKind::Reparam: return {"residual"};
    case EntryKind::Pattern: {
      std::vector<std::string> c{"hurwitz"};
      if (e.attr("degree")) c.push_back("degree");
      if (e.attr("k")) c.push_back("degree-formula");
      return c;
    }
    case EntryKind::Composite: {
      std::vector<std::string> c{"compose"};
      if (e.attr("equivalent")) c.push_back("equivalent");
      return c;
    }
  }
  return {};
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
CheckResult timed(const std::string& entry, const std::string& check, Fn&& fn) {
  CheckResult r;
  r.entry = entry;
  r.check = check;
  auto t0 = Clock::now();
  try {
    fn(r);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("error: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

void residual_check(CheckResult& r, const AlgebraicSolution& s) {
  ResidualReport rep = residual_exact(s);
  r.pass = rep.exact_zero;
  r.detail = "theta=" + s.theta.str() + (rep.exact_zero ? ", exact zero residual" : ", nonzero residual");
}

void numeric_check(CheckResult& r, const AlgebraicSolution& s, const VerifyOptions& opt) {
  auto samples = residual_samples(s, opt.samples, opt.seed, opt.branch);
  double worst = 0;
  for (const auto& smp : samples) worst = std::max(worst, smp.residual / std::max(1.0, smp.scale));
  r.pass = worst < 1e-10;
  std::ostringstream os;
  os << samples.size() << " samples, max relative residual " << worst;
  r.detail = os.str();
}

}  // namespace

std::vector<CheckResult> Catalog::run_checks(const CatalogEntry& e, const VerifyOptions& opt) const {
  std::vector<CheckResult> out;
  const std::string& n = e.name;
  auto add = [&](const std::string& check, auto&& fn) { out.push_back(timed(n, check, fn)); };
  switch (e.kind) {
    case EntryKind::Field:
      add("squarefree", [&](CheckResult& r) {
        r.pass = true;
        r.detail = field(n)->str();
      });
      break;
    case EntryKind::Poly:
    case EntryKind::Scalar:
    case EntryKind::Substitution:
      add("parse", [&](CheckResult& r) {
        parse_in(e, e.body);
        r.pass = true;
      });
      break;
    case EntryKind::XMap:
      add("invertible", [&](CheckResult& r) {
        moebius_from(parse_in(e, e.body));
        r.pass = true;
      });
      break;
    case EntryKind::Identity:
      add("identity", [&](CheckResult& r) {
        auto sides = e.body.find("==");
        RatX d = parse_in(e, e.body.substr(0, sides)) - parse_in(e, e.body.substr(sides + 2));
        r.pass = d.is_zero();
        r.detail = r.pass ? "exact" : "difference " + d.str();
      });
      break;
    case EntryKind::Covering: {
      Covering c = covering(n);
      add("pattern", [&](CheckResult& r) {
        PatternReport rep = verify_pattern(c, pattern(e.require("pattern")));
        r.pass = rep.pass;
        std::vector<std::string> parts;
        for (const auto& fd : rep.fibers) {
          std::vector<std::string> p;
          for (int m : fd.parts()) p.push_back(std::to_string(m));
          parts.push_back(join(p, "+"));
        }
        r.detail = "fibers " + join(parts, " | ");
        if (!rep.diagnostics.empty()) r.detail += "; " + join(rep.diagnostics, "; ");
      });
      if (const std::string* x = e.attr("extra")) {
        add("extra-point", [&](CheckResult& r) {
          ExtScalar got = extra_ramification_point(c);
          ExtScalar want = parse_in(e, *x).constant_value();
          r.pass = got == want;
          r.detail = "x = " + got.str();
        });
      }
      break;
    }
    case EntryKind::Normalized: {
      NormalizedCovering nc = normalized(n);
      Covering hat = normalize(nc.base, nc.stages);
      if (const std::string* closed = e.attr("closed")) {
        add("closed-form", [&](CheckResult& r) {
          r.pass = hat.map == parse_in(e, *closed);
          r.detail = r.pass ? "normalized map equals the closed form" : "normalized map differs from the closed form";
        });
      }
      add("special-points", [&](CheckResult& r) {
        FiberTable fibers = fiber_divisors(hat);
        std::array<mpq_class, 3> inv{mpq_class(1, nc.k[0]), mpq_class(1, nc.k[1]), mpq_class(1, nc.k[2])};
        SpecialPoints sp = special_points(fibers, inv);
        ThetaVector th = theta_from_covering(fibers, nc.k);
        r.pass = true;
        if (const std::string* t = e.attr("t")) r.pass = sp.t == value(*t).constant_value();
        r.detail = "theta=" + th.str() + (r.pass ? ", t matches" : ", t differs: " + sp.t.str());
      });
      break;
    }
    case EntryKind::Syzygy: {
      SyzygyRecord s = syzygy(n);
      add("identity", [&](CheckResult& r) {
        r.pass = verify_syzygy(s.F, s.G, s.H, s.syzygy);
        r.detail = r.pass ? "U F + V G + W H = 0" : "U F + V G + W H != 0";
      });
      if (s.bounded) {
        Covering c = covering(s.covering);
        int pole = fiber_divisor(c, Fiber::Infinity).at_infinity;
        add("bounds", [&](CheckResult& r) {
          SyzygyBounds b = syzygy_bounds(s.F, s.G, s.H, s.delta, pole);
          std::array<const XPoly*, 3> comp{&s.syzygy.U, &s.syzygy.V, &s.syzygy.W};
          r.pass = true;
          for (std::size_t j = 0; j < 3; ++j) {
            int d = comp[j]->is_zero() ? -1 : comp[j]->degree();
            if (d > b.max[j] || (b.exact[j] && d != b.max[j])) r.pass = false;
          }
          r.detail = b.str();
        });
        add("solver", [&](CheckResult& r) {
          Syzygy got = solve_syzygy(s.F, s.G, s.H, s.delta, pole);
          r.pass = syzygy_proportional(got, s.syzygy);
          r.detail = r.pass ? "solver output proportional" : "solver output differs: W = " + got.W.str();
        });
      }
      break;
    }
    case EntryKind::Expression:
    case EntryKind::Root: {
      add(e.kind == EntryKind::Root ? "root" : "expression", [&](CheckResult& r) {
        SyzygyRecord s = syzygy(e.require("syzygy"));
        RatX ex = expression21(s.F, s.G, s.H, s.syzygy, parse_rat3(e.require("e")), covering(s.covering));
        RatX want = parse_in(e, e.body);
        if (e.kind == EntryKind::Root) {
          ExtScalar root = linear_root(ex);
          r.pass = root == want.constant_value();
          r.detail = "root " + root.str();
        } else {
          r.pass = ex == want;
          r.detail = r.pass ? "exact match" : "got " + ex.str();
        }
      });
      break;
    }
    case EntryKind::Solution: {
      AlgebraicSolution s = solution(n);
      AlgebraicSolution checked = s;
      if (opt.theta) checked.theta = *opt.theta;
      add("residual", [&](CheckResult& r) { residual_check(r, checked); });
      if (opt.samples > 0) add("residual-numeric", [&](CheckResult& r) { numeric_check(r, checked, opt); });
      if (const std::string* x = e.attr("extra")) {
        add("extra-point", [&](CheckResult& r) {
          NormalizedCovering nc = normalized(*x);
          AlgebraicSolution got = solution_from_extra_point(normalize(nc.base, nc.stages), nc.k, n);
          bool ty = got.t == s.t, yy = got.y == s.y, th = got.theta == s.theta;
          r.pass = ty && yy && th;
          r.detail = std::string("t ") + (ty ? "matches" : "differs") + ", y " + (yy ? "matches" : "differs") +
                     ", theta " + got.theta.str();
        });
      }
      if (const std::string* d = e.attr("derive")) {
        add("derive", [&](CheckResult& r) {
          auto parts = split(*d, ',');
          if (parts.size() != 3) throw ParseError("derive = <normalized>,<fpow>,<delta>", 0);
          NormalizedCovering nc = normalized(parts[0]);
          auto ex = pullback_exponents(nc.base, nc.k, std::stoi(parts[1]));
          SyzygySolution got = derive_solution(nc.base, ex, std::stoi(parts[2]), nc.stages, n);
          bool ty = got.solution.t == s.t, yy = got.solution.y == s.y;
          bool th = theta_equivalent(got.solution.theta, s.theta);
          r.pass = ty && yy && th;
          r.detail = std::string("t ") + (ty ? "matches" : "differs") + ", y " + (yy ? "matches" : "differs") +
                     ", theta " + got.solution.theta.str() + (th ? " (equivalent)" : " (not equivalent)");
        });
      }
      break;
    }
    case EntryKind::Orbit: {
      AlgebraicSolution moved;
      auto build = [&]() {
        moved = fractional_linear_orbit(solution(e.require("solution")), parse_permutation(e.body));
        if (const std::string* then = e.attr("then")) {
          RatX img = parse_in(e, *then);
          moved = substitute_solution_parameter(moved, img.constant_value().a());
        }
      };
      add("residual", [&](CheckResult& r) {
        build();
        residual_check(r, moved);
      });
      add("theta", [&](CheckResult& r) {
        ThetaVector want = parse_theta(e.require("theta"));
        r.pass = theta_equivalent(moved.theta, want);
        r.detail = "theta=" + moved.theta.str();
      });
      break;
    }
    case EntryKind::Reparam:
      add("residual", [&](CheckResult& r) {
        RatX img = parse_in(e, e.body);
        AlgebraicSolution s = substitute_solution_parameter(solution(e.require("solution")), img.constant_value().a());
        residual_check(r, s);
      });
      break;
    case EntryKind::Pattern: {
      RamificationPattern p = pattern(n);
      add("hurwitz", [&](CheckResult& r) {
        std::string err = pattern_sum_error(p);
        r.pass = err.empty() && hurwitz_parts_check(p);
        r.detail = err.empty() ? std::to_string(p.part_count()) + " parts, degree " + std::to_string(p.degree()) : err;
      });
      if (const std::string* d = e.attr("degree")) {
        add("degree", [&](CheckResult& r) {
          r.pass = p.degree() == std::stoi(*d);
          r.detail = "degree " + std::to_string(p.degree());
        });
      }
      if (e.attr("k")) {
        add("degree-formula", [&](CheckResult& r) {
          mpq_class deg = degree_formula(parse_int3(e.require("k")), parse_int4(e.require("a")),
                                         parse_int4(e.require("fibers")));
          r.pass = deg == p.degree();
          r.detail = "formula gives " + deg.get_str();
        });
      }
      break;
    }
    case EntryKind::Composite:
      add("compose", [&](CheckResult& r) {
        RamificationPattern c = compose_chain(e.body);
        r.pass = hurwitz_parts_check(c);
        r.detail = c.str();
      });
      if (const std::string* eq = e.attr("equivalent")) {
        add("equivalent", [&](CheckResult& r) {
          RamificationPattern c = compose_chain(e.body);
          r.pass = patterns_equivalent(c, pattern(*eq));
          r.detail = c.str() + (r.pass ? " ~ " : " !~ ") + pattern(*eq).str();
        });
      }
      break;
  }
  return out;
}

std::vector<CheckResult> Catalog::verify(const std::string& name, const VerifyOptions& opt) const {
  return run_checks(lookup(name), opt);
}

std::vector<CheckResult> Catalog::verify_all(const VerifyOptions& opt) const {
  std::vector<CheckResult> out;
  for (const auto& e : entries_) {
    auto r = run_checks(e, opt);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::optional<std::string> Catalog::canonical(const CatalogEntry& e) const {
  switch (e.kind) {
    case EntryKind::Field: return field(e.name)->str();
    case EntryKind::Poly:
    case EntryKind::Scalar:
    case EntryKind::Covering:
    case EntryKind::Solution: return value(e.name).str();
    case EntryKind::Pattern: return pattern(e.name).str();
    case EntryKind::Composite: return compose_chain(e.body).str();
    case EntryKind::Syzygy: {
      SyzygyRecord s = syzygy(e.name);
      return s.syzygy.U.str() + " | " + s.syzygy.V.str() + " | " + s.syzygy.W.str();
    }
    default: return std::nullopt;
  }
}

std::string export_text(const CatalogEntry& e) {
  std::string s = e.name + " = " + kind_name(e.kind) + " : " + e.body;
  for (const auto& [k, v] : e.attrs) s += " ; " + k + " = " + v;
  return s;
}

nlohmann::json export_json(const Catalog& cat, const CatalogEntry& e) {
  nlohmann::json j;
  j["schema"] = 1;
  j["name"] = e.name;
  j["kind"] = kind_name(e.kind);
  j["body"] = e.body;
  nlohmann::json attrs = nlohmann::json::object();
  for (const auto& [k, v] : e.attrs) attrs[k] = v;
  j["attributes"] = attrs;
  if (auto c = cat.canonical(e)) j["canonical"] = *c;
  j["checks"] = cat.expected_checks(e);
  return j;
}

}  // namespace pvialg
