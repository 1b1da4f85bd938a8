#include <algorithm>
#include <cctype>
#include <sstream>

#include "pvialg/covering.hpp"

namespace pvialg {

int RamificationPattern::degree() const {
  int n = 0;
  for (const auto& p : fibers[0]) n += p.order;
  return n;
}

std::size_t RamificationPattern::part_count() const {
  return fibers[0].size() + fibers[1].size() + fibers[2].size();
}

std::vector<int> RamificationPattern::orders(int fiber) const {
  std::vector<int> out;
  for (const auto& p : fibers[static_cast<std::size_t>(fiber)]) out.push_back(p.order);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string RamificationPattern::str() const {
  std::string s = kind == PatternKind::Belyi ? "R3(" : "R4(";
  for (std::size_t f = 0; f < 3; ++f) {
    if (f) s += " | ";
    auto parts = fibers[f];
    std::stable_sort(parts.begin(), parts.end(),
                     [](const PatternPart& a, const PatternPart& b) { return a.order > b.order; });
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) s += "+";
      s += std::to_string(parts[k].order);
      if (parts[k].hat) s += "^";
    }
  }
  return s + ")";
}

namespace {

class PatternParser {
 public:
  explicit PatternParser(const std::string& s) : s_(s) {}

  RamificationPattern run() {
    RamificationPattern p;
    skip();
    if (s_.compare(pos_, 2, "R3") == 0) p.kind = PatternKind::Belyi;
    else if (s_.compare(pos_, 2, "R4") == 0) p.kind = PatternKind::AlmostBelyi;
    else fail("pattern must start with R3 or R4");
    pos_ += 2;
    expect('(');
    for (std::size_t f = 0; f < 3; ++f) {
      if (f) expect('|');
      p.fibers[f] = partition();
    }
    expect(')');
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const char* tok) {
    skip();
    std::size_t n = std::char_traits<char>::length(tok);
    if (s_.compare(pos_, n, tok) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }

  void expect(char c) {
    char tok[2] = {c, 0};
    if (!eat(tok)) fail(std::string("expected '") + c + "'");
  }

  int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer");
    if (pos_ - start > 6) fail("number too large");
    int v = std::stoi(s_.substr(start, pos_ - start));
    if (v <= 0) fail("parts must be positive");
    return v;
  }

  std::vector<PatternPart> partition() {
    std::vector<PatternPart> out;
    do {
      PatternPart part{number(), false};
      if (eat("^")) part.hat = true;
      int copies = 1;
      if (eat("*") || eat("\xC2\xB7")) copies = number();
      out.insert(out.end(), static_cast<std::size_t>(copies), part);
    } while (eat("+"));
    return out;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RamificationPattern parse_pattern(const std::string& text) { return PatternParser(text).run(); }

std::string pattern_sum_error(const RamificationPattern& p) {
  int n = p.degree();
  for (int f = 1; f < 3; ++f) {
    int m = 0;
    for (const auto& q : p.fibers[static_cast<std::size_t>(f)]) m += q.order;
    if (m != n) {
      return "partition over " + fiber_name(static_cast<Fiber>(f)) + " sums to " + std::to_string(m) +
             ", expected " + std::to_string(n);
    }
  }
  return {};
}

bool hurwitz_parts_check(const RamificationPattern& p) {
  if (!pattern_sum_error(p).empty()) return false;
  std::size_t want = static_cast<std::size_t>(p.degree()) + (p.kind == PatternKind::AlmostBelyi ? 3 : 2);
  return p.part_count() == want;
}

RamificationPattern compose_patterns(const RamificationPattern& outer, const RamificationPattern& inner) {
  for (const auto* p : {&outer, &inner}) {
    std::string err = pattern_sum_error(*p);
    if (!err.empty()) throw AlgebraError("invalid pattern " + p->str() + ": " + err);
  }
  const int m = inner.degree();
  RamificationPattern r;
  r.kind = (outer.kind == PatternKind::AlmostBelyi || inner.kind == PatternKind::AlmostBelyi)
               ? PatternKind::AlmostBelyi
               : PatternKind::Belyi;
  for (std::size_t f = 0; f < 3; ++f) {
    const auto& innerParts = inner.fibers[f];
    bool ramified = std::any_of(innerParts.begin(), innerParts.end(), [](const PatternPart& q) { return q.order > 1; });
    int hats = 0;
    for (const auto& part : outer.fibers[f]) {
      if (part.hat) {
        if (++hats > 1) throw AlgebraError("more than one hatted point over " + fiber_name(static_cast<Fiber>(f)));
        for (const auto& q : innerParts) r.fibers[f].push_back({part.order * q.order, q.hat});
      } else {
        r.fibers[f].insert(r.fibers[f].end(), static_cast<std::size_t>(m), PatternPart{part.order, false});
      }
    }
    if (ramified && hats == 0) {
      throw AlgebraError("inner covering is ramified over " + fiber_name(static_cast<Fiber>(f)) +
                         " but the outer pattern has no hatted point there");
    }
  }
  return r;
}

RamificationPattern compose_chain(const std::string& text) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size();) {
    std::size_t len = 0;
    if (text.compare(k, 3, "\xE2\x88\x98") == 0) len = 3;
    else if (text[k] == 'o' && (k == 0 || text[k - 1] == ' ' || text[k - 1] == ')')) len = 1;
    if (len) {
      pieces.push_back(text.substr(start, k - start));
      k += len;
      start = k;
    } else {
      ++k;
    }
  }
  pieces.push_back(text.substr(start));
  std::vector<RamificationPattern> pats;
  for (const auto& p : pieces) pats.push_back(parse_pattern(p));
  RamificationPattern acc = pats.back();
  for (std::size_t k = pats.size() - 1; k-- > 0;) acc = compose_patterns(acc, pats[k]);
  return acc;
}

bool patterns_equivalent(const RamificationPattern& a, const RamificationPattern& b) {
  if (a.kind != b.kind) return false;
  std::array<int, 3> perm{0, 1, 2};
  do {
    bool same = true;
    for (int f = 0; f < 3 && same; ++f) same = a.orders(f) == b.orders(perm[static_cast<std::size_t>(f)]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

std::string join_parts(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "+" : "") << v[k];
  return v.empty() ? "(empty)" : os.str();
}

}  // namespace

PatternReport verify_pattern(const Covering& c, const RamificationPattern& p) {
  PatternReport rep;
  rep.pass = true;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.diagnostics.push_back(msg);
  };
  std::string err = pattern_sum_error(p);
  if (!err.empty()) fail("pattern: " + err);
  if (!hurwitz_parts_check(p)) fail("pattern violates the Hurwitz parts count");
  if (c.degree() != p.degree()) {
    fail("degree " + std::to_string(c.degree()) + " but the pattern has degree " + std::to_string(p.degree()));
  }
  for (int f = 0; f < 3; ++f) {
    rep.fibers[static_cast<std::size_t>(f)] = fiber_divisor(c, static_cast<Fiber>(f));
    std::vector<int> got = rep.fibers[static_cast<std::size_t>(f)].parts();
    std::vector<int> want = p.orders(f);
    if (got != want) {
      fail("fiber over " + fiber_name(static_cast<Fiber>(f)) + ": expected " + join_parts(want) + ", found " +
           join_parts(got));
    }
  }
  XPoly W = ramification_residue(c, rep.fibers);
  if (p.kind == PatternKind::AlmostBelyi) {
    if (W.degree() == 1) rep.extra_point = -W.coeff(0) / W.coeff(1);
    else fail("expected one extra simple ramification point, residual ramification has degree " +
              std::to_string(W.degree()));
  } else if (W.degree() != 0) {
    fail("Belyi pattern but ramification outside the fibers has degree " + std::to_string(W.degree()));
  }
  return rep;
}

}  // namespace pvialg
