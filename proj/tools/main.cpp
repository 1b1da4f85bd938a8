// pvialg command line: verify catalog entries, derive solutions through the
// syzygy pipeline, evaluate the degree formula, apply the quadratic
// transformation, export catalog data.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <algorithm>
#include <chrono>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvialg/catalog.hpp"
#include "pvialg/parser.hpp"

using namespace pvialg;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  std::string theta;
  int samples = 0;
  std::uint64_t seed = 1;
  std::string branch = "+,+";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_branch(const std::string& s) {
  auto sign = [&](const std::string& t) {
    if (t == "+" || t == "+1" || t == "1") return 1;
    if (t == "-" || t == "-1") return -1;
    throw UsageError("--branch expects signs like '+,-', got '" + s + "'");
  };
  std::size_t c = s.find(',');
  if (c == std::string::npos) return {sign(s), 1};
  return {sign(s.substr(0, c)), sign(s.substr(c + 1))};
}

std::vector<int> parse_ints(const std::string& s, std::size_t n, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  if (out.size() != n) throw UsageError(std::string(flag) + " expects " + std::to_string(n) + " integers");
  return out;
}

std::complex<double> parse_complex(const std::string& s, const char* flag) {
  std::stringstream ss(s);
  std::string re, im;
  std::getline(ss, re, ',');
  std::getline(ss, im, ',');
  try {
    double r = std::stod(re);
    double i = im.empty() ? 0.0 : std::stod(im);
    return {r, i};
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected 're' or 're,im', got '" + s + "'");
  }
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string complex_text(std::complex<double> z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

json checks_json(const std::vector<CheckResult>& rs, json& timing) {
  json arr = json::array();
  for (const auto& r : rs) {
    arr.push_back({{"entry", r.entry}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}});
    timing[r.entry + "/" + r.check] = r.seconds;
  }
  return arr;
}

bool all_pass(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
}

void print_checks(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.entry << " " << r.check;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_verify(const Options& o, const std::string& target, const std::string& name) {
  const Catalog& cat = Catalog::builtin();
  VerifyOptions vo;
  if (!o.theta.empty()) vo.theta = parse_theta(o.theta);
  vo.samples = o.samples;
  vo.seed = o.seed;
  vo.branch = parse_branch(o.branch).first;

  std::vector<CheckResult> rs;
  if (target == "all") {
    if (!name.empty()) throw UsageError("'verify all' takes no name");
    rs = cat.verify_all(vo);
  } else {
    static const std::map<std::string, EntryKind> kinds = {
        {"covering", EntryKind::Covering}, {"solution", EntryKind::Solution}, {"syzygy", EntryKind::Syzygy},
        {"pattern", EntryKind::Pattern},   {"normalized", EntryKind::Normalized}};
    if (name.empty()) throw UsageError("verify " + target + " needs an entry name");
    const CatalogEntry& e = cat.lookup(name);
    if (target != "entry") {
      auto it = kinds.find(target);
      if (it == kinds.end()) throw UsageError("unknown verify target '" + target + "'");
      if (e.kind != it->second) throw UsageError("'" + name + "' is a " + kind_name(e.kind) + ", not a " + target);
    }
    rs = cat.verify(name, vo);
  }
  bool ok = all_pass(rs);
  if (o.json) {
    json timing = json::object();
    json out = {{"schema", 1}, {"command", "verify"}, {"target", target}, {"pass", ok}};
    if (!name.empty()) out["name"] = name;
    out["checks"] = checks_json(rs, timing);
    out["timing"] = timing;
    std::cout << out.dump(2) << "\n";
  } else {
    print_checks(rs);
    std::cout << (ok ? "PASS" : "FAIL") << " (" << rs.size() << " checks)\n";
  }
  return ok ? kPass : kFail;
}

int cmd_derive(const Options& o, const std::string& name, int fpow, int delta) {
  const Catalog& cat = Catalog::builtin();
  const CatalogEntry& e = cat.lookup(name);
  std::string norm = name;
  if (e.kind == EntryKind::Covering) {
    auto n = cat.normalization_of(name);
    if (!n) throw UsageError("covering '" + name + "' has no normalization in the catalog");
    norm = *n;
  } else if (e.kind != EntryKind::Normalized) {
    throw UsageError("'" + name + "' is not a covering");
  }
  NormalizedCovering nc = cat.normalized(norm);
  json out = {{"schema", 1}, {"command", "derive"}, {"covering", nc.base.name}, {"fpow", fpow}, {"delta", delta}};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    auto ex = pullback_exponents(nc.base, nc.k, fpow);
    PullbackData pd = pullback_polynomials(nc.base, ex);
    SyzygyBounds b = syzygy_bounds(pd.F, pd.G, pd.H, delta, pd.pole_order);
    Syzygy syz = solve_syzygy(pd.F, pd.G, pd.H, delta, pd.pole_order);
    SyzygySolution sol = solution_from_syzygy(pd.F, pd.G, pd.H, syz, ex, delta, nc.base, nc.stages, name);
    ResidualReport rr = residual_exact(sol.solution);
    ok = rr.exact_zero;
    out["e"] = {ex[0].get_str(), ex[1].get_str(), ex[2].get_str()};
    out["F"] = pd.F.str();
    out["G"] = pd.G.str();
    out["H"] = pd.H.str();
    out["bounds"] = b.str();
    out["syzygy"] = {syz.U.str(), syz.V.str(), syz.W.str()};
    out["expression"] = sol.expression.str();
    out["root"] = sol.root.str();
    out["t"] = sol.solution.t.str();
    out["y"] = sol.solution.y.str();
    out["theta"] = sol.solution.theta.str();
    out["theta_canonical"] = canonical_theta(sol.solution.theta).str();
    out["residual_zero"] = rr.exact_zero;
    std::string match;
    for (const auto& s : cat.names(EntryKind::Solution)) {
      AlgebraicSolution c = cat.solution(s);
      if (c.t == sol.solution.t && c.y == sol.solution.y) match = s;
    }
    if (!match.empty()) out["catalog_match"] = match;
  } catch (const AlgebraError& ex) {
    out["error"] = ex.what();
  }
  out["pass"] = ok;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.json) {
    out["timing"] = {{"seconds", secs}};
    std::cout << out.dump(2) << "\n";
  } else {
    if (out.contains("error")) {
      std::cout << "error: " << out["error"].get<std::string>() << "\n";
    } else {
      for (const char* k : {"e", "F", "G", "H", "bounds", "syzygy", "expression", "root", "t", "y", "theta"}) {
        const json& v = out[k];
        std::cout << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      std::cout << "residual " << (ok ? "exact zero" : "NONZERO") << "\n";
      if (out.contains("catalog_match")) std::cout << "matches catalog entry " << out["catalog_match"].get<std::string>() << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_degree(const Options& o, const std::string& k, const std::string& a, const std::string& fibers,
               const std::string& pattern) {
  json out = {{"schema", 1}, {"command", "degree"}};
  std::vector<std::string> lines;
  bool ok = true;
  if (!pattern.empty()) {
    RamificationPattern p;
    try {
      p = parse_pattern(pattern);
    } catch (const ParseError& e) {
      throw UsageError(std::string("malformed pattern: ") + e.what());
    }
    std::string err = pattern_sum_error(p);
    if (!err.empty()) throw UsageError("malformed pattern: " + err);
    out["pattern"] = p.str();
    out["pattern_degree"] = p.degree();
    ok = hurwitz_parts_check(p);
    out["hurwitz"] = ok;
    lines.push_back("pattern " + p.str() + ": degree " + std::to_string(p.degree()) + ", parts count " +
                    (ok ? "ok" : "violates the Hurwitz count"));
  }
  if (!k.empty()) {
    auto kv = parse_ints(k, 3, "--k");
    std::array<int, 3> ka{kv[0], kv[1], kv[2]};
    if (!a.empty() || !fibers.empty()) {
      if (a.empty() || fibers.empty()) throw UsageError("--a and --fibers go together");
      auto av = parse_ints(a, 4, "--a");
      auto fv = parse_ints(fibers, 4, "--fibers");
      mpq_class d = degree_formula(ka, {av[0], av[1], av[2], av[3]}, {fv[0], fv[1], fv[2], fv[3]});
      bool feasible = d.get_den() == 1 && d > 0;
      out["degree"] = d.get_str();
      out["feasible"] = feasible;
      lines.push_back("degree " + d.get_str() + " (" + (feasible ? "feasible" : "infeasible") + ")");
    }
    DegreeForm f = degree_form(ka);
    out["form"] = f.str();
    lines.push_back("degree form " + f.str());
    if (!o.theta.empty()) {
      ThetaVector th = parse_theta(o.theta);
      mpq_class d = f.eval(th.v);
      out["theta"] = th.str();
      out["theta_degree"] = d.get_str();
      lines.push_back("at theta " + th.str() + ": " + d.get_str());
    }
  } else if (pattern.empty()) {
    throw UsageError("degree needs --k or --pattern");
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  else for (const auto& l : lines) std::cout << l << "\n";
  return ok ? kPass : kFail;
}

int cmd_quadratic(const Options& o, const std::vector<std::pair<std::string, std::string>>& points, bool ramani,
                  const std::string& a) {
  auto [b0, b1] = parse_branch(o.branch);
  json out = {{"schema", 1}, {"command", ramani ? "ramani" : "quadratic"}};
  json results = json::array();
  bool ok = true;
  for (const auto& [ys, ts] : points) {
    std::complex<double> y = parse_complex(ys, "--y"), t = parse_complex(ts, "--t");
    json r = {{"y", complex_json(y)}, {"t", complex_json(t)}};
    try {
      if (ramani) {
        RamaniResult res = ramani_step(y, t, b0, b1);
        r["Y"] = complex_json(res.y);
        r["T"] = complex_json(res.t);
        if (!o.json) std::cout << "Y = " << complex_text(res.y) << ", T = " << complex_text(res.t) << "\n";
      } else {
        std::complex<double> Y = quadratic_compose(y, t, b0, b1);
        r["Y"] = complex_json(Y);
        r["T"] = complex_json(t);
        if (!o.json) std::cout << "Y = " << complex_text(Y) << ", T = " << complex_text(t) << "\n";
      }
    } catch (const AlgebraError& e) {
      ok = false;
      r["error"] = e.what();
      if (!o.json) std::cout << "error: " << e.what() << "\n";
    }
    results.push_back(r);
  }
  out["results"] = results;
  if (!a.empty()) {
    mpq_class q = parse_rational(a);
    ThetaVector th = ramani ? ramani_theta(ThetaVector(0, q, q, 1)) : quadratic_compose_theta(q);
    out["theta"] = th.str();
    if (!o.json) std::cout << "theta -> " << th.str() << "\n";
  }
  out["pass"] = ok;
  if (o.json) std::cout << out.dump(2) << "\n";
  return ok ? kPass : kFail;
}

int cmd_export(const Options& o, const std::string& name, const std::string& format) {
  const Catalog& cat = Catalog::builtin();
  std::vector<const CatalogEntry*> sel;
  if (name == "all") {
    for (const auto& e : cat.entries()) sel.push_back(&e);
  } else {
    sel.push_back(&cat.lookup(name));
  }
  bool asJson = o.json || format == "json";
  if (!asJson && format != "text") throw UsageError("--format is text or json");
  if (asJson) {
    json arr = json::array();
    for (const auto* e : sel) arr.push_back(export_json(cat, *e));
    json out = name == "all" ? json{{"schema", 1}, {"entries", arr}} : arr[0];
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto* e : sel) std::cout << export_text(*e) << "\n";
  }
  return kPass;
}

int cmd_list(const Options& o) {
  const Catalog& cat = Catalog::builtin();
  if (o.json) {
    json arr = json::array();
    for (const auto& e : cat.entries()) arr.push_back({{"name", e.name}, {"kind", kind_name(e.kind)}});
    std::cout << json{{"schema", 1}, {"entries", arr}}.dump(2) << "\n";
  } else {
    for (const auto& e : cat.entries()) std::cout << kind_name(e.kind) << " " << e.name << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic Painleve VI solutions from almost Belyi coverings"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output (schema 1)");

  auto* verify = app.add_subcommand("verify", "Run the checks of catalog entries");
  std::string target, vname;
  verify->add_option("target", target, "covering | solution | syzygy | pattern | normalized | entry | all")->required();
  verify->add_option("name", vname, "Catalog entry");
  verify->add_option("--theta", o.theta, "Theta vector a,b,c,d replacing the stored one");
  verify->add_option("--samples", o.samples, "Numeric residual samples per solution")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "Seed for the numeric samples");
  verify->add_option("--branch", o.branch, "Sign of the square root used in numeric evaluation");
  verify->add_flag("--json", o.json, "JSON output");

  auto* derive = app.add_subcommand("derive", "Solve the syzygy and extract a solution");
  std::string dname;
  int fpow = 1, delta = 0;
  derive->add_option("covering", dname, "Covering or normalized covering")->required();
  derive->add_option("--fpow", fpow, "Exponent numerator j: the fiber through x = 0 gets j/k")->required();
  derive->add_option("--delta", delta, "Shift at x = oo")->required();
  derive->add_flag("--json", o.json, "JSON output");

  auto* degree = app.add_subcommand("degree", "Degree formula for almost Belyi coverings");
  std::string dk, da, dfib, dpat;
  degree->add_option("--k", dk, "Local orders k0,k1,kinf");
  degree->add_option("--a", da, "Ramification orders a0,a1,at,ainf");
  degree->add_option("--fibers", dfib, "Fiber (0, 1, 2 for oo) of the points 0,1,t,oo");
  degree->add_option("--pattern", dpat, "Pattern literal to check, e.g. R4(7+1+1+1 | 2*5 | 3+3+3+1)");
  degree->add_option("--theta", o.theta, "Evaluate the degree form at this theta");
  degree->add_flag("--json", o.json, "JSON output");

  auto* quad = app.add_subcommand("quadratic", "Quadratic transformation of numeric solution values");
  std::string qy, qt, qfile, qa;
  bool ramani = false;
  quad->add_option("--y", qy, "y as re or re,im");
  quad->add_option("--t", qt, "t as re or re,im");
  quad->add_option("--file", qfile, "File of 'y t' lines");
  quad->add_option("--branch", o.branch, "Signs of sqrt(y t) and sqrt((y-1)(t-1))");
  quad->add_option("--a", qa, "Parameter a for the theta bookkeeping");
  quad->add_flag("--ramani", ramani, "Apply one Ramani step instead");
  quad->add_flag("--json", o.json, "JSON output");

  auto* exp = app.add_subcommand("export", "Serialize catalog entries");
  std::string ename, format = "text";
  exp->add_option("name", ename, "Entry name or 'all'")->required();
  exp->add_option("--format", format, "text or json");
  exp->add_flag("--json", o.json, "JSON output");

  auto* list = app.add_subcommand("list", "List catalog entries");
  list->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(o, target, vname);
    if (*derive) return cmd_derive(o, dname, fpow, delta);
    if (*degree) return cmd_degree(o, dk, da, dfib, dpat);
    if (*quad) {
      std::vector<std::pair<std::string, std::string>> pts;
      if (!qfile.empty()) {
        std::ifstream in(qfile);
        if (!in) throw UsageError("cannot read " + qfile);
        for (std::string ys, ts; in >> ys >> ts;) pts.emplace_back(ys, ts);
      }
      if (!qy.empty() || !qt.empty()) {
        if (qy.empty() || qt.empty()) throw UsageError("--y and --t go together");
        pts.emplace_back(qy, qt);
      }
      if (pts.empty()) throw UsageError("quadratic needs --y/--t or --file");
      return cmd_quadratic(o, pts, ramani, qa);
    }
    if (*exp) return cmd_export(o, ename, format);
    if (*list) return cmd_list(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownEntry& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
