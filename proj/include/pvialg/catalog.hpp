#pragma once

// Catalog of coverings, substitutions, syzygies and solutions, loaded from a
// text file of records
//
//   name = kind : body ; key = value ; ...
//
// with '#' comments and '\' line continuations. The built-in catalog is
// compiled into the library from data/catalog.txt.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pvialg/covering.hpp"
#include "pvialg/extraction.hpp"
#include "pvialg/parser.hpp"
#include "pvialg/painleve.hpp"
#include "pvialg/syzygy.hpp"

namespace pvialg {

enum class EntryKind {
  Field,
  Poly,
  Scalar,
  Identity,
  Covering,
  Substitution,
  XMap,
  Normalized,
  Syzygy,
  Expression,
  Root,
  Solution,
  Orbit,
  Reparam,
  Pattern,
  Composite,
};

std::string kind_name(EntryKind k);
std::optional<EntryKind> kind_from_name(const std::string& s);

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::Poly;
  std::string body;
  std::vector<std::pair<std::string, std::string>> attrs;
  int line = 0;

  const std::string* attr(const std::string& key) const;
  const std::string& require(const std::string& key) const;

  friend bool operator==(const CatalogEntry& a, const CatalogEntry& b) {
    return a.name == b.name && a.kind == b.kind && a.body == b.body && a.attrs == b.attrs;
  }
};

/// Records in file order. Whitespace runs inside bodies and values collapse
/// to one space. Throws ParseError naming the line.
std::vector<CatalogEntry> parse_catalog_text(const std::string& text);

class UnknownEntry : public std::runtime_error {
 public:
  UnknownEntry(const std::string& name, const std::vector<std::string>& available);
};

struct CheckResult {
  std::string entry;
  std::string check;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::optional<ThetaVector> theta;  // replaces the stored theta of a solution
  int samples = 0;                   // numeric residual samples per solution
  std::uint64_t seed = 1;
  int branch = 1;
};

struct NormalizedCovering {
  Covering base;
  std::vector<NormalizationStage> stages;
  std::array<int, 3> k{};
};

struct SyzygyRecord {
  XPoly F{'x'}, G{'x'}, H{'x'};
  Syzygy syzygy;
  int delta = 0;
  bool bounded = false;
  std::string covering;
};

class Catalog {
 public:
  explicit Catalog(const std::string& text);

  /// The compiled-in catalog, parsed once.
  static const Catalog& builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  const CatalogEntry& lookup(const std::string& name) const;
  std::vector<std::string> names() const;
  std::vector<std::string> names(EntryKind kind) const;

  FieldPtr field(const std::string& name) const;
  /// Value of a poly, scalar, covering (its map) or solution (its y).
  const RatX& value(const std::string& name) const;
  Covering covering(const std::string& name) const;
  NormalizedCovering normalized(const std::string& name) const;
  /// Normalised entry whose base covering is `covering`, if any.
  std::optional<std::string> normalization_of(const std::string& covering) const;
  RamificationPattern pattern(const std::string& name) const;
  SyzygyRecord syzygy(const std::string& name) const;
  AlgebraicSolution solution(const std::string& name) const;

  std::vector<std::string> expected_checks(const CatalogEntry& e) const;
  std::vector<CheckResult> verify(const std::string& name, const VerifyOptions& opt = {}) const;
  std::vector<CheckResult> verify_all(const VerifyOptions& opt = {}) const;

  /// The canonical exact form of the payload, in the expression grammar,
  /// for entries that carry one.
  std::optional<std::string> canonical(const CatalogEntry& e) const;

 private:
  ParseContext context(const CatalogEntry& e) const;
  RatX parse_in(const CatalogEntry& e, const std::string& text) const;
  void load(const CatalogEntry& e);
  std::vector<CheckResult> run_checks(const CatalogEntry& e, const VerifyOptions& opt) const;

  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, RatX> values_;
  std::map<std::string, FieldPtr> fields_;
};

/// One record line that parse_catalog_text reads back to the same entry.
std::string export_text(const CatalogEntry& e);
nlohmann::json export_json(const Catalog& cat, const CatalogEntry& e);

}  // namespace pvialg
