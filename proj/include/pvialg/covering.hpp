#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pvialg/ratx.hpp"

namespace pvialg {

enum class Fiber { Zero = 0, One = 1, Infinity = 2 };
std::string fiber_name(Fiber f);

/// Rational covering z = R(x). `map` is kept coprime with a monic
/// denominator, so the fibers can be read off numerator and denominator.
struct Covering {
  std::string name;
  RatX map;

  int degree() const { return map.degree(); }
};

struct FiberPart {
  int multiplicity;
  int count;  // number of distinct roots with this multiplicity
};

struct FiberDivisor {
  Fiber value;
  std::vector<FiberPart> profile;             // finite points, decreasing multiplicity
  int at_infinity = 0;                        // multiplicity of x = oo if it lies in this fiber
  std::vector<SquarefreeFactor<ExtScalar>> factors;

  int total() const;
  /// Partition of the degree, decreasing, x = oo included.
  std::vector<int> parts() const;
};

/// Polynomial whose roots form the fiber: numerator, numerator of R - 1,
/// or denominator.
XPoly fiber_polynomial(const Covering& c, Fiber v);

FiberDivisor fiber_divisor(const Covering& c, Fiber v);
using FiberTable = std::array<FiberDivisor, 3>;
FiberTable fiber_divisors(const Covering& c);

// ---------------------------------------------------------------------------
// Ramification patterns

enum class PatternKind { Belyi, AlmostBelyi };

struct PatternPart {
  int order;
  bool hat = false;
  friend bool operator==(const PatternPart&, const PatternPart&) = default;
};

struct RamificationPattern {
  PatternKind kind = PatternKind::AlmostBelyi;
  std::array<std::vector<PatternPart>, 3> fibers;

  /// Sum of the first partition.
  int degree() const;
  std::size_t part_count() const;
  std::vector<int> orders(int fiber) const;  // decreasing
  std::string str() const;
};

/// "R4(7+1+1+1 | 2+2+2+2+2 | 3+3+3+1)"; "a*b" abbreviates b parts equal to a,
/// a trailing '^' marks a hatted part.
RamificationPattern parse_pattern(const std::string& text);

/// Empty when every partition sums to the same degree, otherwise a message.
std::string pattern_sum_error(const RamificationPattern& p);

/// Parts count n + 3 for R4, n + 2 for R3.
bool hurwitz_parts_check(const RamificationPattern& p);

/// Composite covering outer(inner(x)). Inner fiber j lies over the hatted
/// point of outer fiber j. A hatted part m becomes m*k for each part k of
/// the inner fiber (inheriting its hat); an unhatted part m becomes
/// deg(inner) copies of m.
RamificationPattern compose_patterns(const RamificationPattern& outer, const RamificationPattern& inner);

/// "A o B o C": the rightmost pattern is the outermost map.
RamificationPattern compose_chain(const std::string& text);

/// Same partitions up to a permutation of the three fibers (hats ignored).
bool patterns_equivalent(const RamificationPattern& a, const RamificationPattern& b);

struct PatternReport {
  bool pass = false;
  std::array<FiberDivisor, 3> fibers;
  std::vector<std::string> diagnostics;
  std::optional<ExtScalar> extra_point;
};

PatternReport verify_pattern(const Covering& c, const RamificationPattern& p);

/// Numerator of dR/dx with the forced factors f^(m-1) removed.
XPoly ramification_residue(const Covering& c);
XPoly ramification_residue(const Covering& c, const FiberTable& fibers);

/// Root of the single simple ramification point outside the three fibers.
/// Throws AlgebraError("not almost Belyi ...") otherwise.
ExtScalar extra_ramification_point(const Covering& c);

// ---------------------------------------------------------------------------
// Degree formula

/// (a0/k_f0 + a1/k_f1 + at/k_ft + ainf/k_finf - 1) / (1/k0 + 1/k1 + 1/kinf - 1)
/// `fiber_of` assigns each of the points 0, 1, t, oo a fiber index 0..2.
mpq_class degree_formula(const std::array<int, 3>& k, const std::array<int, 4>& a,
                         const std::array<int, 4>& fiber_of);

/// Degree as a linear form in (nu0, nu1, nut, nuinf) where nu_j = a_j/k for
/// j in {0, 1, t} and nuinf = 1 - ainf/k.
struct DegreeForm {
  std::array<mpq_class, 4> coeff;
  mpq_class constant;
  std::string str() const;
  mpq_class eval(const std::array<mpq_class, 4>& nu) const;
};
DegreeForm degree_form(const std::array<int, 3>& k);

// ---------------------------------------------------------------------------
// Normalisation

/// x_old = (a x + b) / (c x + d).
struct Moebius {
  ExtScalar a{1L}, b{0L}, c{0L}, d{1L};
  bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }
  ExtScalar apply(const ExtScalar& x) const;
  ExtScalar invert(const ExtScalar& x_old) const;
  Moebius substituted(const ParamSubstitution& sub) const;
};

/// Reads an x-map given as a rational expression of degree <= 1 in x.
Moebius moebius_from(const RatX& m);

struct NormalizationStage {
  std::optional<ParamSubstitution> param;
  Moebius xmap;
};

Covering normalize(const Covering& c, const std::vector<NormalizationStage>& stages);

/// Image of a point x_old (over the original parameter) under the stages.
ExtScalar normalize_point(const ExtScalar& x_old, const std::vector<NormalizationStage>& stages);

// ---------------------------------------------------------------------------
// Special points of a normalised covering

/// Fibre and ramification order of the points 0, 1, t, oo, the value of t,
/// read from a covering whose non-apparent points are 0, 1, t, oo. A root of
/// multiplicity m in fiber v is apparent when m * e_v is an integer.
struct SpecialPoints {
  std::array<Fiber, 4> fiber{};
  std::array<int, 4> order{};
  ExtScalar t;
};

SpecialPoints special_points(const Covering& c, const std::array<mpq_class, 3>& e);
SpecialPoints special_points(const FiberTable& fibers, const std::array<mpq_class, 3>& e);

}  // namespace pvialg
