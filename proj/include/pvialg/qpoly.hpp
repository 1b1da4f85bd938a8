#pragma once

// Polynomials over Q(i): the coefficient ring of the parameter fields.
// Multiplication and gcd get dedicated implementations (integer
// schoolbook, modular gcd) that the generic Poly<K> templates pick up.

#include <complex>
#include <vector>

#include "pvialg/gauss_rational.hpp"
#include "pvialg/poly.hpp"

namespace pvialg {

using QPoly = Poly<GaussRational>;

template <>
QPoly QPoly::multiply(const QPoly& a, const QPoly& b);

/// Monic gcd together with the exact cofactors a/g and b/g.
struct GcdResult {
  QPoly gcd;
  QPoly cofactor_a;
  QPoly cofactor_b;
};

/// Modular gcd over Q(i): images in F_p for primes p = 1 (mod 4) under both
/// embeddings i -> +-sqrt(-1), Chinese remaindering, rational
/// reconstruction, and an exact trial division as the final proof.
GcdResult gcd_cofactors(const QPoly& a, const QPoly& b);

/// Overload picked over the generic Euclid template.
QPoly gcd(QPoly a, QPoly b);

/// Euclid over Q(i) without the modular machinery; kept as an independent
/// reference for tests.
QPoly gcd_euclid(QPoly a, QPoly b);

std::complex<double> eval_complex(const QPoly& p, std::complex<double> x);

/// Sum of |c_k| |x|^k, the scale against which a computed value near zero
/// is judged.
double eval_magnitude(const QPoly& p, double abs_x);

/// Integer image: p * L where L is the lcm of all coefficient denominators.
struct IntegerImage {
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
  mpz_class scale;  // L
  bool real = true;
};
IntegerImage integer_image(const QPoly& p);

}  // namespace pvialg
