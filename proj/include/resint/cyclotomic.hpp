#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resint/univariate.hpp"

namespace resint {

long totient(long n);

/// Phi_n as a dense polynomial; memoized and safe to call concurrently.
const QPoly& cyclotomic_poly(long n);
UniPoly cyclotomic_poly(long n, const std::string& var);

/// Degree of the minimal polynomial of cos(2 pi / n): totient(n) / 2, and 1 for n <= 2.
long cos_degree(long n);

struct CyclotomicIndexSet {
  long bound;             // the k that was asked for
  long threshold;         // largest totient admitted
  std::vector<long> indices;
};

/// All n with cos_degree(n) <= k.
CyclotomicIndexSet indices_with_cos_degree_at_most(long k);
/// All n with totient(n) <= k.
CyclotomicIndexSet indices_with_degree_at_most(long k);

struct MinPolyCos {
  long index;
  QPoly poly;  // primitive, positive leading coefficient, in the variable of cos
};

/// Minimal polynomial of cos(2 pi / n), from sqrt(Res_x(Phi_n(x), x^2 - 2xv + 1)).
const MinPolyCos& min_poly_cos(long n);

struct CyclotomicTest {
  bool is_product = false;
  std::vector<long> witness;  // indices d of the Phi_d factors, with repetition
  std::string reason;         // why the test failed, empty on success
};

/// True iff the primitive part of p is, up to sign, a product of cyclotomic polynomials.
CyclotomicTest is_cyclotomic_product(const QPoly& p);

struct RootOfUnityTest {
  bool is_root_of_unity = false;
  std::optional<long> order;  // set when the squarefree part is a single Phi_d
  std::vector<long> witness;
};

RootOfUnityTest is_root_of_unity(const QPoly& minimal_polynomial_candidate);

}  // namespace resint
