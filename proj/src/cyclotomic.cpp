#include "resint/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "resint/algebra.hpp"
#include "resint/errors.hpp"
#include "resint/factor.hpp"

namespace resint {

long totient(long n) {
  if (n < 1) throw InvalidInput("totient needs a positive integer");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

template <typename Value>
class Memo {
 public:
  template <typename Make>
  const Value& get(long key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    // Build outside the lock; the first insertion wins, so concurrent builders agree.
    auto value = std::make_unique<Value>(make());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<long, std::unique_ptr<Value>> cache_;
};

Memo<QPoly>& phi_cache() {
  static Memo<QPoly> memo;
  return memo;
}

Memo<MinPolyCos>& cos_cache() {
  static Memo<MinPolyCos> memo;
  return memo;
}

}  // namespace

const QPoly& cyclotomic_poly(long n) {
  if (n < 1) throw InvalidInput("cyclotomic index must be positive");
  return phi_cache().get(n, [n] {
    QPoly q = QPoly::monomial(Rational(1), static_cast<int>(n)) - QPoly::constant(Rational(1));
    for (long d = 1; d < n; ++d) {
      if (n % d == 0) q = exact_divide(q, cyclotomic_poly(d));
    }
    return q;
  });
}

UniPoly cyclotomic_poly(long n, const std::string& var) { return UniPoly(cyclotomic_poly(n), var); }

long cos_degree(long n) { return n <= 2 ? 1 : totient(n) / 2; }

CyclotomicIndexSet indices_with_cos_degree_at_most(long k) {
  if (k < 1) throw InvalidInput("degree bound must be at least 1");
  // totient(n) >= sqrt(n / 2), so totient(n) <= 2k forces n <= 8k^2.
  CyclotomicIndexSet set{k, 2 * k, {}};
  for (long n = 1; n <= 8 * k * k; ++n) {
    if (cos_degree(n) <= k) set.indices.push_back(n);
  }
  return set;
}

CyclotomicIndexSet indices_with_degree_at_most(long k) {
  if (k < 1) throw InvalidInput("degree bound must be at least 1");
  CyclotomicIndexSet set{k, k, {}};
  for (long n = 1; n <= 2 * k * k; ++n) {
    if (totient(n) <= k) set.indices.push_back(n);
  }
  return set;
}

const MinPolyCos& min_poly_cos(long n) {
  if (n < 1) throw InvalidInput("cyclotomic index must be positive");
  return cos_cache().get(n, [n] {
    if (n == 1) return MinPolyCos{n, QPoly({-1, 1})};
    if (n == 2) return MinPolyCos{n, QPoly({1, 1})};
    const MultiPoly x = MultiPoly::variable("x"), v = MultiPoly::variable("v");
    const MultiPoly quad = x * x - Rational(2) * x * v + MultiPoly(1);
    const QPoly res = QPoly::from_multi(resultant(cyclotomic_poly(n).to_multi("x"), quad, "x"), "v");
    auto root = poly_sqrt(res);
    if (!root) root = poly_sqrt(res.primitive());
    if (!root || root->degree() != cos_degree(n)) {
      throw InvariantViolation("resultant for index " + std::to_string(n) + " is not a square");
    }
    return MinPolyCos{n, root->primitive()};
  });
}

CyclotomicTest is_cyclotomic_product(const QPoly& p) {
  if (p.is_zero()) throw InvalidInput("cyclotomic test of the zero polynomial");
  CyclotomicTest result;
  QPoly g = p.primitive();
  if (g.degree() == 0) {
    result.is_product = true;
    return result;
  }
  if (abs(g.leading()) != Rational(1)) {
    result.reason = "primitive part " + g.str() + " is not monic";
    return result;
  }
  const long deg = g.degree();
  for (long d = 1; d <= 2 * deg * deg && g.degree() > 0; ++d) {
    if (totient(d) > g.degree()) continue;
    const QPoly& phi = cyclotomic_poly(d);
    while (g.degree() >= phi.degree()) {
      auto [quo, rem] = divmod(g, phi);
      if (!rem.is_zero()) break;
      g = quo;
      result.witness.push_back(d);
    }
  }
  if (g.degree() > 0) {
    result.witness.clear();
    result.reason = "remainder " + g.primitive().str() + " has a root that is not a root of unity";
    return result;
  }
  result.is_product = true;
  return result;
}

RootOfUnityTest is_root_of_unity(const QPoly& candidate) {
  if (candidate.is_zero()) throw InvalidInput("root-of-unity test of the zero polynomial");
  const auto test = is_cyclotomic_product(squarefree_part(candidate));
  RootOfUnityTest out;
  out.is_root_of_unity = test.is_product && !test.witness.empty();
  out.witness = test.witness;
  if (out.is_root_of_unity && test.witness.size() == 1) out.order = test.witness.front();
  return out;
}

}  // namespace resint
