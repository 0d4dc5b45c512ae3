#include "resint/algebra.hpp"

#include <algorithm>

#include "resint/errors.hpp"

namespace resint {

namespace {

std::vector<MultiPoly> dense(const MultiPoly& p, const std::string& var) { return p.coefficients(var); }

// Sylvester matrix of p (degree m) and q (degree n) in `var`.
std::vector<std::vector<MultiPoly>> sylvester(const std::vector<MultiPoly>& pc,
                                              const std::vector<MultiPoly>& qc) {
  const std::size_t m = pc.size() - 1, n = qc.size() - 1, size = m + n;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];
  }
  return s;
}

// Res(a, b) for a with rational coefficients: lc(a)^deg(b) * det(b mod a acting on Q[x]/a).
MultiPoly norm_resultant(const QPoly& a, const std::vector<MultiPoly>& bc) {
  const int m = a.degree();
  const int n = static_cast<int>(bc.size()) - 1;
  const Rational inv = Rational(1) / a.leading();
  // Reduce a vector of coefficients (low to high) of arbitrary length mod a.
  auto reduce = [&](std::vector<MultiPoly> v) {
    for (int k = static_cast<int>(v.size()) - 1; k >= m; --k) {
      if (v[static_cast<std::size_t>(k)].is_zero()) continue;
      const MultiPoly q = v[static_cast<std::size_t>(k)] * inv;
      for (int j = 0; j <= m; ++j) {
        if (!a[j].is_zero()) v[static_cast<std::size_t>(k - m + j)] -= q * a[j];
      }
    }
    v.resize(static_cast<std::size_t>(m));
    return v;
  };
  std::vector<MultiPoly> col = reduce(bc);
  std::vector<std::vector<MultiPoly>> mat(static_cast<std::size_t>(m),
                                          std::vector<MultiPoly>(static_cast<std::size_t>(m)));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    std::vector<MultiPoly> shifted(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i) shifted[static_cast<std::size_t>(i) + 1] = col[static_cast<std::size_t>(i)];
    col = reduce(std::move(shifted));
  }
  return determinant(std::move(mat)) * pow(a.leading(), n);
}

}  // namespace

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Smallest nonzero pivot keeps intermediate sizes down.
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!m[i][k].is_zero() && (best == n || m[i][k].size() < m[best][k].size())) best = i;
    }
    if (best == n) return MultiPoly(0);
    if (best != k) {
      std::swap(m[best], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v * (Rational(1) / prev.constant_value()) : exact_divide(v, prev);
      }
      m[i][k] = MultiPoly(0);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant with the zero polynomial");
  const int m = p.degree(var), n = q.degree(var);
  if (m == 0) return pow(p, static_cast<unsigned>(n)).compacted();
  if (n == 0) return pow(q, static_cast<unsigned>(m)).compacted();

  const UniPoly up(p, var), uq(q, var);
  if (up.has_rational_coefficients() && uq.has_rational_coefficients()) {
    return MultiPoly(resultant(up.dense(), uq.dense()));
  }
  if (up.has_rational_coefficients()) return norm_resultant(up.dense(), dense(q, var)).compacted();
  if (uq.has_rational_coefficients()) {
    MultiPoly r = norm_resultant(uq.dense(), dense(p, var));
    return ((m % 2 == 1 && n % 2 == 1) ? -r : r).compacted();
  }
  return determinant(sylvester(dense(p, var), dense(q, var))).compacted();
}

MultiPoly resultant(const UniPoly& p, const UniPoly& q) {
  if (p.variable() != q.variable()) throw InvalidInput("resultant of polynomials in different variables");
  return resultant(p.poly(), q.poly(), p.variable());
}

namespace {

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& other) {
  const auto vars = merge_variables(mono.variables(), other.variables());
  const MultiPoly a = mono.with_variables(vars), b = other.with_variables(vars);
  Exponents e = a.leading_exponents();
  for (const auto& [be, c] : b.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], be[i]);
  }
  return MultiPoly::term(Rational(1), e, vars).compacted();
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_impl(const MultiPoly& p, std::string_view var) {
  MultiPoly g;
  for (const auto& c : p.coefficients(var)) {
    if (c.is_zero()) continue;
    if (c.is_constant()) return MultiPoly(1);
    g = g.is_zero() ? c : gcd_impl(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g.is_zero() ? g : g.primitive();
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive().compacted();
  if (b.is_zero()) return a.primitive().compacted();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.size() == 1) return monomial_gcd(a, b);
  if (b.size() == 1) return monomial_gcd(b, a);

  const auto ua = a.used_variables(), ub = b.used_variables();
  std::string main;
  for (const auto& v : ua) {
    if (std::find(ub.begin(), ub.end(), v) != ub.end()) {
      main = v;
      break;
    }
  }
  if (main.empty()) return MultiPoly(1);

  const MultiPoly ca = content_impl(a, main), cb = content_impl(b, main);
  const MultiPoly gc = gcd_impl(ca, cb);
  MultiPoly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  if (pa.degree(main) < pb.degree(main)) std::swap(pa, pb);
  MultiPoly last;
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, main);
    if (r.is_zero()) {
      last = pb;
      break;
    }
    if (r.degree(main) == 0) {
      last = MultiPoly(1);
      break;
    }
    pa = std::move(pb);
    pb = exact_divide(r, content_impl(r, main));
  }
  if (!last.is_constant()) last = exact_divide(last, content_impl(last, main));
  return (gc * last).primitive().compacted();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

MultiPoly content_in(const MultiPoly& p, std::string_view var) { return content_impl(p, var); }

MultiPoly primitive_part_in(const MultiPoly& p, std::string_view var) {
  if (p.is_zero()) return p;
  return exact_divide(p, content_impl(p, var)).primitive();
}

UniPoly gcd_uni(const UniPoly& p, const UniPoly& q) {
  if (p.variable() != q.variable()) throw InvalidInput("gcd of polynomials in different variables");
  return UniPoly(gcd(p.dense(), q.dense()), p.variable());
}

UniPoly squarefree_part(const UniPoly& p) {
  return UniPoly(squarefree_part(p.dense()), p.variable());
}

}  // namespace resint
