#include "resint/real_algebraic.hpp"

#include <algorithm>
#include <sstream>

#include "resint/errors.hpp"

namespace resint {

namespace {

Rational min4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return std::min({a, b, c, d});
}
Rational max4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return std::max({a, b, c, d});
}

// Outward rounding to multiples of 2^-bits keeps endpoint sizes bounded.
Rational round_down(const Rational& v, unsigned bits) {
  const Integer scale = Integer(1) << bits;
  return Rational(floor(v * Rational(scale)), scale);
}
Rational round_up(const Rational& v, unsigned bits) { return -round_down(-v, bits); }

unsigned bits_for(const Rational& width) {
  // Smallest k with 2^-k <= width / 8.
  unsigned k = 3;
  Rational step(Integer(1), Integer(1) << k);
  const Rational target = width / Rational(8);
  while (step > target) {
    ++k;
    step = Rational(Integer(1), Integer(1) << k);
  }
  return k;
}

}  // namespace

IntervalQ::IntervalQ(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw InvalidInput("interval with lo > hi");
}

int IntervalQ::strict_sign() const {
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  return 0;
}

std::string IntervalQ::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

IntervalQ operator+(const IntervalQ& a, const IntervalQ& b) { return {a.lo + b.lo, a.hi + b.hi}; }
IntervalQ operator-(const IntervalQ& a, const IntervalQ& b) { return {a.lo - b.hi, a.hi - b.lo}; }
IntervalQ operator-(const IntervalQ& a) { return {-a.hi, -a.lo}; }

IntervalQ operator*(const IntervalQ& a, const IntervalQ& b) {
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {min4(p1, p2, p3, p4), max4(p1, p2, p3, p4)};
}

IntervalQ operator*(const Rational& c, const IntervalQ& a) {
  if (c.sign() >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

IntervalQ pow(const IntervalQ& a, unsigned e) {
  if (e == 0) return IntervalQ::point(Rational(1));
  const Rational l = pow(a.lo, static_cast<long>(e)), h = pow(a.hi, static_cast<long>(e));
  if (e % 2 == 1) return {l, h};
  if (a.lo.sign() >= 0) return {l, h};
  if (a.hi.sign() <= 0) return {h, l};
  return {Rational(0), std::max(l, h)};
}

bool overlaps(const IntervalQ& a, const IntervalQ& b) { return !(a.hi < b.lo || b.hi < a.lo); }

SturmSequence::SturmSequence(const QPoly& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() <= 0) return;
  chain_.push_back(squarefree.derivative());
  while (chain_.back().degree() > 0) {
    QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling leaves the sign pattern intact.
    QPoly neg = -r;
    const Rational scale = abs(neg.primitive().leading() / neg.leading());
    chain_.push_back(neg * scale);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_open(const Rational& lo, const Rational& hi) const {
  // variations(lo) - variations(hi) counts roots in (lo, hi].
  int n = variations(lo) - variations(hi);
  if (base().sign_at(hi) == 0) --n;
  return n;
}

Rational cauchy_bound(const QPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p[k] / p.leading()));
  // Round up to a power of two so bisection midpoints stay dyadic.
  Rational b(1);
  while (b < m + Rational(1)) b *= Rational(2);
  return b;
}

RealAlgebraic::RealAlgebraic(QPoly poly, IntervalQ isolating, Trusted)
    : minpoly_(std::move(poly)), interval_(std::move(isolating)) {}

RealAlgebraic::RealAlgebraic(const Rational& value)
    : minpoly_(QPoly({-value, Rational(1)}).primitive()), interval_(IntervalQ::point(value)) {}

RealAlgebraic::RealAlgebraic(const QPoly& poly, IntervalQ isolating)
    : minpoly_(squarefree_part(poly)), interval_(std::move(isolating)) {
  if (minpoly_.degree() < 1) throw InvalidInput("real algebraic number needs a nonconstant polynomial");
  if (interval_.is_point()) {
    if (minpoly_.sign_at(interval_.lo) != 0) throw InvalidInput("degenerate interval is not a root");
    return;
  }
  if (minpoly_.sign_at(interval_.lo) == 0 || minpoly_.sign_at(interval_.hi) == 0) {
    throw InvalidInput("isolating interval endpoint is a root");
  }
  if (SturmSequence(minpoly_).count_open(interval_.lo, interval_.hi) != 1) {
    throw InvalidInput("interval " + interval_.str() + " does not isolate exactly one root of " +
                       minpoly_.str());
  }
}

std::optional<Rational> RealAlgebraic::rational_value() const {
  if (interval_.is_point()) return interval_.lo;
  if (minpoly_.degree() == 1) return -minpoly_[0] / minpoly_[1];
  return std::nullopt;
}

int RealAlgebraic::sign() const {
  if (auto v = rational_value()) return v->sign();
  // Endpoints are non-roots and the root is unique inside, so a sign-free
  // interval decides; otherwise 0 lies strictly inside and is not the root
  // unless minpoly(0) = 0.
  RealAlgebraic r = *this;
  while (r.interval_.strict_sign() == 0) {
    if (minpoly_.sign_at(Rational(0)) == 0) return 0;
    r = r.bisected();
  }
  return r.interval_.strict_sign();
}

double RealAlgebraic::to_double() const {
  if (auto v = rational_value()) return v->to_double();
  return refined(Rational(Integer(1), Integer(1) << 60)).interval_.midpoint().to_double();
}

RealAlgebraic RealAlgebraic::bisected() const {
  if (interval_.is_point()) return *this;
  if (minpoly_.degree() == 1) return RealAlgebraic(*rational_value());
  const Rational m = interval_.midpoint();
  const int sm = minpoly_.sign_at(m);
  if (sm == 0) return RealAlgebraic(minpoly_, IntervalQ::point(m), Trusted{});
  const int slo = minpoly_.sign_at(interval_.lo);
  if (slo != sm) return RealAlgebraic(minpoly_, IntervalQ(interval_.lo, m), Trusted{});
  return RealAlgebraic(minpoly_, IntervalQ(m, interval_.hi), Trusted{});
}

RealAlgebraic RealAlgebraic::refined(const Rational& width) const {
  if (width.sign() <= 0) throw InvalidInput("refinement width must be positive");
  RealAlgebraic r = *this;
  while (r.interval_.width() > width) r = r.bisected();
  return r;
}

std::string RealAlgebraic::str() const {
  if (auto v = rational_value()) return v->str();
  return "root of " + minpoly_.str() + " in " + interval_.str();
}

std::vector<RealAlgebraic> sturm_isolate(const QPoly& p) {
  if (p.is_zero()) throw InvalidInput("cannot isolate roots of the zero polynomial");
  const QPoly f = squarefree_part(p);
  std::vector<RealAlgebraic> roots;
  if (f.degree() < 1) return roots;
  const SturmSequence sturm(f);
  const Rational bound = cauchy_bound(f);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, sturm.count_open(-bound, bound)}};
  std::vector<IntervalQ> found;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    const bool lo_root = f.sign_at(cur.lo) == 0, hi_root = f.sign_at(cur.hi) == 0;
    if (cur.count == 1 && !lo_root && !hi_root) {
      found.emplace_back(cur.lo, cur.hi);
      continue;
    }
    const Rational m = (cur.lo + cur.hi) / Rational(2);
    if (f.sign_at(m) == 0) found.push_back(IntervalQ::point(m));
    stack.push_back({cur.lo, m, sturm.count_open(cur.lo, m)});
    stack.push_back({m, cur.hi, sturm.count_open(m, cur.hi)});
  }
  std::sort(found.begin(), found.end(), [](const IntervalQ& a, const IntervalQ& b) { return a.lo < b.lo; });
  roots.reserve(found.size());
  for (auto& iv : found) roots.push_back(RealAlgebraic(f, iv));
  return roots;
}

RealAlgebraic refine(const RealAlgebraic& r, const Rational& width) { return r.refined(width); }

bool same_value(const RealAlgebraic& a, const RealAlgebraic& b) {
  const auto ra = a.rational_value(), rb = b.rational_value();
  if (ra && rb) return *ra == *rb;
  if (ra) return b.minpoly().sign_at(*ra) == 0 && b.interval().contains(*ra);
  if (rb) return a.minpoly().sign_at(*rb) == 0 && a.interval().contains(*rb);
  if (!overlaps(a.interval(), b.interval())) return false;
  // A common root inside both isolating intervals is the root of each.
  const QPoly g = squarefree_part(gcd(a.minpoly(), b.minpoly()));
  if (g.degree() < 1) return false;
  const Rational lo = std::max(a.interval().lo, b.interval().lo), hi = std::min(a.interval().hi, b.interval().hi);
  if (lo == hi) return g.sign_at(lo) == 0;
  return SturmSequence(g).count_open(lo, hi) + (g.sign_at(lo) == 0) + (g.sign_at(hi) == 0) > 0;
}

IntervalQ eval_on_box(const MultiPoly& q, const std::map<std::string, IntervalQ>& box) {
  std::vector<const IntervalQ*> coords;
  for (const auto& v : q.variables()) {
    auto it = box.find(v);
    coords.push_back(it == box.end() ? nullptr : &it->second);
  }
  IntervalQ acc = IntervalQ::point(Rational(0));
  for (const auto& [e, c] : q.terms()) {
    IntervalQ t = IntervalQ::point(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!coords[i]) throw InvalidInput("no value for variable " + q.variables()[i]);
      t = t * pow(*coords[i], e[i]);
    }
    acc = acc + t;
  }
  return acc;
}

IntervalQ eval_interval(const MultiPoly& q, const RealPoint& point, const Rational& width) {
  if (width.sign() <= 0) throw InvalidInput("evaluation width must be positive");
  RealPoint cur;
  for (const auto& v : q.used_variables()) {
    auto it = point.find(v);
    if (it == point.end()) throw InvalidInput("no value for variable " + v);
    cur.emplace(v, it->second);
  }
  const unsigned bits = bits_for(width);
  for (int iter = 0; iter < 4000; ++iter) {
    std::map<std::string, IntervalQ> box;
    for (const auto& [v, r] : cur) box.emplace(v, r.interval());
    const IntervalQ raw = eval_on_box(q, box);
    const IntervalQ out(round_down(raw.lo, bits), round_up(raw.hi, bits));
    if (out.width() <= width) return out;
    bool progressed = false;
    for (auto& [v, r] : cur) {
      if (!r.interval().is_point()) {
        r = r.bisected();
        progressed = true;
      }
    }
    if (!progressed) return out;  // exact point; rounding slack only
  }
  throw InvariantViolation("interval evaluation failed to converge");
}

std::optional<int> sign_at(const MultiPoly& q, const RealPoint& point, const Rational& min_width) {
  RealPoint cur;
  for (const auto& v : q.used_variables()) {
    auto it = point.find(v);
    if (it == point.end()) throw InvalidInput("no value for variable " + v);
    cur.emplace(v, it->second);
  }
  while (true) {
    std::map<std::string, IntervalQ> box;
    bool all_points = true;
    Rational widest;
    for (const auto& [v, r] : cur) {
      box.emplace(v, r.interval());
      all_points = all_points && r.interval().is_point();
      widest = std::max(widest, r.interval().width());
    }
    const IntervalQ val = eval_on_box(q, box);
    if (all_points) return val.lo.sign();
    if (const int s = val.strict_sign(); s != 0) return s;
    if (widest < min_width) return std::nullopt;
    for (auto& [v, r] : cur) r = r.bisected();
  }
}

}  // namespace resint
