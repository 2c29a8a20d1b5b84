#include "corelat/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace corelat {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

DominantWeight basic_weight(const TypeData& t, int i) {
  if (i < 0 || i > t.n) throw BadIndex("weight index " + std::to_string(i) + " outside 0.." + std::to_string(t.n));
  DominantWeight w;
  if (i == 0) {
    w.finite_part = Vec(t.ambient_dim, Rational(0));
    w.level = 1;
  } else {
    w.finite_part = fundamental_weights(t)[i - 1];
    w.level = Rational(t.comarks[i], t.comarks[0]);
  }
  return w;
}

Rational height(const TypeData& t, const Vec& v) {
  Rational s = 0;
  for (const auto& c : simple_root_coefficients(t, v)) s += c;
  return s;
}

Rational atomic_length0(const TypeData& t, const Vec& v) {
  return Rational(t.h, 2) * norm_sq(t, v) - height(t, v);
}

Rational atomic_length_i(const TypeData& t, int i, const Vec& v) {
  if (i < 1 || i > t.n) throw BadIndex("fundamental weight index " + std::to_string(i) + " outside 1.." + std::to_string(t.n));
  return extended_atomic_length(t, basic_weight(t, i), v);
}

Rational extended_atomic_length(const TypeData& t, const DominantWeight& w, const Vec& x) {
  Rational finite = 0;
  if (!w.finite_part.empty()) finite = t.h * inner(t, w.finite_part, x);
  return finite + w.level * (Rational(t.h, 2) * norm_sq(t, x) - height(t, x));
}

Rational defect_term(const TypeData& t, const DominantWeight& w, const Vec& x, const Vec& y) {
  return t.h * w.level * inner(t, x, y);
}

namespace {

Integer widen(__int128 x) {
  Integer high(static_cast<long long>(x >> 64));
  return (high << 64) + Integer(static_cast<unsigned long long>(x));
}

}  // namespace

__int128 IntQuadratic::eval(const IVec& k) const {
  __int128 s = c0;
  for (int a = 0; a < dim(); ++a) {
    s += static_cast<__int128>(c[a]) * k[a];
    for (int b = 0; b < dim(); ++b) s += static_cast<__int128>(A[a][b]) * k[a] * k[b];
  }
  return s;
}

CompiledForm compile_form(const std::function<Rational(const Vec&)>& f, const Vec& origin,
                          const std::vector<Vec>& basis) {
  const int n = static_cast<int>(basis.size());
  auto at = [&](const IVec& k) {
    Vec v = origin;
    for (int j = 0; j < n; ++j)
      if (k[j]) v = add(v, scaled(k[j], basis[j]));
    return f(v);
  };
  IVec k(n, 0);
  Rational f0 = at(k);
  std::vector<Rational> plus(n), minus(n), lin(n);
  RMatrix A(n, Vec(n));
  for (int a = 0; a < n; ++a) {
    k.assign(n, 0);
    k[a] = 1;
    plus[a] = at(k);
    k[a] = -1;
    minus[a] = at(k);
    A[a][a] = (plus[a] + minus[a] - 2 * f0) / 2;
    lin[a] = (plus[a] - minus[a]) / 2;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      k.assign(n, 0);
      k[a] = k[b] = 1;
      A[a][b] = A[b][a] = (at(k) - plus[a] - plus[b] + f0) / 2;
    }
  Integer den = denominator(f0);
  for (int a = 0; a < n; ++a) {
    den = boost::multiprecision::lcm(den, denominator(lin[a]));
    for (int b = 0; b < n; ++b) den = boost::multiprecision::lcm(den, denominator(A[a][b]));
  }
  CompiledForm out;
  out.denom = to_ll(den);
  Rational d(den);
  out.q.c0 = to_ll(f0 * d);
  out.q.c.resize(n);
  out.q.A.assign(n, IVec(n));
  for (int a = 0; a < n; ++a) {
    out.q.c[a] = to_ll(lin[a] * d);
    for (int b = 0; b < n; ++b) out.q.A[a][b] = to_ll(A[a][b] * d);
  }
  // a non-quadratic f would disagree away from the polarisation points
  for (int trial = 0; trial < 2; ++trial) {
    for (int j = 0; j < n; ++j) k[j] = trial ? 2 - j : j + 2;
    if (at(k) * d != Rational(widen(out.q.eval(k))))
      throw InternalInconsistency("form is not quadratic in lattice coordinates");
  }
  return out;
}

namespace {

struct Box {
  IVec lo, hi;
  bool empty = false;
};

Box search_box(const IntQuadratic& q, long long hi) {
  const int n = q.dim();
  RMatrix A(n, Vec(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) A[a][b] = q.A[a][b];
  RMatrix inv = inverse(A);
  Vec c = to_vec(q.c);
  Vec z = scaled(Rational(-1, 2), mat_vec(inv, c));
  Rational minimum = Rational(q.c0) - dot(c, mat_vec(inv, c)) / 4;
  Box box;
  Rational slack = Rational(hi) - minimum;
  if (slack < 0) {
    box.empty = true;
    return box;
  }
  for (int a = 0; a < n; ++a) {
    Rational s = slack * inv[a][a];
    long long t = to_ll(isqrt(floor_of(s))) + 1;
    box.lo.push_back(to_ll(floor_of(z[a])) - t - 1);
    box.hi.push_back(to_ll(ceil_of(z[a])) + t + 1);
  }
  return box;
}

// Recursive descent: coordinates before the last are looped over the box, the last one is
// read off from the one-variable quadratic.
struct Walker {
  const IntQuadratic& q;
  const Box& box;
  long long lo, hi;
  std::vector<ValuedPoint>& out;
  IVec k;
  std::vector<__int128> lin;

  void last(__int128 acc) {
    const int j = q.dim() - 1;
    const long double a = static_cast<long double>(q.A[j][j]);
    const long double b = static_cast<long double>(lin[j]);
    const long double disc = b * b - 4 * a * static_cast<long double>(acc - hi);
    if (disc < 0) return;
    const long double r = std::sqrt(disc);
    long long from = static_cast<long long>(std::floor((-b - r) / (2 * a))) - 1;
    long long to = static_cast<long long>(std::ceil((-b + r) / (2 * a))) + 1;
    from = std::max(from, box.lo[j]);
    to = std::min(to, box.hi[j]);
    for (long long x = from; x <= to; ++x) {
      __int128 v = acc + static_cast<__int128>(q.A[j][j]) * x * x + lin[j] * x;
      if (v < lo || v > hi) continue;
      k[j] = x;
      out.push_back({static_cast<long long>(v), k});
    }
  }

  void walk(int depth, __int128 acc) {
    const int n = q.dim();
    if (depth == n - 1) {
      last(acc);
      return;
    }
    for (long long x = box.lo[depth]; x <= box.hi[depth]; ++x) fix(depth, x, acc);
  }

  void fix(int depth, long long x, __int128 acc) {
    const int n = q.dim();
    k[depth] = x;
    __int128 next = acc + static_cast<__int128>(q.A[depth][depth]) * x * x + lin[depth] * x;
    for (int b = depth + 1; b < n; ++b) lin[b] += 2 * static_cast<__int128>(q.A[depth][b]) * x;
    walk(depth + 1, next);
    for (int b = depth + 1; b < n; ++b) lin[b] -= 2 * static_cast<__int128>(q.A[depth][b]) * x;
  }
};

bool by_value_then_point(const ValuedPoint& a, const ValuedPoint& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.k < b.k;
}

}  // namespace

std::vector<ValuedPoint> points_in_range(const IntQuadratic& q, long long lo, long long hi, Exec exec) {
  std::vector<ValuedPoint> out;
  const int n = q.dim();
  if (n == 0 || hi < lo) return out;
  Box box = search_box(q, hi);
  if (box.empty) return out;

  auto fresh = [&](std::vector<ValuedPoint>& sink) {
    Walker w{q, box, lo, hi, sink, IVec(n, 0), std::vector<__int128>(n)};
    for (int a = 0; a < n; ++a) w.lin[a] = q.c[a];
    return w;
  };

  if (n == 1 || exec == Exec::Serial) {
    Walker w = fresh(out);
    w.walk(0, q.c0);
  } else {
    const long long first = box.lo[0];
    const long long count = box.hi[0] - box.lo[0] + 1;
    std::vector<std::vector<ValuedPoint>> parts(count);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long long i = 0; i < count; ++i) {
      Walker w = fresh(parts[i]);
      w.fix(0, first + i, q.c0);
    }
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(out.begin(), out.end(), by_value_then_point);
  return out;
}

bool lex_less(const Vec& a, const Vec& b) { return a < b; }

std::vector<Vec> coset_representatives(const TypeData& t) {
  if (!t.has_L()) throw UnsupportedLattice("L is not registered for " + t.id.str());
  auto reduce = [&](const Vec& v) {
    Vec c = *basis_coordinates(t.M_basis, v);
    Vec out = v;
    for (std::size_t j = 0; j < c.size(); ++j) out = sub(out, scaled(Rational(floor_of(c[j])), t.M_basis[j]));
    return out;
  };
  std::vector<Vec> extra;
  for (const auto& g : t.L_generators)
    if (!in_M(t, g)) extra.push_back(g);
  std::vector<Vec> reps{Vec(t.ambient_dim, Rational(0))};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const auto& g : extra) {
      Vec r = reduce(add(reps[i], g));
      if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
    }
  return reps;
}

namespace {

std::function<Rational(const Vec&)> length_function(const TypeData& t, int weight) {
  if (weight == 0) return [&t](const Vec& v) { return atomic_length0(t, v); };
  DominantWeight w = basic_weight(t, weight);
  return [&t, w](const Vec& v) { return extended_atomic_length(t, w, v); };
}

std::vector<Vec> origins(const TypeData& t, LatticeKind lattice) {
  if (lattice == LatticeKind::M) return {Vec(t.ambient_dim, Rational(0))};
  return coset_representatives(t);
}

Vec point_of(const Vec& origin, const std::vector<Vec>& basis, const IVec& k) {
  Vec v = origin;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (k[j]) v = add(v, scaled(k[j], basis[j]));
  return v;
}

}  // namespace

std::vector<std::pair<Rational, std::vector<Vec>>> enumerate_atomic_upto(
    const TypeData& t, int weight, const Rational& max_N, LatticeKind lattice, Exec exec) {
  auto f = length_function(t, weight);
  std::map<Rational, std::vector<Vec>> grouped;
  for (const auto& o : origins(t, lattice)) {
    CompiledForm form = compile_form(f, o, t.M_basis);
    long long hi = to_ll(floor_of(max_N * form.denom));
    for (auto& p : points_in_range(form.q, 0, hi, exec))
      grouped[Rational(p.value, form.denom)].push_back(point_of(o, t.M_basis, p.k));
  }
  std::vector<std::pair<Rational, std::vector<Vec>>> out;
  for (auto& [value, pts] : grouped) {
    std::sort(pts.begin(), pts.end());
    out.emplace_back(value, std::move(pts));
  }
  return out;
}

std::vector<Vec> enumerate_atomic(const TypeData& t, int weight, const Rational& N,
                                  LatticeKind lattice, Exec exec) {
  auto f = length_function(t, weight);
  std::vector<Vec> out;
  if (N < 0) return out;
  for (const auto& o : origins(t, lattice)) {
    CompiledForm form = compile_form(f, o, t.M_basis);
    Rational target = N * form.denom;
    if (!is_integer(target)) continue;
    long long v = to_ll(target);
    for (auto& p : points_in_range(form.q, v, v, exec)) out.push_back(point_of(o, t.M_basis, p.k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace corelat
