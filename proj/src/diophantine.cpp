#include "corelat/diophantine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace corelat {

namespace {

void emit_tuples(const IVec& coeffs, std::size_t from, std::size_t to, long long budget, IVec& cur,
                 const std::function<void(long long used)>& sink, long long used) {
  if (from == to) {
    sink(used);
    return;
  }
  const long long d = coeffs[from];
  const long long b = isqrt((budget - used) / d);
  for (long long x = -b; x <= b; ++x) {
    cur.push_back(x);
    emit_tuples(coeffs, from + 1, to, budget, cur, sink, used + d * x * x);
    cur.pop_back();
  }
}

// Solutions with the first coordinate fixed to x0.
void solve_from(const IVec& coeffs, long long k, IVec& cur, long long used, std::vector<IVec>& out) {
  const std::size_t i = cur.size();
  const long long d = coeffs[i];
  const long long rest = k - used;
  if (i + 1 == coeffs.size()) {
    if (rest % d) return;
    long long v = rest / d;
    if (!is_square(v)) return;
    long long r = isqrt(v);
    cur.push_back(-r);
    out.push_back(cur);
    cur.pop_back();
    if (r) {
      cur.push_back(r);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  const long long b = isqrt(rest / d);
  for (long long x = -b; x <= b; ++x) {
    cur.push_back(x);
    solve_from(coeffs, k, cur, used + d * x * x, out);
    cur.pop_back();
  }
}

GroupElement normalise(IMatrix num, long long den) {
  long long g = den;
  for (const auto& row : num)
    for (long long x : row) g = std::gcd(g, x);
  if (g < 0) g = -g;
  if (g > 1) {
    for (auto& row : num)
      for (auto& x : row) x /= g;
    den /= g;
  }
  return {std::move(num), den};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  const std::size_t n = a.num.size();
  IMatrix m(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m[i][j] += a.num[i][k] * b.num[k][j];
  return normalise(std::move(m), a.den * b.den);
}

GroupElement identity_element(int n) {
  IMatrix m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return {m, 1};
}

}  // namespace

std::vector<IVec> solve_diagonal(const DiagonalForm& form, long long k, Exec exec) {
  std::vector<IVec> out;
  const IVec& c = form.coeffs;
  if (k < 0 || c.empty()) return out;
  for (long long d : c)
    if (d < 1) throw std::invalid_argument("diagonal coefficients must be positive");
  if (c.size() == 1 || exec == Exec::Serial) {
    IVec cur;
    solve_from(c, k, cur, 0, out);
  } else {
    const long long b = isqrt(k / c[0]);
    std::vector<std::vector<IVec>> parts(2 * b + 1);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long long i = 0; i < 2 * b + 1; ++i) {
      const long long x = i - b;
      IVec cur{x};
      solve_from(c, k, cur, c[0] * x * x, parts[i]);
    }
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IVec> solve_diagonal_meet(const DiagonalForm& form, long long k) {
  std::vector<IVec> out;
  const IVec& c = form.coeffs;
  if (k < 0 || c.empty()) return out;
  const std::size_t half = c.size() / 2;
  std::vector<std::pair<long long, IVec>> left, right;
  IVec cur;
  emit_tuples(c, 0, half, k, cur, [&](long long s) { left.emplace_back(s, cur); }, 0);
  emit_tuples(c, half, c.size(), k, cur, [&](long long s) { right.emplace_back(s, cur); }, 0);
  std::sort(right.begin(), right.end());
  for (const auto& [s, a] : left) {
    auto lo = std::lower_bound(right.begin(), right.end(), std::make_pair(k - s, IVec{}));
    for (auto it = lo; it != right.end() && it->first == k - s; ++it) {
      IVec p = a;
      p.insert(p.end(), it->second.begin(), it->second.end());
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup make_group(GroupTag tag, int rank) {
  FiniteGroup g;
  g.tag = tag;
  switch (tag) {
    case GroupTag::D8:
      g.dim = 2;
      g.generators = {{{{0, -1}, {1, 0}}, 1}, {{{0, 1}, {1, 0}}, 1}};
      break;
    case GroupTag::C4:
      g.dim = 2;
      g.generators = {{{{0, -1}, {1, 0}}, 1}};
      break;
    case GroupTag::V4:
      g.dim = 2;
      g.generators = {{{{-1, 0}, {0, 1}}, 1}, {{{1, 0}, {0, -1}}, 1}};
      break;
    case GroupTag::C6:
      g.dim = 2;
      g.generators = {{{{1, -3}, {1, 1}}, 2}};
      break;
    case GroupTag::GA3:
      g.dim = 3;
      g.generators = {{{{1, 0, -3}, {0, 2, 0}, {1, 0, 1}}, 2}, {{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, 1}};
      break;
    case GroupTag::H: {
      if (rank < 1) throw std::invalid_argument("hyperoctahedral group needs a rank");
      g.dim = rank;
      GroupElement flip = identity_element(rank);
      flip.num[0][0] = -1;
      g.generators.push_back(flip);
      for (int i = 0; i + 1 < rank; ++i) {
        GroupElement swap = identity_element(rank);
        swap.num[i][i] = swap.num[i + 1][i + 1] = 0;
        swap.num[i][i + 1] = swap.num[i + 1][i] = 1;
        g.generators.push_back(swap);
      }
      break;
    }
  }
  g.elements = {identity_element(g.dim)};
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const auto& gen : g.generators) {
      GroupElement e = multiply(gen, g.elements[i]);
      if (std::find(g.elements.begin(), g.elements.end(), e) == g.elements.end()) {
        g.elements.push_back(std::move(e));
        if (g.elements.size() > 100000) throw InternalInconsistency("group closure does not terminate");
      }
    }
  }
  return g;
}

GroupTag parse_group_tag(const std::string& name) {
  if (name == "D8") return GroupTag::D8;
  if (name == "C4") return GroupTag::C4;
  if (name == "V4") return GroupTag::V4;
  if (name == "C6") return GroupTag::C6;
  if (name == "G_A3" || name == "GA3") return GroupTag::GA3;
  if (name == "H" || name == "H_n") return GroupTag::H;
  throw std::invalid_argument("unknown group " + name);
}

std::string group_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::D8: return "D8";
    case GroupTag::C4: return "C4";
    case GroupTag::V4: return "V4";
    case GroupTag::C6: return "C6";
    case GroupTag::GA3: return "G_A3";
    case GroupTag::H: return "H_n";
  }
  return "?";
}

IVec act(const GroupElement& g, const IVec& point) {
  IVec out(point.size(), 0);
  for (std::size_t i = 0; i < point.size(); ++i) {
    long long s = 0;
    for (std::size_t k = 0; k < point.size(); ++k) s += g.num[i][k] * point[k];
    if (s % g.den) throw NonIntegralImage("image of " + format_tuple(point) + " is not integral");
    out[i] = s / g.den;
  }
  return out;
}

IVec act(const FiniteGroup& group, std::size_t element, const IVec& point) {
  return act(group.elements.at(element), point);
}

std::vector<IVec> orbit_of(const FiniteGroup& group, const IVec& point) {
  std::vector<IVec> orbit{point};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& gen : group.generators) {
      IVec img = act(gen, orbit[i]);
      if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(std::move(img));
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<IVec>> orbit_partition(const FiniteGroup& group, const std::vector<IVec>& solutions) {
  std::vector<IVec> sorted = solutions;
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> seen(sorted.size(), 0);
  auto index_of = [&](const IVec& p) -> std::size_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    if (it == sorted.end() || *it != p) throw NotClosed(format_tuple(p) + " is outside the solution set");
    return static_cast<std::size_t>(it - sorted.begin());
  };
  std::vector<std::vector<IVec>> orbits;
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (seen[s]) continue;
    std::vector<IVec> orbit{sorted[s]};
    seen[s] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& gen : group.generators) {
        IVec img = act(gen, orbit[i]);
        std::size_t idx = index_of(img);
        if (!seen[idx]) {
          seen[idx] = 1;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

Freeness is_action_free(const FiniteGroup& group, const std::vector<IVec>& solutions) {
  Freeness f;
  for (const auto& orbit : orbit_partition(group, solutions))
    if (orbit.size() != group.order()) {
      f.free = false;
      f.witness = orbit.back();
      break;
    }
  return f;
}

bool two_squares_solvable(long long k) {
  if (k < 0) return false;
  if (k == 0) return true;
  for (long long p = 2; p * p <= k; ++p) {
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2) return false;
  }
  return k % 4 != 3;
}

IVec GaussianLift::operator()(const IVec& point) const {
  long long x = point[0] * c, y = point[1] * c;
  for (int i = 0; i < alpha; ++i) {
    long long nx = x - y, ny = x + y;
    x = nx;
    y = ny;
  }
  return {x, y};
}

GaussianLift gaussian_lift(long long k) {
  if (k <= 0 || !two_squares_solvable(k))
    throw Unsolvable(std::to_string(k) + " is not a sum of two squares with a bijective lift");
  GaussianLift g;
  while (k % 2 == 0) {
    k /= 2;
    ++g.alpha;
  }
  for (long long p = 3; p * p <= k; p += 2) {
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    if (p % 4 == 3)
      for (int i = 0; i < e / 2; ++i) g.c *= p;
    else
      for (int i = 0; i < e; ++i) g.m *= p;
  }
  if (k > 1) g.m *= k;  // leftover prime, necessarily 1 mod 4
  return g;
}

bool residue_free_criterion(long long a, long long b) {
  if (a < 2) throw std::invalid_argument("modulus must be at least 2");
  const long long r = ((b % a) + a) % a;
  for (long long x = 0; x < a; ++x) {
    long long sq = x * x % a;
    if (sq == r || 2 * sq % a == r) return false;
  }
  return true;
}

}  // namespace corelat
