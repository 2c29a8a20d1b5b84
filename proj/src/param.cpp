#include "corelat/param.hpp"

#include "corelat/cores.hpp"
#include "corelat/weyl.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

namespace corelat {

IVec AffineMap::operator()(const Vec& x) const {
  IVec out(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    Rational s = offset[i];
    for (std::size_t k = 0; k < x.size(); ++k)
      if (A[i][k]) s += A[i][k] * x[k];
    if (!is_integer(s)) throw NonIntegralImage("image of " + format_tuple(x) + " is not integral");
    out[i] = to_ll(s);
  }
  return out;
}

namespace {

Vec identity_coords(const Vec& q) { return q; }
Vec u_coords(const Vec& q) { return {q[0] + q[1], q[0] - q[1]}; }
Vec first_two(const Vec& q) { return {q[0], q[1]}; }

IMatrix diagonal(int n, long long s) {
  IMatrix m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = s;
  return m;
}

Vec unit_vec(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

void attach_type(ParamCase& c, std::string_view type_id, int weight, LatticeKind lattice) {
  auto t = std::make_shared<const TypeData>(lookup_type(type_id));
  c.type = *t;
  c.weight = weight;
  c.lattice = lattice;
  c.basis = t->M_basis;
  if (lattice == LatticeKind::M)
    c.origins = {Vec(t->ambient_dim, Rational(0))};
  else
    c.origins = coset_representatives(*t);
  if (weight == 0)
    c.length = [t](const Vec& v) { return atomic_length0(*t, v); };
  else
    c.length = [t, weight](const Vec& v) { return atomic_length_i(*t, weight, v); };
  c.coordinates = identity_coords;
}

struct HypSpec {
  HypFamily family;
  int n;
};

HypSpec parse_hyp(std::string_view text) {
  AffineTypeId id = AffineTypeId::parse(text);
  HypSpec s{HypFamily::B, 0};
  if (id.family == 'B' && id.twist == 1) {
    s = {HypFamily::B, id.rank_label};
  } else if (id.family == 'C' && id.twist == 1) {
    s = {HypFamily::C, id.rank_label};
  } else if (id.family == 'A' && id.twist == 2) {
    if (id.rank_label % 2)
      s = {HypFamily::Aodd, (id.rank_label + 1) / 2};
    else
      s = {HypFamily::Aeven, id.rank_label / 2};
  } else if (id.family == 'D' && id.twist == 2) {
    s = {HypFamily::D, id.rank_label - 1};
  } else {
    throw UnknownType("no hyperoctahedral family for " + id.str());
  }
  if (s.n < 2) throw UnknownType("hyperoctahedral rows need finite rank at least 2, got " + id.str());
  return s;
}

ParamCase make_hyp(std::string_view text) {
  const HypSpec spec = parse_hyp(text);
  const int n = spec.n;
  ParamCase c;
  c.id = "HYP:" + std::string(text);
  try {
    c.type = lookup_type(text);
  } catch (const UnknownType&) {
  }
  // L(q) = quad * |q|^2 - sum lin_i q_i and phi_i = scale q_i - off_i
  Rational quad;
  long long scale = 0;
  bool half = false;
  bool even_sum = false;
  switch (spec.family) {
    case HypFamily::B:
      quad = n, scale = 2 * n, c.a = 4 * n, even_sum = true;
      break;
    case HypFamily::C:
      quad = 2 * n, scale = 4 * n, c.a = 8 * n, half = true;
      break;
    case HypFamily::Aodd:
      quad = Rational(2 * n - 1, 2), scale = 4 * n - 2, c.a = 16 * n - 8, half = true, even_sum = true;
      break;
    case HypFamily::D:
      quad = n + 1, scale = 2 * (n + 1), c.a = 4 * (n + 1);
      break;
    case HypFamily::Aeven:
      quad = Rational(2 * n + 1, 2), scale = 4 * n + 2, c.a = 16 * n + 8, half = true;
      break;
  }
  IVec off(n);
  Vec lin(n);
  for (int i = 1; i <= n; ++i) {
    off[i - 1] = half ? 2 * (n - i) + 1 : n - i + 1;
    lin[i - 1] = spec.family == HypFamily::C ? Rational(off[i - 1]) : Rational(off[i - 1], half ? 2 : 1);
  }
  c.b = 0;
  for (long long o : off) c.b += o * o;
  c.form.coeffs = IVec(n, 1);
  c.group = GroupTag::H;
  c.group_rank = n;
  c.claim = Claim::OrbitSizeOnly;
  c.orbit_size = 1;
  for (int i = 1; i <= n; ++i) c.orbit_size *= 2 * i;
  c.map.A = diagonal(n, scale);
  for (long long o : off) c.map.offset.push_back(-o);
  if (even_sum) {
    for (int i = 0; i + 1 < n; ++i) c.basis.push_back(sub(unit_vec(n, i), unit_vec(n, i + 1)));
    c.basis.push_back(add(unit_vec(n, n - 2), unit_vec(n, n - 1)));
  } else {
    for (int i = 0; i < n; ++i) c.basis.push_back(unit_vec(n, i));
  }
  c.origins = {Vec(n, Rational(0))};
  c.length = [quad, lin](const Vec& q) {
    Rational s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) s += quad * q[i] * q[i] - lin[i] * q[i];
    return s;
  };
  c.coordinates = identity_coords;
  check_case(c);
  return c;
}

std::string describe(const std::vector<IVec>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ";" : "") + format_tuple(pts[i]);
  return s + "}";
}

// Index of every solution's orbit, aligned with the sorted solution list.
std::vector<std::size_t> orbit_index(const std::vector<IVec>& sols, const std::vector<std::vector<IVec>>& orbits) {
  std::vector<std::size_t> idx(sols.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (const auto& p : orbits[o]) {
      auto it = std::lower_bound(sols.begin(), sols.end(), p);
      idx[static_cast<std::size_t>(it - sols.begin())] = o;
    }
  return idx;
}

std::ptrdiff_t find_sorted(const std::vector<IVec>& sols, const IVec& p) {
  auto it = std::lower_bound(sols.begin(), sols.end(), p);
  if (it == sols.end() || *it != p) return -1;
  return it - sols.begin();
}

void check_equation(Report& r, const ParamCase& c, const std::vector<Vec>& dom,
                    const std::vector<IVec>& images, const std::vector<IVec>& sols) {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (find_sorted(sols, images[i]) < 0) {
      r.record("equation", false,
               "image " + format_tuple(images[i]) + " of " + format_tuple(c.coordinates(dom[i % dom.size()])) +
                   " is not a solution");
      return;
    }
  r.record("equation", true);
}

}  // namespace

ParamCase make_case(std::string_view id) {
  ParamCase c;
  c.id = std::string(id);
  if (id.substr(0, 4) == "HYP:") return make_hyp(id.substr(4));
  if (id == "A2" || id == "A2ext") {
    attach_type(c, "A2_1", 0, LatticeKind::M);
    c.a = 12, c.b = 4, c.form.coeffs = {1, 3};
    c.group = GroupTag::C6;
    c.map = {{{3, 6, 0}, {3, 0, 0}}, {-1, -1}};
  } else if (id == "C2") {
    attach_type(c, "C2_1", 0, LatticeKind::M);
    c.a = 8, c.b = 5, c.form.coeffs = {1, 1};
    c.group = GroupTag::D8;
    c.coordinates = u_coords;
    c.map = {diagonal(2, 4), {-2, -1}};
  } else if (id == "C2L1") {
    attach_type(c, "C2_1", 1, LatticeKind::L);
    c.a = 8, c.b = 1, c.form.coeffs = {1, 1};
    c.group = GroupTag::C4;
    c.coordinates = u_coords;
    c.map = {diagonal(2, 4), {0, 1}};
  } else if (id == "D3t") {
    attach_type(c, "D3_2", 0, LatticeKind::M);
    c.a = 12, c.b = 5, c.form.coeffs = {1, 1};
    c.group = GroupTag::D8;
    c.map = {diagonal(2, 6), {-2, -1}};
  } else if (id == "A42") {
    attach_type(c, "A4_2", 0, LatticeKind::M);
    c.a = 40, c.b = 10, c.form.coeffs = {1, 1};
    c.group = GroupTag::D8;
    c.claim = Claim::OrbitSizeOnly;
    c.orbit_size = 8;
    c.map = {diagonal(2, 10), {-3, -1}};
  } else if (id == "G21") {
    attach_type(c, "G2_1", 0, LatticeKind::M);
    c.a = 6, c.b = 7, c.form.coeffs = {1, 3};
    c.group = GroupTag::V4;
    c.claim = Claim::OrbitSizeOnly;
    c.orbit_size = 4;
    c.coordinates = first_two;
    c.map = {{{6, 3}, {0, 3}}, {2, 1}};
  } else if (id == "D43") {
    attach_type(c, "D4_3", 0, LatticeKind::M);
    c.a = 12, c.b = 7, c.form.coeffs = {1, 3};
    c.group = GroupTag::V4;
    c.coordinates = first_two;
    c.map = {{{0, 6}, {4, 2}}, {2, 1}};
  } else if (id == "A3") {
    attach_type(c, "A3_1", 0, LatticeKind::M);
    c.a = 48, c.b = 30, c.form.coeffs = {1, 2, 3};
    c.group = GroupTag::GA3;
    c.claim = Claim::StratifiedA3;
    c.map = {{{0, 12, 4, 0}, {0, 0, 8, 0}, {8, 4, 4, 0}}, {-1, 1, -3}};
  } else {
    throw std::invalid_argument("unknown case '" + std::string(id) + "'");
  }
  if (c.claim == Claim::CompleteRepresentatives || c.claim == Claim::StratifiedA3)
    c.orbit_size = make_group(c.group).order();
  check_case(c);
  return c;
}

std::vector<std::string> base_case_ids() { return {"A2", "A2ext", "C2", "C2L1", "D3t", "A42", "G21", "D43", "A3"}; }

HypFamily hyp_family(const ParamCase& c) {
  if (c.id.substr(0, 4) != "HYP:") throw std::invalid_argument(c.id + " is not a hyperoctahedral case");
  return parse_hyp(c.id.substr(4)).family;
}

int hyp_rank(const ParamCase& c) {
  if (c.id.substr(0, 4) != "HYP:") throw std::invalid_argument(c.id + " is not a hyperoctahedral case");
  return parse_hyp(c.id.substr(4)).n;
}

Vec case_coordinates(const ParamCase& c, const Vec& q) { return c.coordinates(q); }
IVec phi(const ParamCase& c, const Vec& q) { return c.map(c.coordinates(q)); }
Rational case_length(const ParamCase& c, const Vec& q) { return c.length(q); }
long long target_value(const ParamCase& c, long long N) { return c.a * N + c.b; }

std::vector<Vec> case_domain(const ParamCase& c, long long N, Exec exec) {
  std::vector<Vec> out;
  if (N < 0) return out;
  for (const auto& o : c.origins) {
    CompiledForm form = compile_form(c.length, o, c.basis);
    const long long v = N * form.denom;
    for (const auto& p : points_in_range(form.q, v, v, exec)) {
      Vec x = o;
      for (std::size_t j = 0; j < c.basis.size(); ++j)
        if (p.k[j]) x = add(x, scaled(p.k[j], c.basis[j]));
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vec>> case_domain_upto(const ParamCase& c, long long max_N, Exec exec) {
  std::vector<std::vector<Vec>> out(max_N < 0 ? 0 : max_N + 1);
  if (max_N < 0) return out;
  for (const auto& o : c.origins) {
    CompiledForm form = compile_form(c.length, o, c.basis);
    for (const auto& p : points_in_range(form.q, 0, max_N * form.denom, exec)) {
      if (p.value % form.denom) continue;
      Vec x = o;
      for (std::size_t j = 0; j < c.basis.size(); ++j)
        if (p.k[j]) x = add(x, scaled(p.k[j], c.basis[j]));
      out[p.value / form.denom].push_back(std::move(x));
    }
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<IVec> case_solutions(const ParamCase& c, long long N, Exec exec) {
  return solve_diagonal(c.form, target_value(c, N), exec);
}

FiniteGroup case_group(const ParamCase& c) { return make_group(c.group, c.group_rank); }

void check_case(const ParamCase& c, int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto check = [&](const Vec& q) {
    IVec x = phi(c, q);
    Rational lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += Rational(c.form.coeffs[i]) * x[i] * x[i];
    if (lhs != c.a * c.length(q) + c.b)
      throw InternalInconsistency(c.id + ": phi" + format_tuple(q) + " misses the quadric");
  };
  for (const auto& o : c.origins) check(o);
  for (int s = 0; s < samples; ++s) {
    Vec q = c.origins[static_cast<std::size_t>(s) % c.origins.size()];
    for (const auto& b : c.basis) q = add(q, scaled(coeff(rng), b));
    check(q);
  }
}

void Report::record(const std::string& name, bool ok, const std::string& why) {
  checks.emplace_back(name, ok);
  if (!ok && pass) {
    pass = false;
    witness = why.empty() ? name + " failed" : why;
  }
}

bool Report::check(const std::string& name) const {
  for (const auto& [n, ok] : checks)
    if (n == name && !ok) return false;
  return true;
}

Report verify_representatives(const ParamCase& c, long long N, Exec exec) {
  Report r;
  r.case_id = c.id;
  r.N = N;
  const auto sols = case_solutions(c, N, exec);
  const auto dom = case_domain(c, N, exec);
  const FiniteGroup g = case_group(c);
  r.solutions = sols.size();
  std::vector<IVec> images;
  for (const auto& q : dom) images.push_back(phi(c, q));
  check_equation(r, c, dom, images, sols);
  if (!r.pass) return r;

  const auto orbits = orbit_partition(g, sols);
  r.orbits = orbits.size();
  auto small = std::find_if(orbits.begin(), orbits.end(), [&](const auto& o) { return o.size() != g.order(); });
  r.record("free", small == orbits.end(),
           small == orbits.end() ? "" : "orbit of " + format_tuple(small->back()) + " has size " + std::to_string(small->size()));

  std::vector<IVec> distinct = images;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  r.phi_images = distinct.size();
  r.record("injective", distinct.size() == images.size(), "phi is not injective at N=" + std::to_string(N));
  r.record("count", r.phi_images == r.orbits,
           std::to_string(r.phi_images) + " images for " + std::to_string(r.orbits) + " orbits");

  const auto idx = orbit_index(sols, orbits);
  std::vector<int> hits(orbits.size(), 0);
  for (const auto& p : images) ++hits[idx[find_sorted(sols, p)]];
  auto bad = std::find_if(hits.begin(), hits.end(), [](int h) { return h != 1; });
  if (bad == hits.end()) {
    r.record("one_per_orbit", true);
  } else {
    const auto& o = orbits[bad - hits.begin()];
    r.record("one_per_orbit", false,
             "orbit " + describe(o) + " contains " + std::to_string(*bad) + " images");
  }

  if (c.id == "C2L1") {
    std::set<IVec> even, odd;
    for (const auto& q : dom) {
      Vec u = c.coordinates(q);
      (is_integer((u[0] + u[1]) / 2) ? even : odd).insert(c.map(u));
    }
    bool disjoint = std::none_of(even.begin(), even.end(), [&](const IVec& p) { return odd.count(p); });
    r.record("disjoint_layers", disjoint, "an image lies in both lattice layers");
  }
  return r;
}

Report verify_orbit_size(const ParamCase& c, long long N, Exec exec) {
  Report r;
  r.case_id = c.id;
  r.N = N;
  const auto sols = case_solutions(c, N, exec);
  const auto dom = case_domain(c, N, exec);
  const FiniteGroup g = case_group(c);
  r.solutions = sols.size();
  std::vector<IVec> images;
  for (const auto& q : dom) images.push_back(phi(c, q));
  check_equation(r, c, dom, images, sols);
  if (!r.pass) return r;

  bool sizes_ok = true;
  std::string why;
  for (const auto& p : images) {
    auto orb = orbit_of(g, p);
    if (orb.size() != c.orbit_size) {
      sizes_ok = false;
      why = "orbit of " + format_tuple(p) + " has size " + std::to_string(orb.size()) + ", expected " +
            std::to_string(c.orbit_size);
      break;
    }
  }
  r.record("orbit_size", sizes_ok, why);

  std::vector<IVec> distinct = images;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  r.phi_images = distinct.size();

  const auto orbits = orbit_partition(g, sols);
  r.orbits = orbits.size();
  const auto idx = orbit_index(sols, orbits);
  std::vector<char> covered(orbits.size(), 0);
  for (const auto& p : images) covered[idx[find_sorted(sols, p)]] = 1;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (!covered[o]) r.uncovered.push_back(orbits[o]);
  return r;
}

Report pig_a2_verify(long long N, Exec exec) {
  const ParamCase c = make_case("A2ext");
  const TypeData& t = *c.type;
  Report r;
  r.case_id = c.id;
  r.N = N;
  const auto sols = case_solutions(c, N, exec);
  const auto dom = case_domain(c, N, exec);
  const FiniteGroup g = case_group(c);
  r.solutions = sols.size();
  r.orbits = orbit_partition(g, sols).size();

  std::vector<IVec> all;
  bool layers_ok = true;
  std::string why;
  for (const auto& q : dom) {
    std::vector<IVec> pts;
    for (int j : sigma_indices(t)) {
      IVec p = c.map(extended_image(t, {j, q}));
      IVec m = p;
      for (auto& x : m) x = -x;
      pts.push_back(p);
      pts.push_back(m);
    }
    std::sort(pts.begin(), pts.end());
    if (layers_ok && pts != orbit_of(g, phi(c, q))) {
      layers_ok = false;
      why = "layer pairs of " + format_tuple(q) + " give " + describe(pts);
    }
    all.insert(all.end(), pts.begin(), pts.end());
  }
  r.phi_images = 3 * dom.size();
  r.record("layer_orbit", layers_ok, why);
  std::sort(all.begin(), all.end());
  const bool dup = std::adjacent_find(all.begin(), all.end()) != all.end();
  r.record("disjoint_pairs", !dup, "two extended pairs overlap");
  std::string missing;
  if (all != sols) {
    std::vector<IVec> diff;
    std::set_symmetric_difference(all.begin(), all.end(), sols.begin(), sols.end(), std::back_inserter(diff));
    if (!diff.empty()) missing = format_tuple(diff.front()) + " is not covered exactly once";
  }
  r.record("decomposition", all == sols, missing.empty() ? "pairs do not cover U" : missing);
  return r;
}

A3Strata a3_strata(long long N, Exec exec) {
  const ParamCase c = make_case("A3");
  A3Strata s;
  s.N = N;
  s.report.case_id = c.id;
  s.report.N = N;
  const auto sols = case_solutions(c, N, exec);
  s.report.solutions = sols.size();
  const long long K = target_value(c, N);
  for (long long y = -isqrt(24 * N + 15); y * y < 24 * N + 15; ++y)
    if (y % 2 != 0 && y * y < 24 * N + 15) s.I.push_back(y);

  bool omega_ok = true;
  std::string why;
  for (long long y : s.I) {
    const long long y2 = y * y;
    const bool zero = y2 % 3 == 0;
    const long long p = zero ? y2 / 3 : (y2 - 1) / 3;
    const long long My = 16 * N + 10 - 2 * p;
    const long long bound = isqrt(K - 2 * y2);
    std::vector<long long> om;
    for (long long m = -bound; m <= bound; ++m) {
      if ((m * m) % 3 != (zero ? 0 : 1)) continue;
      const long long rest = zero ? My - m * m / 3 : My - (m * m + 2) / 3;
      if (is_square(rest)) om.push_back(m);
    }
    A3Stratum st{N, y, {}};
    for (const auto& pt : sols)
      if (pt[1] == y) st.points.push_back(pt);
    if (!om.empty()) s.gamma.push_back(y);
    if (omega_ok && om.empty() != st.points.empty()) {
      omega_ok = false;
      why = "stratum y=" + std::to_string(y) + " disagrees with its Omega set";
    }
    s.omega.emplace_back(y, std::move(om));
    s.strata.push_back(std::move(st));
  }
  s.report.record("omega", omega_ok, why);

  std::size_t in_gamma = 0;
  for (const auto& st : s.strata)
    if (std::binary_search(s.gamma.begin(), s.gamma.end(), st.y)) in_gamma += st.points.size();
  s.report.record("partition", in_gamma == sols.size(),
                  std::to_string(sols.size() - in_gamma) + " solutions outside the strata over Gamma");
  s.report.orbits = s.gamma.size();
  return s;
}

Report a3_conjecture_check(long long N, Exec exec) {
  const ParamCase c = make_case("A3");
  const TypeData& t = *c.type;
  Report r;
  r.case_id = c.id;
  r.N = N;
  const auto sols = case_solutions(c, N, exec);
  const auto dom = case_domain(c, N, exec);
  const FiniteGroup g = case_group(c);
  r.solutions = sols.size();

  std::vector<IVec> images;
  bool distinct_strata = true;
  std::string why;
  for (const auto& q : dom) {
    std::set<long long> ys;
    for (int j : sigma_indices(t)) {
      IVec p = c.map(extended_image(t, {j, q}));
      ys.insert(p[1]);
      images.push_back(p);
    }
    if (distinct_strata && ys.size() != sigma_indices(t).size()) {
      distinct_strata = false;
      why = "layers of " + format_tuple(q) + " share a stratum";
    }
  }
  r.phi_images = images.size();
  for (std::size_t i = 0; i < images.size(); ++i)
    if (find_sorted(sols, images[i]) < 0) {
      r.record("equation", false, "layer image " + format_tuple(images[i]) + " is not a solution");
      return r;
    }
  r.record("equation", true);

  const auto orbits = orbit_partition(g, sols);
  r.orbits = orbits.size();
  auto mixed = std::find_if(orbits.begin(), orbits.end(), [](const auto& o) {
    return std::any_of(o.begin(), o.end(), [&](const IVec& p) { return p[1] != o.front()[1]; });
  });
  r.record("stability", mixed == orbits.end(), mixed == orbits.end() ? "" : "orbit " + describe(*mixed) + " leaves its stratum");
  r.record("distinct_strata", distinct_strata, why);

  const auto idx = orbit_index(sols, orbits);
  std::vector<int> hits(orbits.size(), 0);
  for (const auto& p : images) ++hits[idx[find_sorted(sols, p)]];
  auto twice = std::find_if(hits.begin(), hits.end(), [](int h) { return h > 1; });
  r.record("disjoint_orbits", twice == hits.end(),
           twice == hits.end() ? "" : "orbit " + describe(orbits[twice - hits.begin()]) + " meets two layer images");
  auto none = std::find(hits.begin(), hits.end(), 0);
  r.record("conjecture", none == hits.end(),
           none == hits.end() ? "" : "orbit " + describe(orbits[none - hits.begin()]) + " has no layer image");
  return r;
}

Report verify(const ParamCase& c, long long N, Exec exec) {
  if (c.id == "A2ext") return pig_a2_verify(N, exec);
  switch (c.claim) {
    case Claim::CompleteRepresentatives:
      return verify_representatives(c, N, exec);
    case Claim::OrbitSizeOnly:
      return verify_orbit_size(c, N, exec);
    case Claim::StratifiedA3: {
      Report r = a3_conjecture_check(N, exec);
      Report s = a3_strata(N, exec).report;
      for (const auto& [name, ok] : s.checks) r.record(name, ok, s.witness.value_or(name + " failed"));
      return r;
    }
  }
  return {};
}

std::vector<Report> sweep(const ParamCase& c, long long max_N, Exec exec) {
  if (max_N < 0) return {};
  std::vector<Report> out(max_N + 1);
  std::vector<std::exception_ptr> errors(max_N + 1);
  if (exec == Exec::Serial) {
    for (long long N = 0; N <= max_N; ++N) out[N] = verify(c, N, Exec::Serial);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (long long N = 0; N <= max_N; ++N) {
    try {
      out[N] = verify(c, N, Exec::Serial);
    } catch (...) {
      errors[N] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string join_tuples(std::vector<IVec> points) {
  std::sort(points.begin(), points.end());
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? ";" : "") + format_tuple(points[i]);
  return s;
}

Table case_table(const ParamCase& c, long long max_N, Exec exec) {
  Table t;
  t.header = {"N", "B", "phi", "solutions"};
  const auto levels = case_domain_upto(c, max_N, exec);
  for (long long N = 0; N <= max_N; ++N) {
    std::vector<IVec> coords, images;
    for (const auto& q : levels[N]) {
      coords.push_back(to_ivec(c.coordinates(q)));
      images.push_back(phi(c, q));
    }
    t.rows.push_back({std::to_string(N), join_tuples(coords), join_tuples(images),
                      join_tuples(case_solutions(c, N, exec))});
  }
  return t;
}

Table figure_table(std::string_view figure, long long max_N, Exec exec) {
  if (figure == "40N+10") return case_table(make_case("A42"), max_N, exec);
  if (figure == "6N+7") return case_table(make_case("G21"), max_N, exec);
  if (figure == "12N+7") {
    const ParamCase c = make_case("D43");
    Table t = case_table(c, max_N, exec);
    t.header.insert(t.header.begin() + 1, "D4flat");
    const auto levels = case_domain_upto(c, max_N, exec);
    for (long long N = 0; N <= max_N; ++N) {
      std::vector<Partition> parts;
      for (const auto& q : levels[N]) parts.push_back(d4flat_from_lattice(to_ll(q[0]), to_ll(q[1])));
      std::sort(parts.begin(), parts.end());
      std::string cell;
      for (std::size_t i = 0; i < parts.size(); ++i) cell += (i ? ";" : "") + format_partition(parts[i]);
      t.rows[N].insert(t.rows[N].begin() + 1, cell);
    }
    return t;
  }
  if (figure == "8N+1") {
    const ParamCase c = make_case("C2L1");
    Table t;
    t.header = {"N", "M_elements", "M_phi", "L_minus_M_elements", "L_minus_M_phi", "solutions"};
    const auto levels = case_domain_upto(c, max_N, exec);
    for (long long N = 0; N <= max_N; ++N) {
      std::vector<IVec> m_pts, m_img, l_pts, l_img;
      for (const auto& q : levels[N]) {
        IVec u = to_ivec(c.coordinates(q));
        const bool in_m = (u[0] + u[1]) % 2 == 0;
        (in_m ? m_pts : l_pts).push_back(u);
        (in_m ? m_img : l_img).push_back(phi(c, q));
      }
      t.rows.push_back({std::to_string(N), join_tuples(m_pts), join_tuples(m_img), join_tuples(l_pts),
                        join_tuples(l_img), join_tuples(case_solutions(c, N, exec))});
    }
    return t;
  }
  throw std::invalid_argument("unknown figure '" + std::string(figure) + "'");
}

void write_csv(std::ostream& out, const Table& t) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      if (cells[i].find(',') != std::string::npos)
        out << '"' << cells[i] << '"';
      else
        out << cells[i];
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

}  // namespace corelat
