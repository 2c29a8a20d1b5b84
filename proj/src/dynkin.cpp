#include "corelat/dynkin.hpp"

#include <algorithm>
#include <charconv>

namespace corelat {

namespace {

Vec unit(int dim, int i, Rational c = 1) {
  Vec v(dim, Rational(0));
  v[i] = c;
  return v;
}

Vec diff(int dim, int i, int j, Rational c = 1) {
  Vec v(dim, Rational(0));
  v[i] = c;
  v[j] = -c;
  return v;
}

Vec from_ints(std::initializer_list<long long> xs, Rational c = 1) {
  Vec v;
  for (long long x : xs) v.push_back(c * x);
  return v;
}

std::vector<int> repeat(std::initializer_list<int> head, int fill, int count,
                        std::initializer_list<int> tail) {
  std::vector<int> out(head);
  for (int i = 0; i < count; ++i) out.push_back(fill);
  out.insert(out.end(), tail);
  return out;
}

// alpha_i = e_i - e_{i+1} for 0 <= i < k
void push_chain(std::vector<Vec>& roots, int dim, int k, Rational c = 1) {
  for (int i = 0; i < k; ++i) roots.push_back(diff(dim, i, i + 1, c));
}

[[noreturn]] void unknown(const AffineTypeId& id) {
  throw UnknownType("no affine type " + id.str());
}

void finish(TypeData& t) {
  t.n = static_cast<int>(t.simple_roots.size());
  t.h = 0;
  for (int a : t.marks) t.h += a;
  t.J.clear();
  for (int j = 1; j <= t.n; ++j)
    if (t.marks[j] == 1) t.J.push_back(j);
  if (t.M_basis.empty()) t.M_basis = t.simple_roots;
}

}  // namespace

std::string AffineTypeId::str() const {
  return std::string(1, family) + std::to_string(rank_label) + "_" + std::to_string(twist);
}

AffineTypeId AffineTypeId::parse(std::string_view text) {
  auto bad = [&] { return UnknownType("malformed type label '" + std::string(text) + "'"); };
  if (text.size() < 4) throw bad();
  AffineTypeId id;
  id.family = text[0];
  auto us = text.find('_');
  if (us == std::string_view::npos || us < 2) throw bad();
  auto r1 = std::from_chars(text.data() + 1, text.data() + us, id.rank_label);
  auto r2 = std::from_chars(text.data() + us + 1, text.data() + text.size(), id.twist);
  if (r1.ec != std::errc() || r1.ptr != text.data() + us || r2.ec != std::errc() ||
      r2.ptr != text.data() + text.size())
    throw bad();
  return id;
}

TypeData lookup_type(std::string_view text) { return lookup_type(AffineTypeId::parse(text)); }

TypeData lookup_type(const AffineTypeId& id) {
  TypeData t;
  t.id = id;
  const int r = id.rank_label;
  auto& roots = t.simple_roots;

  if (id.twist == 1) {
    switch (id.family) {
      case 'A': {
        if (r < 1) unknown(id);
        t.ambient_dim = r + 1;
        push_chain(roots, r + 1, r);
        t.marks.assign(r + 1, 1);
        t.comarks.assign(r + 1, 1);
        finish(t);
        t.L_generators = t.M_basis;
        t.L_generators.push_back(fundamental_weights(t)[0]);
        return t;
      }
      case 'B': {
        if (r < 3) unknown(id);
        t.ambient_dim = r;
        push_chain(roots, r, r - 1);
        roots.push_back(unit(r, r - 1));
        t.marks = repeat({1, 1}, 2, r - 1, {});
        t.comarks = repeat({1, 1}, 2, r - 2, {1});
        t.M_basis.assign(roots.begin(), roots.end() - 1);
        t.M_basis.push_back(unit(r, r - 1, 2));
        break;
      }
      case 'C': {
        if (r < 2) unknown(id);
        t.ambient_dim = r;
        t.scale_sq = 2;
        push_chain(roots, r, r - 1, Rational(1, 2));
        roots.push_back(unit(r, r - 1));
        t.marks = repeat({1}, 2, r - 1, {1});
        t.comarks.assign(r + 1, 1);
        for (int i = 0; i + 1 < r; ++i) t.M_basis.push_back(diff(r, i, i + 1));
        t.M_basis.push_back(unit(r, r - 1));
        finish(t);
        t.L_generators = t.M_basis;
        t.L_generators.push_back(Vec(r, Rational(1, 2)));
        return t;
      }
      case 'D': {
        if (r < 4) unknown(id);
        t.ambient_dim = r;
        push_chain(roots, r, r - 1);
        Vec last(r, Rational(0));
        last[r - 2] = 1;
        last[r - 1] = 1;
        roots.push_back(last);
        t.marks = repeat({1, 1}, 2, r - 3, {1, 1});
        t.comarks = t.marks;
        break;
      }
      case 'E': {
        if (r < 6 || r > 8) unknown(id);
        t.ambient_dim = 8;
        push_chain(roots, 8, r - 2);
        Vec v(8, Rational(0));
        v[r - 3] = 1;
        v[r - 2] = 1;
        roots.push_back(v);
        roots.push_back(Vec(8, Rational(-1, 2)));
        if (r == 6) t.marks = {1, 1, 2, 3, 2, 2, 1};
        if (r == 7) t.marks = {1, 1, 2, 3, 4, 2, 3, 2};
        if (r == 8) t.marks = {1, 2, 3, 4, 5, 6, 3, 4, 2};
        t.comarks = t.marks;
        break;
      }
      case 'F': {
        if (r != 4) unknown(id);
        t.ambient_dim = 4;
        push_chain(roots, 4, 2);
        roots.push_back(unit(4, 2));
        roots.push_back(from_ints({-1, -1, -1, 1}, Rational(1, 2)));
        t.marks = {1, 2, 3, 4, 2};
        t.comarks = {1, 2, 3, 2, 1};
        t.M_basis = {roots[0], roots[1], scaled(2, roots[2]), scaled(2, roots[3])};
        break;
      }
      case 'G': {
        if (r != 2) unknown(id);
        t.ambient_dim = 3;
        roots.push_back(from_ints({1, -1, 0}));
        roots.push_back(from_ints({-2, 1, 1}, Rational(1, 3)));
        t.marks = {1, 2, 3};
        t.comarks = {1, 2, 1};
        t.M_basis = {roots[0], scaled(3, roots[1])};
        break;
      }
      default:
        unknown(id);
    }
  } else if (id.twist == 2) {
    if (id.family == 'A' && r == 2) {
      t.ambient_dim = 2;
      t.scale_sq = 2;
      roots.push_back(from_ints({1, -1}));
      t.marks = {2, 1};
      t.comarks = {1, 2};
      t.M_basis = {from_ints({1, -1}, Rational(1, 2))};
    } else if (id.family == 'A' && r >= 5 && r % 2 == 1) {
      const int n = (r + 1) / 2;
      t.ambient_dim = n;
      push_chain(roots, n, n - 1);
      roots.push_back(unit(n, n - 1, 2));
      t.marks = repeat({1, 1}, 2, n - 2, {1});
      t.comarks = repeat({1, 1}, 2, n - 2, {2});
    } else if (id.family == 'A' && r >= 4 && r % 2 == 0) {
      const int n = r / 2;
      t.ambient_dim = n;
      push_chain(roots, n, n - 1);
      roots.push_back(unit(n, n - 1, 2));
      t.marks = repeat({}, 2, n, {1});
      t.comarks = repeat({1}, 2, n, {});
      t.M_basis.assign(roots.begin(), roots.end() - 1);
      t.M_basis.push_back(unit(n, n - 1));
    } else if (id.family == 'D' && r >= 3) {
      const int n = r - 1;
      t.ambient_dim = n;
      t.scale_sq = 2;
      push_chain(roots, n, n - 1);
      roots.push_back(unit(n, n - 1));
      t.marks.assign(n + 1, 1);
      t.comarks = repeat({1}, 2, n - 1, {1});
    } else if (id.family == 'E' && r == 6) {
      t.ambient_dim = 4;
      push_chain(roots, 4, 2);
      roots.push_back(unit(4, 2, 2));
      roots.push_back(from_ints({-1, -1, -1, 1}));
      t.marks = {1, 2, 3, 2, 1};
      t.comarks = {1, 2, 3, 4, 2};
    } else {
      unknown(id);
    }
  } else if (id.twist == 3) {
    if (id.family != 'D' || r != 4) unknown(id);
    t.ambient_dim = 3;
    roots.push_back(from_ints({1, -1, 0}));
    roots.push_back(from_ints({-2, 1, 1}));
    t.marks = {1, 2, 1};
    t.comarks = {1, 2, 3};
  } else {
    unknown(id);
  }
  finish(t);
  return t;
}

std::vector<AffineTypeId> table_types(int max_rank) {
  std::vector<AffineTypeId> out;
  auto add = [&](char f, int label, int twist) {
    AffineTypeId id{f, label, twist};
    if (lookup_type(id).n <= max_rank) out.push_back(id);
  };
  for (int n = 1; n <= max_rank; ++n) add('A', n, 1);
  for (int n = 3; n <= max_rank; ++n) add('B', n, 1);
  for (int n = 2; n <= max_rank; ++n) add('C', n, 1);
  for (int n = 4; n <= max_rank; ++n) add('D', n, 1);
  for (int n = 6; n <= std::min(8, max_rank); ++n) add('E', n, 1);
  if (max_rank >= 4) add('F', 4, 1);
  if (max_rank >= 2) add('G', 2, 1);
  add('A', 2, 2);
  for (int n = 3; n <= max_rank; ++n) add('A', 2 * n - 1, 2);
  for (int n = 2; n <= max_rank; ++n) add('D', n + 1, 2);
  for (int n = 2; n <= max_rank; ++n) add('A', 2 * n, 2);
  if (max_rank >= 4) add('E', 6, 2);
  if (max_rank >= 2) add('D', 4, 3);
  return out;
}

Rational inner(const TypeData& t, const Vec& a, const Vec& b) { return t.scale_sq * dot(a, b); }

Rational norm_sq(const TypeData& t, const Vec& v) { return inner(t, v, v); }

std::optional<Vec> basis_coordinates(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return std::nullopt;
  RMatrix a(v.size(), Vec(basis.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) a[i][j] = basis[j][i];
  return solve_linear(a, v);
}

bool in_lattice(const std::vector<Vec>& basis, const Vec& v) {
  auto c = basis_coordinates(basis, v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integer(x)) return false;
  return true;
}

bool in_M(const TypeData& t, const Vec& v) { return in_lattice(t.M_basis, v); }

Vec simple_root_coefficients(const TypeData& t, const Vec& v) {
  if (static_cast<int>(v.size()) != t.ambient_dim)
    throw NotInRootSpan("vector has wrong dimension for " + t.id.str());
  auto c = basis_coordinates(t.simple_roots, v);
  if (!c) throw NotInRootSpan(format_tuple(v) + " is outside the root span of " + t.id.str());
  return *c;
}

std::vector<Vec> fundamental_weights(const TypeData& t) {
  // sum_k c_k (alpha_k . alpha_j) = delta_ij |alpha_j|^2 / 2 in stored coordinates
  const int n = t.n;
  RMatrix gram(n, Vec(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) gram[j][k] = dot(t.simple_roots[j], t.simple_roots[k]);
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i) {
    Vec rhs(n, Rational(0));
    rhs[i] = dot(t.simple_roots[i], t.simple_roots[i]) / 2;
    auto c = solve_linear(gram, rhs);
    if (!c) throw InternalInconsistency("singular Gram matrix for " + t.id.str());
    Vec w(t.ambient_dim, Rational(0));
    for (int k = 0; k < n; ++k) w = add(w, scaled((*c)[k], t.simple_roots[k]));
    out.push_back(w);
  }
  return out;
}

Vec highest_root(const TypeData& t) {
  Vec v(t.ambient_dim, Rational(0));
  for (int i = 0; i < t.n; ++i) v = add(v, scaled(t.marks[i + 1], t.simple_roots[i]));
  return v;
}

Integer lattice_index(const std::vector<Vec>& basis, const std::vector<Vec>& generators) {
  const std::size_t n = basis.size();
  std::vector<Vec> coords;
  Integer den = 1;
  for (const auto& g : generators) {
    auto c = basis_coordinates(basis, g);
    if (!c) throw InternalInconsistency("generator outside the span of the basis");
    for (const auto& x : *c) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    coords.push_back(*c);
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& c : coords) {
    std::vector<Integer> row;
    for (const auto& x : c) row.push_back(boost::multiprecision::numerator(Rational(x * den)));
    rows.push_back(row);
  }
  // integer row echelon form by repeated Euclid steps between rows
  Integer det = 1;
  std::size_t top = 0;
  for (std::size_t col = 0; col < n; ++col) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (piv == rows.size() || abs(rows[r][col]) < abs(rows[piv][col])))
          piv = r;
      if (piv == rows.size()) throw InternalInconsistency("generators do not span a full lattice");
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer f = rows[r][col] / rows[top][col];
        for (std::size_t k = col; k < n; ++k) rows[r][k] -= f * rows[top][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    det *= abs(rows[top][col]);
    ++top;
  }
  Integer vol = 1;
  for (std::size_t i = 0; i < n; ++i) vol *= den;
  if (vol % det != 0) throw InternalInconsistency("generators do not contain the basis lattice");
  return vol / det;
}

Integer fundamental_group_order(const TypeData& t) {
  if (!t.has_L()) throw UnsupportedLattice("L is not registered for " + t.id.str());
  return lattice_index(t.M_basis, t.L_generators);
}

}  // namespace corelat
