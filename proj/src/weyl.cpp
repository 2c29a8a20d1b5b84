#include "corelat/weyl.hpp"

#include <algorithm>

namespace corelat {

namespace {

bool is_type_A(const TypeData& t) { return t.id.family == 'A' && t.id.twist == 1; }
bool is_type_C(const TypeData& t) { return t.id.family == 'C' && t.id.twist == 1; }

void require_extended(const TypeData& t) {
  if (!is_type_A(t) && !is_type_C(t))
    throw UnsupportedType("length-zero elements are only available for A_n^(1) and C_n^(1), not " + t.id.str());
}

IMatrix identity_int(int n) {
  IMatrix m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMatrix transpose_int(const IMatrix& m) {
  IMatrix t(m.size(), IVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

std::vector<int> sigma_indices(const TypeData& t) {
  require_extended(t);
  std::vector<int> out{0};
  for (int j : t.J) out.push_back(j);
  return out;
}

IMatrix coset_matrix(const TypeData& t, int j) {
  require_extended(t);
  const int dim = t.ambient_dim;
  if (j == 0) return identity_int(dim);
  if (std::find(t.J.begin(), t.J.end(), j) == t.J.end())
    throw BadIndex("no length-zero element sigma_" + std::to_string(j) + " in " + t.id.str());
  IMatrix m(dim, IVec(dim, 0));
  if (is_type_A(t)) {
    // cyclic shift (q_1, ..., q_{n+1}) -> (q_{n+1}, q_1, ..., q_n) applied j times
    for (int i = 0; i < dim; ++i) m[i][((i - j) % dim + dim) % dim] = 1;
  } else {
    for (int i = 0; i < dim; ++i) m[i][dim - 1 - i] = -1;
  }
  return m;
}

Vec apply_matrix(const IMatrix& m, const Vec& v) {
  Vec out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (m[i][k]) out[i] += m[i][k] * v[k];
  return out;
}

Vec extended_image(const TypeData& t, const ExtGrassElement& e) {
  Vec moved = apply_matrix(coset_matrix(t, e.j), e.q);
  if (e.j == 0) return moved;
  return add(fundamental_weights(t)[e.j - 1], moved);
}

std::vector<ExtGrassElement> enumerate_extended(const TypeData& t, const Rational& N, Exec exec) {
  require_extended(t);
  std::vector<ExtGrassElement> out;
  if (N < 0) return out;
  auto weights = fundamental_weights(t);
  auto f = [&t](const Vec& v) { return atomic_length0(t, v); };
  for (int j : sigma_indices(t)) {
    Vec origin = j ? weights[j - 1] : Vec(t.ambient_dim, Rational(0));
    IMatrix back = transpose_int(coset_matrix(t, j));
    CompiledForm form = compile_form(f, origin, t.M_basis);
    Rational target = N * form.denom;
    if (!is_integer(target)) continue;
    long long v = to_ll(target);
    for (const auto& p : points_in_range(form.q, v, v, exec)) {
      Vec x = origin;
      for (std::size_t b = 0; b < t.M_basis.size(); ++b)
        if (p.k[b]) x = add(x, scaled(p.k[b], t.M_basis[b]));
      out.push_back({j, apply_matrix(back, sub(x, origin))});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition lascoux_step(int n, int i, const Partition& p) {
  const int d = n + 1;
  auto residue = [d](int r, int c) { return ((c - r) % d + d) % d; };
  Partition out = p;
  bool added = false;
  // addable corners (row r, column p[r]) and a new row below
  for (int r = 0; r <= static_cast<int>(p.size()); ++r) {
    int len = r < static_cast<int>(p.size()) ? p[r] : 0;
    bool addable = r == 0 || p[r - 1] > len;
    if (addable && residue(r, len) == i) {
      if (r == static_cast<int>(out.size())) out.push_back(0);
      ++out[r];
      added = true;
    }
  }
  if (added) return out;
  for (int r = 0; r < static_cast<int>(p.size()); ++r) {
    bool removable = r + 1 == static_cast<int>(p.size()) || p[r + 1] < p[r];
    if (removable && residue(r, p[r] - 1) == i) --out[r];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Partition lascoux_orbit(int n, const std::vector<int>& word) {
  Partition p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it > n) throw BadIndex("letter " + std::to_string(*it) + " outside 0.." + std::to_string(n));
    p = lascoux_step(n, *it, p);
  }
  return p;
}

}  // namespace corelat
