#pragma once

#include "corelat/dynkin.hpp"
#include "corelat/parallel.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace corelat {

// Lambda = lambda + level * Lambda_0 + delta_coeff * delta
struct DominantWeight {
  Vec finite_part;
  Rational level = 1;
  Rational delta_coeff = 0;
};

enum class LatticeKind { M, L };

// Lambda_i for 0 <= i <= n; throws BadIndex.
DominantWeight basic_weight(const TypeData& t, int i);

Rational height(const TypeData& t, const Vec& v);
Rational atomic_length0(const TypeData& t, const Vec& v);
Rational atomic_length_i(const TypeData& t, int i, const Vec& v);
Rational extended_atomic_length(const TypeData& t, const DominantWeight& w, const Vec& x);
// L(x + y) - L(x) - L(y) for translations.
Rational defect_term(const TypeData& t, const DominantWeight& w, const Vec& x, const Vec& y);

// Integer quadratic k^T A k + c^T k + c0 in lattice coordinates k.
struct IntQuadratic {
  std::vector<IVec> A;
  IVec c;
  long long c0 = 0;
  int dim() const { return static_cast<int>(c.size()); }
  __int128 eval(const IVec& k) const;
};

// Polarises f over o + sum k_j basis_j. The result equals denom * f exactly.
struct CompiledForm {
  IntQuadratic q;
  long long denom = 1;
};
CompiledForm compile_form(const std::function<Rational(const Vec&)>& f, const Vec& origin,
                          const std::vector<Vec>& basis);

struct ValuedPoint {
  long long value;
  IVec k;
};

// Every k with lo <= q(k) <= hi, sorted by (value, k). q must be positive definite.
std::vector<ValuedPoint> points_in_range(const IntQuadratic& q, long long lo, long long hi,
                                         Exec exec = Exec::Parallel);

// Coset representatives of L/M, the zero vector first.
std::vector<Vec> coset_representatives(const TypeData& t);

// Lattice points with Lambda_weight atomic length N, sorted lexicographically.
std::vector<Vec> enumerate_atomic(const TypeData& t, int weight, const Rational& N,
                                  LatticeKind lattice = LatticeKind::M, Exec exec = Exec::Parallel);

// All lattice points with length <= max_N grouped by value.
std::vector<std::pair<Rational, std::vector<Vec>>> enumerate_atomic_upto(
    const TypeData& t, int weight, const Rational& max_N, LatticeKind lattice = LatticeKind::M,
    Exec exec = Exec::Parallel);

bool lex_less(const Vec& a, const Vec& b);

}  // namespace corelat
