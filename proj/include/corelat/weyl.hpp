#pragma once

#include "corelat/atomic.hpp"
#include "corelat/cores.hpp"
#include "corelat/dynkin.hpp"

#include <vector>

namespace corelat {

// sigma_j * t_q * W_0 with j = 0 the identity coset. Only types A_n^(1) and C_n^(1).
struct ExtGrassElement {
  int j = 0;
  Vec q;
  auto operator<=>(const ExtGrassElement&) const = default;
};

// Indices j of the length-zero elements: 0..n for A_n^(1), {0, n} for C_n^(1).
std::vector<int> sigma_indices(const TypeData& t);

// Linear part of sigma_j on stored coordinates; throws UnsupportedType / BadIndex.
IMatrix coset_matrix(const TypeData& t, int j);
Vec apply_matrix(const IMatrix& m, const Vec& v);

// omega_j + M_j(q)
Vec extended_image(const TypeData& t, const ExtGrassElement& e);

// All (j, q) whose extended image has Lambda_0 atomic length N, sorted by (j, q).
std::vector<ExtGrassElement> enumerate_extended(const TypeData& t, const Rational& N,
                                                Exec exec = Exec::Parallel);

// Applies s_i letters right to left to the empty partition; letters in 0..n.
Partition lascoux_orbit(int n, const std::vector<int>& word);
// One application of s_i to an (n+1)-core.
Partition lascoux_step(int n, int i, const Partition& p);

}  // namespace corelat
