#pragma once

#include "corelat/numeric.hpp"
#include "corelat/parallel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corelat {

// sum d_i x_i^2 with every d_i >= 1
struct DiagonalForm {
  IVec coeffs;
};

// Every integer point with sum d_i x_i^2 = k, sorted lexicographically.
std::vector<IVec> solve_diagonal(const DiagonalForm& form, long long k, Exec exec = Exec::Parallel);
// Independent solver: splits the variables in two halves and matches sorted partial sums.
std::vector<IVec> solve_diagonal_meet(const DiagonalForm& form, long long k);

enum class GroupTag { D8, C4, V4, C6, GA3, H };

// Rational matrix num / den acting on column vectors.
struct GroupElement {
  IMatrix num;
  long long den = 1;
  bool operator==(const GroupElement&) const = default;
};

struct FiniteGroup {
  GroupTag tag;
  int dim = 0;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;  // identity first
  std::size_t order() const { return elements.size(); }
};

// H needs the rank; the other groups ignore it.
FiniteGroup make_group(GroupTag tag, int rank = 0);
GroupTag parse_group_tag(const std::string& name);
std::string group_name(GroupTag tag);

// Throws NonIntegralImage when the image leaves Z^dim.
IVec act(const GroupElement& g, const IVec& point);
IVec act(const FiniteGroup& group, std::size_t element, const IVec& point);

// Closure of one point under the generators, sorted.
std::vector<IVec> orbit_of(const FiniteGroup& group, const IVec& point);

// Orbits sorted internally and by their lexicographically least member.
// Throws NotClosed when a generator maps a solution outside the set.
std::vector<std::vector<IVec>> orbit_partition(const FiniteGroup& group, const std::vector<IVec>& solutions);

struct Freeness {
  bool free = true;
  std::optional<IVec> witness;  // largest member of the first orbit that is too small
};
Freeness is_action_free(const FiniteGroup& group, const std::vector<IVec>& solutions);

bool two_squares_solvable(long long k);

// k = 2^alpha * c^2 * m-part decomposition for the Gaussian integer lift U(m) -> U(k).
struct GaussianLift {
  int alpha = 0;
  long long c = 1;
  long long m = 1;
  IVec operator()(const IVec& point) const;  // (1+i)^alpha * c * (x + iy)
};
GaussianLift gaussian_lift(long long k);  // throws Unsolvable

// True when b mod a is neither a square nor twice a square modulo a.
bool residue_free_criterion(long long a, long long b);

}  // namespace corelat
