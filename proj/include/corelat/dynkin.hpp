#pragma once

#include "corelat/numeric.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace corelat {

// Affine type label: family letter, the table's rank subscript and the twist.
// Serialised as e.g. "A2_1", "D3_2", "D4_3".
struct AffineTypeId {
  char family = 'A';
  int rank_label = 1;
  int twist = 1;

  std::string str() const;
  static AffineTypeId parse(std::string_view text);  // throws UnknownType
  auto operator<=>(const AffineTypeId&) const = default;
};

// Realisation data for one affine type. Vectors are stored coordinates in the
// ambient epsilon basis; the true vector is sigma * stored with sigma^2 = scale_sq.
struct TypeData {
  AffineTypeId id;
  int n = 0;                  // finite rank
  std::vector<int> marks;     // a_0 .. a_n
  std::vector<int> comarks;   // a_0^v .. a_n^v
  int h = 0;
  int ambient_dim = 0;
  Rational scale_sq = 1;
  std::vector<Vec> simple_roots;
  std::vector<Vec> M_basis;
  std::vector<Vec> L_generators;  // empty when L is not registered for this type
  std::vector<int> J;             // j >= 1 with a_j = 1

  bool has_L() const { return !L_generators.empty(); }
};

TypeData lookup_type(const AffineTypeId& id);
TypeData lookup_type(std::string_view text);

// Every registered row with finite rank in [1, max_rank].
std::vector<AffineTypeId> table_types(int max_rank);

Rational inner(const TypeData& t, const Vec& a, const Vec& b);
Rational norm_sq(const TypeData& t, const Vec& v);

// v = sum c_i alpha_i; throws NotInRootSpan.
Vec simple_root_coefficients(const TypeData& t, const Vec& v);
std::vector<Vec> fundamental_weights(const TypeData& t);
// Highest root sum a_i alpha_i over i >= 1.
Vec highest_root(const TypeData& t);

// Coefficients of v against a basis, or nullopt if v is outside its rational span.
std::optional<Vec> basis_coordinates(const std::vector<Vec>& basis, const Vec& v);
bool in_lattice(const std::vector<Vec>& basis, const Vec& v);
bool in_M(const TypeData& t, const Vec& v);

// Index of the lattice spanned by `generators` over the lattice with basis `basis`,
// assuming the former contains the latter.
Integer lattice_index(const std::vector<Vec>& basis, const std::vector<Vec>& generators);
// |L/M|; throws UnsupportedLattice when L is not registered.
Integer fundamental_group_order(const TypeData& t);

}  // namespace corelat
