#pragma once

#include "corelat/atomic.hpp"
#include "corelat/diophantine.hpp"
#include "corelat/dynkin.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corelat {

enum class Claim { CompleteRepresentatives, OrbitSizeOnly, StratifiedA3 };

// x -> A x + offset on the case coordinates; throws NonIntegralImage.
struct AffineMap {
  IMatrix A;
  IVec offset;
  IVec operator()(const Vec& x) const;
};

enum class HypFamily { B, C, Aodd, D, Aeven };

struct ParamCase {
  std::string id;
  std::optional<TypeData> type;  // absent for hyperoctahedral rows missing from the registry
  int weight = 0;
  LatticeKind lattice = LatticeKind::M;
  long long a = 0, b = 0;  // sum d_i x_i^2 = a N + b
  DiagonalForm form;
  GroupTag group = GroupTag::D8;
  int group_rank = 0;
  Claim claim = Claim::CompleteRepresentatives;
  std::size_t orbit_size = 0;  // expected size of every phi-orbit
  AffineMap map;

  // Lattice points: origins[k] + integer combinations of basis.
  std::vector<Vec> basis;
  std::vector<Vec> origins;
  std::function<Rational(const Vec&)> length;
  // Stored coordinates -> coordinates the map reads (the u-rotation for C2 cases,
  // the first two coordinates for G2 and D4^(3)).
  std::function<Vec(const Vec&)> coordinates;
};

// "A2", "A2ext", "C2", "C2L1", "D3t", "A42", "G21", "D43", "A3" or "HYP:<type>" with
// <type> one of B<n>_1, C<n>_1, A<k>_2, D<k>_2. Throws std::invalid_argument / UnknownType.
ParamCase make_case(std::string_view id);
std::vector<std::string> base_case_ids();

HypFamily hyp_family(const ParamCase& c);
int hyp_rank(const ParamCase& c);

Vec case_coordinates(const ParamCase& c, const Vec& q);
IVec phi(const ParamCase& c, const Vec& q);
Rational case_length(const ParamCase& c, const Vec& q);
long long target_value(const ParamCase& c, long long N);

// Lattice points of length N, sorted.
std::vector<Vec> case_domain(const ParamCase& c, long long N, Exec exec = Exec::Parallel);
// Entry N holds the points of length N for 0 <= N <= max_N.
std::vector<std::vector<Vec>> case_domain_upto(const ParamCase& c, long long max_N,
                                               Exec exec = Exec::Parallel);
std::vector<IVec> case_solutions(const ParamCase& c, long long N, Exec exec = Exec::Parallel);
FiniteGroup case_group(const ParamCase& c);

// Checks sum d_i phi(q)_i^2 = a L(q) + b on the origins and `samples` seeded random points.
// Throws InternalInconsistency on the first mismatch.
void check_case(const ParamCase& c, int samples = 20, unsigned seed = 1);

struct Report {
  std::string case_id;
  long long N = 0;
  bool pass = true;
  std::size_t solutions = 0, orbits = 0, phi_images = 0;
  std::optional<std::string> witness;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::vector<IVec>> uncovered;  // orbits missed by phi (orbit-size checks)

  void record(const std::string& name, bool ok, const std::string& why = {});
  bool check(const std::string& name) const;  // true when absent
};

Report verify_representatives(const ParamCase& c, long long N, Exec exec = Exec::Parallel);
Report verify_orbit_size(const ParamCase& c, long long N, Exec exec = Exec::Parallel);
// U(12N+4) against the antipodal pairs of the three layers.
Report pig_a2_verify(long long N, Exec exec = Exec::Parallel);

struct A3Stratum {
  long long N = 0;
  long long y = 0;
  std::vector<IVec> points;
};

struct A3Strata {
  long long N = 0;
  std::vector<long long> I;      // odd y with y^2 < 24N+15
  std::vector<long long> gamma;  // y with a non-empty Omega set
  std::vector<std::pair<long long, std::vector<long long>>> omega;  // y -> the Omega set for its residue
  std::vector<A3Stratum> strata;  // one per y in I, possibly empty
  Report report;
};
A3Strata a3_strata(long long N, Exec exec = Exec::Parallel);
// Layer images, G-stability, distinct strata per base element, disjoint orbits and coverage.
Report a3_conjecture_check(long long N, Exec exec = Exec::Parallel);

// Dispatches on the claim (A2ext -> pig_a2_verify).
Report verify(const ParamCase& c, long long N, Exec exec = Exec::Parallel);
// One report per N in [0, max_N], in N order. Parallel over N.
std::vector<Report> sweep(const ParamCase& c, long long max_N, Exec exec = Exec::Parallel);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Columns N, B, phi, solutions in case coordinates.
Table case_table(const ParamCase& c, long long max_N, Exec exec = Exec::Parallel);
// "8N+1", "40N+10", "6N+7" or "12N+7"; throws std::invalid_argument.
Table figure_table(std::string_view figure, long long max_N, Exec exec = Exec::Parallel);
// Sorted lexicographically, joined by ';'.
std::string join_tuples(std::vector<IVec> points);
// Cells with a comma are quoted.
void write_csv(std::ostream& out, const Table& t);

}  // namespace corelat
