#pragma once

#include "corelat/numeric.hpp"
#include "corelat/parallel.hpp"

#include <string>
#include <vector>

namespace corelat {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
bool is_partition(const Partition& p);
bool is_self_conjugate(const Partition& p);
int diagonal_boxes(const Partition& p);
// Hook length of the 0-based box (row, col).
int hook_length(const Partition& p, const Partition& conj, int row, int col);
bool is_d_core(const Partition& p, int d);
bool has_hook_divisible_by(const Partition& p, int d);
// Number of boxes (r, c) with c - r = i mod d.
int residue_count(const Partition& p, int d, int i);

// Partition with Frobenius symbol (arms | legs); arms and legs strictly decreasing.
Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs);

// d-charge via the abacus of beta-numbers lambda_i - i; throws NotACore.
IVec charge_of_core(int d, const Partition& p);
// Inverse of charge_of_core; throws BadCharge when entries do not sum to zero.
Partition core_from_charge(int d, const IVec& charge);
// Size of core_from_charge(d, charge) without building it.
long long core_size_from_charge(const IVec& charge);

enum class PartitionFilter { All, Core, SelfConjugateCore, EvenDiagonalSelfConjugateCore };

// Sorted lexicographically, duplicate-free.
std::vector<Partition> enumerate_partitions(int N, PartitionFilter filter, int d = 2,
                                            Exec exec = Exec::Parallel);
std::vector<Partition> all_partitions(int N);
std::vector<Partition> distinct_partitions(int N);
// d-cores of size N from the charge lattice.
std::vector<Partition> cores_by_charge(int N, int d, Exec exec = Exec::Parallel);

enum class SizeRule { C, Dt, Aeven, B, Aodd, D, G2, D43, DtPlus, AevenHalf };
SizeRule parse_size_rule(const std::string& name);
// Residues are taken mod 2n, except G2 and D43 which use mod 6 with n = 3.
Rational weighted_size(SizeRule rule, const Partition& p, int n);

// Doubled distinct partition of a bar partition: Frobenius (l_1..l_r | l_1-1..l_r-1).
Partition doubled_distinct(const Partition& bar);
// Inverse of doubled_distinct, or empty optional when p is not doubled distinct.
std::optional<Partition> bar_of_doubled(const Partition& p);

// Bar (2n+2)-core attached to q in the D_{n+1}^(2) lattice via the charge
// (0, q_1..q_n, 0, -q_n..-q_1). Throws InternalInconsistency on a malformed shape.
Partition bar_core_from_lattice(int n, const IVec& q);
// Bar partitions of N whose doubled diagram is a (2n+2)-core and with no part n+1.
std::vector<Partition> bar_cores(int N, int n);                 // from distinct partitions
std::vector<Partition> bar_cores_by_charge(int N, int n, Exec exec = Exec::Parallel);

// Part counts (m_0, m_1, m_{-1}, m_2) by residue mod 4 for q = (q_1, q_2) of D_4^(3).
struct ResidueCounts {
  int m0, m1, m_minus1, m2;
};
ResidueCounts d4flat_counts(long long q1, long long q2);
Partition d4flat_from_lattice(long long q1, long long q2);
// Distinct parts and no hook of length 4 strictly below the diagonal of the doubled diagram.
bool d4flat_intrinsic(const Partition& p);

// "(4,2,1)", "()" for the empty partition.
std::string format_partition(const Partition& p);
// "4,2,1", "" for the empty partition.
std::string format_parts(const Partition& p);
Partition parse_parts(const std::string& text);

}  // namespace corelat
