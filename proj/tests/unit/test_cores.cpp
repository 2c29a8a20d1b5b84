#include <doctest.h>

#include "corelat/atomic.hpp"
#include "corelat/cores.hpp"
#include "oracles.hpp"

#include <map>
#include <random>

using namespace corelat;

namespace {

std::vector<Partition> brute_cores(int N, int d) {
  std::vector<Partition> out;
  for (const auto& p : oracle::partitions(N))
    if (!oracle::has_hook(p, d)) out.push_back(p);
  return out;
}

std::map<Rational, std::vector<Vec>> by_length(const TypeData& t, int max_N) {
  std::map<Rational, std::vector<Vec>> out;
  for (auto& [N, pts] : enumerate_atomic_upto(t, 0, max_N)) out[N] = pts;
  return out;
}

}  // namespace

TEST_SUITE("cores") {
  TEST_CASE("basic shape helpers") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({}) == Partition{});
    CHECK(is_self_conjugate({2, 1}));
    CHECK_FALSE(is_self_conjugate({3, 1}));
    CHECK(diagonal_boxes({8, 8, 6, 6, 4, 4, 2, 2}) == 4);
    CHECK(is_partition({3, 3, 1}));
    CHECK_FALSE(is_partition({1, 2}));
    CHECK(from_frobenius({2, 0}, {1, 0}) == Partition{3, 2});
    CHECK(format_partition({17, 11, 5, 2}) == "(17,11,5,2)");
    CHECK(parse_parts("17,11,5,2") == Partition{17, 11, 5, 2});
  }

  TEST_CASE("residue counts") {
    CHECK(residue_count({}, 3, 0) == 0);
    CHECK(residue_count({1}, 4, 0) == 1);
    CHECK(residue_count({3, 1}, 3, 0) == oracle::residue_boxes({3, 1}, 3, 0));
    for (int N = 0; N <= 10; ++N)
      for (const auto& p : oracle::partitions(N))
        for (int d = 2; d <= 5; ++d)
          for (int i = 0; i < d; ++i) CHECK(residue_count(p, d, i) == oracle::residue_boxes(p, d, i));
  }

  TEST_CASE("core test against hook lengths") {
    for (int N = 0; N <= 12; ++N)
      for (const auto& p : oracle::partitions(N))
        for (int d = 2; d <= 6; ++d) CHECK(is_d_core(p, d) == !oracle::has_hook(p, d));
  }

  TEST_CASE("charge fixtures") {
    CHECK(charge_of_core(5, {8, 5, 5, 2, 2, 1}) == IVec{0, -1, 2, 1, -2});
    CHECK(charge_of_core(3, {3, 1}) == IVec{0, -1, 1});
    CHECK(charge_of_core(4, {}) == IVec{0, 0, 0, 0});
    CHECK(core_from_charge(5, {0, -1, 2, 1, -2}) == Partition{8, 5, 5, 2, 2, 1});
    CHECK(core_from_charge(3, {0, -1, 1}) == Partition{3, 1});
    CHECK(core_from_charge(4, {0, 0, 0, 0}).empty());
    CHECK_THROWS_AS(charge_of_core(2, {2}), NotACore);
    CHECK_THROWS_AS(core_from_charge(3, {1, 0, 0}), BadCharge);
    CHECK_THROWS_AS(core_from_charge(3, {1, -1}), BadCharge);
  }

  TEST_CASE("charge round trip on small cores") {
    for (int d = 2; d <= 8; ++d)
      for (int N = 0; N <= 30; ++N) {
        auto cores = cores_by_charge(N, d);
        for (const auto& p : cores) {
          IVec c = charge_of_core(d, p);
          long long s = 0;
          for (long long x : c) s += x;
          CHECK(s == 0);
          CHECK(core_from_charge(d, c) == p);
          CHECK(core_size_from_charge(c) == N);
        }
      }
  }

  TEST_CASE("core enumeration against the hook oracle") {
    for (int d = 2; d <= 6; ++d)
      for (int N = 0; N <= 16; ++N) {
        CAPTURE(d);
        CAPTURE(N);
        CHECK(cores_by_charge(N, d) == brute_cores(N, d));
        CHECK(cores_by_charge(N, d, Exec::Serial) == cores_by_charge(N, d));
      }
    CHECK(cores_by_charge(6, 3).size() == 2);
  }

  TEST_CASE("type A size law") {
    std::mt19937 rng(3);
    for (int d = 2; d <= 5; ++d) {
      auto t = lookup_type(AffineTypeId{'A', d - 1, 1});
      std::uniform_int_distribution<int> u(-4, 4);
      for (int s = 0; s < 60; ++s) {
        IVec c(d);
        long long sum = 0;
        for (int r = 0; r + 1 < d; ++r) sum += (c[r] = u(rng));
        c[d - 1] = -sum;
        CHECK(partition_size(core_from_charge(d, c)) == atomic_length0(t, to_vec(c)));
      }
    }
  }

  TEST_CASE("partition filters") {
    for (auto f : {PartitionFilter::All, PartitionFilter::Core, PartitionFilter::SelfConjugateCore,
                   PartitionFilter::EvenDiagonalSelfConjugateCore})
      CHECK(enumerate_partitions(0, f, 3) == std::vector<Partition>{{}});
    auto scc = enumerate_partitions(40, PartitionFilter::SelfConjugateCore, 4);
    std::vector<Partition> expected{
        {8, 8, 6, 6, 4, 4, 2, 2}, {10, 7, 6, 5, 4, 3, 2, 1, 1, 1}, {11, 8, 5, 4, 3, 2, 2, 2, 1, 1, 1}};
    CHECK(scc == expected);
    for (int N = 0; N <= 14; ++N)
      for (int d = 2; d <= 6; ++d) {
        std::vector<Partition> brute, even;
        for (const auto& p : oracle::partitions(N))
          if (p == oracle::transpose(p) && !oracle::has_hook(p, d)) {
            brute.push_back(p);
            if (diagonal_boxes(p) % 2 == 0) even.push_back(p);
          }
        CHECK(enumerate_partitions(N, PartitionFilter::SelfConjugateCore, d) == brute);
        CHECK(enumerate_partitions(N, PartitionFilter::EvenDiagonalSelfConjugateCore, d) == even);
      }
    CHECK(enumerate_partitions(7, PartitionFilter::All).size() == 15);
  }

  TEST_CASE("weighted sizes") {
    CHECK(weighted_size(SizeRule::C, {3, 1}, 2) == 4);
    CHECK(weighted_size(SizeRule::Dt, {}, 2) == 0);
    CHECK(weighted_size(SizeRule::Aeven, {1}, 2) == 2);
    CHECK(parse_size_rule("Aodd") == SizeRule::Aodd);
    CHECK_THROWS_AS(parse_size_rule("nope"), std::invalid_argument);
  }

  TEST_CASE("self-conjugate cores count the C lattice") {
    for (int n = 2; n <= 3; ++n) {
      auto t = lookup_type(AffineTypeId{'C', n, 1});
      auto grouped = by_length(t, 60);
      for (int N = 0; N <= 60; ++N) {
        auto scc = enumerate_partitions(N, PartitionFilter::SelfConjugateCore, 2 * n);
        std::size_t lattice = grouped.count(Rational(N)) ? grouped.at(Rational(N)).size() : 0;
        CHECK(scc.size() == lattice);
        for (const auto& p : scc) CHECK(weighted_size(SizeRule::C, p, n) == N);
      }
    }
  }

  TEST_CASE("weighted sizes against atomic lengths") {
    struct Row {
      SizeRule rule;
      int n;
      const char* type;
      bool even_diagonal;
    };
    const int K = 20;
    for (const Row& row : {Row{SizeRule::DtPlus, 2, "D3_2", false}, Row{SizeRule::DtPlus, 3, "D4_2", false},
                           Row{SizeRule::AevenHalf, 2, "A4_2", false}, Row{SizeRule::AevenHalf, 3, "A6_2", false},
                           Row{SizeRule::B, 3, "B3_1", true}, Row{SizeRule::Aodd, 2, "D3_2", true},
                           Row{SizeRule::Aodd, 3, "A5_2", true}, Row{SizeRule::D, 4, "D4_1", true},
                           Row{SizeRule::C, 3, "C3_1", false}}) {
      CAPTURE(row.type);
      std::map<Rational, std::size_t> sizes, lengths;
      auto filter = row.even_diagonal ? PartitionFilter::EvenDiagonalSelfConjugateCore
                                      : PartitionFilter::SelfConjugateCore;
      for (int s = 0; s <= 4 * K + 8; ++s)
        for (const auto& p : enumerate_partitions(s, filter, 2 * row.n)) {
          Rational w = weighted_size(row.rule, p, row.n);
          if (w <= K) ++sizes[w];
        }
      for (const auto& [N, pts] : enumerate_atomic_upto(lookup_type(row.type), 0, K)) lengths[N] = pts.size();
      CHECK(sizes == lengths);
    }
  }

  TEST_CASE("bar cores") {
    CHECK(doubled_distinct({3, 1}) == oracle::doubled({3, 1}));
    for (int N = 0; N <= 12; ++N)
      for (const auto& p : distinct_partitions(N)) {
        CHECK(doubled_distinct(p) == oracle::doubled(p));
        CHECK(bar_of_doubled(doubled_distinct(p)) == p);
      }
    CHECK(bar_of_doubled({2}) == Partition{1});
    CHECK_FALSE(bar_of_doubled({1}).has_value());
    CHECK(bar_core_from_lattice(2, {-3, 1}) == Partition{17, 11, 5, 2});
    CHECK(bar_core_from_lattice(2, {3, -2}) == Partition{13, 10, 7, 4, 1});
    CHECK(bar_core_from_lattice(2, {0, 0}).empty());
    std::vector<std::vector<Partition>> small{{{}}, {{1}}, {{2}}, {{2, 1}}, {{4}}, {{4, 1}, {5}}, {}};
    for (int N = 0; N <= 6; ++N) CHECK(bar_cores(N, 2) == small[N]);
    std::vector<Partition> d35{{13, 10, 7, 4, 1}, {16, 10, 5, 4}, {17, 11, 5, 2}};
    CHECK(bar_cores_by_charge(35, 2) == d35);
    for (int N = 0; N <= 30; ++N) CHECK(bar_cores_by_charge(N, 2) == bar_cores(N, 2));
  }

  TEST_CASE("bar cores count the twisted D lattice") {
    for (int n = 2; n <= 3; ++n) {
      auto t = lookup_type(AffineTypeId{'D', n + 1, 2});
      auto grouped = by_length(t, 60);
      for (int N = 0; N <= 60; ++N) {
        std::set<Partition> images;
        if (grouped.count(Rational(N)))
          for (const auto& q : grouped.at(Rational(N))) {
            auto bar = bar_core_from_lattice(n, to_ivec(q));
            CHECK(partition_size(bar) == N);
            images.insert(bar);
          }
        std::size_t lattice = grouped.count(Rational(N)) ? grouped.at(Rational(N)).size() : 0;
        CHECK(images.size() == lattice);
        auto bars = bar_cores_by_charge(N, n);
        CHECK(std::vector<Partition>(images.begin(), images.end()) == bars);
      }
    }
  }

  TEST_CASE("flat D4 cores") {
    CHECK(d4flat_from_lattice(-3, 1) == Partition{10, 6, 4, 3, 2});
    CHECK(d4flat_from_lattice(0, 0).empty());
    CHECK(d4flat_from_lattice(-1, -1) == Partition{4, 2, 1});
    auto t = lookup_type("D4_3");
    std::map<int, std::set<Partition>> by_size;
    for (long long a = -12; a <= 12; ++a)
      for (long long b = -12; b <= 12; ++b) {
        Vec q{Rational(a), Rational(b), Rational(-a - b)};
        Partition p = d4flat_from_lattice(a, b);
        CHECK(partition_size(p) == atomic_length0(t, q));
        CHECK(d4flat_intrinsic(p));
        if (partition_size(p) <= 10) by_size[partition_size(p)].insert(p);
      }
    std::vector<std::vector<Partition>> table{{{}},        {{1}},  {{2}},         {{2, 1}},     {},   {{3, 2}},
                                              {{4, 2}},    {{4, 2, 1}, {4, 3}}, {{5, 2, 1}}, {},   {{5, 4, 1}}};
    for (int N = 0; N <= 10; ++N) {
      CAPTURE(N);
      auto& got = by_size[N];
      CHECK(std::vector<Partition>(got.begin(), got.end()) == table[N]);
    }
    // the intrinsic description picks out the same sets
    for (int N = 0; N <= 10; ++N) {
      std::vector<Partition> intrinsic;
      for (const auto& p : distinct_partitions(N))
        if (d4flat_intrinsic(p)) intrinsic.push_back(p);
      std::sort(intrinsic.begin(), intrinsic.end());
      CHECK(intrinsic == table[N]);
    }
  }
}
