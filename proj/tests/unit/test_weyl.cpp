#include <doctest.h>

#include "corelat/cores.hpp"
#include "corelat/weyl.hpp"

using namespace corelat;

namespace {

Vec V(std::initializer_list<Rational> xs) { return Vec(xs); }

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("coset matrices") {
    auto a2 = lookup_type("A2_1");
    CHECK(apply_matrix(coset_matrix(a2, 1), V({1, 2, 3})) == V({3, 1, 2}));
    CHECK(apply_matrix(coset_matrix(a2, 0), V({1, 2, 3})) == V({1, 2, 3}));
    auto c3 = lookup_type("C3_1");
    CHECK(apply_matrix(coset_matrix(c3, 3), V({1, 2, 3})) == V({-3, -2, -1}));
    CHECK_THROWS_AS(coset_matrix(c3, 1), BadIndex);
    CHECK_THROWS_AS(coset_matrix(lookup_type("G2_1"), 1), UnsupportedType);
    CHECK(sigma_indices(lookup_type("C2_1")) == std::vector<int>{0, 2});
    CHECK(sigma_indices(lookup_type("A3_1")) == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("extended images") {
    auto a2 = lookup_type("A2_1");
    CHECK(extended_image(a2, {1, V({0, 0, 0})}) == V({Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));
    CHECK(extended_image(a2, {1, V({1, 0, -1})}) == V({Rational(-1, 3), Rational(2, 3), Rational(-1, 3)}));
    auto c2 = lookup_type("C2_1");
    CHECK(extended_image(c2, {2, V({0, 0})}) == V({Rational(1, 2), Rational(1, 2)}));
  }

  TEST_CASE("extended enumeration fixtures") {
    auto a2 = lookup_type("A2_1");
    auto zero = enumerate_extended(a2, 0);
    REQUIRE(zero.size() == 3);
    for (int j = 0; j < 3; ++j) {
      CHECK(zero[j].j == j);
      CHECK(zero[j].q == V({0, 0, 0}));
    }
    CHECK(enumerate_extended(a2, 1).size() == 3);
    CHECK(enumerate_extended(lookup_type("C2_1"), 40).size() == 6);
    CHECK_THROWS_AS(enumerate_extended(lookup_type("B3_1"), 1), UnsupportedType);
  }

  TEST_CASE("length is constant along each coset layer") {
    for (const char* id : {"A1_1", "A2_1", "A3_1", "C2_1", "C3_1"}) {
      CAPTURE(id);
      auto t = lookup_type(id);
      for (int N = 0; N <= 25; ++N) {
        auto base = enumerate_atomic(t, 0, N);
        for (int j : sigma_indices(t))
          for (const auto& q : base) CHECK(atomic_length0(t, extended_image(t, {j, q})) == N);
        auto ext = enumerate_extended(t, N);
        CHECK(ext.size() == sigma_indices(t).size() * base.size());
        for (const auto& e : ext) CHECK(std::binary_search(base.begin(), base.end(), e.q));
      }
    }
  }

  TEST_CASE("Lascoux action") {
    CHECK(lascoux_orbit(2, {0}) == Partition{1});
    CHECK(lascoux_orbit(2, {2, 1, 0}) == Partition{3, 1});
    CHECK(lascoux_orbit(2, {}).empty());
    CHECK_THROWS_AS(lascoux_orbit(2, {3}), BadIndex);
    // generators are involutions on cores
    Partition p = lascoux_orbit(3, {1, 0, 3, 2, 0});
    for (int i = 0; i <= 3; ++i) CHECK(lascoux_step(3, i, lascoux_step(3, i, p)) == p);
    CHECK(is_d_core(p, 4));
  }

  TEST_CASE("words reach cores whose charge gives the lattice length") {
    const int n = 2;
    auto t = lookup_type("A2_1");
    std::vector<Partition> frontier{{}};
    std::set<Partition> seen{{}};
    for (int depth = 0; depth < 6; ++depth) {
      std::vector<Partition> next;
      for (const auto& p : frontier)
        for (int i = 0; i <= n; ++i) {
          Partition q = lascoux_step(n, i, p);
          if (seen.insert(q).second) next.push_back(q);
        }
      frontier = next;
    }
    for (const auto& p : seen) {
      CHECK(is_d_core(p, n + 1));
      Vec q = to_vec(charge_of_core(n + 1, p));
      CHECK(atomic_length0(t, q) == partition_size(p));
    }
  }
}
