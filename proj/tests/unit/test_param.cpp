#include <doctest.h>

#include "corelat/param.hpp"
#include "oracles.hpp"

#include <set>
#include <sstream>

using namespace corelat;

namespace {

Vec V(std::initializer_list<Rational> xs) { return Vec(xs); }

std::string golden(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

std::string csv_of(const Table& t) {
  std::ostringstream out;
  write_csv(out, t);
  return out.str();
}

std::string file_text(const std::string& path) {
  std::string s;
  for (const auto& line : oracle::read_lines(path)) s += line + "\n";
  return s;
}

}  // namespace

TEST_SUITE("param") {
  TEST_CASE("phi fixtures") {
    CHECK(phi(make_case("C2"), V({1, -3})) == IVec{-10, 15});
    CHECK(phi(make_case("D43"), V({0, 1, -1})) == IVec{8, 3});
    auto a3 = make_case("A3");
    CHECK(phi(a3, Vec(a3.basis.front().size(), Rational(0))) == IVec{-1, 1, -3});
    auto c3 = make_case("HYP:C3_1");
    CHECK(phi(c3, Vec(3, Rational(0))) == IVec{-5, -3, -1});
    CHECK(target_value(c3, 0) == 35);
    CHECK_THROWS_AS(make_case("Z9"), std::invalid_argument);
    CHECK_THROWS_AS(make_case("HYP:Q3_1"), UnknownType);
  }

  TEST_CASE("phi lands on the quadric at the level of the length") {
    std::vector<std::string> ids = base_case_ids();
    for (const char* h : {"HYP:B3_1", "HYP:C2_1", "HYP:C3_1", "HYP:A5_2", "HYP:D3_2", "HYP:D4_2", "HYP:A4_2"})
      ids.push_back(h);
    for (const auto& id : ids) {
      CAPTURE(id);
      auto c = make_case(id);
      for (long long N = 0; N <= 12; ++N)
        for (const auto& q : case_domain(c, N)) {
          CHECK(case_length(c, q) == N);
          IVec x = phi(c, q);
          long long s = 0;
          for (std::size_t i = 0; i < x.size(); ++i) s += c.form.coeffs[i] * x[i] * x[i];
          CHECK(s == target_value(c, N));
        }
    }
  }

  TEST_CASE("complete representative cases") {
    auto c2 = verify(make_case("C2"), 40);
    CHECK(c2.pass);
    CHECK(c2.orbits == 3);
    CHECK(c2.solutions == 24);
    auto d3 = make_case("D3t");
    std::set<IVec> reps;
    for (const auto& q : case_domain(d3, 35)) reps.insert(phi(d3, q));
    CHECK(reps == std::set<IVec>{{-20, 5}, {-8, -19}, {16, -13}});
    CHECK(verify(d3, 35).pass);
    auto l1 = make_case("C2L1");
    std::set<IVec> l1reps;
    for (const auto& q : case_domain(l1, 2)) l1reps.insert(phi(l1, q));
    CHECK(l1reps == std::set<IVec>{{-4, 1}, {4, 1}});
    CHECK(verify(l1, 2).pass);
  }

  TEST_CASE("orbit size cases") {
    auto a42 = verify(make_case("A42"), 1);
    CHECK(a42.pass);
    REQUIRE(a42.uncovered.size() == 1);
    CHECK(std::set<IVec>(a42.uncovered[0].begin(), a42.uncovered[0].end()) ==
          std::set<IVec>{{-5, -5}, {-5, 5}, {5, -5}, {5, 5}});
    auto g21 = make_case("G21");
    CHECK(case_domain(g21, 3).empty());
    CHECK(case_solutions(g21, 3) == std::vector<IVec>{{-5, 0}, {5, 0}});
    auto hyp = make_case("HYP:D3_2");
    auto r = verify(hyp, 0);
    CHECK(r.pass);
    for (const auto& q : case_domain(hyp, 0)) CHECK(orbit_of(case_group(hyp), phi(hyp, q)).size() == 8);
  }

  TEST_CASE("hyperoctahedral orbit sizes") {
    for (const char* id : {"HYP:B3_1", "HYP:C2_1", "HYP:C3_1", "HYP:A5_2", "HYP:A7_2", "HYP:D3_2", "HYP:D4_2",
                           "HYP:A4_2", "HYP:A6_2"}) {
      CAPTURE(id);
      auto c = make_case(id);
      for (long long N = 0; N <= 10; ++N) CHECK(verify(c, N).pass);
    }
  }

  TEST_CASE("extended A2 decomposition") {
    auto r0 = pig_a2_verify(0);
    CHECK(r0.pass);
    CHECK(r0.solutions == 6);
    auto r1 = pig_a2_verify(1);
    CHECK(r1.pass);
    auto r6 = pig_a2_verify(6);
    CHECK(r6.pass);
    CHECK(r6.solutions == 12);
    CHECK(case_domain(make_case("A2"), 6).size() == 2);
    for (long long N = 0; N <= 30; ++N) CHECK(pig_a2_verify(N).pass);
  }

  TEST_CASE("A3 strata") {
    auto s0 = a3_strata(0);
    CHECK(s0.report.pass);
    std::set<IVec> all;
    for (const auto& st : s0.strata) all.insert(st.points.begin(), st.points.end());
    auto u30 = oracle::quadric_points({1, 2, 3}, 30);
    CHECK(all == std::set<IVec>(u30.begin(), u30.end()));
    auto s121 = a3_strata(121);
    std::vector<long long> gamma{-49, -41, -37, -35, -29, -25, -19, -11, -5, -1,
                                 1,   5,   11,  19,  25,  29,  35,  37,  41, 49};
    CHECK(s121.gamma == gamma);
    for (long long N = 0; N <= 10; ++N) {
      CAPTURE(N);
      CHECK(a3_strata(N).report.pass);
      auto r = a3_conjecture_check(N);
      for (const char* name : {"equation", "stability", "distinct_strata", "conjecture"}) CHECK(r.check(name));
    }
  }

  TEST_CASE("A3 layer images can share an orbit") {
    // 12 layer images against 10 orbits of U(174): two images must meet
    auto r = a3_conjecture_check(3);
    CHECK(r.phi_images == 12);
    CHECK(r.orbits == 10);
    CHECK_FALSE(r.check("disjoint_orbits"));
    CHECK(r.check("conjecture"));
    auto g = make_group(GroupTag::GA3);
    auto o = orbit_of(g, {-9, -3, 5});
    CHECK(std::binary_search(o.begin(), o.end(), IVec{3, -3, -7}));
    CHECK(a3_conjecture_check(2).pass);
  }

  TEST_CASE("golden tables") {
    for (const char* fig : {"8N+1", "40N+10", "6N+7", "12N+7"}) {
      CAPTURE(fig);
      std::string path = golden(std::string("table_") + fig + ".csv");
      auto lines = oracle::read_lines(path);
      REQUIRE(lines.size() > 1);
      CHECK(csv_of(figure_table(fig, static_cast<long long>(lines.size()) - 2)) == file_text(path));
    }
    CHECK_THROWS(figure_table("9N+9", 3));
  }

  TEST_CASE("serial and parallel sweeps agree") {
    for (const char* id : {"C2", "D43", "A42"}) {
      auto c = make_case(id);
      auto par = sweep(c, 30);
      auto ser = sweep(c, 30, Exec::Serial);
      REQUIRE(par.size() == ser.size());
      for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].N == ser[i].N);
        CHECK(par[i].pass == ser[i].pass);
        CHECK(par[i].solutions == ser[i].solutions);
        CHECK(par[i].orbits == ser[i].orbits);
      }
    }
  }

  TEST_CASE("report bookkeeping") {
    Report r;
    r.record("a", true);
    CHECK(r.pass);
    r.record("b", false, "why");
    CHECK_FALSE(r.pass);
    CHECK(r.witness == std::optional<std::string>("why"));
    CHECK_FALSE(r.check("b"));
    CHECK(r.check("missing"));
    CHECK(join_tuples({{2, 1}, {-1, 3}}) == "(-1,3);(2,1)");
  }
}
