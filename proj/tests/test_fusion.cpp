#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "kazhdan/fusion.hpp"

using namespace kazhdan;
using namespace testutil;

namespace {

std::set<std::set<std::pair<int, int>>> as_sets(const TorsionClassTable& t) {
  std::set<std::set<std::pair<int, int>>> out;
  for (int c = 0; c < t.class_count(); ++c)
    out.insert(std::set<std::pair<int, int>>(t.members(c).begin(), t.members(c).end()));
  return out;
}

}  // namespace

TEST_CASE("SL(2,Z) fusion merges u = s^2 = t^3 and nothing else") {
  ValidatedGraph g = sl2z();
  TorsionClassTable t = element_fusion(g);
  CHECK(t.class_count() == 8);
  CHECK(t.locate(0, 2) == t.locate(1, 3));  // s^2 ~ t^3
  CHECK(t.locate(0, 0) == t.locate(1, 0));  // identities fuse
  CHECK(t.locate(0, 1) != t.locate(0, 3));  // s and s^3 stay separate
  CHECK(t.locate(1, 1) != t.locate(1, 5));  // t and t^5 stay separate
  CHECK(t.representative(t.locate(0, 2)) == std::pair{0, 2});
}

TEST_CASE("identity pairs across vertices always fuse") {
  std::mt19937 rng(4);
  for (int i = 0; i < 8; ++i) {
    ValidatedGraph g = random_amalgam(rng);
    TorsionClassTable t = element_fusion(g);
    CHECK(t.locate(0, 0) == t.locate(1, 0));
    CHECK(t.identity_class() == t.locate(0, 0));
  }
}

TEST_CASE("D4 HNN fuses the reflections into one class of four") {
  ValidatedGraph g = d4_hnn();
  TorsionClassTable t = element_fusion(g);
  // expected classes: {e}, {r,r3}, {r2}, {s,sr,sr2,sr3}
  auto got = as_sets(t);
  std::set<std::set<std::pair<int, int>>> want = {
      {{0, 0}},
      {{0, 1}, {0, 3}},
      {{0, 2}},
      {{0, 4}, {0, 5}, {0, 6}, {0, 7}}};
  CHECK(got == want);
}

TEST_CASE("Klein HNN fuses a with b") {
  ValidatedGraph g = klein_hnn();
  TorsionClassTable t = element_fusion(g);
  CHECK(t.class_count() == 3);
  CHECK(t.locate(0, 1) == t.locate(0, 2));
  CHECK(t.locate(0, 3) != t.locate(0, 1));
}

TEST_CASE("element order is constant on every fusion class") {
  std::mt19937 rng(17);
  for (int i = 0; i < 10; ++i) {
    ValidatedGraph g = i % 2 ? random_amalgam(rng) : random_hnn(rng);
    TorsionClassTable t = element_fusion(g);
    size_t total = 0;
    for (int c = 0; c < t.class_count(); ++c) {
      total += t.members(c).size();
      for (auto [v, x] : t.members(c))
        CHECK(g.vertex_group(v).element_order(x) == t.class_order(c));
    }
    size_t expected = 0;
    for (int v = 0; v < g.vertex_count(); ++v) expected += g.vertex_group(v).order;
    CHECK(total == expected);  // partition of all pairs
  }
}

TEST_CASE("fusion is idempotent and seeding-order independent") {
  // rebuilding from the same datum gives identical tables; reversing the
  // edge direction (swap alpha/beta and endpoints) gives the same partition
  ValidatedGraph g = sl2z();
  auto t1 = as_sets(element_fusion(g));
  auto t2 = as_sets(element_fusion(g));
  CHECK(t1 == t2);

  GraphOfGroups rev;
  rev.vertices.push_back({"v1", cyclic(4), "Z4"});
  rev.vertices.push_back({"v2", cyclic(6), "Z6"});
  rev.edges.push_back(make_edge("e1", cyclic(2), 1, 0, {0, 3}, {0, 2}));
  auto t3 = as_sets(element_fusion(ValidatedGraph(std::move(rev))));
  CHECK(t1 == t3);
}

TEST_CASE("locate_class rejects unknown pairs") {
  TorsionClassTable t = element_fusion(sl2z());
  CHECK_THROWS_AS(t.locate(0, 99), std::out_of_range);
  CHECK_THROWS_AS(t.locate(5, 0), std::out_of_range);
}

TEST_CASE("multi-edge graphs fuse through chains of edges") {
  // Z2 -- Z2 -- Z2 path with identity edge maps: all three vertex groups
  // fuse pointwise
  GraphOfGroups g;
  for (int i = 0; i < 3; ++i)
    g.vertices.push_back({"v" + std::to_string(i), cyclic(2), "Z2"});
  g.edges.push_back(make_edge("e1", cyclic(2), 0, 1, {0, 1}, {0, 1}));
  g.edges.push_back(make_edge("e2", cyclic(2), 1, 2, {0, 1}, {0, 1}));
  TorsionClassTable t = element_fusion(ValidatedGraph(std::move(g)));
  CHECK(t.class_count() == 2);
  CHECK(t.locate(0, 1) == t.locate(2, 1));
}

TEST_CASE("subgroup fusion on the SL(2,Z) Bass-Serre stabilizers") {
  ValidatedGraph g = sl2z();
  std::vector<SubgroupClassTable::Entry> stabs;
  for (const auto& o : g.bass_serre_orbits().orbits) stabs.emplace_back(o.vertex, o.stabilizer);
  SubgroupClassTable t = subgroup_fusion(g, stabs);
  CHECK(t.class_count() == 3);  // orders 4, 6, 2 are distinct
  CHECK(t.class_of_listed(0) != t.class_of_listed(1));
  CHECK(t.class_of_listed(0) != t.class_of_listed(2));
}

TEST_CASE("subgroup fusion across an identity edge merges the vertex groups") {
  GraphOfGroups g;
  g.vertices.push_back({"v1", cyclic(2), "Z2"});
  g.vertices.push_back({"v2", cyclic(2), "Z2"});
  g.edges.push_back(make_edge("e1", cyclic(2), 0, 1, {0, 1}, {0, 1}));
  ValidatedGraph vg(std::move(g));
  SubgroupClassTable t =
      subgroup_fusion(vg, {{0, Subgroup{{0, 1}}}, {1, Subgroup{{0, 1}}}});
  CHECK(t.class_count() == 1);
}

TEST_CASE("Klein HNN stabilizers form two subgroup classes") {
  ValidatedGraph g = klein_hnn();
  SubgroupClassTable t =
      subgroup_fusion(g, {{0, Subgroup{{0, 1, 2, 3}}}, {0, Subgroup{{0, 1}}}});
  CHECK(t.class_count() == 2);
}

TEST_CASE("fused subgroups have matching element-class multisets") {
  std::mt19937 rng(31);
  for (int i = 0; i < 8; ++i) {
    ValidatedGraph g = i % 2 ? random_amalgam(rng) : random_hnn(rng);
    TorsionClassTable elements = element_fusion(g);
    std::vector<SubgroupClassTable::Entry> stabs;
    for (const auto& o : g.bass_serre_orbits().orbits)
      stabs.emplace_back(o.vertex, o.stabilizer);
    SubgroupClassTable t = subgroup_fusion(g, stabs);
    for (int c = 0; c < t.class_count(); ++c) {
      std::multiset<int> reference;
      bool first = true;
      for (int idx : t.listed(c)) {
        std::multiset<int> classes;
        for (int x : stabs[idx].second.members)
          classes.insert(elements.locate(stabs[idx].first, x));
        if (first) {
          reference = std::move(classes);
          first = false;
        } else {
          CHECK(classes == reference);
        }
      }
    }
  }
}

TEST_CASE("subgroup fusion rejects non-subgroups") {
  ValidatedGraph g = sl2z();
  CHECK_THROWS_AS(subgroup_fusion(g, {{0, Subgroup{{0, 1}}}}), ValidationError);  // {e,s} not closed
  CHECK_THROWS_AS(subgroup_fusion(g, {{7, Subgroup{{0}}}}), ValidationError);
}
