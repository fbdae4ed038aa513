#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "abelian/subgroup.hpp"
#include "support.hpp"

using namespace abelian;

namespace {

Group add_group(u64 n) { return Group({{{ComponentKind::additive, n}}}); }
Group mult_group(u64 n) { return Group({{{ComponentKind::multiplicative, n}}}); }

std::vector<Element> singletons(std::initializer_list<u64> rs) {
  std::vector<Element> out;
  for (u64 r : rs) out.push_back({r});
  return out;
}

}  // namespace

TEST_CASE("cycles in (120,+)") {
  const Group g = add_group(120);
  CHECK(cycle(g, {60}) == std::vector<Element>{{60}, {0}});
  CHECK(cycle(g, {30}) == std::vector<Element>{{30}, {60}, {90}, {0}});
  CHECK(cycle(g, {15}) ==
        std::vector<Element>{{15}, {30}, {45}, {60}, {75}, {90}, {105}, {0}});
  CHECK(cycle(g, g.identity()) == std::vector<Element>{{0}});
}

TEST_CASE("cycles in (64,x)") {
  const Group g = mult_group(64);
  CHECK(cycle(g, {17}) == std::vector<Element>{{17}, {33}, {49}, {1}});
  CHECK(cycle(g, {7}) ==
        std::vector<Element>{{7}, {49}, {23}, {33}, {39}, {17}, {55}, {1}});
}

TEST_CASE("subgroup of (120,+) generated by 60, 30, 15") {
  const Group g = add_group(120);
  const Group sub = generate(g, singletons({60, 30, 15}));
  CHECK(sub.order() == 8);
  CHECK(sub.carrier() == std::vector<Element>{{0}, {15}, {30}, {45}, {60}, {75}, {90}, {105}});
  CHECK(sub.identity() == Element{0});
  CHECK(sub.inverse({15}) == Element{105});
  CHECK(sub.op({15}, {30}) == Element{45});
  CHECK(sub.pow({15}, 3) == Element{45});
  const std::map<u64, u64> orders{{0, 1}, {15, 8}, {30, 4}, {45, 8},
                                  {60, 2}, {75, 8}, {90, 4}, {105, 8}};
  for (const auto& [r, k] : orders) CHECK(sub.element_order({r}) == k);
}

TEST_CASE("subgroup of (64,x) generated by 17 and 7") {
  const Group g = mult_group(64);
  const Group sub = generate(g, singletons({17, 7}));
  CHECK(sub.order() == 8);
  CHECK(sub.carrier() == std::vector<Element>{{1}, {7}, {17}, {23}, {33}, {39}, {49}, {55}});
  CHECK(sub.identity() == Element{1});
  CHECK_FALSE(sub.contains({25}));
  CHECK_THROWS_AS(sub.op({7}, {25}), membership_error);
  try {
    sub.inverse({25});
  } catch (const membership_error& e) {
    CHECK(e.reason() == membership_error::Reason::carrier);
  }
  // The generator 7 spans the whole carrier, so the subgroup is cyclic of
  // order 8; orders follow from the cycle lengths above.
  const std::map<u64, u64> orders{{1, 1},  {7, 8},  {17, 4}, {23, 8},
                                  {33, 2}, {39, 8}, {49, 4}, {55, 8}};
  for (const auto& [r, k] : orders) CHECK(sub.element_order({r}) == k);
}

TEST_CASE("subgroup of (6,+)x(9,x) generated by [0,2] and [3,5]") {
  const Group g({{{ComponentKind::additive, 6}, {ComponentKind::multiplicative, 9}}});
  CHECK(cycle(g, {0, 2}) ==
        std::vector<Element>{{0, 2}, {0, 4}, {0, 8}, {0, 7}, {0, 5}, {0, 1}});
  CHECK(cycle(g, {3, 5}) ==
        std::vector<Element>{{3, 5}, {0, 7}, {3, 8}, {0, 4}, {3, 2}, {0, 1}});

  const Group sub = generate(g, {{0, 2}, {3, 5}});
  CHECK(sub.order() == 12);
  std::vector<Element> expected;
  for (u64 a : {0, 3})
    for (u64 u : {1, 2, 4, 5, 7, 8}) expected.push_back({a, u});
  std::sort(expected.begin(), expected.end());
  CHECK(sub.carrier() == expected);
  CHECK(sub.identity() == Element{0, 1});
  CHECK(sub.inverse({3, 1}) == Element{3, 1});
  CHECK(sub.op({0, 4}, {0, 5}) == Element{0, 2});
  CHECK(sub.pow({0, 4}, 3) == Element{0, 1});
  const std::map<Element, u64> orders{{{0, 1}, 1}, {{3, 2}, 6}, {{3, 1}, 2}, {{0, 7}, 3},
                                      {{3, 8}, 2}, {{0, 5}, 6}, {{0, 4}, 3}, {{3, 7}, 6},
                                      {{0, 8}, 2}, {{3, 4}, 6}, {{0, 2}, 6}, {{3, 5}, 6}};
  for (const auto& [e, k] : orders) CHECK(sub.element_order(e) == k);
}

TEST_CASE("generate basics") {
  const Group g = add_group(10);
  CHECK(generate(g, {g.identity()}).carrier() == std::vector<Element>{{0}});
  CHECK_THROWS_AS(generate(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(generate(g, singletons({10})), membership_error);
}

TEST_CASE("is_subgroup") {
  const Group g = add_group(10);
  CHECK(is_subgroup(g, singletons({0, 5})));
  CHECK_FALSE(is_subgroup(g, singletons({0, 5, 7})));
  CHECK(is_subgroup(add_group(120), singletons({0, 15, 30, 45, 60, 75, 90, 105})));
  CHECK_THROWS_AS(is_subgroup(g, singletons({11})), membership_error);
  CHECK_THROWS_AS(is_subgroup(g, {}), std::invalid_argument);
}

TEST_CASE("is_generating_set") {
  const Group g = add_group(10);
  CHECK(is_generating_set(g, singletons({1})));
  CHECK(is_generating_set(g, singletons({2, 5})));
  CHECK_FALSE(is_generating_set(g, {g.identity()}));
}

TEST_CASE("explicit carriers are validated") {
  const Group g = add_group(10);
  CHECK_THROWS_AS(Group(g.spec(), std::vector<Element>{{0}, {5}, {7}}), std::invalid_argument);
  CHECK_THROWS_AS(Group(g.spec(), std::vector<Element>{{5}}), std::invalid_argument);
  CHECK_THROWS_AS(Group(g.spec(), std::vector<Element>{}), std::invalid_argument);
  CHECK_THROWS_AS(Group(g.spec(), std::vector<Element>{{0}, {12}}), membership_error);
  const Group ok(g.spec(), std::vector<Element>{{5}, {0}, {5}});
  CHECK(ok.order() == 2);
  CHECK(ok.carrier() == std::vector<Element>{{0}, {5}});
}

TEST_CASE("generated subgroups match the fixed-point closure oracle") {
  std::mt19937_64 rng(31);
  std::vector<GroupSpec> specs = testsupport::random_product_specs(rng, 8, 200);
  for (u64 n : {12, 16, 24, 36, 45, 64, 100, 120}) {
    specs.push_back({{{ComponentKind::additive, n}}});
    specs.push_back({{{ComponentKind::multiplicative, n}}});
  }
  std::uniform_int_distribution<int> set_size(1, 3);
  for (const auto& spec : specs) {
    const Group g(spec);
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<Element> s;
      for (int i = set_size(rng); i > 0; --i) s.push_back(testsupport::random_element(rng, g));
      const Group sub = generate(g, s);
      CHECK(sub.carrier() == testsupport::closure_brute(g, s));
      CHECK(is_subgroup(g, sub.carrier()));
      for (const auto& e : s) CHECK(sub.contains(e));
      CHECK(g.order() % sub.order() == 0);  // Lagrange
      // A subset is a subgroup exactly when it equals its own span.
      CHECK(is_subgroup(g, s) == (sub.carrier() == [&] {
              std::vector<Element> sorted = s;
              std::sort(sorted.begin(), sorted.end());
              sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
              return sorted;
            }()));
    }
  }
}

TEST_CASE("generate is monotone in the generator set") {
  std::mt19937_64 rng(37);
  const Group g({{{ComponentKind::additive, 24}, {ComponentKind::multiplicative, 16}}});
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Element> s{testsupport::random_element(rng, g)};
    std::vector<Element> t = s;
    t.push_back(testsupport::random_element(rng, g));
    const std::vector<Element> small = generate(g, s).carrier();
    const std::vector<Element> big = generate(g, t).carrier();
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("span of one element has size equal to its order") {
  std::mt19937_64 rng(41);
  for (const auto& spec : testsupport::random_product_specs(rng, 6, 150)) {
    const Group g(spec);
    for (const auto& a : g.elements())
      CHECK(generate(g, {a}).order() == g.element_order(a));
  }
}

TEST_CASE("analytic order equals cycle length") {
  std::mt19937_64 rng(43);
  std::vector<GroupSpec> specs = testsupport::random_product_specs(rng, 6, 200);
  for (u64 n : {2, 7, 9, 15, 16, 31, 32, 63, 64, 100, 121, 128, 199, 200}) {
    specs.push_back({{{ComponentKind::additive, n}}});
    specs.push_back({{{ComponentKind::multiplicative, n}}});
  }
  for (const auto& spec : specs) {
    const Group g(spec);
    if (g.order() > 200) continue;
    for (const auto& a : g.elements())
      CHECK(g.element_order(a) == cycle(g, a).size());
  }
}
