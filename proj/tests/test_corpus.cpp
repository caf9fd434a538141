#include <catch_amalgamated.hpp>

#include "imw/corpus.hpp"
#include "oracles.hpp"

using namespace imw;

TEST_CASE("builtin corpus instances validate and match their pinned verdicts") {
  auto corpus = builtin_corpus();
  std::vector<std::string> names;
  for (const auto& inst : corpus) names.push_back(inst.name);
  for (const char* required : {"T1", "Z2", "Z4", "V4", "S3", "CH2", "CH3", "D4", "M3", "B21", "M7"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  for (const auto& inst : corpus) {
    auto m = inst.monoid();
    if (!m) continue;
    auto t = oracle::rows(*m);
    CHECK(oracle::associative(t));
    INFO(inst.name);
    if (inst.expected.count("inverse")) CHECK(oracle::is_inverse(t) == inst.expected.at("inverse"));
    if (!oracle::is_inverse(t)) continue;
    CHECK(oracle::e_unitary(t) == inst.expected.at("e_unitary"));
    CHECK(oracle::f_inverse(t) == inst.expected.at("f_inverse"));
    CHECK(oracle::clifford(t) == inst.expected.at("clifford"));
  }
}

TEST_CASE("M7 is closed under the semidirect product it comes from") {
  // D4 = {1, a, b, 0} with Z2 swapping a and b; (x, g)(y, h) = (x ^ g.y, gh).
  auto d4 = named::diamond();
  std::vector<Elem> swap{0, 2, 1, 3};
  std::vector<std::pair<Elem, Elem>> elems{{0, 0}, {1, 0}, {2, 0}, {3, 0},
                                           {1, 1}, {2, 1}, {3, 1}};
  auto m7 = named::m7();
  for (Elem i = 0; i < 7; ++i) {
    for (Elem j = 0; j < 7; ++j) {
      auto [x, g] = elems[i];
      auto [y, h] = elems[j];
      std::pair<Elem, Elem> prod{d4.meet(x, g ? swap[y] : y), g ^ h};
      auto at = std::find(elems.begin(), elems.end(), prod);
      REQUIRE(at != elems.end());
      CHECK(m7.mul(i, j) == static_cast<Elem>(at - elems.begin()));
    }
  }
}

TEST_CASE("small groups") {
  auto gs = small_groups();
  CHECK(gs.size() == 8);
  for (const auto& [name, g] : gs) CHECK(g.is_group());
  auto v4 = named::klein_four();
  int order_two = 0;
  for (Elem x = 1; x < 4; ++x) order_two += v4.mul(x, x) == v4.identity();
  CHECK(order_two == 3);
  CHECK_FALSE(named::symmetric_group_3().is_commutative());
}

TEST_CASE("semilattice enumeration matches a full scan") {
  auto ys = enumerate_semilattices(5);
  std::vector<std::size_t> by_size(6, 0);
  for (const auto& y : ys) ++by_size[y.size()];
  for (std::size_t n = 1; n <= 5; ++n) {
    INFO("n = " << n);
    CHECK(by_size[n] == oracle::count_semilattices(n));
  }
  CHECK(by_size == std::vector<std::size_t>{0, 1, 1, 1, 2, 5});
  CHECK(enumerate_semilattices(1).size() == 1);
  CHECK(enumerate_semilattices(2).size() == 2);
  auto four = enumerate_semilattices(4);
  bool has_diamond = false, has_chain = false;
  for (const auto& y : four) {
    if (y.size() != 4) continue;
    auto t = oracle::rows(y.base());
    has_diamond |= oracle::isomorphic(t, oracle::rows(named::diamond().base()));
    has_chain |= oracle::isomorphic(t, oracle::rows(named::chain(4).base()));
  }
  CHECK(has_diamond);
  CHECK(has_chain);
  CHECK_THROWS_AS(enumerate_semilattices(7), Error);
}

TEST_CASE("inverse monoid enumeration matches a full scan") {
  auto ms = enumerate_inverse_monoids(4);
  std::vector<std::size_t> by_size(5, 0);
  for (const auto& m : ms) {
    ++by_size[m.size()];
    CHECK(m.identity() == 0);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    CHECK(by_size[n] == oracle::count_inverse_monoids(n));
  }
  // Pinned regression counts per order.
  auto five = enumerate_inverse_monoids(5);
  std::vector<std::size_t> counts(6, 0);
  for (const auto& m : five) ++counts[m.size()];
  CHECK(counts == std::vector<std::size_t>{0, 1, 2, 4, 11, 27});
  try {
    enumerate_inverse_monoids(6);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
}

TEST_CASE("enumerated inverse monoids are pairwise non-isomorphic and sound") {
  auto ms = enumerate_inverse_monoids(4);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto t = oracle::rows(ms[i].base());
    CHECK(oracle::associative(t));
    CHECK(oracle::is_inverse(t));
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[i].size() != ms[j].size()) continue;
      CHECK_FALSE(oracle::isomorphic(t, oracle::rows(ms[j].base())));
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  auto a = enumerate_inverse_monoids(5);
  auto b = enumerate_inverse_monoids(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].base() == b[i].base());
}

TEST_CASE("pinned almost action and gluing map counts") {
  auto ys = enumerate_semilattices(4);
  struct Row {
    FiniteMonoid g;
    std::vector<std::size_t> actions, gluings;
  };
  std::vector<Row> rows{
      {named::cyclic_group(1), {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}},
      {named::cyclic_group(2), {1, 2, 3, 5, 4}, {1, 2, 3, 4, 4}},
      {named::cyclic_group(3), {1, 2, 3, 6, 4}, {1, 2, 3, 4, 4}},
      {named::cyclic_group(4), {1, 3, 6, 13, 10}, {1, 3, 6, 9, 10}},
      {named::klein_four(), {1, 5, 12, 31, 22}, {1, 5, 12, 25, 22}},
  };
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      CHECK(enumerate_almost_actions(r.g, ys[i]).size() == r.actions[i]);
      CHECK(enumerate_gluing_maps(r.g, ys[i]).size() == r.gluings[i]);
    }
  }
}

TEST_CASE("small almost action and gluing examples") {
  auto z2 = named::cyclic_group(2);
  auto ch2 = named::chain(2);
  auto actions = enumerate_almost_actions(z2, ch2);
  REQUIRE(actions.size() == 2);
  CHECK(actions[0].table() == std::vector<Elem>{0, 1, 0, 1});  // trivial action
  CHECK(actions[1].table() == std::vector<Elem>{0, 1, 1, 1});  // g.y = e
  auto maps = enumerate_gluing_maps(z2, ch2);
  REQUIRE(maps.size() == 2);
  CHECK(maps[0].values() == std::vector<Elem>{0, 0});
  CHECK(maps[1].values() == std::vector<Elem>{0, 1});
  auto s3_maps = enumerate_gluing_maps(named::symmetric_group_3(), ch2);
  std::vector<Elem> bottom(6, 1);
  bottom[0] = 0;
  CHECK(std::any_of(s3_maps.begin(), s3_maps.end(),
                    [&](const GluingMap& f) { return f.values() == bottom; }));
}

TEST_CASE("budgets are enforced, not truncated") {
  auto ch2 = named::chain(2);
  try {
    enumerate_almost_actions(named::cyclic_group(2), ch2, 1);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  try {
    enumerate_gluing_maps(named::cyclic_group(6), named::diamond(), 100);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("dedup up to isomorphism") {
  auto z2 = named::cyclic_group(2);
  auto ch = named::chain(2).base();
  auto out = dedup_up_to_iso({z2, ch, z2, ch.with_labels({"x", "y"})});
  CHECK(out.size() == 2);
}
