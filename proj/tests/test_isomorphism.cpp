#include <catch_amalgamated.hpp>

#include <random>

#include "imw/corpus.hpp"
#include "imw/isomorphism.hpp"
#include "oracles.hpp"

using namespace imw;

namespace {

FiniteMonoid relabel(const FiniteMonoid& m, const std::vector<Elem>& p) {
  std::vector<std::vector<Elem>> t(m.size(), std::vector<Elem>(m.size()));
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) t[p[x]][p[y]] = p[m.mul(x, y)];
  return FiniteMonoid::validate(t, p[m.identity()]);
}

}  // namespace

TEST_CASE("relabelled copies are found and the witness is certified") {
  std::mt19937 rng(5);
  std::vector<FiniteMonoid> ms{named::m7(), named::brandt_b21(), named::symmetric_group_3(),
                               named::diamond().base(), named::klein_four()};
  for (const auto& m : ms) {
    std::vector<Elem> p(m.size());
    std::iota(p.begin(), p.end(), 0);
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(p.begin(), p.end(), rng);
      auto copy = relabel(m, p);
      auto w = brute_force_iso(m, copy);
      REQUIRE(w);
      CHECK_NOTHROW(verify_iso(m, copy, w->forward.values, w->backward.values));
    }
  }
}

TEST_CASE("pruned and plain searches agree with the permutation oracle") {
  auto ms = enumerate_inverse_monoids(4);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      const auto& a = ms[i].base();
      const auto& b = ms[j].base();
      bool expect = oracle::isomorphic(oracle::rows(a), oracle::rows(b));
      CHECK(brute_force_iso(a, b).has_value() == expect);
      CHECK(brute_force_iso(a, b, {12, false}).has_value() == expect);
      CHECK(expect == (i == j));
    }
  }
}

TEST_CASE("non-isomorphic pairs and limits") {
  CHECK_FALSE(brute_force_iso(named::cyclic_group(4), named::klein_four()));
  CHECK_FALSE(brute_force_iso(named::cyclic_group(3), named::klein_four()));
  auto big = named::chain(6).base();
  try {
    brute_force_iso(big, big, {5, true});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimitExceeded);
  }
}

TEST_CASE("verify_iso rejects bad maps") {
  auto z2 = named::cyclic_group(2);
  auto ch = named::chain(2).base();
  try {
    verify_iso(z2, ch, {0, 1}, {0, 1});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomomorphism);
  }
  auto z3 = named::cyclic_group(3);
  try {
    verify_iso(z3, z3, {0, 2, 1}, {0, 1, 2});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInverse);
  }
}

TEST_CASE("element profiles are invariant") {
  auto m = named::m7();
  auto p = element_profiles(m);
  auto copy = relabel(m, {0, 6, 5, 4, 3, 2, 1});
  auto q = element_profiles(copy);
  std::sort(p.begin(), p.end());
  std::sort(q.begin(), q.end());
  CHECK(p == q);
  auto z4 = element_profiles(named::cyclic_group(4));
  CHECK(z4[1].period == 4);
  CHECK(z4[1].index == 1);
  CHECK(z4[0].idempotent);
}
