#include <catch_amalgamated.hpp>

#include "imw/corpus.hpp"
#include "imw/inverse.hpp"
#include "oracles.hpp"

using namespace imw;

namespace {

const std::vector<InverseMonoid>& small_inverse_monoids() {
  static const auto all = enumerate_inverse_monoids(5);
  return all;
}

std::vector<FiniteMonoid> named_inverse() {
  return {named::trivial(),         named::cyclic_group(4), named::klein_four(),
          named::symmetric_group_3(), named::chain(3).base(), named::diamond().base(),
          named::m3(),              named::brandt_b21(),    named::m7()};
}

}  // namespace

TEST_CASE("inverse validation fails with witnesses matching a naive scan") {
  // Left-zero pair with identity: both a and b are inverses of a.
  auto lz = FiniteMonoid::validate({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
  auto t = oracle::rows(lz);
  Elem first_bad = 0;
  while (oracle::gen_inverses(t, first_bad).size() == 1) ++first_bad;
  try {
    validate_inverse(lz);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUniqueInverse);
    REQUIRE(e.witness().size() == 3);
    CHECK(e.witness()[0] == first_bad);
    auto gi = oracle::gen_inverses(t, first_bad);
    CHECK(e.witness()[1] == gi[0]);
    CHECK(e.witness()[2] == gi[1]);
  }

  // t^2 = e, e absorbing: t has no generalized inverse.
  auto nil = FiniteMonoid::validate({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}, 0);
  try {
    validate_inverse(nil);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInverse);
    CHECK(e.witness() == std::vector<Elem>{2});
    CHECK(oracle::gen_inverses(oracle::rows(nil), 2).empty());
  }
}

TEST_CASE("inverses, idempotents and the natural order match their definitions") {
  auto check = [](const FiniteMonoid& base) {
    auto m = validate_inverse(base);
    auto t = oracle::rows(base);
    auto order = natural_order(m);
    for (Elem x = 0; x < m.size(); ++x) {
      CHECK(m.inverse(x) == oracle::inv(t, x));
      CHECK(generalized_inverses(base, x) == oracle::gen_inverses(t, x));
      CHECK(m.is_idempotent(x) == oracle::idem(t, x));
      for (Elem y = 0; y < m.size(); ++y) CHECK(order.leq(x, y) == oracle::leq(t, x, y));
    }
    for (auto [x, y] : order.strict_pairs()) CHECK((x != y && oracle::leq(t, x, y)));
  };
  for (const auto& m : named_inverse()) check(m);
  for (const auto& m : small_inverse_monoids()) check(m.base());
}

TEST_CASE("sigma matches e a = e b on every small inverse monoid") {
  auto check = [](const FiniteMonoid& base) {
    auto t = oracle::rows(base);
    auto s = min_group_congruence(validate_inverse(base));
    for (Elem a = 0; a < t.size(); ++a)
      for (Elem b = 0; b < t.size(); ++b) REQUIRE(s.related(a, b) == oracle::sigma(t, a, b));
  };
  for (const auto& m : named_inverse()) check(m);
  for (const auto& m : small_inverse_monoids()) check(m.base());
}

TEST_CASE("predicates agree with naive definitions") {
  auto check = [](const FiniteMonoid& base) {
    auto t = oracle::rows(base);
    auto m = validate_inverse(base);
    auto eu = is_e_unitary(m);
    CHECK(eu.holds == oracle::e_unitary(t));
    if (eu.witness) {
      auto [x, e] = *eu.witness;
      CHECK(oracle::idem(t, e));
      CHECK(oracle::idem(t, t[x][e]));
      CHECK_FALSE(oracle::idem(t, x));
    }
    auto fi = is_f_inverse(m);
    CHECK(fi.holds == oracle::f_inverse(t));
    if (fi.holds) {
      for (Elem x = 0; x < t.size(); ++x)
        CHECK(fi.selector[fi.sigma.class_of(x)] == *oracle::greatest_in_class(t, x));
      CHECK(eu.holds);
    }
    auto cl = is_clifford(m);
    CHECK(cl.holds == oracle::clifford(t));
    if (cl.witness) {
      auto [e, x] = *cl.witness;
      CHECK(oracle::idem(t, e));
      CHECK(t[e][x] != t[x][e]);
    }
  };
  for (const auto& m : named_inverse()) check(m);
  for (const auto& m : small_inverse_monoids()) check(m.base());
}

TEST_CASE("named instances") {
  auto b21 = validate_inverse(named::brandt_b21());
  auto eu = is_e_unitary(b21);
  CHECK_FALSE(eu.holds);
  REQUIRE(eu.witness);
  CHECK(b21.label(eu.witness->first) == "a");

  auto m7 = validate_inverse(named::m7());
  CHECK(is_e_unitary(m7).holds);
  auto fi = is_f_inverse(m7);
  CHECK_FALSE(fi.holds);
  REQUIRE(fi.failing_class);
  std::vector<std::string> maximal;
  for (Elem x : fi.failing_maximals) maximal.push_back(m7.label(x));
  CHECK(maximal == std::vector<std::string>{"(a,g)", "(b,g)"});
  CHECK(fi.maximal_reading_diverges);
  CHECK(m7.label(m7.inverse(4)) == "(b,g)");
  CHECK_FALSE(is_clifford(m7).holds);

  auto m3 = validate_inverse(named::m3());
  CHECK(is_e_unitary(m3).holds);
  CHECK(is_f_inverse(m3).holds);
  CHECK(is_clifford(m3).holds);
  CHECK_FALSE(natural_order(m3).leq(1, 2));  // e and t are incomparable
  CHECK(natural_order(m3).leq(1, 0));
}

TEST_CASE("idempotent semilattice") {
  auto m = validate_inverse(named::m7());
  auto e = idempotent_semilattice(m);
  CHECK(e.semilattice.size() == m.idempotents().size());
  CHECK(is_homomorphism(e.semilattice.base(), m.base(), e.embedding.values));
  CHECK(e.embedding.values == m.idempotents());
  auto d = named::diamond();
  CHECK(d.meet(1, 2) == 3);
  CHECK(d.leq(3, 1));
  CHECK_FALSE(d.leq(1, 2));
  CHECK_THROWS_AS(SemilatticeMonoid::validate(named::cyclic_group(2)), Error);
}
