#include <catch_amalgamated.hpp>

#include "imw/constructions.hpp"
#include "imw/corpus.hpp"
#include "oracles.hpp"

using namespace imw;

namespace {

// A1-A3 straight from the definition.
bool naive_almost_action(const FiniteMonoid& g, const SemilatticeMonoid& y,
                         const std::vector<Elem>& dot) {
  auto act = [&](Elem a, Elem b) { return dot[a * y.size() + b]; };
  for (Elem b = 0; b < y.size(); ++b)
    if (act(g.identity(), b) != b) return false;
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < y.size(); ++b)
      for (Elem c = 0; c < y.size(); ++c)
        if (act(a, y.meet(b, c)) != y.meet(act(a, b), act(a, c))) return false;
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem h = 0; h < g.size(); ++h)
      for (Elem b = 0; b < y.size(); ++b)
        if (act(a, act(h, b)) != y.meet(act(g.mul(a, h), b), act(a, y.top()))) return false;
  return true;
}

}  // namespace

TEST_CASE("almost action validation and the F product") {
  auto aa = named::z2_on_chain2();
  auto fp = f_product(aa);
  // Pairs (y, g) with y <= g.1: (1,1), (e,1), (e,g).
  CHECK(fp.monoid.size() == 3);
  CHECK(fp.pairs == std::vector<std::pair<Elem, Elem>>{{0, 0}, {1, 0}, {1, 1}});
  CHECK_FALSE(fp.index_of(0, 1));
  auto t = oracle::rows(fp.monoid.base());
  CHECK(oracle::isomorphic(t, oracle::rows(named::m3())));
  // (y, g)(z, h) = (y ^ g.z, gh)
  for (Elem a = 0; a < fp.monoid.size(); ++a) {
    for (Elem b = 0; b < fp.monoid.size(); ++b) {
      auto [y, g] = fp.pairs[a];
      auto [z, h] = fp.pairs[b];
      auto expect = fp.index_of(aa.semilattice().meet(y, aa.act(g, z)), aa.group().mul(g, h));
      REQUIRE(expect);
      CHECK(fp.monoid.mul(a, b) == *expect);
    }
  }
}

TEST_CASE("almost action failures name the axiom") {
  auto g = named::cyclic_group(2);
  auto y = named::chain(2);
  auto a1 = almost_action_failure(g, y, std::vector<Elem>{1, 1, 0, 1});
  REQUIRE(a1);
  CHECK(a1->axiom == 1);
  // Swapping 1 and e is not meet preserving.
  auto a2 = almost_action_failure(g, y, std::vector<Elem>{0, 1, 1, 0});
  REQUIRE(a2);
  CHECK(a2->axiom == 2);
  CHECK_FALSE(almost_action_failure(g, y, std::vector<Elem>{0, 1, 0, 1}));
  try {
    validate_almost_action(g, y, {0, 1, 1, 0});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AxiomViolation);
  }
}

TEST_CASE("almost action filter agrees with a naive scan of all dot tables") {
  auto y3 = named::chain(3);
  auto dia = named::diamond();
  std::vector<std::pair<FiniteMonoid, SemilatticeMonoid>> cases{
      {named::cyclic_group(2), named::chain(2)}, {named::cyclic_group(2), y3},
      {named::cyclic_group(3), y3},               {named::cyclic_group(2), dia},
      {named::klein_four(), named::chain(2)},     {named::symmetric_group_3(), named::chain(2)}};
  for (const auto& [g, y] : cases) {
    std::size_t cells = g.size() * y.size();
    std::vector<Elem> dot(cells, 0);
    std::vector<std::vector<Elem>> expected;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == cells) {
        if (naive_almost_action(g, y, dot)) expected.push_back(dot);
        CHECK(naive_almost_action(g, y, dot) == !almost_action_failure(g, y, dot));
        return;
      }
      for (Elem v = 0; v < y.size(); ++v) {
        dot[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    std::vector<std::vector<Elem>> got;
    for (const auto& aa : enumerate_almost_actions(g, y)) got.push_back(aa.table());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("factor system from an almost action and its crossed product") {
  for (const auto& aa : enumerate_almost_actions(named::cyclic_group(2), named::diamond())) {
    auto fs = factor_system_from_almost_action(aa);
    CHECK_FALSE(factor_system_failure(fs.acting(), fs.kernel(), fs.sim_labels(),
                                      fs.act_table(), fs.chi_table()));
    auto cp = crossed_product(fs);
    auto fp = f_product(aa);
    CHECK(cp.monoid.size() == fp.monoid.size());
    auto w = iso_f_product_crossed(aa);
    CHECK_NOTHROW(verify_iso(w.a, w.b, w.forward.values, w.backward.values));
    CHECK(oracle::isomorphic(oracle::rows(cp.monoid), oracle::rows(fp.monoid.base())));
  }
}

TEST_CASE("corrupted factor systems are rejected") {
  auto fs = factor_system_from_almost_action(named::z2_on_chain2());
  auto chi = fs.chi_table();
  auto act = fs.act_table();
  auto sim = fs.sim_labels();
  // chi(1, 1) must be the top.
  chi[0] = 1;
  auto f = factor_system_failure(fs.acting(), fs.kernel(), sim, act, chi);
  REQUIRE(f);
  CHECK(f->condition >= 1);
  CHECK(f->condition <= 11);
  CHECK_THROWS_AS(validate_factor_system(fs.acting(), fs.kernel(), sim, act, chi), Error);
  // The identity must act trivially.
  act = fs.act_table();
  act[1] = 0;
  CHECK(factor_system_failure(fs.acting(), fs.kernel(), sim, act, fs.chi_table()));
}

TEST_CASE("gluing maps") {
  auto g = named::cyclic_group(2);
  auto y = named::chain(2);
  CHECK_FALSE(gluing_failure(g, y, std::vector<Elem>{0, 0}));
  CHECK_FALSE(gluing_failure(g, y, std::vector<Elem>{0, 1}));
  auto bad = gluing_failure(g, y, std::vector<Elem>{1, 1});
  REQUIRE(bad);
  CHECK(bad->identity_not_top);
  try {
    validate_gluing_map(g, y, {1, 0});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityNotTop);
  }

  // f(g) = e off the identity works for S3.
  auto s3 = named::symmetric_group_3();
  std::vector<Elem> f(6, 1);
  f[s3.identity()] = 0;
  CHECK_FALSE(gluing_failure(s3, y, f));

  // On the diamond over Z3, f = (1, a, b) fails the condition.
  auto z3 = named::cyclic_group(3);
  auto fail3 = gluing_failure(z3, named::diamond(), std::vector<Elem>{0, 1, 2});
  REQUIRE(fail3);
  CHECK_FALSE(fail3->identity_not_top);
}

TEST_CASE("gluing product and Clifford reconstruction") {
  auto gm = named::z2_chain2_gluing();
  auto gl = gluing(gm);
  CHECK(gl.product.monoid.size() == 3);
  CHECK(oracle::isomorphic(oracle::rows(gl.product.monoid.base()), oracle::rows(named::m3())));
  CHECK_NOTHROW(gl.extension.validate());
  auto t = oracle::rows(gl.product.monoid.base());
  CHECK(oracle::clifford(t));
  CHECK(oracle::f_inverse(t));

  auto cg = gluing_map_from_clifford(gl.product.monoid);
  CHECK(cg.map.values().size() == 2);
  auto w = clifford_reconstruction(gl.product.monoid);
  CHECK_NOTHROW(verify_iso(w.a, w.b, w.forward.values, w.backward.values));

  try {
    gluing_map_from_clifford(validate_inverse(named::m7()));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
}

TEST_CASE("gluings over a non-abelian group need not commute") {
  auto s3 = named::symmetric_group_3();
  std::vector<Elem> f(6, 1);
  f[s3.identity()] = 0;
  auto gl = gluing(validate_gluing_map(s3, named::chain(2), f));
  CHECK_FALSE(gl.product.monoid.base().is_commutative());
  for (const auto& gm : enumerate_gluing_maps(named::cyclic_group(4), named::diamond())) {
    CHECK(gluing(gm).product.monoid.base().is_commutative());
  }
}

TEST_CASE("almost action and factor system recovered from F-inverse monoids") {
  for (const auto& m : enumerate_inverse_monoids(5)) {
    if (!oracle::f_inverse(oracle::rows(m.base()))) continue;
    auto r = almost_action_from_f_inverse(m);
    CHECK(r.product.monoid.size() == m.size());
    CHECK_NOTHROW(verify_iso(r.explicit_iso.a, r.explicit_iso.b,
                             r.explicit_iso.forward.values, r.explicit_iso.backward.values));
    auto ext = *build_canonical_extension(m).extension;
    auto ws = is_weakly_schreier(ext);
    REQUIRE(ws.ok());
    auto fs = factor_system_from_extension(ext, *ws.splitting);
    auto w = crossed_product_to_middle(ext, *ws.splitting, fs);
    CHECK(w.b == m.base());
  }
  try {
    almost_action_from_f_inverse(validate_inverse(named::m7()));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
}
