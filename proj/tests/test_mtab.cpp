#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "imw/corpus.hpp"
#include "imw/mtab.hpp"

using namespace imw;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(IMW_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorCode::SyntaxError, "");
}

}  // namespace

TEST_CASE("minimal document") {
  auto m = parse_mtab("mtab v1\nn=1\nid=0\n0\n");
  CHECK(m.size() == 1);
  CHECK(m == named::trivial());
}

TEST_CASE("golden files match the named instances byte for byte") {
  CHECK(slurp("m3.mtab") == serialize_mtab(named::m3()));
  CHECK(slurp("m7.mtab") == serialize_mtab(named::m7()));
  CHECK(slurp("b21.mtab") == serialize_mtab(named::brandt_b21()));
  CHECK(slurp("t1.mtab") == serialize_mtab(named::trivial()));
  CHECK(slurp("d4.mtab") == serialize_mtab(named::diamond().base()));
  CHECK(parse_mtab(slurp("m7.mtab")) == named::m7());
  CHECK(parse_mtab(slurp("m7.mtab")).labels() == named::m7().labels());
}

TEST_CASE("comments, spacing and quoted labels") {
  auto m = parse_mtab(slurp("commented.mtab"));
  CHECK(m == named::cyclic_group(2));
  CHECK(m.label(1) == "g");
}

TEST_CASE("round trip over the corpus and enumerated monoids") {
  for (const auto& inst : builtin_corpus()) {
    auto m = inst.monoid();
    if (!m) continue;
    auto text = serialize_mtab(*m);
    auto back = parse_mtab(text);
    CHECK(back == *m);
    CHECK(back.labels() == m->labels());
    CHECK(serialize_mtab(back) == text);
    auto j = monoid_to_json(*m);
    CHECK(monoid_from_json(j) == *m);
    CHECK(monoid_to_json(monoid_from_json(Json::parse(j.dump()))).dump() == j.dump());
  }
  for (const auto& m : enumerate_inverse_monoids(4)) {
    CHECK(parse_mtab(serialize_mtab(m.base())) == m.base());
  }
  auto nasty = named::cyclic_group(3).with_labels({"a,b", "say \"hi\"", " x"});
  auto back = parse_mtab(serialize_mtab(nasty));
  CHECK(back.labels() == nasty.labels());
}

TEST_CASE("syntax errors carry line and column") {
  auto e = error_of([] { parse_mtab(slurp("bad_arity.mtab")); });
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.witness() == std::vector<Elem>{5, 4});

  e = error_of([] { parse_mtab("mtab v2\nn=1\nid=0\n0\n"); });
  CHECK(e.witness() == std::vector<Elem>{1, 1});

  e = error_of([] { parse_mtab("mtab v1\nn=1.5\nid=0\n0\n"); });
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.witness() == std::vector<Elem>{2, 3});

  e = error_of([] { parse_mtab("mtab v1\nn=2\nid=0\n0 1\n1 x\n"); });
  CHECK(e.witness() == std::vector<Elem>{5, 3});

  e = error_of([] { parse_mtab("mtab v1\nn=2\nid=0\n0 1\n"); });
  CHECK(e.witness() == std::vector<Elem>{5, 1});

  e = error_of([] { parse_mtab("mtab v1\nn=1\nid=0\n0\nextra\n"); });
  CHECK(e.witness() == std::vector<Elem>{5, 1});

  e = error_of([] { parse_mtab("mtab v1\nn=2\nid=0\nlabels=a\n0 1\n1 0\n"); });
  CHECK(e.code() == ErrorCode::SyntaxError);
}

TEST_CASE("validation errors pass through") {
  auto e = error_of([] { parse_mtab("mtab v1\nn=2\nid=0\n0 1\n1 2\n"); });
  CHECK(e.code() == ErrorCode::IndexOutOfRange);
  e = error_of([] { parse_mtab("mtab v1\nn=3\nid=0\n0 1 2\n1 2 0\n2 1 1\n"); });
  CHECK(e.code() == ErrorCode::NotAssociative);
  // Not inverse, but a valid monoid without an inv row.
  auto m = parse_mtab(slurp("not_inverse.mtab"));
  CHECK(m.size() == 3);
  CHECK(serialize_mtab(m).find("inv=") == std::string::npos);
}

TEST_CASE("inv row must match") {
  auto e = error_of([] { parse_mtab(slurp("bad_inv.mtab")); });
  CHECK(e.code() == ErrorCode::InverseMismatch);
  CHECK(e.witness() == std::vector<Elem>{0, 1});
}

TEST_CASE("csv helpers") {
  CHECK(parse_csv("a, b ,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(parse_csv("\"x,y\",\"q\"\"\"") == std::vector<std::string>{"x,y", "q\""});
  CHECK(format_csv({"1", "(a,g)", "q\""}) == "1,\"(a,g)\",\"q\"\"\"");
  CHECK_THROWS_AS(parse_csv("\"open"), Error);
}

TEST_CASE("JSON codecs for constructions") {
  auto aa = named::z2_on_chain2();
  auto aj = almost_action_to_json(aa);
  CHECK(aj["kind"] == "almost_action");
  CHECK(aj["schema"] == kJsonSchema);
  CHECK(almost_action_from_json(aj).table() == aa.table());

  auto gm = named::z2_chain2_gluing();
  CHECK(gluing_map_from_json(gluing_map_to_json(gm)).values() == gm.values());

  auto fs = factor_system_from_almost_action(aa);
  auto fj = factor_system_to_json(fs);
  auto back = factor_system_from_json(Json::parse(fj.dump()));
  CHECK(back.chi_table() == fs.chi_table());
  CHECK(back.act_table() == fs.act_table());
  CHECK(back.sim_labels() == fs.sim_labels());

  auto bad = aj;
  bad["dot"][1] = {1, 0};
  CHECK_THROWS_AS(almost_action_from_json(bad), Error);
  CHECK(error_of([&] { almost_action_from_json(gluing_map_to_json(gm)); }).code() ==
        ErrorCode::SyntaxError);
  CHECK(error_of([] { monoid_from_json(Json{{"n", 1}}); }).code() == ErrorCode::SyntaxError);
}
