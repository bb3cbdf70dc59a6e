#include "doctest.h"
#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"
#include "splitkit/instantiate.hpp"
#include "support/fixtures.hpp"
#include "support/suites.hpp"

using namespace splitkit;
using namespace splitkit::testing;

TEST_SUITE("instantiate") {

TEST_CASE("running example instantiates to its SETAF") {
  const Abaf d = running_abaf();
  const Setaf sf = aba_to_setaf(d);
  CHECK(attack_keys(sf) == attack_keys(running_setaf()));
  CHECK(std::vector<std::string>(sf.names().begin(), sf.names().end()) ==
        std::vector<std::string>{"a", "b", "v", "w", "x", "y", "z"});
}

TEST_CASE("all-supports mode adds non-minimal tails") {
  AbafBuilder b;
  b.add_assumption("c", "c_c");
  b.add_assumption("u", "c_u");
  b.add_rule("c_u", {"c"});
  b.add_rule("c_u", {"c", "u"});
  const Abaf d = b.build();
  CHECK(attack_keys(aba_to_setaf(d)) == std::set<std::string>{"({c},u)"});
  CHECK(attack_keys(aba_to_setaf(d, true)) == std::set<std::string>{"({c},u)", "({c,u},u)"});
}

TEST_CASE("instantiation refuses non-flat input and unconditional attacks") {
  AbafBuilder nonflat;
  nonflat.add_assumption("a", "c_a");
  nonflat.add_rule("a", {});
  CHECK_THROWS_AS(aba_to_setaf(nonflat.build()), Error);

  AbafBuilder fact;
  fact.add_assumption("a", "c_a");
  fact.add_rule("c_a", {});
  CHECK_THROWS_AS(aba_to_setaf(fact.build()), Error);
}

TEST_CASE("SETAF to ABA uses fresh contraries") {
  const Setaf sf = make_setaf({"a", "c_a"}, {{{"a"}, "c_a"}});
  const Abaf d = setaf_to_aba(sf);
  CHECK(d.assumptions().size() == 2);
  CHECK(d.name(d.contrary(0)) != "c_a");
  CHECK(attack_keys(aba_to_setaf(d)) == attack_keys(sf));
}

TEST_CASE("semantics survive instantiation on random frameworks") {
  for (std::size_t i = 0; i < 100; ++i) {
    const Abaf d = suite_abaf(i);
    const Setaf sf = aba_to_setaf(d);
    for (Semantics sigma : kAllSemantics)
      CHECK_MESSAGE(enumerate_extensions(d, sigma) == args_to_assumptions(d, enumerate_extensions(sf, sigma)),
                    "instance ", i, " ", to_token(sigma));
  }
}

TEST_CASE("assumption and argument maps are inverse") {
  const Abaf d = running_abaf();
  const IdSet s = atoms(d, {"a", "x", "z"});
  CHECK(args_to_assumptions(d, assumptions_to_args(d, s)) == s);
  CHECK_THROWS_AS(assumptions_to_args(d, atoms(d, {"p"})), Error);
}

}  // TEST_SUITE
