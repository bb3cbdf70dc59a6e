#include <cstdlib>

#include "doctest.h"
#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/suites.hpp"

using namespace splitkit;
using namespace splitkit::testing;

namespace {

bool subset_family(const Family& small, const Family& big) {
  for (const IdSet& s : small)
    if (!family_contains(big, s)) return false;
  return true;
}

}  // namespace

TEST_SUITE("aba-core") {

TEST_CASE("theory closure chains rules forward") {
  const Abaf d = running_abaf();
  CHECK(theory_closure(d, {}) == IdSet{});
  CHECK(theory_closure(d, atoms(d, {"a"})) == atoms(d, {"a", "p", "c_v"}));
  CHECK(theory_closure(d, atoms(d, {"a", "w"})) == atoms(d, {"a", "w", "p", "c_v", "c_x"}));
  CHECK(theory_closure(d, atoms(d, {"b", "z"})) == atoms(d, {"b", "z", "c_b", "c_y"}));
}

TEST_CASE("atom closure follows contraries both ways") {
  AbafBuilder b;
  b.add_assumption("a", "n");
  b.add_assumption("b", "n");
  b.add_assumption("c", "m");
  const Abaf d = b.build();
  CHECK(d.atom_closure(atoms(d, {"a"})) == atoms(d, {"a", "b", "n"}));
  CHECK(d.atom_closure(atoms(d, {"m"})) == atoms(d, {"c", "m"}));
  CHECK(d.contrary_of(*d.find("n")).size() == 2);
}

TEST_CASE("minimal supports of the running example") {
  const Abaf d = running_abaf();
  const SupportTable t = minimal_supports(d);
  CHECK(t.supports(*d.find("c_y")) == family(d, {{"x"}, {"b", "z"}}));
  CHECK(t.supports(*d.find("c_x")) == family(d, {{"a", "w"}}));
  CHECK(t.supports(*d.find("p")) == family(d, {{"a"}}));
  CHECK(t.supports(*d.find("x")) == family(d, {{"x"}}));
  CHECK(t.supports(*d.find("c_a")).empty());
}

TEST_CASE("leaf sets keep non-minimal derivations") {
  AbafBuilder b;
  b.add_assumption("c", "c_c");
  b.add_assumption("u", "c_u");
  b.add_rule("p", {"c"});
  b.add_rule("p", {"c", "u"});
  const Abaf d = b.build();
  CHECK(minimal_supports(d).supports(*d.find("p")) == family(d, {{"c"}}));
  CHECK(derivation_leaf_sets(d, 20).supports(*d.find("p")) == family(d, {{"c"}, {"c", "u"}}));
}

TEST_CASE("leaf sets agree with the naive fixpoint") {
  for (std::size_t i = 0; i < 60; ++i) {
    const Abaf d = suite_abaf(i);
    const SupportTable fast = derivation_leaf_sets(d, 20);
    const auto slow = naive_leaf_sets(d);
    for (AtomId p = 0; p < d.atom_count(); ++p) {
      const Family expected(slow[p].begin(), slow[p].end());
      CHECK_MESSAGE(fast.supports(p) == expected, "instance ", i, " atom ", d.name(p));
    }
  }
}

TEST_CASE("range of an extension") {
  const Abaf d = running_abaf();
  const RangeResult r = range(d, atoms(d, {"a", "w", "z"}));
  CHECK(r.attacked == atoms(d, {"v", "x"}));
  CHECK(r.range == atoms(d, {"a", "v", "w", "x", "z"}));
}

TEST_CASE("validation reports dummy and non-flat rules") {
  AbafBuilder b;
  b.add_assumption("a", "c_a");
  b.add_rule("q", {"r"});
  b.add_rule("c_a", {"a"});
  b.add_rule("a", {"c_a"});
  const Abaf d = b.build();
  const ValidationReport rep = validate(d);
  CHECK_FALSE(rep.flat);
  CHECK(rep.non_flat_rules.size() == 1);
  REQUIRE(rep.dummy_rules.size() == 1);
  CHECK(d.format_rule(d.rules()[rep.dummy_rules[0]]) == "q <- r");
  CHECK(validate(running_abaf()).dummy_rules.empty());
}

TEST_CASE("semantics of the running example") {
  const Abaf d = running_abaf();
  CHECK(enumerate_extensions(d, Semantics::kGrounded) == family(d, {{"a", "w", "z"}}));
  CHECK(enumerate_extensions(d, Semantics::kPreferred) == family(d, {{"a", "w", "z"}}));
  // b attacks only itself, so nothing can attack b from outside.
  CHECK(enumerate_extensions(d, Semantics::kStable).empty());
  CHECK(check_extension(d, atoms(d, {"a", "w"}), Semantics::kAdmissible));
  CHECK_FALSE(check_extension(d, atoms(d, {"y"}), Semantics::kAdmissible));
  CHECK_FALSE(check_extension(d, atoms(d, {"b"}), Semantics::kConflictFree));
  CHECK_THROWS_AS(check_extension(d, atoms(d, {"p"}), Semantics::kConflictFree), Error);
}

TEST_CASE("guard refuses large enumerations") {
  const Abaf d = running_abaf();
  try {
    enumerate_extensions(d, Semantics::kAdmissible, false, 3);
    FAIL("expected a guard error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGuardExceeded);
  }
  ::setenv("SPLITKIT_GUARD", "5", 1);
  CHECK(default_guard() == 5);
  ::unsetenv("SPLITKIT_GUARD");
  CHECK(default_guard() == 20);
}

TEST_CASE("non-flat frameworks support stable only") {
  AbafBuilder b;
  b.add_assumption("a", "c_a");
  b.add_assumption("b", "c_b");
  b.add_rule("b", {});
  b.add_rule("c_a", {"b"});
  const Abaf d = b.build();
  CHECK_FALSE(d.flat());
  CHECK_THROWS_AS(enumerate_extensions(d, Semantics::kAdmissible), Error);
  // {a} is not closed: b follows from nothing.
  CHECK(enumerate_extensions(d, Semantics::kStable, true) == family(d, {{"b"}}));
}

TEST_CASE("projection keeps rules inside the target") {
  const Abaf d = running_abaf();
  const SubAbaf p = projection(d, atoms(d, {"a", "c_a", "p", "v", "c_v"}));
  CHECK(rule_keys(p.abaf) == std::set<std::string>{"c_v <- a", "p <- a"});
  CHECK(p.abaf.assumptions().size() == 2);
  CHECK_THROWS_AS(projection(d, atoms(d, {"a"})), Error);
}

TEST_CASE("influence") {
  const Abaf d = running_abaf();
  CHECK(is_uninfluenced(d, atoms(d, {"a"})));
  CHECK_FALSE(is_uninfluenced(d, atoms(d, {"y"})));
  CHECK_FALSE(is_uninfluenced(d, atoms(d, {"a", "w", "x", "y"})));
  CHECK(is_uninfluenced(d, atoms(d, {"a", "b", "w", "x", "y", "z"})));
}

TEST_CASE("dependency closure is the least splitting set around a set") {
  const Abaf d = running_abaf();
  const IdSet all = IdSet::range(static_cast<Id>(d.atom_count()));
  CHECK(dependency_closure(d, atoms(d, {"y"})) == all - atoms(d, {"v", "c_v"}));
  CHECK(dependency_closure(d, atoms(d, {"a"})) == atoms(d, {"a", "c_a"}));
}

TEST_CASE("semantic lattice on random frameworks") {
  for (std::size_t i = 0; i < 80; ++i) {
    const Abaf d = suite_abaf(i);
    const Family cf = enumerate_extensions(d, Semantics::kConflictFree);
    const Family adm = enumerate_extensions(d, Semantics::kAdmissible);
    const Family com = enumerate_extensions(d, Semantics::kComplete);
    const Family prf = enumerate_extensions(d, Semantics::kPreferred);
    const Family stb = enumerate_extensions(d, Semantics::kStable);
    const Family grd = enumerate_extensions(d, Semantics::kGrounded);
    CHECK(subset_family(adm, cf));
    CHECK(subset_family(com, adm));
    CHECK(subset_family(prf, com));
    CHECK(subset_family(stb, prf));
    REQUIRE(grd.size() == 1);
    CHECK(grd.front() == naive_grounded(d));
    for (const IdSet& c : com) CHECK(grd.front().is_subset_of(c));
    for (const IdSet& a : adm) {
      bool below = false;
      for (const IdSet& p : prf) below |= a.is_subset_of(p);
      CHECK(below);
    }
    for (Semantics sigma : kAllSemantics)
      for (const IdSet& e : enumerate_extensions(d, sigma)) CHECK(check_extension(d, e, sigma));
  }
}

}  // TEST_SUITE
