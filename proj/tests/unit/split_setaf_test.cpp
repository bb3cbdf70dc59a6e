#include "doctest.h"
#include "splitkit/error.hpp"
#include "splitkit/split_setaf.hpp"
#include "support/fixtures.hpp"
#include "support/suites.hpp"

using namespace splitkit;
using namespace splitkit::testing;

TEST_SUITE("split-setaf") {

TEST_CASE("splitting validation") {
  const Setaf sf = running_setaf();
  const SetafSplitting sp = make_splitting(sf, args_by_name(sf, {"a", "b"}));
  CHECK(sp.a2 == args_by_name(sf, {"v", "w", "x", "y", "z"}));
  CHECK(sp.r1.size() == 1);
  CHECK(sp.r2.size() == 1);
  // ({a},v), ({a,w},x) and ({b,z},y): mixed tails count as links.
  CHECK(sp.r3.size() == 3);
  try {
    make_splitting(sf, args_by_name(sf, {"y"}));
    FAIL("expected an invalid split");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidSplit);
    CHECK(std::string(e.what()).find("y") != std::string::npos);
  }
}

TEST_CASE("reduct, undecided links and modification") {
  const Setaf sf = running_setaf();
  const SetafSplitting sp = make_splitting(sf, args_by_name(sf, {"a", "b"}));
  const IdSet e1 = args_by_name(sf, {"a"});
  CHECK(link_attacked(sp, e1) == args_by_name(sf, {"v"}));
  const SubSetaf red = reduct(sp, e1);
  CHECK(attack_keys(red.sf) == std::set<std::string>{"({w},x)", "({x},y)"});
  const auto links = undecided_links(sp, e1);
  REQUIRE(links.size() == 1);
  CHECK(links.front().tail == args_by_name(sf, {"b", "z"}));
  const SubSetaf mod = modification(sp, e1);
  CHECK(attack_keys(mod.sf) == std::set<std::string>{"({w},x)", "({x},y)", "({y,z},y)"});
}

TEST_CASE("empty first extension keeps the top intact") {
  const Setaf sf = make_setaf({"a", "b", "c"}, {{{"a"}, "b"}, {{"b"}, "c"}});
  const SetafSplitting sp = make_splitting(sf, args_by_name(sf, {"a"}));
  const SubSetaf red = reduct(sp, {});
  CHECK(red.sf.arg_count() == 2);
  CHECK(attack_keys(red.sf) == std::set<std::string>{"({b},c)"});
}

TEST_CASE("decided links add nothing") {
  const Setaf sf = make_setaf({"a", "b", "c"}, {{{"a"}, "b"}, {{"b"}, "c"}});
  const SetafSplitting sp = make_splitting(sf, args_by_name(sf, {"a", "b"}));
  // b is defeated in the first part, so the link (b,c) is not undecided.
  CHECK(undecided_links(sp, args_by_name(sf, {"a"})).empty());
  CHECK(attack_keys(modification(sp, args_by_name(sf, {"a"})).sf).empty());
}

TEST_CASE("undecided link onto a deleted head adds nothing") {
  const Setaf sf = make_setaf({"a", "u", "h"}, {{{"u"}, "u"}, {{"a"}, "h"}, {{"u"}, "h"}});
  const SetafSplitting sp = make_splitting(sf, args_by_name(sf, {"a", "u"}));
  const IdSet e1 = args_by_name(sf, {"a"});
  CHECK(undecided_links(sp, e1).size() == 1);
  CHECK(modification(sp, e1).sf.arg_count() == 0);
}

TEST_CASE("split solving matches enumeration") {
  const Setaf sf = running_setaf();
  const IdSet a1 = args_by_name(sf, {"a", "b"});
  for (Semantics sigma : kSplitSemantics) {
    CHECK(split_solve(sf, a1, sigma) == enumerate_extensions(sf, sigma));
    CHECK(split_solve(sf, a1, sigma, setaf_oracle, {true}) == enumerate_extensions(sf, sigma));
  }
  CHECK_THROWS_AS(split_solve(sf, a1, Semantics::kConflictFree), Error);
  const IdSet all = IdSet::range(static_cast<Id>(sf.arg_count()));
  CHECK(split_solve(sf, all, Semantics::kPreferred) == enumerate_extensions(sf, Semantics::kPreferred));
}

TEST_CASE("splitting property suite, small") {
  const SuiteReport r = setaf_splitting_suite(60);
  INFO(r.summary());
  for (const auto& f : r.failures) INFO(f);
  CHECK(r.ok());
}

}  // TEST_SUITE
