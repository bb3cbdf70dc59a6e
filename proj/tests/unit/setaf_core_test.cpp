#include "doctest.h"
#include "splitkit/error.hpp"
#include "splitkit/setaf.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/suites.hpp"

using namespace splitkit;
using namespace splitkit::testing;

namespace {

Setaf from_dung(const DungAf& af) {
  std::vector<Attack> attacks;
  for (auto [x, y] : af.attacks) attacks.push_back({IdSet{x}, y});
  return Setaf::unnamed(af.n, std::move(attacks));
}

Family from_masks(const std::vector<std::uint32_t>& masks) {
  Family out;
  for (std::uint32_t m : masks) {
    std::vector<Id> s;
    for (Id i = 0; i < 32; ++i)
      if (m >> i & 1U) s.push_back(i);
    out.emplace_back(std::move(s));
  }
  canonicalize(out);
  return out;
}

}  // namespace

TEST_SUITE("setaf-core") {

TEST_CASE("construction rejects empty tails and merges duplicates") {
  CHECK_THROWS_AS(Setaf({"a"}, {{IdSet{}, 0}}), Error);
  CHECK_THROWS_AS(Setaf({"a"}, {{IdSet{1}, 0}}), Error);
  const Setaf sf({"a", "b"}, {{IdSet{0}, 1}, {IdSet{0}, 1}, {IdSet{0, 1}, 1}});
  CHECK(sf.attacks().size() == 2);
  CHECK(normalize(sf).attacks().size() == 1);
  CHECK(Setaf::unnamed(3, {}).name(2) == "3");
}

TEST_CASE("range and extensions of the running SETAF") {
  const Setaf sf = running_setaf();
  const ArgRange r = range(sf, args_by_name(sf, {"a", "w", "z"}));
  CHECK(r.attacked == args_by_name(sf, {"v", "x"}));
  CHECK(enumerate_extensions(sf, Semantics::kPreferred) == family(sf, {{"a", "w", "z"}}));
  CHECK(enumerate_extensions(sf, Semantics::kGrounded) == family(sf, {{"a", "w", "z"}}));
  CHECK(enumerate_extensions(sf, Semantics::kStable).empty());
  CHECK_FALSE(check_extension(sf, args_by_name(sf, {"b"}), Semantics::kConflictFree));
  CHECK(check_extension(sf, args_by_name(sf, {"z"}), Semantics::kAdmissible));
}

TEST_CASE("collective attack needs the whole tail") {
  const Setaf sf = make_setaf({"a", "b", "c"}, {{{"a", "b"}, "c"}});
  CHECK(check_extension(sf, args_by_name(sf, {"a", "c"}), Semantics::kConflictFree));
  CHECK_FALSE(check_extension(sf, args_by_name(sf, {"a", "b", "c"}), Semantics::kConflictFree));
  CHECK(enumerate_extensions(sf, Semantics::kStable) == family(sf, {{"a", "b"}}));
  // The tail {a,b} can be defeated only by attacking a or b, and nothing does.
  CHECK(enumerate_extensions(sf, Semantics::kPreferred) == family(sf, {{"a", "b"}}));
}

TEST_CASE("three-argument Dung frameworks") {
  const DungAf chain{3, {{0, 1}, {1, 2}}};
  const DungAf cycle{3, {{0, 1}, {1, 2}, {2, 0}}};
  const DungAf mutual{3, {{0, 1}, {1, 0}, {1, 2}}};

  CHECK(enumerate_extensions(from_dung(chain), Semantics::kStable) == Family{IdSet{0, 2}});
  CHECK(enumerate_extensions(from_dung(chain), Semantics::kGrounded) == Family{IdSet{0, 2}});
  CHECK(enumerate_extensions(from_dung(cycle), Semantics::kStable).empty());
  CHECK(enumerate_extensions(from_dung(cycle), Semantics::kPreferred) == Family{IdSet{}});
  CHECK(enumerate_extensions(from_dung(mutual), Semantics::kStable) == (Family{IdSet{0, 2}, IdSet{1}}));
  CHECK(enumerate_extensions(from_dung(mutual), Semantics::kGrounded) == Family{IdSet{}});

  for (const DungAf& af : {chain, cycle, mutual}) {
    CHECK(enumerate_extensions(from_dung(af), Semantics::kPreferred) == from_masks(af.preferred()));
    CHECK(enumerate_extensions(from_dung(af), Semantics::kStable) == from_masks(af.stable()));
  }
}

TEST_CASE("grounded extension is the least fixpoint") {
  for (std::size_t i = 0; i < 200; ++i) {
    const Setaf sf = suite_setaf(i);
    const Family grd = enumerate_extensions(sf, Semantics::kGrounded);
    REQUIRE(grd.size() == 1);
    CHECK(grd.front() == naive_grounded(sf));
  }
}

TEST_CASE("guard") {
  const Setaf sf = running_setaf();
  CHECK_THROWS_AS(enumerate_extensions(sf, Semantics::kAdmissible, 4), Error);
}

TEST_CASE("primal graph and restriction") {
  const Setaf sf = running_setaf();
  const Digraph g = primal_graph(sf);
  const auto id = [&](const char* n) { return *sf.find(n); };
  CHECK(g.has_edge(id("a"), id("x")));
  CHECK(g.has_edge(id("w"), id("x")));
  CHECK(g.has_edge(id("z"), id("y")));
  CHECK(g.has_edge(id("b"), id("b")));
  CHECK_FALSE(g.has_edge(id("x"), id("a")));
  const SubSetaf sub = restrict_to(sf, args_by_name(sf, {"a", "b", "v"}));
  CHECK(attack_keys(sub.sf) == std::set<std::string>{"({a},v)", "({b},b)"});
  CHECK(sub.lift(sub.lower(args_by_name(sf, {"a", "x"}))) == args_by_name(sf, {"a"}));
}

}  // TEST_SUITE
