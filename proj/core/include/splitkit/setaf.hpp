#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitkit/digraph.hpp"
#include "splitkit/id_set.hpp"
#include "splitkit/semantics.hpp"

namespace splitkit {

using ArgId = Id;
using AttackFilter = IndexFilter;

/// Collective attack (tail, head).
struct Attack {
  IdSet tail;
  ArgId head = kNoId;

  friend bool operator==(const Attack&, const Attack&) = default;
  friend auto operator<=>(const Attack& a, const Attack& b) {
    if (auto c = a.head <=> b.head; c != 0) return c;
    return a.tail <=> b.tail;
  }
};

/// Argumentation framework with collective attacks. Tails are nonempty and
/// exact duplicates are merged; superset tails are kept as given.
class Setaf {
 public:
  Setaf() = default;
  /// Throws Error(kValidation) on an empty tail, Error(kDomain) on an unknown
  /// argument.
  Setaf(std::vector<std::string> names, std::vector<Attack> attacks);
  /// Arguments named by their 1-based index.
  static Setaf unnamed(std::size_t n, std::vector<Attack> attacks);

  std::size_t arg_count() const { return names_.size(); }
  const std::string& name(ArgId a) const { return names_[a]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<ArgId> find(std::string_view name) const;

  std::span<const Attack> attacks() const { return attacks_; }
  /// Indices of attacks whose head is `a`.
  std::span<const std::size_t> attacks_on(ArgId a) const { return by_head_[a]; }

  std::string format_attack(const Attack& at) const;

 private:
  std::vector<std::string> names_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<std::size_t>> by_head_;
};

/// Argument set plus attacks, both given by names (test and example helper).
Setaf make_setaf(std::initializer_list<std::string_view> args,
                 std::initializer_list<std::pair<std::initializer_list<std::string_view>, std::string_view>> attacks);

/// Resolves argument names; throws Error(kDomain) on an unknown one.
IdSet args_by_name(const Setaf& sf, std::initializer_list<std::string_view> names);

struct ArgRange {
  IdSet attacked;
  IdSet range;
};

ArgRange range(const Setaf& sf, const IdSet& s, const AttackFilter& filter = AttackFilter::all());

bool check_extension(const Setaf& sf, const IdSet& s, Semantics sigma);

/// Brute-force reference enumeration, canonically ordered.
Family enumerate_extensions(const Setaf& sf, Semantics sigma, std::size_t guard);
Family enumerate_extensions(const Setaf& sf, Semantics sigma);

/// Edge a->b iff a is in the tail of some attack on b.
Digraph primal_graph(const Setaf& sf);

/// Drops attacks whose tail strictly contains another tail on the same head.
Setaf normalize(const Setaf& sf);

/// A framework derived from a base one with its argument map.
struct SubSetaf {
  Setaf sf;
  std::vector<ArgId> to_base;

  IdSet lift(const IdSet& local) const;
  IdSet lower(const IdSet& base) const;
};

/// Restriction to an argument set: the arguments and the attacks inside it.
SubSetaf restrict_to(const Setaf& sf, const IdSet& args);

}  // namespace splitkit
