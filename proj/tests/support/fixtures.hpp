#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

#include "splitkit/abaf.hpp"
#include "splitkit/setaf.hpp"

namespace splitkit::testing {

/// Running example: seven assumptions, p, and six rules.
Abaf running_abaf();
/// Its SETAF instantiation, written out by hand.
Setaf running_setaf();
/// Quasi-splitting example: assumptions a..d and p.
Abaf quasi_abaf();
/// Correspondence example: assumptions a, b, c and p, q, s.
Abaf correspondence_abaf();

/// Atom ids by name; throws on unknown names.
IdSet atoms(const Abaf& abaf, std::initializer_list<std::string_view> names);
Family family(const Abaf& abaf, std::initializer_list<std::initializer_list<std::string_view>> sets);
Family family(const Setaf& sf, std::initializer_list<std::initializer_list<std::string_view>> sets);

/// "h <- b1,b2" with body names sorted, for order-free comparison.
std::set<std::string> rule_keys(const Abaf& abaf);
/// "({t1,t2},h)" with tail names sorted.
std::set<std::string> attack_keys(const Setaf& sf);

std::string show(std::span<const std::string> names, const IdSet& s);
std::string show(std::span<const std::string> names, const Family& f);

}  // namespace splitkit::testing
