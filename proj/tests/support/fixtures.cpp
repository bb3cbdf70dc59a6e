#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace splitkit::testing {

Abaf running_abaf() {
  AbafBuilder b;
  for (const char* a : {"a", "b", "v", "w", "x", "y", "z"}) b.add_assumption(a, std::string("c_") + a);
  b.add_rule("c_b", {"b"});
  b.add_rule("p", {"a"});
  b.add_rule("c_v", {"a"});
  b.add_rule("c_x", {"p", "w"});
  b.add_rule("c_y", {"x"});
  b.add_rule("c_y", {"c_b", "z"});
  return b.build();
}

Setaf running_setaf() {
  return make_setaf({"a", "b", "v", "w", "x", "y", "z"},
                    {{{"b"}, "b"}, {{"a"}, "v"}, {{"a", "w"}, "x"}, {{"x"}, "y"}, {{"b", "z"}, "y"}});
}

Abaf quasi_abaf() {
  AbafBuilder b;
  for (const char* a : {"a", "b", "c", "d"}) b.add_assumption(a, std::string("c_") + a);
  b.add_rule("c_b", {"a"});
  b.add_rule("c_d", {"b"});
  b.add_rule("c_a", {"p", "c"});
  b.add_rule("p", {"b"});
  return b.build();
}

Abaf correspondence_abaf() {
  AbafBuilder b;
  for (const char* a : {"a", "b", "c"}) b.add_assumption(a, std::string("c_") + a);
  b.add_rule("c_c", {"s", "q"});
  b.add_rule("s", {"b"});
  b.add_rule("q", {"p"});
  b.add_rule("p", {"a"});
  b.add_rule("c_a", {"a"});
  return b.build();
}

IdSet atoms(const Abaf& abaf, std::initializer_list<std::string_view> names) {
  std::vector<AtomId> out;
  for (auto n : names) {
    auto p = abaf.find(n);
    if (!p) throw std::invalid_argument("unknown atom " + std::string(n));
    out.push_back(*p);
  }
  return IdSet(std::move(out));
}

Family family(const Abaf& abaf, std::initializer_list<std::initializer_list<std::string_view>> sets) {
  Family out;
  for (auto s : sets) out.push_back(atoms(abaf, s));
  canonicalize(out);
  return out;
}

Family family(const Setaf& sf, std::initializer_list<std::initializer_list<std::string_view>> sets) {
  Family out;
  for (auto s : sets) out.push_back(args_by_name(sf, s));
  canonicalize(out);
  return out;
}

std::set<std::string> rule_keys(const Abaf& abaf) {
  std::set<std::string> out;
  for (const Rule& r : abaf.rules()) {
    std::vector<std::string> body;
    for (AtomId b : r.body) body.push_back(abaf.name(b));
    std::sort(body.begin(), body.end());
    std::string key = abaf.name(r.head) + " <-";
    for (std::size_t i = 0; i < body.size(); ++i) key += (i ? "," : " ") + body[i];
    out.insert(key);
  }
  return out;
}

std::set<std::string> attack_keys(const Setaf& sf) {
  std::set<std::string> out;
  for (const Attack& at : sf.attacks()) {
    std::vector<std::string> tail;
    for (ArgId t : at.tail) tail.push_back(sf.name(t));
    std::sort(tail.begin(), tail.end());
    std::string key = "({";
    for (std::size_t i = 0; i < tail.size(); ++i) key += (i ? "," : "") + tail[i];
    out.insert(key + "}," + sf.name(at.head) + ")");
  }
  return out;
}

std::string show(std::span<const std::string> names, const IdSet& s) {
  std::string out = "{";
  bool first = true;
  for (Id p : s) {
    out += (first ? "" : ",") + names[p];
    first = false;
  }
  return out + "}";
}

std::string show(std::span<const std::string> names, const Family& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + show(names, f[i]);
  return out + "]";
}

}  // namespace splitkit::testing
