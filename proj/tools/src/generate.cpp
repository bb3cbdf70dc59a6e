#include "splitkit/cli/generate.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace splitkit::cli {

namespace {

std::string letter_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return std::string(1, static_cast<char>('a' + i % 26)) + std::to_string(i / 26);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

IdSet sample(std::mt19937_64& rng, const std::vector<Id>& pool, std::size_t k) {
  std::vector<Id> copy = pool;
  std::shuffle(copy.begin(), copy.end(), rng);
  copy.resize(std::min(k, copy.size()));
  return IdSet(std::move(copy));
}

}  // namespace

Abaf random_abaf(const AbafShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AbafBuilder b;
  std::vector<Id> assumptions, contraries, heads;
  for (std::size_t i = 0; i < shape.assumptions; ++i) assumptions.push_back(b.add_atom(letter_name(i)));
  std::bernoulli_distribution share(shape.shared_contrary);
  for (std::size_t i = 0; i < shape.assumptions; ++i) {
    Id c;
    if (!contraries.empty() && share(rng)) {
      c = contraries[pick(rng, contraries.size())];
    } else {
      c = b.add_atom("c_" + letter_name(i));
      contraries.push_back(c);
    }
    b.add_assumption(assumptions[i], c);
  }
  heads = contraries;
  for (std::size_t i = 0; i < shape.extra_atoms; ++i) heads.push_back(b.add_atom("p" + std::to_string(i)));

  std::vector<Id> derivable = assumptions;
  for (std::size_t r = 0; r < shape.rules && !derivable.empty(); ++r) {
    const Id head = heads[pick(rng, heads.size())];
    const std::size_t size = 1 + pick(rng, std::max<std::size_t>(shape.max_body, 1));
    std::vector<Id> usable;
    for (Id p : derivable)
      if (p != head) usable.push_back(p);
    if (usable.empty()) continue;
    b.add_rule(head, sample(rng, usable, size));
    if (std::find(derivable.begin(), derivable.end(), head) == derivable.end()) derivable.push_back(head);
  }
  return b.build();
}

Setaf random_setaf(const SetafShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  std::vector<Id> all;
  for (std::size_t i = 0; i < shape.args; ++i) {
    names.push_back(letter_name(i));
    all.push_back(static_cast<Id>(i));
  }
  std::vector<Attack> attacks;
  if (!all.empty()) {
    for (std::size_t i = 0; i < shape.attacks; ++i) {
      const std::size_t size = 1 + pick(rng, std::max<std::size_t>(std::min(shape.max_tail, all.size()), 1));
      Attack at;
      at.head = static_cast<ArgId>(pick(rng, all.size()));
      at.tail = sample(rng, all, size);
      attacks.push_back(std::move(at));
    }
  }
  return Setaf(std::move(names), std::move(attacks));
}

Abaf layered_abaf(std::size_t layers, std::size_t width, std::size_t rules_per_layer, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AbafBuilder b;
  std::vector<std::vector<Id>> assumptions(layers), contraries(layers);
  for (std::size_t l = 0; l < layers; ++l)
    for (std::size_t i = 0; i < width; ++i) {
      const std::string name = "a" + std::to_string(l) + "_" + std::to_string(i);
      Id a = b.add_atom(name);
      Id c = b.add_atom("c_" + name);
      b.add_assumption(a, c);
      assumptions[l].push_back(a);
      contraries[l].push_back(c);
    }
  for (std::size_t l = 0; l < layers; ++l) {
    std::vector<Id> pool = assumptions[l];
    if (l > 0) pool.insert(pool.end(), assumptions[l - 1].begin(), assumptions[l - 1].end());
    for (std::size_t r = 0; r < rules_per_layer; ++r) {
      const Id head = contraries[l][pick(rng, width)];
      b.add_rule(head, sample(rng, pool, 1 + pick(rng, 2)));
    }
  }
  return b.build();
}

}  // namespace splitkit::cli
