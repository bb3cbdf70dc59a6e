#pragma once

#include <cstdint>

#include "splitkit/abaf.hpp"
#include "splitkit/setaf.hpp"

namespace splitkit::cli {

struct AbafShape {
  std::size_t assumptions = 5;
  std::size_t rules = 6;
  std::size_t max_body = 3;
  /// Non-assumption, non-contrary atoms p0, p1, ...
  std::size_t extra_atoms = 2;
  /// Chance that an assumption reuses an earlier assumption's contrary.
  double shared_contrary = 0.0;
};

/// Flat and free of dummy rules: every body is drawn from atoms already
/// derivable, and bodies are nonempty. Assumptions are named a, b, ...,
/// contraries c_<name>.
Abaf random_abaf(const AbafShape& shape, std::uint64_t seed);

struct SetafShape {
  std::size_t args = 6;
  std::size_t attacks = 8;
  std::size_t max_tail = 3;
};

Setaf random_setaf(const SetafShape& shape, std::uint64_t seed);

/// `layers` blocks of `width` assumptions. Rules inside a block only use that
/// block and the previous one, so every prefix of blocks is a splitting set.
Abaf layered_abaf(std::size_t layers, std::size_t width, std::size_t rules_per_layer, std::uint64_t seed);

}  // namespace splitkit::cli
