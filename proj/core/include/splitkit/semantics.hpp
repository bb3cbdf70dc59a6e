#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace splitkit {

enum class Semantics { kConflictFree, kAdmissible, kComplete, kGrounded, kPreferred, kStable };

inline constexpr std::array<Semantics, 6> kAllSemantics = {
    Semantics::kConflictFree, Semantics::kAdmissible, Semantics::kComplete,
    Semantics::kGrounded,     Semantics::kPreferred,  Semantics::kStable};

/// Semantics that split solving supports.
inline constexpr std::array<Semantics, 5> kSplitSemantics = {
    Semantics::kStable, Semantics::kAdmissible, Semantics::kComplete, Semantics::kPreferred,
    Semantics::kGrounded};

inline bool splittable(Semantics s) { return s != Semantics::kConflictFree; }

inline std::string_view to_token(Semantics s) {
  switch (s) {
    case Semantics::kConflictFree: return "cf";
    case Semantics::kAdmissible: return "adm";
    case Semantics::kComplete: return "com";
    case Semantics::kGrounded: return "grd";
    case Semantics::kPreferred: return "prf";
    case Semantics::kStable: return "stb";
  }
  return "?";
}

inline std::optional<Semantics> parse_semantics(std::string_view token) {
  for (Semantics s : kAllSemantics)
    if (to_token(s) == token) return s;
  return std::nullopt;
}

}  // namespace splitkit
