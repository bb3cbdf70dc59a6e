#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "splitkit/abaf.hpp"
#include "splitkit/digraph.hpp"
#include "splitkit/setaf.hpp"

namespace splitkit::cli {

struct ParseOptions {
  /// Reject dummy rules instead of stripping them.
  bool strict_dummy = false;
};

struct ParsedAbaf {
  Abaf abaf;
  std::vector<std::string> warnings;
};

/// Line format: `p aba <n>`, `a <i>`, `c <i> <j>`, `r <h> <b1> ... <bk>`,
/// `# name <i> <text>`; other `#` lines are comments. Ids are 1-based.
/// Throws Error(kParse) with the line number, Error(kValidation) on policy.
ParsedAbaf parse_aba(std::string_view text, const ParseOptions& options = {});

/// `p setaf <n>`, `e <h> <t1> ... <tk>` with k >= 1, and `# name` lines.
Setaf parse_setaf(std::string_view text);

std::string emit_aba(const Abaf& abaf);
std::string emit_setaf(const Setaf& sf);

/// One `E` line per extension with member names in id order; `NO` if empty.
std::string format_extensions(const Family& family, std::span<const std::string> names);

std::string to_dot(const Digraph& g, std::span<const std::string> names);

/// Whitespace-separated 1-based ids; `#` starts a comment.
IdSet parse_id_list(std::string_view text, std::size_t n);
std::string emit_id_list(const IdSet& ids);

std::string read_file(const std::string& path);

}  // namespace splitkit::cli
