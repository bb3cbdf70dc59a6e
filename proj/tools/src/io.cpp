#include "splitkit/cli/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"

namespace splitkit::cli {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected a number, got '" + std::string(tok) + "'");
  return v;
}

Id parse_id(std::string_view tok, std::size_t n, std::size_t line) {
  std::size_t v = parse_count(tok, line);
  if (v < 1 || v > n) fail(line, "id " + std::string(tok) + " out of range 1.." + std::to_string(n));
  return static_cast<Id>(v - 1);
}

// Shared line walker: calls `on_header` for the `p` line and `on_line` for the
// rest; handles comments and `# name` lines.
template <typename OnLine>
std::vector<std::string> walk(std::string_view text, std::string_view kind, std::size_t& n, OnLine on_line) {
  bool header = false;
  std::vector<std::string> names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    auto tok = split_ws(line);
    if (tok[0] == "#" || tok[0][0] == '#') {
      if (tok.size() >= 3 && tok[0] == "#" && tok[1] == "name") {
        if (!header) fail(line_no, "name before header");
        Id id = parse_id(tok[2], n, line_no);
        std::string_view rest = line.substr(tok[2].data() + tok[2].size() - line.data());
        rest = trim(rest);
        if (rest.empty()) fail(line_no, "empty name");
        names[id] = std::string(rest);
      }
      continue;
    }
    if (tok[0] == "p") {
      if (header) fail(line_no, "duplicate header");
      if (tok.size() != 3 || tok[1] != kind) fail(line_no, "expected 'p " + std::string(kind) + " <n>'");
      n = parse_count(tok[2], line_no);
      names.assign(n, "");
      header = true;
      continue;
    }
    if (!header) fail(line_no, "missing 'p " + std::string(kind) + "' header");
    on_line(tok, line_no);
  }
  if (!header) fail(line_no, "missing 'p " + std::string(kind) + "' header");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i].empty()) names[i] = std::to_string(i + 1);
  return names;
}

bool default_name(const std::string& name, std::size_t i) { return name == std::to_string(i + 1); }

}  // namespace

ParsedAbaf parse_aba(std::string_view text, const ParseOptions& options) {
  std::size_t n = 0;
  struct PendingRule {
    Id head;
    std::vector<Id> body;
  };
  std::vector<Id> assumptions;
  std::vector<std::pair<Id, Id>> contraries;
  std::vector<PendingRule> rules;
  std::vector<std::string> names = walk(text, "aba", n, [&](const auto& tok, std::size_t line) {
    if (tok[0] == "a") {
      if (tok.size() != 2) fail(line, "expected 'a <i>'");
      assumptions.push_back(parse_id(tok[1], n, line));
    } else if (tok[0] == "c") {
      if (tok.size() != 3) fail(line, "expected 'c <i> <j>'");
      contraries.emplace_back(parse_id(tok[1], n, line), parse_id(tok[2], n, line));
    } else if (tok[0] == "r") {
      if (tok.size() < 2) fail(line, "expected 'r <h> <b1> ... <bk>'");
      PendingRule r{parse_id(tok[1], n, line), {}};
      for (std::size_t i = 2; i < tok.size(); ++i) r.body.push_back(parse_id(tok[i], n, line));
      rules.push_back(std::move(r));
    } else {
      fail(line, "unknown directive '" + std::string(tok[0]) + "'");
    }
  });

  AbafBuilder b;
  for (auto& name : names) b.add_atom(name);
  std::vector<Id> contrary(n, kNoId);
  for (auto [a, c] : contraries) {
    if (contrary[a] != kNoId && contrary[a] != c)
      throw Error(ErrorKind::kValidation, "atom " + names[a] + " has two contraries");
    contrary[a] = c;
  }
  std::vector<char> is_assumption(n, 0);
  for (Id a : assumptions) is_assumption[a] = 1;
  for (Id a = 0; a < n; ++a) {
    if (contrary[a] != kNoId && !is_assumption[a])
      throw Error(ErrorKind::kValidation, "contrary given for non-assumption " + names[a]);
    if (is_assumption[a]) {
      if (contrary[a] == kNoId) throw Error(ErrorKind::kValidation, "assumption " + names[a] + " has no contrary");
      b.add_assumption(a, contrary[a]);
    }
  }
  for (auto& r : rules) b.add_rule(r.head, IdSet(std::move(r.body)));

  ParsedAbaf out{b.build(), {}};
  const ValidationReport report = validate(out.abaf);
  if (!report.dummy_rules.empty()) {
    const Rule& first = out.abaf.rules()[report.dummy_rules.front()];
    if (options.strict_dummy)
      throw Error(ErrorKind::kValidation, "dummy rule " + out.abaf.format_rule(first));
    for (std::size_t i : report.dummy_rules)
      out.warnings.push_back("dropping dummy rule " + out.abaf.format_rule(out.abaf.rules()[i]));
    out.abaf = without_rules(out.abaf, report.dummy_rules);
  }
  return out;
}

Setaf parse_setaf(std::string_view text) {
  std::size_t n = 0;
  std::vector<Attack> attacks;
  std::vector<std::string> names = walk(text, "setaf", n, [&](const auto& tok, std::size_t line) {
    if (tok[0] != "e") fail(line, "unknown directive '" + std::string(tok[0]) + "'");
    if (tok.size() < 3) fail(line, "attack needs a head and a nonempty tail");
    Attack at;
    at.head = parse_id(tok[1], n, line);
    std::vector<Id> tail;
    for (std::size_t i = 2; i < tok.size(); ++i) tail.push_back(parse_id(tok[i], n, line));
    at.tail = IdSet(std::move(tail));
    attacks.push_back(std::move(at));
  });
  return Setaf(std::move(names), std::move(attacks));
}

std::string emit_aba(const Abaf& abaf) {
  std::ostringstream os;
  os << "p aba " << abaf.atom_count() << "\n";
  for (AtomId p = 0; p < abaf.atom_count(); ++p)
    if (!default_name(abaf.name(p), p)) os << "# name " << p + 1 << " " << abaf.name(p) << "\n";
  for (AtomId a : abaf.assumptions()) os << "a " << a + 1 << "\n";
  for (AtomId a : abaf.assumptions()) os << "c " << a + 1 << " " << abaf.contrary(a) + 1 << "\n";
  for (const Rule& r : abaf.rules()) {
    os << "r " << r.head + 1;
    for (AtomId b : r.body) os << " " << b + 1;
    os << "\n";
  }
  return os.str();
}

std::string emit_setaf(const Setaf& sf) {
  std::ostringstream os;
  os << "p setaf " << sf.arg_count() << "\n";
  for (ArgId a = 0; a < sf.arg_count(); ++a)
    if (!default_name(sf.name(a), a)) os << "# name " << a + 1 << " " << sf.name(a) << "\n";
  for (const Attack& at : sf.attacks()) {
    os << "e " << at.head + 1;
    for (ArgId t : at.tail) os << " " << t + 1;
    os << "\n";
  }
  return os.str();
}

std::string format_extensions(const Family& family, std::span<const std::string> names) {
  if (family.empty()) return "NO\n";
  Family sorted = family;
  canonicalize(sorted);
  std::string out;
  for (const IdSet& e : sorted) {
    out += "E";
    for (Id p : e) out += " " + names[p];
    out += "\n";
  }
  return out;
}

std::string to_dot(const Digraph& g, std::span<const std::string> names) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Id v = 0; v < g.size(); ++v) os << "  \"" << names[v] << "\";\n";
  for (auto [a, b] : g.edges()) os << "  \"" << names[a] << "\" -> \"" << names[b] << "\";\n";
  os << "}\n";
  return os.str();
}

IdSet parse_id_list(std::string_view text, std::size_t n) {
  std::vector<Id> ids;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (auto tok : split_ws(line)) ids.push_back(parse_id(tok, n, line_no));
  }
  return IdSet(std::move(ids));
}

std::string emit_id_list(const IdSet& ids) {
  std::string out;
  for (Id p : ids) out += std::to_string(p + 1) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace splitkit::cli
