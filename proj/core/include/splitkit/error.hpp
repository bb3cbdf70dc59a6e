#pragma once

#include <stdexcept>
#include <string>

namespace splitkit {

enum class ErrorKind {
  kParse,           // malformed input text
  kValidation,      // well-formed but rejected by policy (dummy rules, non-flat, ...)
  kDomain,          // argument outside the operation's domain
  kGuardExceeded,   // brute-force enumeration refused
  kInvalidSplit,    // a proposed splitting violates its definition
  kDegenerateSplit  // only the trivial splittings exist
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace splitkit
