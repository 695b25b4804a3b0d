#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcalc/factorization.hpp"
#include "mcalc/invariants.hpp"

namespace mcalc {

struct CurveDecl {
  std::string label;
  IntVector coordinates;
  friend bool operator==(const CurveDecl&, const CurveDecl&) = default;
};

struct WordLetter {
  std::string curve;
  Sign sign;
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

/// Letters are stored fully expanded: repetitions and nested words are
/// unrolled at parse time.
struct WordDecl {
  std::string label;
  std::vector<WordLetter> letters;
  friend bool operator==(const WordDecl&, const WordDecl&) = default;
};

struct AssemblyDecl {
  std::string label;
  std::string positive;
  std::string negative;
  friend bool operator==(const AssemblyDecl&, const AssemblyDecl&) = default;
};

/// `expect <key> = <value> # [TAG: note]` from a fixture file.
struct Expectation {
  std::string key;
  std::string value;
  std::string tag;  // PAPER, TRIVIAL or DERIVED
  std::string note;
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

/// Word label that always denotes the empty word.
inline constexpr std::string_view kEmptyWord = "empty";

struct Document {
  std::optional<Surface> surface;
  std::vector<CurveDecl> curves;
  std::vector<WordDecl> words;
  std::vector<AssemblyDecl> assemblies;
  std::vector<Expectation> expectations;

  const CurveDecl* find_curve(std::string_view label) const;
  const WordDecl* find_word(std::string_view label) const;
  const AssemblyDecl* find_assembly(std::string_view label) const;
  bool has_label(std::string_view label) const;

  const Surface& require_surface() const;
  CurveClass curve(std::string_view label) const;
  /// Throws std::invalid_argument for an undeclared word.
  Factorization factorization(std::string_view label) const;
  FoldedAssembly assembly(std::string_view label) const;

  friend bool operator==(const Document&, const Document&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Line-oriented grammar:
///
///   surface g=<int> m=<int>
///   curve <label> = [<int>, ...]
///   word <label> = <token>+        token: c | -c | w | -w | (<token>+)^n
///   assembly <label> = pos:<word> neg:<word>
///   expect <key> = <value> # [TAG: note]
///
/// where c names a curve (a positive twist; -c is negative) and w a
/// previously declared word (-w splices its reverse inverse). `#` starts a
/// comment. Errors carry 1-based line and column.
Document parse(std::string_view text);

std::string serialize(const Document& doc);

}  // namespace mcalc
