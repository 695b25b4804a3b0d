#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mcalc/document.hpp"

namespace mcalc {

enum class OutputFormat { text, machine };

using Tree = nlohmann::ordered_json;

/// Sign, order and linking conventions every result depends on, plus a
/// stable digest of them.
const Tree& convention_fingerprint();

/// FNV-1a 64-bit, as 16 hex digits. Stable across builds and platforms.
std::string stable_digest(std::string_view bytes);

struct ReportEnvelope {
  std::string command;
  std::string target;
  Tree payload;  // integers are decimal strings
  std::optional<std::string> certificate_digest;

  std::string render(OutputFormat format) const;
};

/// Commands: action, split, invariants, openbook-h1 (word targets); fold
/// and surgery (an assembly, or a word that is chirally split first).
/// Throws std::invalid_argument for unknown commands, undeclared targets and
/// non-matching assemblies.
ReportEnvelope run(std::string_view command, std::string_view target, const Document& doc);

/// Dotted-key view of a payload; arrays render compactly as [x,y].
std::vector<std::pair<std::string, std::string>> flatten(const Tree& tree);

struct ExpectationCheck {
  Expectation expectation;
  std::string actual;
  bool passed = false;
};

struct VerificationResult {
  std::string fixture;
  std::vector<ExpectationCheck> checks;

  bool passed() const;
  std::string render(OutputFormat format) const;
};

/// Evaluates every `expect <command>.<target>.<path> = <value>` line.
VerificationResult verify_document(std::string_view name, const Document& doc);

inline constexpr std::string_view kPaperFixtures[] = {"s4-double", "cp2-surgery", "e8-split", "poincare-fold"};

/// Loads <fixture_dir>/<name>.mcalc and verifies it. Throws
/// std::invalid_argument for names outside kPaperFixtures.
VerificationResult verify_paper(std::string_view name, const std::filesystem::path& fixture_dir);

}  // namespace mcalc
