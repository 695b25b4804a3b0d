#include "mcalc/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mcalc {

namespace {

Tree number(const Integer& x) { return to_decimal(x); }
Tree number(long long x) { return std::to_string(x); }

Tree vector_tree(std::span<const Integer> v) {
  Tree out = Tree::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

Tree matrix_tree(const IntMatrix& m) {
  Tree out = Tree::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_tree(m.row(r)));
  return out;
}

Tree report_tree(const InvariantReport& report) {
  Tree t = Tree::object();
  t["euler"] = number(report.euler);
  if (report.h1) {
    t["h1"] = vector_tree(*report.h1);
    t["h1_group"] = describe_group(*report.h1);
  } else {
    t["h1"] = "indeterminate";
    t["h1_group"] = "indeterminate";
  }
  t["b2"] = report.b2 ? Tree(std::to_string(*report.b2)) : Tree("indeterminate");
  t["signature"] = number(report.signature);
  t["abs_signature"] = number(report.signature < 0 ? -report.signature : report.signature);
  if (report.gram) {
    const Inertia inertia = signature_symmetric(*report.gram);
    t["gram"] = matrix_tree(*report.gram);
    t["inertia"] = Tree::array({std::to_string(inertia.positive), std::to_string(inertia.zero), std::to_string(inertia.negative)});
    t["determinant"] = number(*report.determinant());
    t["even"] = *report.even();
    t["definite"] = *report.definite();
    t["unimodular"] = abs(*report.determinant()) == 1;
  }
  t["closed"] = report.closed;
  t["framing_blind"] = report.framing_blind;
  return t;
}

void merge_into(Tree& dst, const Tree& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

Tree indices_tree(std::span<const std::size_t> v) {
  Tree out = Tree::array();
  for (auto i : v) out.push_back(std::to_string(i));
  return out;
}

Tree side_tree(const Factorization& word) {
  Tree t = Tree::object();
  t["word"] = word.to_string();
  t["length"] = std::to_string(word.size());
  merge_into(t, report_tree(fibration_report(FibrationOverDisk(word))));
  return t;
}

std::string certificate_text(std::span<const HurwitzMove> moves) {
  std::string out;
  for (const auto& m : moves) {
    if (!out.empty()) out += ' ';
    out += m.to_string();
  }
  return out;
}

struct Resolved {
  FoldedAssembly assembly;
  std::optional<ChiralSplit> split;
};

// An assembly label, or a word to split into one.
Resolved resolve_assembly(std::string_view target, const Document& doc) {
  if (doc.find_assembly(target)) return {doc.assembly(target), std::nullopt};
  if (doc.find_word(target) || target == kEmptyWord) {
    ChiralSplit split = chiral_split(doc.factorization(target));
    FoldedAssembly assembly = FoldedAssembly::from_split(split);
    return {std::move(assembly), std::move(split)};
  }
  throw std::invalid_argument("undeclared assembly or word '" + std::string(target) + "'");
}

Tree folded_tree(const Resolved& resolved) {
  const FoldedAssembly& fa = resolved.assembly;
  Tree t = Tree::object();
  t["matches"] = matches(fa.positive_side(), fa.negative_side()).matches;
  merge_into(t, report_tree(folded_invariants(fa)));
  if (resolved.split) t["split_moves"] = std::to_string(resolved.split->certificate.size());
  t["positive"] = side_tree(fa.positive_side().word());
  t["negative"] = side_tree(fa.negative_side().word());
  return t;
}

}  // namespace

const Tree& convention_fingerprint() {
  static const Tree fingerprint = [] {
    Tree t = Tree::object();
    t["pairing"] = "<a_i,b_i> = +1, boundary classes d_j radical";
    t["twist"] = "positive twist x -> x + <x,c> c";
    t["order"] = "first letter acts first";
    t["linking"] = "L_ii = -sign_i, L_ij = <c_i,c_j> for i<j, 0 for i>j";
    t["digest"] = stable_digest(t.dump());
    return t;
  }();
  return fingerprint;
}

std::string stable_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> flatten(const Tree& tree) {
  std::vector<std::pair<std::string, std::string>> out;
  auto scalar = [](const Tree& v, auto&& self) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += self(v[i], self);
      }
      return s + "]";
    }
    return v.dump();
  };
  auto walk = [&](const Tree& v, const std::string& prefix, auto&& self) -> void {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) self(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), self);
    } else {
      out.emplace_back(prefix, scalar(v, scalar));
    }
  };
  walk(tree, "", walk);
  return out;
}

std::string ReportEnvelope::render(OutputFormat format) const {
  if (format == OutputFormat::machine) {
    Tree t = Tree::object();
    t["command"] = command;
    t["target"] = target;
    t["conventions"] = convention_fingerprint();
    t["payload"] = payload;
    if (certificate_digest) t["certificate_digest"] = *certificate_digest;
    return t.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "command: " << command << ' ' << target << '\n';
  out << "conventions: " << convention_fingerprint()["digest"].get<std::string>() << '\n';
  for (auto& [key, value] : convention_fingerprint().items())
    if (key != "digest") out << "  " << key << ": " << value.get<std::string>() << '\n';
  if (certificate_digest) out << "certificate_digest: " << *certificate_digest << '\n';
  for (const auto& [key, value] : flatten(payload)) out << key << ": " << value << '\n';
  return out.str();
}

ReportEnvelope run(std::string_view command, std::string_view target, const Document& doc) {
  ReportEnvelope env{std::string(command), std::string(target), Tree::object(), std::nullopt};
  Tree& t = env.payload;

  if (command == "action") {
    const Factorization word = doc.factorization(target);
    const ActionMatrix action = word_action(word);
    t["surface"] = word.surface().to_string();
    t["length"] = std::to_string(word.size());
    t["matrix"] = matrix_tree(action.matrix());
    t["identity"] = action.is_identity();
    t["preserves_pairing"] = preserves_pairing(word.surface(), action.matrix());
    t["determinant"] = number(determinant(action.matrix()));
    t["radical_letters"] = indices_tree(word.radical_letters());
  } else if (command == "split") {
    const Factorization word = doc.factorization(target);
    const ChiralSplit split = chiral_split(word);
    const std::string cert = certificate_text(split.certificate);
    env.certificate_digest = stable_digest(cert);
    t["input_length"] = std::to_string(word.size());
    t["positive_count"] = std::to_string(split.positive.size());
    t["negative_count"] = std::to_string(split.negative.size());
    t["moves"] = std::to_string(split.certificate.size());
    t["max_abs_coefficient"] = number(split.combined().max_abs_coefficient());
    t["verified"] = verify_split(word, split);
    t["action_identity"] = word_action(word).is_identity();
    t["positive"] = side_tree(split.positive);
    t["negative"] = side_tree(split.negative);
    t["certificate"] = cert;
    t["origin"] = indices_tree(split.origin);
  } else if (command == "invariants") {
    const Factorization word = doc.factorization(target);
    t["surface"] = word.surface().to_string();
    t["length"] = std::to_string(word.size());
    merge_into(t, report_tree(fibration_report(FibrationOverDisk(word))));
    t["radical_letters"] = indices_tree(word.radical_letters());
  } else if (command == "openbook-h1") {
    const Factorization word = doc.factorization(target);
    const IntVector h1 = openbook_first_homology(OpenBook::bounding(word));
    t["page"] = word.surface().to_string();
    t["h1"] = vector_tree(h1);
    t["h1_group"] = describe_group(h1);
  } else if (command == "fold") {
    Resolved resolved = resolve_assembly(target, doc);
    t = folded_tree(resolved);
  } else if (command == "surgery") {
    Resolved resolved = resolve_assembly(target, doc);
    const InvariantReport before = folded_invariants(resolved.assembly);
    const IntVector binding = binding_class(resolved.assembly);
    const InvariantReport after = binding_surgery(before, SurgeryDirection::circle_to_sphere, binding);
    t["direction"] = "S1xD3 -> D2xS2 along the binding";
    t["binding_class"] = vector_tree(binding);
    t["before_euler"] = number(before.euler);
    t["before_h1"] = vector_tree(*before.h1);
    merge_into(t, report_tree(after));
  } else {
    throw std::invalid_argument("unknown command '" + std::string(command) + "'");
  }
  return env;
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

bool VerificationResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const ExpectationCheck& c) { return c.passed; });
}

std::string VerificationResult::render(OutputFormat format) const {
  if (format == OutputFormat::machine) {
    Tree t = Tree::object();
    t["fixture"] = fixture;
    t["conventions"] = convention_fingerprint();
    t["passed"] = passed();
    Tree checks_tree = Tree::array();
    for (const auto& c : checks) {
      Tree e = Tree::object();
      e["key"] = c.expectation.key;
      e["expected"] = c.expectation.value;
      e["actual"] = c.actual;
      e["provenance"] = c.expectation.tag;
      e["note"] = c.expectation.note;
      e["passed"] = c.passed;
      checks_tree.push_back(std::move(e));
    }
    t["checks"] = std::move(checks_tree);
    return t.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "  ok   " : "  FAIL ") << c.expectation.key << " = " << c.actual;
    if (!c.passed) out << " (expected " << c.expectation.value << ")";
    out << "  [" << c.expectation.tag << "]\n";
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const ExpectationCheck& c) { return !c.passed; });
  out << (passed() ? "PASS" : "FAIL") << ": " << fixture << " (" << checks.size() - static_cast<std::size_t>(failed) << "/"
      << checks.size() << " checks)\n";
  return out.str();
}

VerificationResult verify_document(std::string_view name, const Document& doc) {
  VerificationResult result{std::string(name), {}};
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> cache;
  for (const auto& e : doc.expectations) {
    ExpectationCheck check{e, "<missing>", false};
    const std::size_t first_dot = e.key.find('.');
    const std::size_t second_dot = first_dot == std::string::npos ? std::string::npos : e.key.find('.', first_dot + 1);
    if (second_dot == std::string::npos) {
      check.actual = "<malformed key>";
      result.checks.push_back(std::move(check));
      continue;
    }
    const std::string command = e.key.substr(0, first_dot);
    const std::string target = e.key.substr(first_dot + 1, second_dot - first_dot - 1);
    const std::string path = e.key.substr(second_dot + 1);
    auto key = std::make_pair(command, target);
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::map<std::string, std::string> values;
      try {
        for (auto& [k, v] : flatten(run(command, target, doc).payload)) values[k] = v;
      } catch (const std::exception& ex) {
        values["<error>"] = ex.what();
      }
      it = cache.emplace(key, std::move(values)).first;
    }
    if (auto v = it->second.find(path); v != it->second.end()) {
      check.actual = v->second;
      check.passed = strip_spaces(v->second) == strip_spaces(e.value);
    } else if (auto err = it->second.find("<error>"); err != it->second.end()) {
      check.actual = "<error: " + err->second + ">";
    }
    result.checks.push_back(std::move(check));
  }
  return result;
}

VerificationResult verify_paper(std::string_view name, const std::filesystem::path& fixture_dir) {
  if (std::find(std::begin(kPaperFixtures), std::end(kPaperFixtures), name) == std::end(kPaperFixtures))
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
  const std::filesystem::path path = fixture_dir / (std::string(name) + ".mcalc");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fixture file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return verify_document(name, parse(buffer.str()));
}

}  // namespace mcalc
