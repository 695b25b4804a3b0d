#include "mcalc/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace mcalc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

const CurveDecl* Document::find_curve(std::string_view label) const {
  auto it = std::find_if(curves.begin(), curves.end(), [&](const CurveDecl& c) { return c.label == label; });
  return it == curves.end() ? nullptr : &*it;
}

const WordDecl* Document::find_word(std::string_view label) const {
  auto it = std::find_if(words.begin(), words.end(), [&](const WordDecl& w) { return w.label == label; });
  return it == words.end() ? nullptr : &*it;
}

const AssemblyDecl* Document::find_assembly(std::string_view label) const {
  auto it = std::find_if(assemblies.begin(), assemblies.end(), [&](const AssemblyDecl& a) { return a.label == label; });
  return it == assemblies.end() ? nullptr : &*it;
}

bool Document::has_label(std::string_view label) const {
  return find_curve(label) || find_word(label) || find_assembly(label);
}

const Surface& Document::require_surface() const {
  if (!surface) throw std::invalid_argument("document declares no surface");
  return *surface;
}

CurveClass Document::curve(std::string_view label) const {
  const CurveDecl* decl = find_curve(label);
  if (!decl) throw std::invalid_argument("undeclared curve '" + std::string(label) + "'");
  return CurveClass(require_surface(), decl->coordinates);
}

Factorization Document::factorization(std::string_view label) const {
  const Surface& s = require_surface();
  if (label == kEmptyWord) return Factorization(s);
  const WordDecl* decl = find_word(label);
  if (!decl) throw std::invalid_argument("undeclared word '" + std::string(label) + "'");
  std::vector<SignedTwist> letters;
  letters.reserve(decl->letters.size());
  for (const auto& letter : decl->letters) letters.push_back({curve(letter.curve), letter.sign});
  return Factorization(s, std::move(letters));
}

FoldedAssembly Document::assembly(std::string_view label) const {
  const AssemblyDecl* decl = find_assembly(label);
  if (!decl) throw std::invalid_argument("undeclared assembly '" + std::string(label) + "'");
  return FoldedAssembly(FibrationOverDisk(factorization(decl->positive)), FibrationOverDisk(factorization(decl->negative)));
}

namespace {

enum class TokenKind { identifier, integer, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line) : line_(line) { tokenize(text); }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == TokenKind::end; }

  [[noreturn]] void fail(const Token& at, const std::string& message) const { throw ParseError(line_, at.column, message); }
  [[noreturn]] void fail(std::size_t column, const std::string& message) const { throw ParseError(line_, column, message); }

  bool accept_symbol(std::string_view s) {
    if (peek().kind == TokenKind::symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  Token expect_symbol(std::string_view s) {
    if (peek().kind != TokenKind::symbol || peek().text != s) fail(peek(), "expected '" + std::string(s) + "'" + found());
    return next();
  }

  Token expect_identifier(std::string_view what) {
    if (peek().kind != TokenKind::identifier) fail(peek(), "expected " + std::string(what) + found());
    return next();
  }

  Token expect_integer() {
    if (peek().kind != TokenKind::integer) fail(peek(), "expected an integer" + found());
    return next();
  }

  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
  }

  std::string found() const { return at_end() ? ", found end of line" : ", found '" + peek().text + "'"; }

  std::size_t line() const { return line_; }

 private:
  void tokenize(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '#') {
        break;
      } else if (is_identifier_start(c)) {
        std::size_t j = i;
        while (j < text.size() && is_identifier_char(text[j])) ++j;
        tokens_.push_back({TokenKind::identifier, std::string(text.substr(i, j - i)), i + 1});
        i = j;
      } else if (is_digit(c) || (c == '-' && i + 1 < text.size() && is_digit(text[i + 1]))) {
        std::size_t j = i + 1;
        while (j < text.size() && is_digit(text[j])) ++j;
        tokens_.push_back({TokenKind::integer, std::string(text.substr(i, j - i)), i + 1});
        i = j;
      } else if (std::string_view("=[],()^:-").find(c) != std::string_view::npos) {
        tokens_.push_back({TokenKind::symbol, std::string(1, c), i + 1});
        ++i;
      } else {
        throw ParseError(line_, i + 1, std::string("unexpected character '") + c + "'");
      }
    }
    const std::size_t end_column = std::min(text.find('#'), text.size()) + 1;
    tokens_.push_back({TokenKind::end, "", end_column});
  }

  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

constexpr std::string_view kKeywords[] = {"surface", "curve", "word", "assembly", "expect"};

class DocumentParser {
 public:
  Document run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      parse_line(line, line_no);
      start = end + 1;
    }
    return std::move(doc_);
  }

 private:
  void parse_line(std::string_view text, std::size_t line_no) {
    const std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text.substr(first, 6) == "expect" &&
        (first + 6 == text.size() || std::isspace(static_cast<unsigned char>(text[first + 6])))) {
      parse_expect(text, line_no, first + 6);
      return;
    }
    LineParser p(text, line_no);
    if (p.at_end()) return;
    const Token keyword = p.expect_identifier("a declaration keyword");
    if (keyword.text == "surface") {
      parse_surface(p, keyword);
    } else if (keyword.text == "curve") {
      parse_curve(p);
    } else if (keyword.text == "word") {
      parse_word(p);
    } else if (keyword.text == "assembly") {
      parse_assembly(p);
    } else {
      p.fail(keyword, "unknown declaration '" + keyword.text + "'");
    }
  }

  static unsigned parse_count(LineParser& p, const Token& t) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) p.fail(t, "expected a nonnegative count, found '" + t.text + "'");
    return value;
  }

  void parse_surface(LineParser& p, const Token& keyword) {
    if (doc_.surface) p.fail(keyword, "surface declared twice");
    if (!doc_.curves.empty()) p.fail(keyword, "surface must be declared before curves");
    unsigned values[2] = {0, 0};
    const char* names[2] = {"g", "m"};
    for (int i = 0; i < 2; ++i) {
      const Token name = p.expect_identifier(std::string("'") + names[i] + "='");
      if (name.text != names[i]) p.fail(name, std::string("expected '") + names[i] + "'" + ", found '" + name.text + "'");
      p.expect_symbol("=");
      values[i] = parse_count(p, p.expect_integer());
    }
    p.expect_end();
    doc_.surface = Surface(values[0], values[1]);
  }

  Token declare_label(LineParser& p) {
    const Token label = p.expect_identifier("a label");
    if (label.text == kEmptyWord) p.fail(label, "'empty' is reserved for the empty word");
    for (auto kw : kKeywords)
      if (label.text == kw) p.fail(label, "'" + label.text + "' is a keyword");
    if (doc_.has_label(label.text)) p.fail(label, "label '" + label.text + "' already declared");
    return label;
  }

  void parse_curve(LineParser& p) {
    const Token label = declare_label(p);
    if (!doc_.surface) p.fail(label, "curve declared before the surface");
    p.expect_symbol("=");
    const Token open = p.expect_symbol("[");
    IntVector coords;
    if (!p.accept_symbol("]")) {
      do {
        coords.emplace_back(p.expect_integer().text, 10);
      } while (p.accept_symbol(","));
      p.expect_symbol("]");
    }
    p.expect_end();
    try {
      CurveClass check(*doc_.surface, coords);
    } catch (const std::invalid_argument& e) {
      p.fail(open, e.what());
    }
    doc_.curves.push_back({label.text, std::move(coords)});
  }

  // token list until ')' or end of line
  std::vector<WordLetter> parse_tokens(LineParser& p, bool nested) {
    std::vector<WordLetter> out;
    while (!p.at_end() && !(nested && p.peek().kind == TokenKind::symbol && p.peek().text == ")")) {
      if (p.accept_symbol("(")) {
        const Token open_next = p.peek();
        std::vector<WordLetter> group = parse_tokens(p, true);
        if (group.empty()) p.fail(open_next, "empty group");
        p.expect_symbol(")");
        p.expect_symbol("^");
        const Token count_tok = p.expect_integer();
        const unsigned count = parse_count(p, count_tok);
        for (unsigned i = 0; i < count; ++i) out.insert(out.end(), group.begin(), group.end());
        continue;
      }
      const bool negative = p.accept_symbol("-");
      const Token name = p.expect_identifier("a curve or word label");
      if (doc_.find_curve(name.text)) {
        out.push_back({name.text, negative ? Sign::negative : Sign::positive});
      } else if (const WordDecl* w = doc_.find_word(name.text)) {
        if (!negative) {
          out.insert(out.end(), w->letters.begin(), w->letters.end());
        } else {
          for (auto it = w->letters.rbegin(); it != w->letters.rend(); ++it) out.push_back({it->curve, flip(it->sign)});
        }
      } else if (name.text == kEmptyWord) {
        // contributes nothing
      } else {
        p.fail(name, "undeclared label '" + name.text + "'");
      }
    }
    return out;
  }

  void parse_word(LineParser& p) {
    const Token label = declare_label(p);
    p.expect_symbol("=");
    if (p.at_end()) p.fail(p.peek(), "word needs at least one token");
    std::vector<WordLetter> letters = parse_tokens(p, false);
    p.expect_end();
    doc_.words.push_back({label.text, std::move(letters)});
  }

  void parse_assembly(LineParser& p) {
    const Token label = declare_label(p);
    p.expect_symbol("=");
    std::string sides[2];
    const char* names[2] = {"pos", "neg"};
    for (int i = 0; i < 2; ++i) {
      const Token name = p.expect_identifier(std::string("'") + names[i] + ":'");
      if (name.text != names[i]) p.fail(name, std::string("expected '") + names[i] + ":', found '" + name.text + "'");
      p.expect_symbol(":");
      const Token word = p.expect_identifier("a word label");
      if (word.text != kEmptyWord && !doc_.find_word(word.text)) p.fail(word, "undeclared word '" + word.text + "'");
      sides[i] = word.text;
    }
    p.expect_end();
    doc_.assemblies.push_back({label.text, sides[0], sides[1]});
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  // Keys contain '.' and '-', so expect lines are split on raw text.
  void parse_expect(std::string_view text, std::size_t line_no, std::size_t body) {
    const std::size_t eq = text.find('=', body);
    const std::size_t hash = text.find('#', body);
    if (eq == std::string_view::npos || (hash != std::string_view::npos && hash < eq))
      throw ParseError(line_no, body + 1, "expected '<key> = <value>'");
    const std::string_view key = trim(text.substr(body, eq - body));
    if (key.empty()) throw ParseError(line_no, body + 1, "empty expectation key");
    const std::string_view value = trim(text.substr(eq + 1, hash == std::string_view::npos ? std::string_view::npos : hash - eq - 1));
    if (value.empty()) throw ParseError(line_no, eq + 2, "empty expectation value");
    if (hash == std::string_view::npos) throw ParseError(line_no, text.size() + 1, "expectation needs a provenance tag '# [TAG: note]'");

    const std::string_view comment = trim(text.substr(hash + 1));
    const std::size_t colon = comment.find(':');
    if (comment.size() < 2 || comment.front() != '[' || comment.back() != ']' || colon == std::string_view::npos)
      throw ParseError(line_no, hash + 1, "provenance must look like '# [TAG: note]'");
    const std::string_view tag = trim(comment.substr(1, colon - 1));
    if (tag != "PAPER" && tag != "TRIVIAL" && tag != "DERIVED")
      throw ParseError(line_no, hash + 1, "provenance tag must be PAPER, TRIVIAL or DERIVED");
    const std::string_view note = trim(comment.substr(colon + 1, comment.size() - colon - 2));
    doc_.expectations.push_back({std::string(key), std::string(value), std::string(tag), std::string(note)});
  }

  Document doc_;
};

}  // namespace

Document parse(std::string_view text) { return DocumentParser().run(text); }

std::string serialize(const Document& doc) {
  std::string out;
  if (doc.surface)
    out += "surface g=" + std::to_string(doc.surface->genus()) + " m=" + std::to_string(doc.surface->boundary_components()) + "\n";
  for (const auto& c : doc.curves) out += "curve " + c.label + " = " + to_string(c.coordinates) + "\n";
  for (const auto& w : doc.words) {
    out += "word " + w.label + " =";
    if (w.letters.empty()) out += " empty";
    for (const auto& letter : w.letters) out += (letter.sign == Sign::negative ? " -" : " ") + letter.curve;
    out += "\n";
  }
  for (const auto& a : doc.assemblies) out += "assembly " + a.label + " = pos:" + a.positive + " neg:" + a.negative + "\n";
  for (const auto& e : doc.expectations) out += "expect " + e.key + " = " + e.value + " # [" + e.tag + ": " + e.note + "]\n";
  return out;
}

}  // namespace mcalc
