// mcalc: monodromy factorization calculator.
//
//   mcalc <command> [target] [--input FILE] [--format text|machine] [--fixture NAME]
//
// Documents are read from --input or standard input. Exit status is 0 on
// success, 1 when a verification fails and 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcalc/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed Dehn twist factorizations: chiral splitting and 4-manifold invariants"};
  std::string command;
  std::string target;
  std::string input;
  std::string format = "text";
  std::string fixture;
  std::string fixture_dir = MCALC_FIXTURE_DIR;

  app.add_option("command", command, "action | split | invariants | openbook-h1 | fold | surgery | verify-paper")
      ->required();
  app.add_option("target", target, "word or assembly label (fixture name for verify-paper)");
  app.add_option("--input,-i", input, "document file; standard input when omitted");
  app.add_option("--format,-f", format, "output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--fixture", fixture, "fixture name for verify-paper, or 'all'");
  app.add_option("--fixture-dir", fixture_dir, "directory holding the fixture files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto out_format = format == "machine" ? mcalc::OutputFormat::machine : mcalc::OutputFormat::text;
  try {
    if (command == "verify-paper") {
      std::string name = fixture.empty() ? target : fixture;
      if (name.empty()) throw std::invalid_argument("verify-paper needs a fixture name");
      bool all_passed = true;
      if (name == "all") {
        for (auto f : mcalc::kPaperFixtures) {
          const auto result = mcalc::verify_paper(f, fixture_dir);
          std::cout << result.render(out_format);
          all_passed = all_passed && result.passed();
        }
      } else {
        const auto result = mcalc::verify_paper(name, fixture_dir);
        std::cout << result.render(out_format);
        all_passed = result.passed();
      }
      return all_passed ? 0 : 1;
    }
    if (target.empty()) throw std::invalid_argument(command + " needs a target label");
    const mcalc::Document doc = mcalc::parse(read_input(input));
    std::cout << mcalc::run(command, target, doc).render(out_format);
    return 0;
  } catch (const mcalc::ParseError& e) {
    std::cerr << "mcalc: " << (input.empty() ? "<stdin>" : input) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "mcalc: " << e.what() << '\n';
  }
  return 2;
}
