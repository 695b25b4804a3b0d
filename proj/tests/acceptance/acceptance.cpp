// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mcalc/commands.hpp"
#include "mcalc/invariants.hpp"
#include "support/generators.hpp"

using namespace mcalc;

namespace {

constexpr int kTrials = 250;

// Collects failed conditions with a short reason.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    " + f;
    if (failed_ > failures_.size()) out += "\n    ... " + std::to_string(failed_ - failures_.size()) + " more";
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

const char* kTorus =
    "surface g=1 m=1\n"
    "curve a = [1,0]\n"
    "curve b = [0,1]\n";

bool e8_class(const InvariantReport& r, long expected_signature) {
  return r.b2 == 8u && r.even() == true && r.definite() == true && r.determinant() &&
         abs(*r.determinant()) == 1 && r.signature == expected_signature;
}

void e8_pipeline(Check& c) {
  const Document doc = parse(std::string(kTorus) +
                             "word mu1 = -a -b b a b a b a b a -a -b -a -b -a -b -a -b\n"
                             "word mu2 = b a\n");
  const Factorization mu1 = doc.factorization("mu1");
  const Factorization mu2 = doc.factorization("mu2");
  c.require(mu1.size() == 18, "mu1 has 18 letters");
  c.require(mu2.size() == 2, "mu2 has 2 letters");
  const Factorization mu = mu1.concatenated(mu2);
  c.require(word_action(mu).is_identity(), "mu1 mu2 acts trivially");

  const ChiralSplit split = chiral_split(mu);
  c.require(split.positive.size() == 10 && split.positive.is_pure(Sign::positive), "10 positive letters");
  c.require(split.negative.size() == 10 && split.negative.is_pure(Sign::negative), "10 negative letters");
  c.require(verify_split(mu, split), "certificate replays");

  const InvariantReport p = fibration_report(FibrationOverDisk(split.positive));
  c.require(p.euler == 9, "positive chi = 9, got " + std::to_string(p.euler));
  c.require(p.h1 == IntVector{}, "positive H1 = 0");
  c.require(std::abs(p.signature) == 8, "positive |sigma| = 8");
  c.require(e8_class(p, p.signature), "positive form: rank 8, even, unimodular, definite");

  const InvariantReport n = fibration_report(FibrationOverDisk(split.negative));
  c.require(n.euler == 9 && n.h1 == IntVector{}, "negative chi = 9, H1 = 0");
  c.require(e8_class(n, -p.signature), "negative form mirrors the positive one");
}

void closed_assembly(Check& c) {
  const Document doc = parse(std::string(kTorus) + "word mu = -a -b b a b a b a b a (-a -b)^4 b a\n");
  const InvariantReport x = folded_invariants(FoldedAssembly::from_split(chiral_split(doc.factorization("mu"))));
  c.require(x.euler == 18, "chi = 18, got " + std::to_string(x.euler));
  c.require(x.signature == 0, "sigma = 0, got " + std::to_string(x.signature));
  c.require(x.h1 == IntVector{}, "H1 = 0");
}

void fold_three_manifold(Check& c) {
  const Document doc = parse(std::string(kTorus) + "word e8 = (b a)^5\n");
  const auto h1 = openbook_first_homology(OpenBook::bounding(doc.factorization("e8")));
  c.require(h1.empty(), "H1 of the open book is " + describe_group(h1));
}

void surgery_bookkeeping(Check& c) {
  const Document doc = parse(std::string(kTorus) +
                             "word small = -a -b b a\n"
                             "word mu = -a -b b a b a b a b a (-a -b)^4 b a\n");
  const FoldedAssembly fa = FoldedAssembly::from_split(chiral_split(doc.factorization("small")));
  const InvariantReport x = folded_invariants(fa);
  c.require(x.euler == 2 && x.signature == 0 && x.h1 == IntVector{}, "S^4 model: chi 2, sigma 0, H1 0");
  const InvariantReport y = binding_surgery(x, SurgeryDirection::circle_to_sphere, binding_class(fa));
  c.require(y.euler == 4, "surgery chi = 4, got " + std::to_string(y.euler));
  c.require(y.signature == 0, "surgery sigma = 0");

  const FoldedAssembly big = FoldedAssembly::from_split(chiral_split(doc.factorization("mu")));
  const InvariantReport xb = folded_invariants(big);
  const InvariantReport yb = binding_surgery(xb, SurgeryDirection::circle_to_sphere, binding_class(big));
  c.require(xb.euler == 18 && yb.euler == 20, "chi 18 -> 20");
}

void micro_fixtures(Check& c) {
  const Document doc = parse(std::string(kTorus) + "word aa = a a\nword ab = a -a\n");
  c.require(intersection_form(FibrationOverDisk(doc.factorization("aa"))).gram == IntMatrix{{-2}}, "t_a t_a gives [[-2]]");
  c.require(intersection_form(FibrationOverDisk(doc.factorization("ab"))).gram == IntMatrix{{0}}, "t_a t_a^-1 gives [[0]]");
  const FibrationOverDisk disk{Factorization(Surface(0, 1))};
  const InvariantReport s4 = folded_invariants(FoldedAssembly(disk, disk));
  c.require(s4.euler == 2 && s4.signature == 0 && s4.h1 == IntVector{}, "empty word on a disk: chi 2, sigma 0, H1 0");
}

void hurwitz_preserves_action(Check& c) {
  testing::Engine rng(0xac61);
  for (int t = 0; t < kTrials; ++t) {
    const Surface s = testing::random_surface(rng);
    const Factorization w = testing::random_word(rng, s, 12);
    if (w.size() < 2) {
      --t;
      continue;
    }
    const auto i = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(w.size()) - 2));
    const ActionMatrix before = word_action(w);
    c.require(word_action(hurwitz_left(w, i)) == before, "left move at " + std::to_string(i) + " on " + w.to_string());
    c.require(word_action(hurwitz_right(w, i)) == before, "right move at " + std::to_string(i) + " on " + w.to_string());
  }
}

void actions_are_symplectic(Check& c) {
  testing::Engine rng(0xac62);
  for (int t = 0; t < kTrials; ++t) {
    const Surface s = testing::random_surface(rng);
    const Factorization w = testing::random_word(rng, s, 12);
    const ActionMatrix m = word_action(w);
    c.require(preserves_pairing(s, m.matrix()), "pairing on " + w.to_string());
    c.require(abs(determinant(m.matrix())) == 1, "det on " + w.to_string());
  }
}

void split_is_sound(Check& c) {
  testing::Engine rng(0xac63);
  for (int t = 0; t < kTrials; ++t) {
    const Factorization w = testing::random_word(rng, testing::random_surface(rng), 12);
    const ChiralSplit split = chiral_split(w);
    const bool ok = split.positive.is_pure(Sign::positive) && split.negative.is_pure(Sign::negative) &&
                    word_action(split.combined()) == word_action(w) &&
                    apply_moves(w, split.certificate) == split.combined() && verify_split(w, split);
    c.require(ok, "split of " + w.to_string());
  }
}

void doubles_have_zero_signature(Check& c) {
  testing::Engine rng(0xac64);
  for (int t = 0; t < kTrials; ++t) {
    const Factorization p = testing::random_pure_word(rng, testing::random_surface(rng, 1), Sign::positive, 10);
    const FibrationOverDisk pos(p);
    const FibrationOverDisk neg(reverse_inverse(p));
    const bool matched = matches(pos, neg).matches;
    c.require(matched, "sides of the double of " + p.to_string() + " match");
    if (matched) c.require(folded_invariants(FoldedAssembly(pos, neg)).signature == 0, "sigma of double of " + p.to_string());
  }
}

void smith_is_unimodular_and_diagonal(Check& c) {
  testing::Engine rng(0xac65);
  for (int t = 0; t < kTrials; ++t) {
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const IntMatrix a = testing::random_matrix(rng, rows, cols);
    const SmithDecomposition snf = smith_normal_form(a);
    const IntMatrix d = snf.left * a * snf.right;
    bool diagonal = true;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t col = 0; col < cols; ++col) {
        const Integer expected = (r == col && r < snf.invariant_factors.size()) ? snf.invariant_factors[r] : Integer(0);
        diagonal = diagonal && d(r, col) == expected;
      }
    for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i) {
      const Integer& x = snf.invariant_factors[i];
      const Integer& y = snf.invariant_factors[i + 1];
      diagonal = diagonal && x >= 0 && (x == 0 ? y == 0 : y % x == 0);
    }
    c.require(diagonal, "SNF of " + a.to_string());
    c.require(abs(determinant(snf.left)) == 1 && abs(determinant(snf.right)) == 1, "unimodular transforms for " + a.to_string());
  }
}

void signature_congruence_invariant(Check& c) {
  testing::Engine rng(0xac66);
  for (int t = 0; t < kTrials; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    IntMatrix q = testing::random_matrix(rng, n, n, 4);
    q = q + q.transpose();
    const IntMatrix u = testing::random_unimodular(rng, n);
    c.require(signature_symmetric(u.transpose() * q * u) == signature_symmetric(q), "congruence of " + q.to_string());
  }
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "E8 splitting pipeline: 10/10 split, chi 9, H1 0, rank 8 even unimodular definite, mirrored sign",
       e8_pipeline},
      {"AC2", "closed assembly: chi 18, sigma 0, H1 0", closed_assembly},
      {"AC3", "open book of (t_b t_a)^5 has trivial H1", fold_three_manifold},
      {"AC4", "surgery bookkeeping: S^4 model 2 -> 4, and 18 -> 20", surgery_bookkeeping},
      {"AC5", "micro-fixtures: [[-2]], [[0]], empty disk word", micro_fixtures},
      {"AC6a", "Hurwitz moves preserve the action (" + std::to_string(kTrials) + " trials)", hurwitz_preserves_action},
      {"AC6b", "actions preserve the pairing with det +-1 (" + std::to_string(kTrials) + " trials)",
       actions_are_symplectic},
      {"AC6c", "chiral split sorts, preserves the action and replays (" + std::to_string(kTrials) + " trials)",
       split_is_sound},
      {"AC6d", "reverse-inverse doubles match and have sigma 0 (" + std::to_string(kTrials) + " trials)",
       doubles_have_zero_signature},
      {"AC6e", "SNF transforms are unimodular and diagonalize (" + std::to_string(kTrials) + " trials)",
       smith_is_unimodular_and_diagonal},
      {"AC6f", "signature is a congruence invariant (" + std::to_string(kTrials) + " trials)",
       signature_congruence_invariant},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.passed() ? "[PASS] " : "[FAIL] ") << criterion.id << "  " << criterion.title
              << (check.passed() ? "" : check.summary()) << '\n';
    if (!check.passed()) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
