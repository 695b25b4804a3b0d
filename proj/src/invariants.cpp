#include "mcalc/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mcalc {

FibrationOverDisk::FibrationOverDisk(Factorization word) : word_(std::move(word)) {}

long long euler_characteristic(const FibrationOverDisk& f) {
  return f.fiber().euler_characteristic() + static_cast<long long>(f.word().size());
}

IntVector fibration_first_homology(const FibrationOverDisk& f) { return cokernel_invariants(f.word().cycle_matrix()); }

IntMatrix linking_matrix(const Factorization& word) {
  const std::size_t k = word.size();
  IntMatrix l(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    l(i, i) = -to_int(word[i].sign);
    for (std::size_t j = i + 1; j < k; ++j) l(i, j) = intersection_pairing(word[i].curve, word[j].curve);
  }
  return l;
}

bool IntersectionForm::even() const {
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (!mpz_even_p(gram(i, i).get_mpz_t())) return false;
  return true;
}

IntersectionForm intersection_form(const FibrationOverDisk& f) {
  const Factorization& word = f.word();
  const std::vector<IntVector> basis = kernel_basis(word.cycle_matrix());
  const IntMatrix k = IntMatrix::from_columns(word.size(), basis);
  IntersectionForm form;
  form.b2 = basis.size();
  form.gram = k.transpose() * linking_matrix(word) * k;
  if (!form.gram.is_symmetric()) throw std::logic_error("intersection form is not symmetric on the kernel");
  form.inertia = signature_symmetric(form.gram);
  form.determinant = determinant(form.gram);
  return form;
}

OpenBook::OpenBook(ActionMatrix action, IntMatrix variation)
    : action_(std::move(action)), variation_(std::move(variation)) {}

OpenBook OpenBook::bounding(const Factorization& word) {
  const Surface& page = word.surface();
  if (page.is_closed()) throw std::invalid_argument("open book page must have boundary");
  ActionMatrix action = ActionMatrix::identity(page);
  IntMatrix variation(page.rank(), page.rank());
  for (const auto& letter : word.letters()) {
    const ActionMatrix twist = twist_action(letter.curve, letter.sign);
    // var(T o phi) = T_* var(phi) + var(T)
    variation = twist.matrix() * variation;
    const IntVector& c = letter.curve.coordinates();
    for (std::size_t r = 0; r < c.size(); ++r)
      for (std::size_t s = 0; s < c.size(); ++s) variation(r, s) += to_int(letter.sign) * c[r] * c[s];
    action = action.then(twist);
  }
  return OpenBook(std::move(action), std::move(variation));
}

OpenBook OpenBook::from_action(const ActionMatrix& action) {
  const Surface& page = action.surface();
  if (page.is_closed()) throw std::invalid_argument("open book page must have boundary");
  if (page.boundary_components() != 1)
    throw std::invalid_argument("the action alone does not determine the open book for a disconnected binding");
  // With one boundary component J is invertible and var = (M - I) J.
  const IntMatrix identity = IntMatrix::identity(page.rank());
  return OpenBook(action, (action.matrix() - identity) * page.pairing_matrix());
}

IntVector openbook_first_homology(const OpenBook& ob) { return cokernel_invariants(ob.variation()); }

MatchResult matches(const FibrationOverDisk& pos, const FibrationOverDisk& neg) {
  if (!(pos.fiber() == neg.fiber())) throw std::invalid_argument("matches: fibrations have different fibers");
  const ActionMatrix total = word_action(pos.word()).then(word_action(neg.word()));
  MatchResult result;
  result.defect = total.matrix() - IntMatrix::identity(pos.fiber().rank());
  result.matches = result.defect.is_zero();
  return result;
}

FoldedAssembly::FoldedAssembly(FibrationOverDisk positive_side, FibrationOverDisk negative_side)
    : positive_(std::move(positive_side)), negative_(std::move(negative_side)) {
  if (!(positive_.fiber() == negative_.fiber())) throw std::invalid_argument("folded assembly sides have different fibers");
  if (!positive_.word().is_pure(Sign::positive)) throw std::invalid_argument("positive side has a negative letter");
  if (!negative_.word().is_pure(Sign::negative)) throw std::invalid_argument("negative side has a positive letter");
  if (!matches(positive_, negative_).matches)
    throw std::invalid_argument("folded assembly sides do not induce the same open book");
}

FoldedAssembly FoldedAssembly::from_split(const ChiralSplit& split) {
  return FoldedAssembly(FibrationOverDisk(split.positive), FibrationOverDisk(split.negative));
}

namespace {

// H_1(H) -> H_1(X+) + H_1(X-), x -> (x, -x), with each side presented as
// the page lattice modulo its own vanishing cycles.
IntMatrix mayer_vietoris_relations(const FoldedAssembly& fa) {
  const std::size_t r = fa.page().rank();
  const IntMatrix pos = fa.positive_side().word().cycle_matrix();
  const IntMatrix neg = fa.negative_side().word().cycle_matrix();
  IntMatrix rel(2 * r, pos.cols() + neg.cols() + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < pos.cols(); ++c) rel(i, c) = pos(i, c);
    for (std::size_t c = 0; c < neg.cols(); ++c) rel(r + i, pos.cols() + c) = neg(i, c);
    rel(i, pos.cols() + neg.cols() + i) = 1;
    rel(r + i, pos.cols() + neg.cols() + i) = -1;
  }
  return rel;
}

std::size_t free_rank(std::span<const Integer> factors) {
  return static_cast<std::size_t>(std::count(factors.begin(), factors.end(), Integer(0)));
}

}  // namespace

std::optional<bool> InvariantReport::even() const {
  if (!gram) return std::nullopt;
  for (std::size_t i = 0; i < gram->rows(); ++i)
    if (!mpz_even_p((*gram)(i, i).get_mpz_t())) return false;
  return true;
}

std::optional<bool> InvariantReport::definite() const {
  if (!gram) return std::nullopt;
  const Inertia inertia = signature_symmetric(*gram);
  return inertia.zero == 0 && (inertia.positive == 0 || inertia.negative == 0);
}

std::optional<Integer> InvariantReport::determinant() const {
  if (!gram) return std::nullopt;
  return mcalc::determinant(*gram);
}

std::string describe_group(std::span<const Integer> factors) {
  std::string out;
  for (const auto& d : factors) {
    if (d == 0) continue;
    if (!out.empty()) out += " + ";
    out += "Z/" + to_decimal(d);
  }
  const std::size_t free = free_rank(factors);
  if (free > 0) {
    if (!out.empty()) out += " + ";
    out += free == 1 ? "Z" : "Z^" + std::to_string(free);
  }
  return out.empty() ? "0" : out;
}

InvariantReport fibration_report(const FibrationOverDisk& f) {
  const IntersectionForm form = intersection_form(f);
  InvariantReport report;
  report.euler = euler_characteristic(f);
  report.h1 = fibration_first_homology(f);
  report.b2 = form.b2;
  report.gram = form.gram;
  report.signature = form.signature();
  return report;
}

InvariantReport folded_invariants(const FoldedAssembly& fa) {
  const FibrationOverDisk& pos = fa.positive_side();
  const FibrationOverDisk& neg = fa.negative_side();
  InvariantReport report;
  report.closed = true;
  // The fold is a closed 3-manifold, so chi adds; sigma adds by Novikov.
  report.euler = euler_characteristic(pos) + euler_characteristic(neg);
  report.signature = intersection_form(pos).signature() + intersection_form(neg).signature();
  report.h1 = cokernel_invariants(mayer_vietoris_relations(fa));
  // Closed oriented 4-manifold: chi = 2 - 2 b1 + b2.
  report.b2 = static_cast<std::size_t>(report.euler - 2 + 2 * static_cast<long long>(free_rank(*report.h1)));
  return report;
}

IntVector binding_class(const FoldedAssembly& fa) {
  const Surface& page = fa.page();
  const std::size_t r = page.rank();
  IntVector x(2 * r, Integer(0));
  // The last boundary component is -(d_1 + ... + d_(m-1)); zero for m = 1.
  for (std::size_t j = page.symplectic_rank(); j < r; ++j) x[j] = -1;
  return cokernel_presentation(mayer_vietoris_relations(fa)).coordinates(x);
}

InvariantReport binding_surgery(const InvariantReport& report, SurgeryDirection direction,
                                std::optional<IntVector> curve_class) {
  InvariantReport out = report;
  out.framing_blind = true;
  out.gram.reset();
  if (direction == SurgeryDirection::sphere_to_circle) {
    out.euler = report.euler - 2;
    out.h1.reset();
    out.b2.reset();
    return out;
  }
  out.euler = report.euler + 2;
  if (!report.h1 || !curve_class) {
    out.h1.reset();
    out.b2.reset();
    return out;
  }
  const IntVector& factors = *report.h1;
  if (curve_class->size() != factors.size())
    throw std::invalid_argument("surgery curve class does not match the H_1 presentation");
  IntMatrix relations(factors.size(), factors.size() + 1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    relations(i, i) = factors[i];
    relations(i, factors.size()) = (*curve_class)[i];
  }
  out.h1 = cokernel_invariants(relations);
  if (report.closed)
    out.b2 = static_cast<std::size_t>(out.euler - 2 + 2 * static_cast<long long>(free_rank(*out.h1)));
  else
    out.b2.reset();
  return out;
}

}  // namespace mcalc
