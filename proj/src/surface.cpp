#include "mcalc/surface.hpp"

#include <stdexcept>
#include <utility>

#include "mcalc/linalg.hpp"

namespace mcalc {

Surface::Surface(unsigned genus, unsigned boundary_components) : genus_(genus), boundary_(boundary_components) {}

std::size_t Surface::rank() const noexcept {
  return boundary_ == 0 ? symplectic_rank() : symplectic_rank() + boundary_ - 1;
}

long Surface::euler_characteristic() const noexcept {
  return 2 - 2 * static_cast<long>(genus_) - static_cast<long>(boundary_);
}

std::string Surface::basis_label(std::size_t index) const {
  if (index >= rank()) throw std::out_of_range("Surface::basis_label");
  if (index < symplectic_rank()) return (index % 2 == 0 ? "a" : "b") + std::to_string(index / 2 + 1);
  return "d" + std::to_string(index - symplectic_rank() + 1);
}

IntMatrix Surface::pairing_matrix() const {
  IntMatrix j(rank(), rank());
  for (std::size_t i = 0; i < genus_; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Integer Surface::pair(std::span<const Integer> x, std::span<const Integer> y) const {
  if (x.size() != rank() || y.size() != rank()) throw std::invalid_argument("Surface::pair: rank mismatch");
  Integer total = 0;
  for (std::size_t i = 0; i < genus_; ++i) total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  return total;
}

std::string Surface::to_string() const {
  return "g=" + std::to_string(genus_) + " m=" + std::to_string(boundary_);
}

CurveClass::CurveClass(Surface surface, IntVector coordinates)
    : surface_(surface), coords_(std::move(coordinates)) {
  if (coords_.size() != surface_.rank())
    throw std::invalid_argument("curve class has " + std::to_string(coords_.size()) + " coordinates, surface rank is " +
                                std::to_string(surface_.rank()));
  const Integer g = content(coords_);
  if (g == 0) throw std::invalid_argument("curve class is zero");
  if (g != 1) throw std::invalid_argument("curve class " + mcalc::to_string(coords_) + " is not primitive");
}

bool CurveClass::is_radical() const {
  for (std::size_t i = 0; i < surface_.symplectic_rank(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

std::string CurveClass::to_string() const { return mcalc::to_string(coords_); }

Integer intersection_pairing(const CurveClass& x, const CurveClass& y) {
  if (!(x.surface() == y.surface())) throw std::invalid_argument("intersection_pairing: classes on different surfaces");
  return x.surface().pair(x.coordinates(), y.coordinates());
}

bool preserves_pairing(const Surface& surface, const IntMatrix& m) {
  if (m.rows() != surface.rank() || m.cols() != surface.rank()) return false;
  const IntMatrix j = surface.pairing_matrix();
  return m.transpose() * j * m == j;
}

ActionMatrix::ActionMatrix(Surface surface, IntMatrix matrix) : surface_(surface), matrix_(std::move(matrix)) {
  if (matrix_.rows() != surface_.rank() || matrix_.cols() != surface_.rank())
    throw std::invalid_argument("action matrix does not match surface rank");
  if (!preserves_pairing(surface_, matrix_)) throw std::invalid_argument("action matrix does not preserve the pairing");
  const Integer det = determinant(matrix_);
  if (det != 1 && det != -1) throw std::invalid_argument("action matrix is not unimodular");
}

ActionMatrix::ActionMatrix(Surface surface, IntMatrix matrix, Unchecked)
    : surface_(surface), matrix_(std::move(matrix)) {}

ActionMatrix ActionMatrix::identity(const Surface& surface) {
  return ActionMatrix(surface, IntMatrix::identity(surface.rank()), Unchecked{});
}

ActionMatrix ActionMatrix::then(const ActionMatrix& next) const {
  if (!(next.surface_ == surface_)) throw std::invalid_argument("ActionMatrix::then: surface mismatch");
  // A product of pairing-preserving unimodular matrices stays in the group.
  return ActionMatrix(surface_, next.matrix_ * matrix_, Unchecked{});
}

ActionMatrix ActionMatrix::inverse() const {
  return ActionMatrix(surface_, unimodular_inverse(matrix_), Unchecked{});
}

ActionMatrix twist_action(const CurveClass& c, Sign sign) {
  const Surface& s = c.surface();
  const std::size_t n = s.rank();
  const IntVector& v = c.coordinates();
  // Row vector x -> <x, c> is (J c)^T.
  const IntVector jc = s.pairing_matrix() * v;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (v[r] == 0) continue;
    for (std::size_t col = 0; col < n; ++col) m(r, col) += to_int(sign) * v[r] * jc[col];
  }
  return ActionMatrix(s, std::move(m), ActionMatrix::Unchecked{});
}

CurveClass map_curve(const ActionMatrix& m, const CurveClass& c) {
  if (!(m.surface() == c.surface())) throw std::invalid_argument("map_curve: surface mismatch");
  return CurveClass(c.surface(), m.matrix() * c.coordinates());
}

CappedSurface cap_boundary(const Surface& surface) {
  if (surface.is_closed()) throw std::invalid_argument("cap_boundary: surface is already closed");
  Surface capped(surface.genus(), 0);
  IntMatrix projection(capped.rank(), surface.rank());
  for (std::size_t i = 0; i < capped.rank(); ++i) projection(i, i) = 1;
  return {capped, std::move(projection)};
}

}  // namespace mcalc
