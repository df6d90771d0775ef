#include "pfista/tensor.hpp"

#include <cmath>

namespace pfista {

ComplexImage::ComplexImage(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0)
    throw Error("ComplexImage dimensions must be positive, got " + std::to_string(rows) + "x" +
                std::to_string(cols));
  data_.assign(static_cast<std::size_t>(rows) * cols, cplx{0.0, 0.0});
}

namespace {

template <typename Stack>
void check_coils(const Stack& s) {
  if (s.coils.empty()) throw Error("coil stack must contain at least one coil");
  for (const auto& c : s.coils)
    if (!c.same_shape(s.coils.front()))
      throw Error("all coils must share dimensions");
}

}  // namespace

MultiCoilImage::MultiCoilImage(std::vector<ComplexImage> c) : coils(std::move(c)) {
  check_coils(*this);
}

MultiCoilImage::MultiCoilImage(int ncoils, int rows, int cols) {
  if (ncoils < 1) throw Error("coil count must be >= 1");
  coils.assign(ncoils, ComplexImage(rows, cols));
}

MultiCoilKSpace::MultiCoilKSpace(std::vector<ComplexImage> c) : coils(std::move(c)) {
  check_coils(*this);
}

MultiCoilKSpace::MultiCoilKSpace(int ncoils, int rows, int cols) {
  if (ncoils < 1) throw Error("coil count must be >= 1");
  coils.assign(ncoils, ComplexImage(rows, cols));
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size())
    throw Error("inner_product length mismatch: " + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()));
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

cplx inner_product(const ComplexImage& a, const ComplexImage& b) {
  return inner_product(a.flat(), b.flat());
}

namespace {

template <typename Stack>
cplx stack_inner(const Stack& a, const Stack& b) {
  if (a.coil_count() != b.coil_count()) throw Error("inner_product coil count mismatch");
  cplx acc{0.0, 0.0};
  for (int j = 0; j < a.coil_count(); ++j)
    acc += inner_product(a.coils[j].flat(), b.coils[j].flat());
  return acc;
}

}  // namespace

cplx inner_product(const MultiCoilImage& a, const MultiCoilImage& b) { return stack_inner(a, b); }
cplx inner_product(const MultiCoilKSpace& a, const MultiCoilKSpace& b) { return stack_inner(a, b); }

double norm2(std::span<const cplx> a) {
  double acc = 0.0;
  for (const cplx& v : a) acc += std::norm(v);
  return std::sqrt(acc);
}

double norm2(const ComplexImage& a) { return norm2(a.flat()); }

double norm2(const MultiCoilImage& a) {
  double acc = 0.0;
  for (const auto& c : a.coils)
    for (const cplx& v : c.flat()) acc += std::norm(v);
  return std::sqrt(acc);
}

double norm2(const MultiCoilKSpace& a) {
  double acc = 0.0;
  for (const auto& c : a.coils)
    for (const cplx& v : c.flat()) acc += std::norm(v);
  return std::sqrt(acc);
}

bool all_finite(const ComplexImage& a) {
  for (const cplx& v : a.flat())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

bool all_finite(const MultiCoilImage& a) {
  for (const auto& c : a.coils)
    if (!all_finite(c)) return false;
  return true;
}

ComplexImage axpy(const ComplexImage& a, cplx s, const ComplexImage& b) {
  if (!a.same_shape(b)) throw Error("axpy shape mismatch");
  ComplexImage out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

MultiCoilImage axpy(const MultiCoilImage& a, cplx s, const MultiCoilImage& b) {
  if (a.coil_count() != b.coil_count()) throw Error("axpy coil count mismatch");
  MultiCoilImage out = a;
  for (int j = 0; j < out.coil_count(); ++j) out.coils[j] = axpy(a.coils[j], s, b.coils[j]);
  return out;
}

ComplexImage ssos(const MultiCoilImage& x) {
  ComplexImage out(x.rows(), x.cols());
  for (const auto& c : x.coils)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += std::norm(c[i]);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::sqrt(out[i].real());
  return out;
}

}  // namespace pfista
