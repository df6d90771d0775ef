#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfista {

using cplx = std::complex<double>;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a file or its sidecar violates the on-disk format contract.
class FormatError : public Error {
public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

/// Dense row-major complex image (or k-space grid) in double precision.
class ComplexImage {
public:
  ComplexImage() = default;
  ComplexImage(int rows, int cols);

  static ComplexImage zeros(int rows, int cols) { return ComplexImage(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  cplx& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }

  std::span<cplx> flat() { return data_; }
  std::span<const cplx> flat() const { return data_; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  bool same_shape(const ComplexImage& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

private:
  std::vector<cplx> data_;
  int rows_ = 0;
  int cols_ = 0;
};

/// Ordered coil stack of image-domain data; all coils share dimensions.
struct MultiCoilImage {
  std::vector<ComplexImage> coils;

  MultiCoilImage() = default;
  explicit MultiCoilImage(std::vector<ComplexImage> c);
  MultiCoilImage(int ncoils, int rows, int cols);

  int coil_count() const { return static_cast<int>(coils.size()); }
  int rows() const { return coils.empty() ? 0 : coils.front().rows(); }
  int cols() const { return coils.empty() ? 0 : coils.front().cols(); }
};

/// Ordered coil stack of k-space grids (same layout as MultiCoilImage,
/// distinct type so operator signatures document which domain they expect).
struct MultiCoilKSpace {
  std::vector<ComplexImage> coils;

  MultiCoilKSpace() = default;
  explicit MultiCoilKSpace(std::vector<ComplexImage> c);
  MultiCoilKSpace(int ncoils, int rows, int cols);

  int coil_count() const { return static_cast<int>(coils.size()); }
  int rows() const { return coils.empty() ? 0 : coils.front().rows(); }
  int cols() const { return coils.empty() ? 0 : coils.front().cols(); }
};

/// sum_i conj(a_i) * b_i. Lengths must agree.
cplx inner_product(std::span<const cplx> a, std::span<const cplx> b);

cplx inner_product(const ComplexImage& a, const ComplexImage& b);
cplx inner_product(const MultiCoilImage& a, const MultiCoilImage& b);
cplx inner_product(const MultiCoilKSpace& a, const MultiCoilKSpace& b);

double norm2(std::span<const cplx> a);
double norm2(const ComplexImage& a);
double norm2(const MultiCoilImage& a);
double norm2(const MultiCoilKSpace& a);

bool all_finite(const ComplexImage& a);
bool all_finite(const MultiCoilImage& a);

/// out = a + s * b, elementwise.
ComplexImage axpy(const ComplexImage& a, cplx s, const ComplexImage& b);
MultiCoilImage axpy(const MultiCoilImage& a, cplx s, const MultiCoilImage& b);

/// Square root of the coil-wise sum of squared magnitudes (real-valued image).
ComplexImage ssos(const MultiCoilImage& x);

}  // namespace pfista
