#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pfista/tensor.hpp"

namespace pfista {

/// Sidecar metadata for the raw binary payload. dims are outer-to-inner
/// (coil-major for stacks), dtype is "c128" on save; "c64" is accepted
/// on load and widened.
struct ArrayHeader {
  std::vector<int> dims;
  std::string dtype = "c128";
  std::string order = "row-major";
  std::string role;
};

using LoadedArray = std::variant<ComplexImage, MultiCoilImage, MultiCoilKSpace>;

/// Writes <stem>.json (header) and <stem>.bin (little-endian interleaved
/// re,im double pairs, row-major, coil-major outermost).
void save_array(const std::string& stem, const ComplexImage& img, const std::string& role = "image");
void save_array(const std::string& stem, const MultiCoilImage& img, const std::string& role = "image");
void save_array(const std::string& stem, const MultiCoilKSpace& k, const std::string& role = "kspace");

/// Exact inverse of save_array. Rank-2 payloads load as ComplexImage;
/// rank-3 payloads load as MultiCoilKSpace when the role mentions
/// "kspace" or "mask", otherwise as MultiCoilImage.
LoadedArray load_array(const std::string& stem);

ComplexImage load_image(const std::string& stem);
MultiCoilImage load_multicoil_image(const std::string& stem);
MultiCoilKSpace load_multicoil_kspace(const std::string& stem);

ArrayHeader load_header(const std::string& stem);

}  // namespace pfista
