#pragma once

#include <random>

#include "chopf/cmatrix.hpp"
#include "chopf/colour.hpp"

namespace testutil {

using chopf::CMatrix;
using chopf::Colour;
using chopf::cscalar;

inline double uniform(std::mt19937_64& rng, double a, double b) {
  return a + (b - a) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline cscalar random_scalar(std::mt19937_64& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline CMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                             double scale = 1.0) {
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, scale);
  return m;
}

/// Colour component in the standard sampling band: modulus in [0.5, 2],
/// phase in (-3, 3).
inline cscalar random_colour_component(std::mt19937_64& rng) {
  return std::polar(uniform(rng, 0.5, 2.0), uniform(rng, -3.0, 3.0));
}

inline Colour random_colour(std::mt19937_64& rng, std::size_t arity) {
  std::vector<cscalar> comps(arity);
  for (auto& c : comps) c = random_colour_component(rng);
  return Colour(std::move(comps));
}

/// Deformation parameter exp(u+iv), |u| <= log_radius, |v| <= min(log_radius, 0.5).
inline cscalar random_param(std::mt19937_64& rng, double log_radius) {
  const double bound = std::min(log_radius, 0.5);
  return std::exp(cscalar(uniform(rng, -log_radius, log_radius), uniform(rng, -bound, bound)));
}

inline CMatrix diag(std::initializer_list<cscalar> entries) {
  CMatrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (const auto& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

}  // namespace testutil
