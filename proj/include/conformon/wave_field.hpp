#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "conformon/numeric.hpp"

namespace conformon {

// Complex field sampled on a uniform grid over [s1_min, s1_max). The right
// endpoint is excluded because the grid is periodic; spacing() is the cell
// width L/n, not (s1_max - s1_min)/(n - 1).
struct WaveField {
  std::vector<std::complex<double>> values;
  double s1_min = 0.0;
  double s1_max = 0.0;

  WaveField() = default;

  WaveField(std::size_t n, double s1_min_, double s1_max_)
      : values(n), s1_min(s1_min_), s1_max(s1_max_) {
    validate();
  }

  std::size_t size() const { return values.size(); }
  double length() const { return s1_max - s1_min; }
  double spacing() const { return length() / static_cast<double>(size()); }
  double coord(std::size_t i) const {
    return s1_min + spacing() * static_cast<double>(i);
  }

  void validate() const {
    if (values.size() < 16 || !is_power_of_two(values.size()))
      throw std::invalid_argument("WaveField: grid size must be a power of two >= 16");
    if (!(s1_max > s1_min))
      throw std::invalid_argument("WaveField: need s1_max > s1_min");
  }
};

inline WaveField sample_field(std::size_t n, double s1_min, double s1_max,
                              const std::function<std::complex<double>(double)>& f) {
  WaveField field(n, s1_min, s1_max);
  for (std::size_t i = 0; i < n; ++i) field.values[i] = f(field.coord(i));
  return field;
}

}  // namespace conformon
