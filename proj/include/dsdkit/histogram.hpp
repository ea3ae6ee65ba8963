#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dsdkit {

// Equal-width binning over [min, max]; bins are right-open except the
// last, so every value lands exactly once. A single-valued input widens
// to one bin over [v - 0.5, v + 0.5].
struct Histogram {
  std::vector<double> bin_edges;  // counts.size() + 1 ascending edges
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : counts) t += c;
    return t;
  }
};

Histogram histogram(std::span<const double> values, std::size_t bins);

}  // namespace dsdkit
