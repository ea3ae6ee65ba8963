#include "dsdkit/histogram.hpp"

#include <algorithm>

#include "dsdkit/error.hpp"

namespace dsdkit {

Histogram histogram(std::span<const double> values, std::size_t bins) {
  if (bins < 1) fail(errc::invalid_parameter, "histogram needs bins >= 1");
  if (values.empty()) fail(errc::invalid_parameter, "histogram needs at least one value");

  double lo = values[0], hi = values[0];
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  Histogram h;
  if (lo == hi) {
    h.bin_edges = {lo - 0.5, lo + 0.5};
    h.counts = {values.size()};
    return h;
  }

  const double width = (hi - lo) / static_cast<double>(bins);
  h.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i)
    h.bin_edges[i] = lo + width * static_cast<double>(i);
  h.bin_edges[bins] = hi;  // pin the last edge against rounding drift

  h.counts.assign(bins, 0);
  for (double v : values) {
    auto idx = static_cast<std::size_t>((v - lo) / width);
    if (idx >= bins) idx = bins - 1;  // max value closes the last bin
    h.counts[idx] += 1;
  }
  return h;
}

}  // namespace dsdkit
