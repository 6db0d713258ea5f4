#pragma once

#include <vector>

#include "composita/xpoly.hpp"

namespace composita::kernels {

// Truncated Cauchy product: out[n] = sum_{i=0..n} f[i] * g[n-i] for
// n < min(f.size(), g.size()).
std::vector<XPoly> cauchy_product(const std::vector<XPoly>& f, const std::vector<XPoly>& g);

// Serial reference for cauchy_product, kept for tests and benchmarks.
std::vector<XPoly> cauchy_product_serial(const std::vector<XPoly>& f, const std::vector<XPoly>& g);

}  // namespace composita::kernels
