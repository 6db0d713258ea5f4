#include "composita/kernels.hpp"

#include <algorithm>
#include <cstddef>

namespace composita::kernels {

namespace {

XPoly cauchy_term(const std::vector<XPoly>& f, const std::vector<XPoly>& g, std::size_t n) {
    XPoly acc;
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i].is_zero() || g[n - i].is_zero()) continue;
        acc += f[i] * g[n - i];
    }
    return acc;
}

}  // namespace

std::vector<XPoly> cauchy_product(const std::vector<XPoly>& f, const std::vector<XPoly>& g) {
    const auto len = static_cast<long>(std::min(f.size(), g.size()));
    std::vector<XPoly> out(static_cast<std::size_t>(len));
    // Later coefficients have longer sums.
#pragma omp parallel for schedule(dynamic, 1) if (len > 8)
    for (long n = 0; n < len; ++n) out[static_cast<std::size_t>(n)] = cauchy_term(f, g, static_cast<std::size_t>(n));
    return out;
}

std::vector<XPoly> cauchy_product_serial(const std::vector<XPoly>& f, const std::vector<XPoly>& g) {
    const std::size_t len = std::min(f.size(), g.size());
    std::vector<XPoly> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; i + j < len; ++j) out[i + j] += f[i] * g[j];
    }
    return out;
}

}  // namespace composita::kernels
