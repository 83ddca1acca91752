#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace fpl {

/// ln(sum_i exp(args_i)), shifted by the maximum so large arguments never overflow.
inline double log_sum_exp(std::span<const double> args) {
    if (args.empty()) return -std::numeric_limits<double>::infinity();
    const double top = *std::max_element(args.begin(), args.end());
    if (!std::isfinite(top)) return top;
    double sum = 0.0;
    for (double a : args) sum += std::exp(a - top);
    return top + std::log(sum);
}

}  // namespace fpl
