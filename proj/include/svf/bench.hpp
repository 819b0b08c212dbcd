#pragma once

#include <string>

namespace svf {

// CSV micro-benchmark over deterministic seeded inputs, one row per size:
// "size,method,seconds,max_bits". max_bits is the peak bit-size of any
// rational produced during the evaluation. InputError on unsupported
// quantity/method pairs or sizes beyond the contraction limits
// (triangular n <= 12; gdw n <= 12, m <= 8; trapezoid/efp n+m <= 12).
std::string bench_csv(const std::string& quantity, const std::string& method,
                      int size_lo, int size_hi);

}  // namespace svf
