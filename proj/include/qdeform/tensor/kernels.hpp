#pragma once

#include <functional>
#include <vector>

#include "qdeform/symexpr/ratfunc.hpp"

namespace qdeform::kernels {

/// Row-major dense product of an (m x k) and a (k x n) block of entries.
/// The serial variants are the reference implementations; the parallel
/// variants split rows (resp. entries) across OpenMP threads and must agree
/// with them exactly.
std::vector<RatFunc> multiply_serial(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                     std::size_t m, std::size_t k, std::size_t n);
std::vector<RatFunc> multiply_parallel(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                       std::size_t m, std::size_t k, std::size_t n);

std::vector<RatFunc> map_serial(const std::vector<RatFunc>& x,
                                const std::function<RatFunc(const RatFunc&)>& f);
std::vector<RatFunc> map_parallel(const std::vector<RatFunc>& x,
                                  const std::function<RatFunc(const RatFunc&)>& f);

/// Products with at least this many output entries go parallel.
inline constexpr std::size_t kParallelThreshold = 64;

}  // namespace qdeform::kernels
