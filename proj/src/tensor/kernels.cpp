#include "qdeform/tensor/kernels.hpp"

#include <exception>

namespace qdeform::kernels {

namespace {

RatFunc dot(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, std::size_t i, std::size_t j,
            std::size_t k, std::size_t n) {
  RatFunc sum;
  for (std::size_t l = 0; l < k; ++l) {
    const RatFunc& x = a[i * k + l];
    if (x.is_zero()) continue;
    const RatFunc& y = b[l * n + j];
    if (y.is_zero()) continue;
    sum += x * y;
  }
  return sum;
}

// Rethrows the exception of the lowest failing index so parallel runs fail
// exactly like serial ones.
void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<RatFunc> multiply_serial(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                     std::size_t m, std::size_t k, std::size_t n) {
  std::vector<RatFunc> out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = dot(a, b, i, j, k, n);
  return out;
}

std::vector<RatFunc> multiply_parallel(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                       std::size_t m, std::size_t k, std::size_t n) {
  std::vector<RatFunc> out(m * n);
  const long total = static_cast<long>(m * n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / n;
    const std::size_t j = static_cast<std::size_t>(idx) % n;
    out[idx] = dot(a, b, i, j, k, n);
  }
  return out;
}

std::vector<RatFunc> map_serial(const std::vector<RatFunc>& x,
                                const std::function<RatFunc(const RatFunc&)>& f) {
  std::vector<RatFunc> out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back(f(e));
  return out;
}

std::vector<RatFunc> map_parallel(const std::vector<RatFunc>& x,
                                  const std::function<RatFunc(const RatFunc&)>& f) {
  std::vector<RatFunc> out(x.size());
  std::vector<std::exception_ptr> errors(x.size());
  const long total = static_cast<long>(x.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < total; ++i) {
    try {
      out[i] = f(x[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return out;
}

}  // namespace qdeform::kernels
