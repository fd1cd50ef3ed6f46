#include "whitham/dct.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

#include "whitham/errors.hpp"

namespace whitham {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Dct1::Dct1(std::size_t n) : n_(n) {
  if (n < 2) throw ShapeError("dct: size must be at least 2");
  buf_ = fftw_alloc_real(n_);
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_ = fftw_plan_r2r_1d(static_cast<int>(n_), buf_, buf_, FFTW_REDFT00,
                           FFTW_ESTIMATE);
}

Dct1::~Dct1() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  fftw_free(buf_);
}

void Dct1::apply(const std::vector<double>& in, std::vector<double>& out) const {
  if (in.size() != n_) throw ShapeError("dct: input length mismatch");
  std::memcpy(buf_, in.data(), n_ * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(plan_));
  out.resize(n_);
  std::memcpy(out.data(), buf_, n_ * sizeof(double));
}

}  // namespace whitham
