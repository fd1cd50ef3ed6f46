#pragma once

#include <cstddef>
#include <vector>

namespace whitham {

/// DCT-I workspace (FFTW REDFT00, unnormalized). Plan creation is serialized
/// internally; an instance owns its buffer and must not be used from two
/// threads at once. Concurrent use of distinct instances is fine.
class Dct1 {
 public:
  explicit Dct1(std::size_t n);
  ~Dct1();
  Dct1(const Dct1&) = delete;
  Dct1& operator=(const Dct1&) = delete;

  std::size_t size() const { return n_; }

  /// out_k = in_0 + (-1)^k in_{n-1} + 2 sum_{j=1}^{n-2} in_j cos(pi j k/(n-1)).
  void apply(const std::vector<double>& in, std::vector<double>& out) const;

 private:
  std::size_t n_;
  void* plan_;
  double* buf_;
};

}  // namespace whitham
