#include "ogan/nn/tensor.hpp"

#include <algorithm>

namespace ogan::nn {

std::size_t shape_size(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

Tensor::Tensor(std::vector<std::size_t> s)
    : shape(std::move(s)), data(shape_size(shape), 0.0) {}

Tensor Tensor::zeros_like(const Tensor& other) { return Tensor(other.shape); }

void Tensor::fill(double v) { std::fill(data.begin(), data.end(), v); }

}  // namespace ogan::nn
