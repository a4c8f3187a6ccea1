#pragma once

#include <cstddef>
#include <cstdlib>
#include <new>
#include <vector>

namespace ogan::nn {

// 64-byte aligned storage keeps vectorized kernels on one code path no
// matter where the allocator placed the buffer, which keeps results
// bit-reproducible across reruns.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::size_t alignment = 64;

  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}

  T* allocate(std::size_t n) {
    void* p = std::aligned_alloc(alignment, ((n * sizeof(T) + alignment - 1) /
                                             alignment) * alignment);
    if (p == nullptr) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) { std::free(p); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
  template <class U>
  bool operator!=(const AlignedAllocator<U>&) const { return false; }
};

using AlignedBuffer = std::vector<double, AlignedAllocator<double>>;

// Dense row-major tensor. Rank 2 tensors are (batch, features); rank 3 are
// (batch, channels, length).
struct Tensor {
  std::vector<std::size_t> shape;
  AlignedBuffer data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s);

  std::size_t size() const { return data.size(); }
  std::size_t dim(std::size_t i) const { return shape[i]; }
  std::size_t rank() const { return shape.size(); }

  static Tensor zeros_like(const Tensor& other);
  void fill(double v);

  template <class Range>
  void assign(const Range& values) {
    data.assign(values.begin(), values.end());
  }
  std::vector<double> to_vector() const {
    return std::vector<double>(data.begin(), data.end());
  }
};

std::size_t shape_size(const std::vector<std::size_t>& shape);

}  // namespace ogan::nn
