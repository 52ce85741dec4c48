#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qnevpt {

/// Dense rank-R tensor over a single mode dimension n (all axes equal),
/// row-major. Used for RDM/PDM/cumulant tensors over active orbitals.
template <int R>
class Tensor {
 public:
  Tensor() : n_(0) {}
  explicit Tensor(int n) : n_(n), data_(size_of(n), 0.0) {}

  int dim() const { return n_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  static std::size_t size_of(int n) {
    std::size_t s = 1;
    for (int i = 0; i < R; ++i) s *= static_cast<std::size_t>(n);
    return s;
  }

  template <typename... Idx>
  double& operator()(Idx... idx) {
    static_assert(sizeof...(Idx) == R, "tensor rank mismatch");
    return data_[flat(std::array<int, R>{static_cast<int>(idx)...})];
  }
  template <typename... Idx>
  double operator()(Idx... idx) const {
    static_assert(sizeof...(Idx) == R, "tensor rank mismatch");
    return data_[flat(std::array<int, R>{static_cast<int>(idx)...})];
  }

  double& at(const std::array<int, R>& idx) { return data_[flat(idx)]; }
  double at(const std::array<int, R>& idx) const { return data_[flat(idx)]; }

  std::size_t flat(const std::array<int, R>& idx) const {
    std::size_t f = 0;
    for (int i = 0; i < R; ++i) f = f * n_ + static_cast<std::size_t>(idx[i]);
    return f;
  }

  void unflatten(std::size_t f, std::array<int, R>& idx) const {
    for (int i = R - 1; i >= 0; --i) {
      idx[i] = static_cast<int>(f % n_);
      f /= n_;
    }
  }

  double max_abs_diff(const Tensor<R>& o) const {
    if (o.n_ != n_) throw std::invalid_argument("tensor dim mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      m = std::max(m, std::abs(data_[i] - o.data_[i]));
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  int n_;
  std::vector<double> data_;
};

using Tensor2 = Tensor<2>;
using Tensor4 = Tensor<4>;
using Tensor6 = Tensor<6>;
using Tensor8 = Tensor<8>;

}  // namespace qnevpt
