#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <iterator>

namespace hopf {

// Largest supported ambient dimension n + 1 of the cover E x R.
inline constexpr int kMaxAmbient = 8;

// Fixed-capacity vector with contiguous storage; converts to std::span.
template <typename T, std::size_t N>
class SmallVec {
 public:
  using value_type = T;
  using iterator = T*;
  using const_iterator = const T*;

  SmallVec() = default;
  SmallVec(std::size_t count, T value) { assign(count, value); }
  SmallVec(std::initializer_list<T> init) { assign(init.begin(), init.end()); }
  template <std::input_iterator It>
  SmallVec(It first, It last) { assign(first, last); }

  void assign(std::size_t count, T value) {
    assert(count <= N);
    size_ = count;
    for (std::size_t i = 0; i < count; ++i) data_[i] = value;
  }
  template <std::input_iterator It>
  void assign(It first, It last) {
    size_ = 0;
    for (; first != last; ++first) push_back(*first);
  }
  void push_back(T value) {
    assert(size_ < N);
    data_[size_++] = value;
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  T* begin() { return data_.data(); }
  T* end() { return data_.data() + size_; }
  const T* begin() const { return data_.data(); }
  const T* end() const { return data_.data() + size_; }
  std::reverse_iterator<const T*> rbegin() const { return std::reverse_iterator<const T*>(end()); }
  std::reverse_iterator<const T*> rend() const { return std::reverse_iterator<const T*>(begin()); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  T& back() { return data_[size_ - 1]; }
  const T& back() const { return data_[size_ - 1]; }

  friend bool operator==(const SmallVec& a, const SmallVec& b) {
    if (a.size_ != b.size_) return false;
    for (std::size_t i = 0; i < a.size_; ++i) {
      if (a.data_[i] != b.data_[i]) return false;
    }
    return true;
  }

 private:
  std::array<T, N> data_{};
  std::size_t size_ = 0;
};

using Vec = SmallVec<double, kMaxAmbient>;

// Resolution of the deterministic grids used for means, sups and verification.
struct GridResolution {
  int sphere_pts = 16;     // azimuthal points; polar angles get half as many
  int theta_pts = 16;      // points on the circle factor R/Z
  int radial_layers = 8;   // radii per factor lambda on annuli
};

/// Global parameters of the Hopf manifold model: M = (E x R \ {0}) / <gamma>,
/// gamma(z, t) = (lambda z, lambda t), E = R^n.
struct HopfModel {
  int n = 2;
  double lambda = 0.5;
  double quad_tol = 1e-11;
  int fd_order = 4;
  double series_tol = 1e-10;
  double solve_tol = 1e-6;
  double flow_rtol = 1e-12;
  GridResolution grid{};

  // Throws ModelError when an invariant is broken.
  void validate() const;

  double log_lambda() const { return std::log(lambda); }
  // Length of one gamma-period along a closed orbit, ln(1/lambda).
  double period() const { return -std::log(lambda); }
};

}  // namespace hopf
