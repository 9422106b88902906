// Copyright 2026 The craneplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <type_traits>

namespace craneplan {

// Forward-mode dual number carrying N directional derivatives.
//
// Nesting works: Dual<Dual<double, N>, N> seeded with the same unit directions
// on both levels yields values, gradients and Hessians in one evaluation.
//
//   using D = Dual<double, 2>;
//   D x = D::Variable(1.5, 0), y = D::Variable(0.5, 1);
//   D f = x * sin(y);   // f.derivative(0) == sin(0.5), f.derivative(1) == 1.5 cos(0.5)
template <typename T, int N>
class Dual {
 public:
  using value_type = T;
  static constexpr int kSize = N;

  constexpr Dual() : value_(0.0), grad_{} {}
  constexpr Dual(const T& value) : value_(value), grad_{} {}  // NOLINT: implicit
  template <typename S>
    requires std::is_arithmetic_v<S> && (!std::is_same_v<S, T>)
  constexpr Dual(S value) : value_(T(value)), grad_{} {}  // NOLINT: implicit

  static Dual Variable(const T& value, int index) {
    Dual d(value);
    d.grad_[index] = T(1.0);
    return d;
  }

  const T& value() const { return value_; }
  T& value() { return value_; }
  const T& derivative(int i) const { return grad_[i]; }
  T& derivative(int i) { return grad_[i]; }

  Dual operator-() const {
    Dual r(-value_);
    for (int i = 0; i < N; ++i) r.grad_[i] = -grad_[i];
    return r;
  }

  Dual& operator+=(const Dual& o) {
    value_ += o.value_;
    for (int i = 0; i < N; ++i) grad_[i] += o.grad_[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value_ -= o.value_;
    for (int i = 0; i < N; ++i) grad_[i] -= o.grad_[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }

  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.value_ * b.value_);
    for (int i = 0; i < N; ++i) r.grad_[i] = a.grad_[i] * b.value_ + a.value_ * b.grad_[i];
    return r;
  }

  friend Dual operator/(const Dual& a, const Dual& b) {
    const T inv = T(1.0) / b.value_;
    const T q = a.value_ * inv;
    Dual r(q);
    for (int i = 0; i < N; ++i) r.grad_[i] = (a.grad_[i] - q * b.grad_[i]) * inv;
    return r;
  }

  friend Dual sin(const Dual& a) {
    using std::cos;
    using std::sin;
    return a.Chain(sin(a.value_), cos(a.value_));
  }
  friend Dual cos(const Dual& a) {
    using std::cos;
    using std::sin;
    return a.Chain(cos(a.value_), -sin(a.value_));
  }
  friend Dual sqrt(const Dual& a) {
    using std::sqrt;
    const T s = sqrt(a.value_);
    return a.Chain(s, T(0.5) / s);
  }

 private:
  Dual Chain(const T& value, const T& slope) const {
    Dual r(value);
    for (int i = 0; i < N; ++i) r.grad_[i] = slope * grad_[i];
    return r;
  }

  T value_;
  std::array<T, N> grad_;
};

// Innermost floating-point value of a possibly nested dual.
inline double ScalarValue(double x) { return x; }
template <typename T, int N>
double ScalarValue(const Dual<T, N>& x) {
  return ScalarValue(x.value());
}

// Value + gradient + Hessian scalar: the outer and inner levels share seeds.
template <int N>
using HessianDual = Dual<Dual<double, N>, N>;

template <int N>
HessianDual<N> SeedHessianVariable(double value, int index) {
  using Inner = Dual<double, N>;
  HessianDual<N> x(Inner::Variable(value, index));
  x.derivative(index) = Inner(1.0);
  return x;
}

}  // namespace craneplan
