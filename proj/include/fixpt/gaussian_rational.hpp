// Copyright 2026 The fixpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIXPT_GAUSSIAN_RATIONAL_HPP
#define FIXPT_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "fixpt/errors.hpp"

namespace fixpt {

/// Exact complex scalar re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept in lowest terms with a positive denominator at all
/// times, so two equal values always share the same representation and
/// equality is a plain comparison of the stored parts.
class GaussianRational {
 public:
  GaussianRational() = default;

  GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)

  explicit GaussianRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// Builds (re_num/re_den) + (im_num/im_den) i. Throws ZeroDenominator.
  static GaussianRational from_parts(const mpz_class& re_num,
                                     const mpz_class& re_den,
                                     const mpz_class& im_num = 0,
                                     const mpz_class& im_den = 1) {
    if (re_den == 0 || im_den == 0) {
      throw ZeroDenominator();
    }
    return GaussianRational(mpq_class(re_num, re_den),
                            mpq_class(im_num, im_den));
  }

  static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const {
    mpq_class im = -im_;
    return GaussianRational(re_, std::move(im));
  }

  /// |z|^2 = re^2 + im^2, always rational.
  mpq_class norm_squared() const {
    mpq_class out = re_ * re_ + im_ * im_;
    return out;
  }

  GaussianRational operator-() const {
    mpq_class re = -re_;
    mpq_class im = -im_;
    return GaussianRational(std::move(re), std::move(im));
  }

  GaussianRational& operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
  }

  GaussianRational& operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
  }

  GaussianRational& operator*=(const GaussianRational& rhs) {
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  GaussianRational& operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) {
      throw DivisionByZero();
    }
    const mpq_class denom = rhs.norm_squared();
    mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
    mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational lhs,
                                    const GaussianRational& rhs) {
    return lhs += rhs;
  }
  friend GaussianRational operator-(GaussianRational lhs,
                                    const GaussianRational& rhs) {
    return lhs -= rhs;
  }
  friend GaussianRational operator*(GaussianRational lhs,
                                    const GaussianRational& rhs) {
    return lhs *= rhs;
  }
  friend GaussianRational operator/(GaussianRational lhs,
                                    const GaussianRational& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  /// Canonical text: "3/2", "-1/4i", "3/2-1/4i". Parses back to the same
  /// value with parse_scalar.
  std::string to_string() const {
    if (sgn(im_) == 0) {
      return re_.get_str();
    }
    const std::string imag = mpq_class(abs(im_)).get_str();
    const bool negative_im = sgn(im_) < 0;
    if (sgn(re_) == 0) {
      return (negative_im ? "-" : "") + imag + "i";
    }
    return re_.get_str() + (negative_im ? "-" : "+") + imag + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace fixpt

#endif  // FIXPT_GAUSSIAN_RATIONAL_HPP
