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

#ifndef FIXPT_ERRORS_HPP
#define FIXPT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixpt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class NotSquare : public Error {
 public:
  NotSquare() : Error("matrix is not square") {}
};

class SizeMismatch : public Error {
 public:
  explicit SizeMismatch(const std::string& what)
      : Error("size mismatch: " + what) {}
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("subspaces live in different ambient spaces") {}
};

class ZeroFactor : public Error {
 public:
  ZeroFactor() : Error("rank-one factor is zero") {}
};

class DependentPair : public Error {
 public:
  DependentPair() : Error("x and Ax are linearly dependent") {}
};

class NotRankOne : public Error {
 public:
  NotRankOne() : Error("matrix does not have rank one") {}
};

class NotRankOneIdempotent : public Error {
 public:
  NotRankOneIdempotent() : Error("matrix is not a rank-one idempotent") {}
};

class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(std::size_t n)
      : Error("unsupported superoperator dimension n = " + std::to_string(n) +
              " (supported: 1..16)") {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

/// Malformed scalar text. `position` is the 0-based offset of the offending
/// character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " +
              what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed JSON with the wrong shape or content.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace fixpt

#endif  // FIXPT_ERRORS_HPP
