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

#ifndef FIXPT_IO_HPP
#define FIXPT_IO_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fixpt/errors.hpp"
#include "fixpt/gaussian_rational.hpp"
#include "fixpt/linalg.hpp"
#include "fixpt/matrix.hpp"
#include "fixpt/superop.hpp"

namespace fixpt {

using Json = nlohmann::ordered_json;

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  GaussianRational parse() {
    if (text_.empty()) throw ParseError("empty scalar", 0);
    mpq_class first = rational();
    if (at_end()) return GaussianRational(std::move(first));
    const char c = text_[pos_];
    if (c == 'i') {
      ++pos_;
      expect_end();
      return GaussianRational(mpq_class(0), std::move(first));
    }
    if (c != '+' && c != '-') {
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    ++pos_;
    mpq_class second = rational();
    if (c == '-') second = -second;
    if (at_end() || text_[pos_] != 'i') {
      throw ParseError("expected 'i' after imaginary part", pos_);
    }
    ++pos_;
    expect_end();
    return GaussianRational(std::move(first), std::move(second));
  }

 private:
  // rational := '-'? digits ('/' digits)?
  mpq_class rational() {
    bool negative = false;
    if (!at_end() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    mpz_class num(digits(), 10);
    mpz_class den(1);
    if (!at_end() && text_[pos_] == '/') {
      ++pos_;
      den = mpz_class(digits(), 10);
      if (den == 0) throw ZeroDenominator();
    }
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void expect_end() const {
    if (!at_end()) throw ParseError("trailing characters", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::size_t require_count(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  const Json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(std::string("field \"") + key +
                     "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace detail

/// Parses "a", "bi", "a+bi" or "a-bi" where a and b are rationals of the form
/// -?digits(/digits)?. Throws ParseError (with position) or ZeroDenominator.
inline GaussianRational parse_scalar(std::string_view text) {
  return detail::ScalarParser(text).parse();
}

inline std::string format_scalar(const GaussianRational& z) {
  return z.to_string();
}

// {"n_rows": r, "n_cols": c, "entries": [["1", "0"], ...]}
inline Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c).to_string());
    }
    entries.push_back(std::move(row));
  }
  Json doc;
  doc["n_rows"] = m.rows();
  doc["n_cols"] = m.cols();
  doc["entries"] = std::move(entries);
  return doc;
}

/// Throws InputError on a wrong shape, ParseError/ZeroDenominator on a bad
/// entry.
inline Matrix matrix_from_json(const Json& doc) {
  const std::size_t rows = detail::require_count(doc, "n_rows");
  const std::size_t cols = detail::require_count(doc, "n_cols");
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw InputError("missing array field \"entries\"");
  }
  const Json& entries = doc.at("entries");
  if (entries.size() != rows) {
    throw InputError("\"entries\" has " + std::to_string(entries.size()) +
                     " rows, expected " + std::to_string(rows));
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (!row.is_array() || row.size() != cols) {
      throw InputError("row " + std::to_string(r) + " must be an array of " +
                       std::to_string(cols) + " strings");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row.at(c).is_string()) {
        throw InputError("entry (" + std::to_string(r) + ", " +
                         std::to_string(c) + ") must be a string");
      }
      m(r, c) = parse_scalar(row.at(c).get<std::string>());
    }
  }
  return m;
}

// {"n": n, "vec_convention": "column", "L": <matrix document>}
inline Json superop_to_json(const SuperOp& phi) {
  Json doc;
  doc["n"] = phi.n();
  doc["vec_convention"] = "column";
  doc["L"] = matrix_to_json(phi.matrix());
  return doc;
}

inline SuperOp superop_from_json(const Json& doc) {
  const std::size_t n = detail::require_count(doc, "n");
  if (!doc.contains("vec_convention") ||
      !doc.at("vec_convention").is_string()) {
    throw InputError("missing string field \"vec_convention\"");
  }
  const std::string convention = doc.at("vec_convention").get<std::string>();
  if (convention != "column") {
    throw InputError("unsupported vec_convention \"" + convention +
                     "\" (only \"column\" is accepted)");
  }
  if (n > kMaxSuperopDim) throw InputError(UnsupportedDimension(n).what());
  if (!doc.contains("L")) throw InputError("missing field \"L\"");
  Matrix l = matrix_from_json(doc.at("L"));
  if (l.rows() != n * n || l.cols() != n * n) {
    throw InputError("\"L\" is " + l.shape() + ", expected side " +
                     std::to_string(n * n));
  }
  return SuperOp(n, std::move(l));
}

// {"ambient_dim": n, "dim": k, "basis": [[column 0], [column 1], ...]}
inline Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Json column = Json::array();
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
      column.push_back(s.basis()(i, k).to_string());
    }
    basis.push_back(std::move(column));
  }
  Json doc;
  doc["ambient_dim"] = s.ambient_dim();
  doc["dim"] = s.dim();
  doc["basis"] = std::move(basis);
  return doc;
}

/// Re-canonicalizes, so any spanning set is accepted.
inline Subspace subspace_from_json(const Json& doc) {
  const std::size_t n = detail::require_count(doc, "ambient_dim");
  if (!doc.contains("basis") || !doc.at("basis").is_array()) {
    throw InputError("missing array field \"basis\"");
  }
  const Json& basis = doc.at("basis");
  Matrix gens(n, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Json& column = basis.at(k);
    if (!column.is_array() || column.size() != n) {
      throw InputError("basis vector " + std::to_string(k) +
                       " must have length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!column.at(i).is_string()) {
        throw InputError("basis entries must be strings");
      }
      gens(i, k) = parse_scalar(column.at(i).get<std::string>());
    }
  }
  return Subspace::span(gens);
}

}  // namespace fixpt

#endif  // FIXPT_IO_HPP
