#pragma once

// Dense exact matrices and rank computations over Q or a prime field.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace strandbox {

struct Field {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint64_t prime = 0;

  static Field rationals() { return {}; }
  static Field prime_field(std::uint64_t p);
  /// "rat" or "fp:<prime>".
  static Field parse(const std::string& spec);
  /// Reads STRANDBOX_FIELD, defaulting to the rationals.
  static Field from_env();
  std::string to_string() const;
  bool operator==(const Field&) const = default;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const mpq_class& at(int r, int c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  /// Row-major entries as exact strings, e.g. "-1/2".
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

int rank(const Matrix& m, const Field& field);
/// Inverse over Q; throws DomainError if singular.
Matrix inverse(const Matrix& m);

}  // namespace strandbox
