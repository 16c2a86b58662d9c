#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace qha {

using Rat = mpq_class;

/// Dense matrix over Q, row-major. All elimination is exact.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static QMat identity(int n);
  static QMat from(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const QMat&) const = default;

  QMat operator*(const QMat& rhs) const;
  QMat operator+(const QMat& rhs) const;
  QMat operator-(const QMat& rhs) const;
  QMat operator*(const Rat& c) const;
  QMat transpose() const;

  static QMat hstack(const std::vector<QMat>& blocks);  // same row count
  static QMat vstack(const std::vector<QMat>& blocks);  // same column count
  QMat col(int j) const;
  QMat cols_slice(const std::vector<int>& idx) const;
  QMat rows_slice(int from, int to) const;  // [from, to)

  /// Gauss-Jordan normal form in place; returns the pivot column indices.
  std::vector<int> rref_in_place();
  int rank() const;
  /// Columns form a basis of { x : Ax = 0 }.
  QMat nullspace() const;
  /// The original columns at the pivot positions (a basis of the column space).
  QMat column_space() const;
  /// Some X with A·X = B (free variables zero). Throws Internal when the
  /// system is inconsistent; unique when A has full column rank.
  static QMat solve(const QMat& a, const QMat& b);
  QMat inverse() const;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// For C with independent columns: D = standard basis columns completing C to
/// a basis, and Q with Q·C = 0, Q·D = I (the quotient map by the column span).
std::pair<QMat, QMat> complement_and_quotient(const QMat& c);

}  // namespace qha
