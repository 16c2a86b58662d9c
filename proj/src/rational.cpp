#include "qha/rational.hpp"

#include <sstream>

#include "qha/error.hpp"

namespace qha {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from(std::initializer_list<std::initializer_list<long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  QMat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) fail(ErrorKind::Internal, "ragged matrix literal");
    int j = 0;
    for (long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

bool QMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

QMat QMat::operator*(const QMat& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::Internal, "matrix product shape mismatch");
  QMat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

QMat QMat::operator+(const QMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::Internal, "matrix sum shape mismatch");
  QMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

QMat QMat::operator-(const QMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::Internal, "matrix diff shape mismatch");
  QMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

QMat QMat::operator*(const Rat& c) const {
  QMat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

QMat QMat::transpose() const {
  QMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

QMat QMat::hstack(const std::vector<QMat>& blocks) {
  if (blocks.empty()) return QMat();
  const int r = blocks.front().rows_;
  int c = 0;
  for (const QMat& b : blocks) {
    if (b.rows_ != r) fail(ErrorKind::Internal, "hstack row mismatch");
    c += b.cols_;
  }
  QMat out(r, c);
  int off = 0;
  for (const QMat& b : blocks) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < b.cols_; ++j) out.at(i, off + j) = b.at(i, j);
    off += b.cols_;
  }
  return out;
}

QMat QMat::vstack(const std::vector<QMat>& blocks) {
  if (blocks.empty()) return QMat();
  const int c = blocks.front().cols_;
  int r = 0;
  for (const QMat& b : blocks) {
    if (b.cols_ != c) fail(ErrorKind::Internal, "vstack column mismatch");
    r += b.rows_;
  }
  QMat out(r, c);
  int off = 0;
  for (const QMat& b : blocks) {
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < c; ++j) out.at(off + i, j) = b.at(i, j);
    off += b.rows_;
  }
  return out;
}

QMat QMat::col(int j) const {
  QMat out(rows_, 1);
  for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
  return out;
}

QMat QMat::cols_slice(const std::vector<int>& idx) const {
  QMat out(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < static_cast<int>(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
  return out;
}

QMat QMat::rows_slice(int from, int to) const {
  QMat out(to - from, cols_);
  for (int i = from; i < to; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i - from, j) = at(i, j);
  return out;
}

std::vector<int> QMat::rref_in_place() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
    const Rat piv = at(r, c);
    for (int j = c; j < cols_; ++j) at(r, j) /= piv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Rat f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int QMat::rank() const {
  QMat copy = *this;
  return static_cast<int>(copy.rref_in_place().size());
}

QMat QMat::nullspace() const {
  QMat r = *this;
  const std::vector<int> pivots = r.rref_in_place();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat out(cols_, static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    const int f = free_cols[k];
    out.at(f, k) = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) out.at(pivots[i], k) = -r.at(i, f);
  }
  return out;
}

QMat QMat::column_space() const {
  QMat copy = *this;
  return cols_slice(copy.rref_in_place());
}

QMat QMat::solve(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_) fail(ErrorKind::Internal, "solve shape mismatch");
  QMat aug = hstack({a, b});
  const std::vector<int> pivots = aug.rref_in_place();
  for (int c : pivots)
    if (c >= a.cols_) fail(ErrorKind::Internal, "inconsistent linear system");
  QMat x(a.cols_, b.cols_);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    for (int j = 0; j < b.cols_; ++j) x.at(pivots[i], j) = aug.at(i, a.cols_ + j);
  return x;
}

QMat QMat::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::Internal, "inverse of a non-square matrix");
  if (rank() != rows_) fail(ErrorKind::Internal, "matrix is singular");
  return solve(*this, identity(rows_));
}

std::string QMat::to_string() const {
  std::ostringstream o;
  for (int i = 0; i < rows_; ++i) {
    o << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) o << (j ? " " : "") << at(i, j).get_str();
  }
  o << "]";
  return o.str();
}

std::pair<QMat, QMat> complement_and_quotient(const QMat& c) {
  const int d = c.rows();
  const int r = c.cols();
  // pivots of [C | I] past the C block pick standard basis vectors completing C
  QMat aug = QMat::hstack({c, QMat::identity(d)});
  const std::vector<int> pivots = aug.rref_in_place();
  if (static_cast<int>(pivots.size()) != d || (r > 0 && pivots[r - 1] >= r))
    fail(ErrorKind::Internal, "complement: columns are not independent");
  std::vector<int> chosen;
  for (int i = r; i < d; ++i) chosen.push_back(pivots[i] - r);
  QMat dmat(d, d - r);
  for (int k = 0; k < d - r; ++k) dmat.at(chosen[k], k) = 1;
  QMat t = QMat::hstack({c, dmat});
  QMat tinv = t.inverse();
  return {dmat, tinv.rows_slice(r, d)};
}

}  // namespace qha
