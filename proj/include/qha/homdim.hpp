#pragma once

#include <cassert>
#include <string>

namespace qha {

/// Finite-or-infinite homological dimension. Finite values are >= -1; the
/// value -1 is reserved for the zero module and the empty class.
class HomDim {
 public:
  HomDim() : n_(0), inf_(false) {}

  static HomDim finite(int n) {
    assert(n >= -1);
    return HomDim(n, false);
  }
  static HomDim infinite() { return HomDim(0, true); }

  bool is_finite() const { return !inf_; }
  bool is_infinite() const { return inf_; }
  int value() const {
    assert(!inf_);
    return n_;
  }

  friend bool operator==(const HomDim& x, const HomDim& y) {
    return x.inf_ == y.inf_ && (x.inf_ || x.n_ == y.n_);
  }
  friend bool operator!=(const HomDim& x, const HomDim& y) { return !(x == y); }
  // Infinite is the top element.
  friend bool operator<(const HomDim& x, const HomDim& y) {
    if (x.inf_) return false;
    if (y.inf_) return true;
    return x.n_ < y.n_;
  }

  std::string to_string() const { return inf_ ? "infinite" : std::to_string(n_); }

 private:
  HomDim(int n, bool inf) : n_(n), inf_(inf) {}
  int n_;
  bool inf_;
};

inline HomDim max(HomDim a, HomDim b) { return a < b ? b : a; }
inline HomDim min(HomDim a, HomDim b) { return b < a ? b : a; }
/// 1 + d, with 1 + infinite = infinite.
inline HomDim succ(HomDim d) { return d.is_finite() ? HomDim::finite(d.value() + 1) : d; }

}  // namespace qha
