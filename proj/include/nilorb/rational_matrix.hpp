#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over exact rationals. Ranks and nullities are the entire
/// output of the oracle, so no floating point appears anywhere.
class RationalMatrix {
public:
  RationalMatrix() = default;

  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("RationalMatrix: negative extent");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return entries_[index(i, j)]; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw std::invalid_argument("RationalMatrix: incompatible product extents");
    RationalMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const Rational& v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < rhs.cols_; ++j) {
          const Rational& w = rhs.at(k, j);
          if (w == 0) continue;
          out.at(i, j) += v * w;
        }
      }
    }
    return out;
  }

  RationalMatrix operator+(const RationalMatrix& rhs) const {
    check_same_extents(rhs, "sum");
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
  }

  RationalMatrix operator-(const RationalMatrix& rhs) const {
    check_same_extents(rhs, "difference");
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      out.entries_[k] = entries_[k] - rhs.entries_[k];
    return out;
  }

  RationalMatrix transposed() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Rational trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (const Rational& v : entries_) {
      if (v != 0) return false;
    }
    return true;
  }

  /// Exact rank via Gaussian elimination. The pivot in each column is the
  /// nonzero candidate of smallest numerator/denominator size, which keeps
  /// entry growth down; ties break to the smallest row index, so the
  /// elimination order is deterministic.
  int rank() const {
    std::vector<Rational> a = entries_;
    const auto entry = [&](int i, int j) -> Rational& {
      return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j)];
    };
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pivot = -1;
      BigInt best;
      for (int i = r; i < rows_; ++i) {
        const Rational& v = entry(i, c);
        if (v == 0) continue;
        BigInt measure = abs(numerator(v));
        if (measure < denominator(v)) measure = denominator(v);
        if (pivot < 0 || measure < best) {
          pivot = i;
          best = measure;
        }
      }
      if (pivot < 0) continue;
      if (pivot != r) {
        for (int j = 0; j < cols_; ++j) std::swap(entry(pivot, j), entry(r, j));
      }
      for (int i = r + 1; i < rows_; ++i) {
        if (entry(i, c) == 0) continue;
        const Rational factor = entry(i, c) / entry(r, c);
        entry(i, c) = 0;
        for (int j = c + 1; j < cols_; ++j) {
          const Rational& p = entry(r, j);
          if (p == 0) continue;
          entry(i, j) -= factor * p;
        }
      }
      ++r;
    }
    return r;
  }

  /// Exact inverse by Gauss-Jordan elimination; throws on singular input.
  RationalMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
    const int n = rows_;
    RationalMatrix work = *this;
    RationalMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
      int pivot = -1;
      BigInt best;
      for (int i = c; i < n; ++i) {
        const Rational& v = work.at(i, c);
        if (v == 0) continue;
        BigInt measure = abs(numerator(v));
        if (measure < denominator(v)) measure = denominator(v);
        if (pivot < 0 || measure < best) {
          pivot = i;
          best = measure;
        }
      }
      if (pivot < 0) throw std::invalid_argument("inverse: matrix is singular");
      if (pivot != c) {
        for (int j = 0; j < n; ++j) {
          std::swap(work.at(pivot, j), work.at(c, j));
          std::swap(inv.at(pivot, j), inv.at(c, j));
        }
      }
      const Rational lead = work.at(c, c);
      for (int j = 0; j < n; ++j) {
        work.at(c, j) /= lead;
        inv.at(c, j) /= lead;
      }
      for (int i = 0; i < n; ++i) {
        if (i == c || work.at(i, c) == 0) continue;
        const Rational factor = work.at(i, c);
        for (int j = 0; j < n; ++j) {
          work.at(i, j) -= factor * work.at(c, j);
          inv.at(i, j) -= factor * inv.at(c, j);
        }
      }
    }
    return inv;
  }

  /// Exact fraction grid, for debugging.
  std::string to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (j) out += " ";
        out += at(i, j).str();
      }
      out += "\n";
    }
    return out;
  }

  bool operator==(const RationalMatrix&) const = default;

private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("RationalMatrix: index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  void check_same_extents(const RationalMatrix& rhs, const char* what) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw std::invalid_argument(std::string("RationalMatrix: incompatible ") + what +
                                  " extents");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

/// Dimension of the solution space of `system * x = 0`.
inline int nullity(const RationalMatrix& system) {
  return system.cols() - system.rank();
}

}  // namespace nilorb
