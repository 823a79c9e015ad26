#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace propp {

bool is_prime(unsigned p);
unsigned mod_inverse(unsigned a, unsigned p);
inline unsigned mod_p(long long x, unsigned p) {
  long long r = x % static_cast<long long>(p);
  return static_cast<unsigned>(r < 0 ? r + p : r);
}

/// Vector over F_p.
struct FpVector {
  unsigned prime = 2;
  std::vector<unsigned> coords;

  FpVector() = default;
  FpVector(unsigned p, std::size_t n) : prime(p), coords(n, 0) {}
  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector scaled(unsigned c) const;
  bool operator==(const FpVector&) const = default;
};

std::string to_string(const FpVector& v);

/// Dense matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);
  static FpMatrix from_columns(unsigned p, std::size_t rows, const std::vector<FpVector>& cols);
  static FpMatrix from_rows(unsigned p, std::size_t cols, const std::vector<FpVector>& rows);

  unsigned prime() const { return p_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  unsigned& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  unsigned at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  FpVector row(std::size_t i) const;
  FpVector column(std::size_t j) const;

  /// Reduced row echelon form; pivot columns written to `pivots`.
  FpMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  bool injective() const { return rank() == c_; }
  bool invertible() const { return r_ == c_ && rank() == c_; }
  /// Basis of the right null space.
  std::vector<FpVector> kernel() const;
  FpVector apply(const FpVector& x) const;
  FpMatrix transpose() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  unsigned p_ = 2;
  std::size_t r_ = 0, c_ = 0;
  std::vector<unsigned> a_;
};

/// Quotient F_p^n / span(relations): coordinates of a vector in the
/// quotient, using the non-pivot columns of the relation RREF as basis.
class FpQuotient {
 public:
  FpQuotient() = default;
  FpQuotient(unsigned p, std::size_t n, const std::vector<FpVector>& relations);
  std::size_t dim() const { return free_cols_.size(); }
  std::size_t ambient() const { return n_; }
  FpVector project(const FpVector& v) const;

 private:
  unsigned p_ = 2;
  std::size_t n_ = 0;
  FpMatrix rref_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_cols_;
};

}  // namespace propp
