#include "propp/fp_linear.hpp"

#include <sstream>

#include "propp/error.hpp"

namespace propp {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned mod_inverse(unsigned a, unsigned p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) fail(ErrorCode::InvalidArgument, "element not invertible mod p");
  return mod_p(t, p);
}

bool FpVector::is_zero() const {
  for (unsigned c : coords)
    if (c) return false;
  return true;
}

FpVector FpVector::operator+(const FpVector& o) const {
  FpVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = (coords[i] + o.coords[i]) % prime;
  return r;
}

FpVector FpVector::operator-(const FpVector& o) const {
  FpVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = (coords[i] + prime - o.coords[i]) % prime;
  return r;
}

FpVector FpVector::scaled(unsigned c) const {
  FpVector r = *this;
  for (auto& x : r.coords) x = static_cast<unsigned>((static_cast<unsigned long long>(x) * c) % prime);
  return r;
}

std::string to_string(const FpVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords[i];
  os << ')';
  return os.str();
}

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), r_(rows), c_(cols), a_(rows * cols, 0) {}

FpMatrix FpMatrix::from_columns(unsigned p, std::size_t rows, const std::vector<FpVector>& cols) {
  FpMatrix m(p, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j].coords.at(i) % p;
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p, std::size_t cols, const std::vector<FpVector>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i].coords.at(j) % p;
  return m;
}

FpVector FpMatrix::row(std::size_t i) const {
  FpVector v(p_, c_);
  for (std::size_t j = 0; j < c_; ++j) v.coords[j] = at(i, j);
  return v;
}

FpVector FpMatrix::column(std::size_t j) const {
  FpVector v(p_, r_);
  for (std::size_t i = 0; i < r_; ++i) v.coords[i] = at(i, j);
  return v;
}

FpMatrix FpMatrix::rref(std::vector<std::size_t>* pivots) const {
  FpMatrix m = *this;
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < c_ && row < r_; ++col) {
    std::size_t piv = row;
    while (piv < r_ && m.at(piv, col) == 0) ++piv;
    if (piv == r_) continue;
    if (piv != row)
      for (std::size_t j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    unsigned inv = mod_inverse(m.at(row, col), p_);
    for (std::size_t j = 0; j < c_; ++j)
      m.at(row, j) = static_cast<unsigned>((static_cast<unsigned long long>(m.at(row, j)) * inv) % p_);
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      unsigned f = m.at(i, col);
      for (std::size_t j = 0; j < c_; ++j) {
        unsigned long long sub = static_cast<unsigned long long>(f) * m.at(row, j) % p_;
        m.at(i, j) = static_cast<unsigned>((m.at(i, j) + p_ - sub) % p_);
      }
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

std::size_t FpMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<FpVector> FpMatrix::kernel() const {
  std::vector<std::size_t> piv;
  FpMatrix m = rref(&piv);
  std::vector<bool> is_piv(c_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < c_; ++f) {
    if (is_piv[f]) continue;
    FpVector v(p_, c_);
    v.coords[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v.coords[piv[k]] = (p_ - m.at(k, f)) % p_;
    basis.push_back(std::move(v));
  }
  return basis;
}

FpVector FpMatrix::apply(const FpVector& x) const {
  FpVector y(p_, r_);
  for (std::size_t i = 0; i < r_; ++i) {
    unsigned long long s = 0;
    for (std::size_t j = 0; j < c_; ++j) s += static_cast<unsigned long long>(at(i, j)) * x.coords[j];
    y.coords[i] = static_cast<unsigned>(s % p_);
  }
  return y;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FpQuotient::FpQuotient(unsigned p, std::size_t n, const std::vector<FpVector>& relations) : p_(p), n_(n) {
  FpMatrix m = FpMatrix::from_rows(p, n, relations);
  rref_ = m.rref(&pivots_);
  std::vector<bool> is_piv(n, false);
  for (auto c : pivots_) is_piv[c] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free_cols_.push_back(j);
}

FpVector FpQuotient::project(const FpVector& v) const {
  FpVector w = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    unsigned f = w.coords[pivots_[k]];
    if (!f) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      unsigned long long sub = static_cast<unsigned long long>(f) * rref_.at(k, j) % p_;
      w.coords[j] = static_cast<unsigned>((w.coords[j] + p_ - sub) % p_);
    }
  }
  FpVector out(p_, free_cols_.size());
  for (std::size_t i = 0; i < free_cols_.size(); ++i) out.coords[i] = w.coords[free_cols_[i]];
  return out;
}

}  // namespace propp
