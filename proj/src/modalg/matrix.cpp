#include "ybk/modalg/matrix.hpp"

#include <sstream>

#include "ybk/common/error.hpp"

namespace ybk::modalg {

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  }
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// Bareiss fraction-free elimination; exact over Z.
BigInt determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerMatrix to_integer(const Matrix<std::int64_t>& a) {
  IntegerMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  return out;
}

std::string to_string(const IntegerMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? "," : "") << a(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace ybk::modalg
