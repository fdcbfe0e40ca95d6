#include "arbor/linalg.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

namespace {

void require_square(const Matrix& a) {
  if (a.rows() != a.cols())
    fail("NotSquare", "matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

// Fraction-free elimination on an integer copy; every division is exact.
Rational det_bareiss_integer(const Matrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<BigInt> m(static_cast<size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m[static_cast<size_t>(i * n + j)] = a(i, j).num();
  auto at = [&](Eigen::Index i, Eigen::Index j) -> BigInt& {
    return m[static_cast<size_t>(i * n + j)];
  };

  int sign = 1;
  BigInt prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Rational(0);
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  BigInt result = at(n - 1, n - 1);
  if (sign < 0) result = -result;
  return Rational(result);
}

}  // namespace

Rational det_gauss(const Matrix& input) {
  require_square(input);
  Matrix a = input;
  const Eigen::Index n = a.rows();
  Rational result(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r)
      if (!a(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      result = -result;
    }
    result *= a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational factor = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return result;
}

Rational det(const Matrix& a) {
  require_square(a);
  if (a.rows() == 0) return Rational(1);
  if (is_integer_matrix(a)) return det_bareiss_integer(a);
  return det_gauss(a);
}

Rational minor_det(const Matrix& a, const IndexList& delete_rows, const IndexList& delete_cols) {
  require_square(a);
  if (delete_rows.size() != delete_cols.size())
    fail("IndexOutOfRange", "row and column deletion sets differ in size");
  return det(drop_rows_cols(a, delete_rows, delete_cols));
}

Matrix inverse(const Matrix& input) {
  require_square(input);
  const Eigen::Index n = input.rows();
  Matrix a = input;
  Matrix inv = Matrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r)
      if (!a(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail("Singular", "matrix has no inverse");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    Rational p = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Rational factor = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

Vector solve(const Matrix& input, const Vector& b) {
  require_square(input);
  if (input.rows() != b.size()) fail("NotSquare", "right-hand side length mismatch");
  const Eigen::Index n = input.rows();
  Matrix a(n, n + 1);
  a.leftCols(n) = input;
  a.col(n) = b;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r)
      if (!a(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail("Singular", "linear system is singular");
    if (pivot != k) a.row(k).swap(a.row(pivot));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational factor = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j <= n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  Vector x(n);
  for (Eigen::Index i = n; i-- > 0;) {
    Rational sum = a(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) sum -= a(i, j) * x(j);
    x(i) = sum / a(i, i);
  }
  return x;
}

namespace {

// One Faddeev-LeVerrier sweep yields both the characteristic polynomial and
// the adjugate: adj(a) = (-1)^{n-1} M_n with M_k = a M_{k-1} + c_{n-k+1} I.
struct FaddeevResult {
  Polynomial poly;
  Matrix adj;
};

FaddeevResult faddeev_leverrier(const Matrix& a) {
  require_square(a);
  const Eigen::Index n = a.rows();
  FaddeevResult out;
  out.poly.coeffs.assign(static_cast<size_t>(n) + 1, Rational(0));
  out.poly.coeffs[static_cast<size_t>(n)] = Rational(1);
  out.adj = Matrix::Zero(n, n);
  if (n == 0) return out;

  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Matrix am = a * m;
    m = am + out.poly.coeffs[static_cast<size_t>(n - k + 1)] * Matrix::Identity(n, n);
    Matrix amk = a * m;
    out.poly.coeffs[static_cast<size_t>(n - k)] = -amk.trace() / Rational(static_cast<long long>(k));
    if (k == n) out.adj = (n % 2 == 1) ? m : Matrix(-m);
  }
  return out;
}

}  // namespace

Matrix adjugate(const Matrix& a) { return faddeev_leverrier(a).adj; }

Polynomial char_poly(const Matrix& a) { return faddeev_leverrier(a).poly; }

Matrix schur_complement(const Matrix& m, const IndexList& block) {
  require_square(m);
  const int n = static_cast<int>(m.rows());
  IndexList head = checked_index_set(n, block, "block");
  IndexList rest = complement_indices(n, head);
  Matrix a = select_submatrix(m, head, head);
  if (det(a).is_zero()) fail("SingularBlock", "leading block is singular");
  Matrix b = select_submatrix(m, head, rest);
  Matrix c = select_submatrix(m, rest, head);
  Matrix d = select_submatrix(m, rest, rest);
  return d - c * inverse(a) * b;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  if (coeffs.size() <= 1) {
    d.coeffs = {Rational(0)};
    return d;
  }
  d.coeffs.resize(coeffs.size() - 1);
  for (size_t i = 1; i < coeffs.size(); ++i)
    d.coeffs[i - 1] = Rational(static_cast<long long>(i)) * coeffs[i];
  return d;
}

Polynomial Polynomial::shifted_up(int k) const {
  Polynomial s;
  s.coeffs.assign(static_cast<size_t>(k), Rational(0));
  s.coeffs.insert(s.coeffs.end(), coeffs.begin(), coeffs.end());
  return s;
}

void Polynomial::trim() {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
}

std::string Polynomial::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ' ';
    os << coeffs[i];
  }
  os << ']';
  return os.str();
}

}  // namespace arbor
