#pragma once

#include <string>
#include <vector>

#include "arbor/matrix.hpp"

namespace arbor {

/// Exact determinant. Integer matrices go through fraction-free (Bareiss)
/// elimination, everything else through rational Gaussian elimination.
/// The 0x0 determinant is 1 (empty product).
Rational det(const Matrix& a);

/// Rational Gaussian elimination determinant; reference path used to
/// cross-check the fraction-free route.
Rational det_gauss(const Matrix& a);

/// det of the submatrix after deleting rows/cols; |delete_rows| must equal
/// |delete_cols| so the result stays square.
Rational minor_det(const Matrix& a, const IndexList& delete_rows, const IndexList& delete_cols);

/// Exact inverse via Gauss-Jordan. Throws Singular.
Matrix inverse(const Matrix& a);

/// Solves a x = b exactly. Throws Singular.
Vector solve(const Matrix& a, const Vector& b);

/// Adjugate (works for singular input; a * adjugate(a) = det(a) * I).
Matrix adjugate(const Matrix& a);

/// Schur complement after symmetrically permuting `block` to the front:
/// with m = [[A,B],[C,D]] and A the principal submatrix on `block`, returns
/// D - C A^{-1} B indexed by the complement in ascending order.
/// Throws SingularBlock.
Matrix schur_complement(const Matrix& m, const IndexList& block);

/// Dense polynomial with exact rational coefficients, ascending degree.
struct Polynomial {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational eval(const Rational& x) const;
  Polynomial derivative() const;
  /// Multiplication by x^k.
  Polynomial shifted_up(int k) const;
  void trim();

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs == b.coeffs; }
  std::string str() const;
};

/// Monic characteristic polynomial det(xI - a) via Faddeev-LeVerrier.
Polynomial char_poly(const Matrix& a);

}  // namespace arbor
