#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Row/column index set, sorted ascending without repeats.
using IndexList = std::vector<int>;

/// Submatrix keeping exactly the listed rows and columns, in list order.
Matrix select_submatrix(const Matrix& a, const IndexList& rows, const IndexList& cols);

/// Submatrix after deleting the listed rows and columns.
/// Throws IndexOutOfRange on bad or repeated indices.
Matrix drop_rows_cols(const Matrix& a, IndexList delete_rows, IndexList delete_cols);

/// {0..n-1} minus a sorted subset.
IndexList complement_indices(int n, const IndexList& subset);

/// Validates and normalizes an index set against [0, n).
IndexList checked_index_set(int n, IndexList indices, const char* what);

bool is_integer_matrix(const Matrix& a);
bool matrices_equal(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& a);
std::string to_string(const Vector& v);

}  // namespace arbor
