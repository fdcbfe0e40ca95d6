#include "arbor/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "arbor/error.hpp"

namespace arbor {

Matrix select_submatrix(const Matrix& a, const IndexList& rows, const IndexList& cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(rows[i], cols[j]);
  return out;
}

IndexList checked_index_set(int n, IndexList indices, const char* what) {
  std::sort(indices.begin(), indices.end());
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= n)
      fail("IndexOutOfRange", std::string(what) + " index " + std::to_string(indices[i]) +
                                  " outside [0, " + std::to_string(n) + ")");
    if (i > 0 && indices[i] == indices[i - 1])
      fail("IndexOutOfRange", std::string(what) + " index " + std::to_string(indices[i]) + " repeated");
  }
  return indices;
}

IndexList complement_indices(int n, const IndexList& subset) {
  IndexList out;
  out.reserve(static_cast<size_t>(n) - subset.size());
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < subset.size() && subset[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

Matrix drop_rows_cols(const Matrix& a, IndexList delete_rows, IndexList delete_cols) {
  delete_rows = checked_index_set(static_cast<int>(a.rows()), std::move(delete_rows), "row");
  delete_cols = checked_index_set(static_cast<int>(a.cols()), std::move(delete_cols), "column");
  return select_submatrix(a, complement_indices(static_cast<int>(a.rows()), delete_rows),
                          complement_indices(static_cast<int>(a.cols()), delete_cols));
}

bool is_integer_matrix(const Matrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_integer()) return false;
  return true;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << '[';
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << a(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v(i);
  }
  os << ']';
  return os.str();
}

}  // namespace arbor
