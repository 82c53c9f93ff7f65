#include "cld/admissible.hpp"

#include <numeric>

#include "cld/errors.hpp"

namespace cld {

AdmissibleMatrix::AdmissibleMatrix(int rows, std::vector<int> col_map)
    : rows_(rows), col_map_(std::move(col_map)) {
  if (rows_ < 1) throw RowOutOfRangeError("AdmissibleMatrix: rows must be >= 1");
  if (col_map_.empty()) throw EmptyError("AdmissibleMatrix: no columns");
  for (size_t j = 0; j < col_map_.size(); ++j) {
    if (col_map_[j] < 1 || col_map_[j] > rows_)
      throw RowOutOfRangeError("AdmissibleMatrix: column " + std::to_string(j + 1) +
                               " maps to row " + std::to_string(col_map_[j]) +
                               ", valid range 1.." + std::to_string(rows_));
  }
}

AdmissibleMatrix AdmissibleMatrix::identity(int n) {
  std::vector<int> cm(static_cast<size_t>(n));
  std::iota(cm.begin(), cm.end(), 1);
  return AdmissibleMatrix(n, std::move(cm));
}

std::vector<std::vector<int>> AdmissibleMatrix::dense() const {
  std::vector<std::vector<int>> grid(static_cast<size_t>(rows_),
                                     std::vector<int>(col_map_.size(), 0));
  for (size_t j = 0; j < col_map_.size(); ++j)
    grid[static_cast<size_t>(col_map_[j] - 1)][j] = 1;
  return grid;
}

Proposition apply(const AdmissibleMatrix& g, const Proposition& a) {
  if (g.cols() != a.size())
    throw ShapeMismatchError("apply: selector has " + std::to_string(g.cols()) +
                             " columns, proposition has " +
                             std::to_string(a.size()) + " outcomes");
  std::vector<Rational> out(static_cast<size_t>(g.rows()));
  for (int j = 0; j < g.cols(); ++j)
    out[static_cast<size_t>(g.col_map()[static_cast<size_t>(j)] - 1)] += a[j];
  return Proposition(std::move(out));
}

AdmissibleMatrix compose(const AdmissibleMatrix& outer, const AdmissibleMatrix& inner) {
  if (outer.cols() != inner.rows())
    throw ShapeMismatchError("compose: outer has " + std::to_string(outer.cols()) +
                             " columns, inner has " + std::to_string(inner.rows()) +
                             " rows");
  std::vector<int> cm(inner.col_map().size());
  for (size_t j = 0; j < cm.size(); ++j)
    cm[j] = outer.col_map()[static_cast<size_t>(inner.col_map()[j] - 1)];
  return AdmissibleMatrix(outer.rows(), std::move(cm));
}

AdmissibleRange::AdmissibleRange(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw EmptyError("enumerate_admissible: rows and cols must be >= 1");
}

AdmissibleRange::iterator::iterator(int rows, int cols)
    : rows_(rows), col_map_(static_cast<size_t>(cols), 1), done_(false) {}

AdmissibleRange::iterator& AdmissibleRange::iterator::operator++() {
  // odometer with the last column fastest: lexicographic col_map order
  for (size_t j = col_map_.size(); j-- > 0;) {
    if (col_map_[j] < rows_) {
      ++col_map_[j];
      return *this;
    }
    col_map_[j] = 1;
  }
  done_ = true;
  return *this;
}

mpz_class AdmissibleRange::count() const {
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(rows_),
                static_cast<unsigned long>(cols_));
  return c;
}

} // namespace cld
