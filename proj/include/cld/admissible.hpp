#ifndef CLD_ADMISSIBLE_HPP
#define CLD_ADMISSIBLE_HPP

#include <cstdint>
#include <iterator>
#include <vector>

#include "cld/proposition.hpp"

namespace cld {

// An M x N 0/1 selector matrix with exactly one 1 per column, stored as the
// column -> row map. col_map[j] is the 1-based row holding the single 1 of
// column j; external text is 1-based throughout.
class AdmissibleMatrix {
public:
  AdmissibleMatrix(int rows, std::vector<int> col_map);

  static AdmissibleMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(col_map_.size()); }
  const std::vector<int>& col_map() const { return col_map_; }

  // Dense 0/1 expansion, rows() x cols().
  std::vector<std::vector<int>> dense() const;

  friend bool operator==(const AdmissibleMatrix&, const AdmissibleMatrix&) = default;

private:
  int rows_;
  std::vector<int> col_map_;
};

// Pushes the probability mass of A forward: out[i] = sum of A[j] over columns
// j mapped to row i. The result is a valid proposition on rows() outcomes.
Proposition apply(const AdmissibleMatrix& g, const Proposition& a);

// Selector realizing apply(outer, apply(inner, .)). Requires
// outer.cols() == inner.rows().
AdmissibleMatrix compose(const AdmissibleMatrix& outer, const AdmissibleMatrix& inner);

// Lazy range over all rows^cols selectors of a given shape, in lexicographic
// col_map order ([1,1,...,1] first). Enumeration is deterministic; use
// count() for the exact total.
class AdmissibleRange {
public:
  AdmissibleRange(int rows, int cols);

  class iterator {
  public:
    using value_type = AdmissibleMatrix;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() : rows_(0), done_(true) {}
    iterator(int rows, int cols);

    AdmissibleMatrix operator*() const { return AdmissibleMatrix(rows_, col_map_); }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.col_map_ == b.col_map_);
    }

  private:
    int rows_;
    std::vector<int> col_map_;
    bool done_;
  };

  iterator begin() const { return iterator(rows_, cols_); }
  iterator end() const { return iterator(); }

  // rows^cols, exact.
  mpz_class count() const;

private:
  int rows_;
  int cols_;
};

inline AdmissibleRange enumerate_admissible(int rows, int cols) {
  return AdmissibleRange(rows, cols);
}

} // namespace cld

#endif
