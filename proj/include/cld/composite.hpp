#ifndef CLD_COMPOSITE_HPP
#define CLD_COMPOSITE_HPP

#include <utility>

#include "cld/proposition.hpp"

namespace cld {

// Factor dimensions of a composite device. Composite outcome k (1-based)
// corresponds to the pair (i, j) with k = (i-1)*d2 + j, so for 2x2 the first
// projection is (p1+p2, p3+p4) and the second is (p1+p3, p2+p4).
struct BipartiteShape {
  int d1;
  int d2;

  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;
};

// Product state: entry (i,j) = a[i] * b[j] under the index convention above.
Proposition tensor(const Proposition& a, const Proposition& b);

// Logical projections (marginals) of a composite proposition.
Proposition marginal_first(const Proposition& a, BipartiteShape shape);
Proposition marginal_second(const Proposition& a, BipartiteShape shape);

// Context variable of a 4-outcome proposition: p1*p4 - p2*p3. Zero exactly
// when the proposition is the tensor product of its projections.
Rational context(const Proposition& a);

// 2x2 decomposability: context == 0.
bool is_decomposable(const Proposition& a);

// General-shape decomposability: the reshaped d1 x d2 grid has rank <= 1
// (all 2x2 minors vanish). Coincides with context == 0 for 2x2.
bool is_decomposable(const Proposition& a, BipartiteShape shape);

// Splits a decomposable 4-outcome proposition into its projections; the
// tensor of the results reproduces the input exactly. Throws
// NotDecomposableError when context != 0.
std::pair<Proposition, Proposition> decompose(const Proposition& a);

// (p, q, C) coordinates of a 4-outcome proposition: p and q are the "true"
// masses of the two subsystems and C is the context. The four entries
// [pq+C, p(1-q)-C, q(1-p)-C, (1-p)(1-q)+C] recover the proposition.
struct PqcForm {
  Rational p;
  Rational q;
  Rational C;

  friend bool operator==(const PqcForm&, const PqcForm&) = default;
};

// Builds the 4-outcome proposition with the given coordinates. Throws
// InfeasibleError when some entry would be negative.
Proposition from_pqc(const PqcForm& form);

// Extracts (p, q, C); from_pqc(to_pqc(a)) == a for every 4-outcome a.
PqcForm to_pqc(const Proposition& a);

// Exact exhaustive minimization of distance(a, [x,1-x] (x) [y,1-y]) over the
// grid x, y in {0, 1/g, ..., 1}. Ties break toward smallest x, then smallest
// y. The argmin is returned as a PqcForm with C = 0.
struct NearestProduct {
  Rational dist;
  PqcForm argmin;
};
NearestProduct nearest_product_distance(const Proposition& a, int grid_denominator);

// The symmetric one-parameter family [1/4+C, 1/4-C, 1/4-C, 1/4+C]; its
// context equals C and both marginals are uniform for every C in
// [-1/4, 1/4]. Throws OutOfRangeError outside that interval.
Proposition context_family(const Rational& c);

} // namespace cld

#endif
