#ifndef CLD_CONNECTIVES_HPP
#define CLD_CONNECTIVES_HPP

#include <span>
#include <string_view>
#include <vector>

#include "cld/admissible.hpp"
#include "cld/proposition.hpp"

namespace cld {

// An n-place connective: a selector applied to the tensor product of the
// operands. The selector must have product(input_dims) columns; its row count
// is the output dimension.
struct ConnectiveSpec {
  std::vector<int> input_dims;
  AdmissibleMatrix selector;

  ConnectiveSpec(std::vector<int> dims, AdmissibleMatrix sel);

  int arity() const { return static_cast<int>(input_dims.size()); }
  int output_dim() const { return selector.rows(); }
};

// apply(selector, props[0] (x) ... (x) props[n-1]). Operand shapes must match
// input_dims.
Proposition apply_connective(const ConnectiveSpec& spec,
                             std::span<const Proposition> props);

// 4-valued connectives, closed forms. Each equals apply_connective with the
// corresponding selector below (tested, not assumed).
Proposition negation4(const Proposition& a);
Proposition conjunction4(const Proposition& a, const Proposition& b);
Proposition disjunction4(const Proposition& a, const Proposition& b);

// The 4x16 selectors realizing conjunction4/disjunction4. Columns are indexed
// by outcome pairs (i,j); column (i,j) maps to the meet (resp. join) of i and
// j in the diamond order 1 > {2,3} > 4. The sixteen pairs partition exactly
// across the four outputs, reproducing the closed forms monomial for
// monomial.
const AdmissibleMatrix& meet_selector();
const AdmissibleMatrix& join_selector();

// 2-valued connectives induced on logical projections.
Proposition not2(const Proposition& a);
Proposition and2(const Proposition& a, const Proposition& b);
Proposition or2(const Proposition& a, const Proposition& b);

// Named built-ins: "not4", "and4", "or4", "not2", "and2", "or2". Throws
// Error for unknown names.
ConnectiveSpec builtin_connective(std::string_view name);

} // namespace cld

#endif
