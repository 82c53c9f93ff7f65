#include "cld/connectives.hpp"

#include <string>

#include "cld/composite.hpp"
#include "cld/errors.hpp"

namespace cld {

namespace {

void require4(const Proposition& a, const char* who) {
  if (a.size() != 4)
    throw ShapeMismatchError(std::string(who) + ": expected 4 outcomes, got " +
                             std::to_string(a.size()));
}

void require2(const Proposition& a, const char* who) {
  if (a.size() != 2)
    throw ShapeMismatchError(std::string(who) + ": expected 2 outcomes, got " +
                             std::to_string(a.size()));
}

// Diamond order on {1,2,3,4}: 1 on top, 4 at bottom, 2 and 3 incomparable.
int diamond_meet(int i, int j) {
  if (i == j) return i;
  if (i == 1) return j;
  if (j == 1) return i;
  return 4; // {2,3}, {2,4}, {3,4}
}

int diamond_join(int i, int j) {
  if (i == j) return i;
  if (i == 4) return j;
  if (j == 4) return i;
  return 1; // {1,2}, {1,3}, {2,3}
}

AdmissibleMatrix pair_selector(int (*op)(int, int)) {
  std::vector<int> cm;
  cm.reserve(16);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) cm.push_back(op(i, j));
  return AdmissibleMatrix(4, std::move(cm));
}

} // namespace

ConnectiveSpec::ConnectiveSpec(std::vector<int> dims, AdmissibleMatrix sel)
    : input_dims(std::move(dims)), selector(std::move(sel)) {
  if (input_dims.empty()) throw EmptyError("ConnectiveSpec: no operands");
  long long product = 1;
  for (int d : input_dims) {
    if (d < 1) throw ShapeMismatchError("ConnectiveSpec: operand dimension < 1");
    product *= d;
  }
  if (product != selector.cols())
    throw ShapeMismatchError("ConnectiveSpec: selector has " +
                             std::to_string(selector.cols()) +
                             " columns, operands span " + std::to_string(product));
}

Proposition apply_connective(const ConnectiveSpec& spec,
                             std::span<const Proposition> props) {
  if (static_cast<int>(props.size()) != spec.arity())
    throw ShapeMismatchError("apply_connective: expected " +
                             std::to_string(spec.arity()) + " operands, got " +
                             std::to_string(props.size()));
  for (int k = 0; k < spec.arity(); ++k)
    if (props[static_cast<size_t>(k)].size() != spec.input_dims[static_cast<size_t>(k)])
      throw ShapeMismatchError("apply_connective: operand " + std::to_string(k + 1) +
                               " has " + std::to_string(props[static_cast<size_t>(k)].size()) +
                               " outcomes, expected " +
                               std::to_string(spec.input_dims[static_cast<size_t>(k)]));
  Proposition state = props[0];
  for (size_t k = 1; k < props.size(); ++k) state = tensor(state, props[k]);
  return apply(spec.selector, state);
}

Proposition negation4(const Proposition& a) {
  require4(a, "negation4");
  return Proposition({a[3], a[2], a[1], a[0]});
}

Proposition conjunction4(const Proposition& a, const Proposition& b) {
  require4(a, "conjunction4");
  require4(b, "conjunction4");
  return Proposition({
      a[0] * b[0],
      a[0] * b[1] + a[1] * b[0] + a[1] * b[1],
      a[0] * b[2] + a[2] * b[0] + a[2] * b[2],
      a[1] * b[2] + a[2] * b[1] + a[3] + b[3] - a[3] * b[3],
  });
}

Proposition disjunction4(const Proposition& a, const Proposition& b) {
  require4(a, "disjunction4");
  require4(b, "disjunction4");
  return Proposition({
      a[2] * b[1] + a[1] * b[2] + a[0] + b[0] - a[0] * b[0],
      a[3] * b[1] + a[1] * b[3] + a[1] * b[1],
      a[3] * b[2] + a[2] * b[3] + a[2] * b[2],
      a[3] * b[3],
  });
}

const AdmissibleMatrix& meet_selector() {
  static const AdmissibleMatrix sel = pair_selector(diamond_meet);
  return sel;
}

const AdmissibleMatrix& join_selector() {
  static const AdmissibleMatrix sel = pair_selector(diamond_join);
  return sel;
}

Proposition not2(const Proposition& a) {
  require2(a, "not2");
  return Proposition({a[1], a[0]});
}

Proposition and2(const Proposition& a, const Proposition& b) {
  require2(a, "and2");
  require2(b, "and2");
  const Rational t = a[0] * b[0];
  return Proposition({t, Rational(1) - t});
}

Proposition or2(const Proposition& a, const Proposition& b) {
  require2(a, "or2");
  require2(b, "or2");
  const Rational f = a[1] * b[1];
  return Proposition({Rational(1) - f, f});
}

ConnectiveSpec builtin_connective(std::string_view name) {
  if (name == "not4")
    return ConnectiveSpec({4}, AdmissibleMatrix(4, {4, 3, 2, 1}));
  if (name == "and4") return ConnectiveSpec({4, 4}, meet_selector());
  if (name == "or4") return ConnectiveSpec({4, 4}, join_selector());
  if (name == "not2") return ConnectiveSpec({2}, AdmissibleMatrix(2, {2, 1}));
  if (name == "and2")
    return ConnectiveSpec({2, 2}, AdmissibleMatrix(2, {1, 2, 2, 2}));
  if (name == "or2")
    return ConnectiveSpec({2, 2}, AdmissibleMatrix(2, {1, 1, 1, 2}));
  throw Error("builtin_connective: unknown name '" + std::string(name) + "'");
}

} // namespace cld
