#include "cld/composite.hpp"

#include <string>

#include "cld/errors.hpp"

namespace cld {

namespace {

void require_shape(const Proposition& a, BipartiteShape shape, const char* who) {
  if (shape.d1 < 1 || shape.d2 < 1)
    throw ShapeMismatchError(std::string(who) + ": factor dimensions must be >= 1");
  if (a.size() != shape.d1 * shape.d2)
    throw ShapeMismatchError(std::string(who) + ": proposition has " +
                             std::to_string(a.size()) + " outcomes, shape wants " +
                             std::to_string(shape.d1 * shape.d2));
}

void require4(const Proposition& a, const char* who) {
  if (a.size() != 4)
    throw ShapeMismatchError(std::string(who) + ": expected 4 outcomes, got " +
                             std::to_string(a.size()));
}

} // namespace

Proposition tensor(const Proposition& a, const Proposition& b) {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) out.push_back(a[i] * b[j]);
  return Proposition(std::move(out));
}

Proposition marginal_first(const Proposition& a, BipartiteShape shape) {
  require_shape(a, shape, "marginal_first");
  std::vector<Rational> out(static_cast<size_t>(shape.d1));
  for (int i = 0; i < shape.d1; ++i)
    for (int j = 0; j < shape.d2; ++j) out[static_cast<size_t>(i)] += a[i * shape.d2 + j];
  return Proposition(std::move(out));
}

Proposition marginal_second(const Proposition& a, BipartiteShape shape) {
  require_shape(a, shape, "marginal_second");
  std::vector<Rational> out(static_cast<size_t>(shape.d2));
  for (int i = 0; i < shape.d1; ++i)
    for (int j = 0; j < shape.d2; ++j) out[static_cast<size_t>(j)] += a[i * shape.d2 + j];
  return Proposition(std::move(out));
}

Rational context(const Proposition& a) {
  require4(a, "context");
  return a[0] * a[3] - a[1] * a[2];
}

bool is_decomposable(const Proposition& a) {
  require4(a, "is_decomposable");
  return context(a).sign() == 0;
}

bool is_decomposable(const Proposition& a, BipartiteShape shape) {
  require_shape(a, shape, "is_decomposable");
  // rank <= 1 of the reshaped grid: every 2x2 minor vanishes
  for (int i1 = 0; i1 < shape.d1; ++i1)
    for (int i2 = i1 + 1; i2 < shape.d1; ++i2)
      for (int j1 = 0; j1 < shape.d2; ++j1)
        for (int j2 = j1 + 1; j2 < shape.d2; ++j2) {
          const Rational minor = a[i1 * shape.d2 + j1] * a[i2 * shape.d2 + j2] -
                                 a[i1 * shape.d2 + j2] * a[i2 * shape.d2 + j1];
          if (minor.sign() != 0) return false;
        }
  return true;
}

std::pair<Proposition, Proposition> decompose(const Proposition& a) {
  require4(a, "decompose");
  if (!is_decomposable(a))
    throw NotDecomposableError("decompose: context is " + context(a).str() +
                               ", expected 0");
  const BipartiteShape shape{2, 2};
  return {marginal_first(a, shape), marginal_second(a, shape)};
}

Proposition from_pqc(const PqcForm& form) {
  const Rational one(1);
  std::vector<Rational> entries = {
      form.p * form.q + form.C,
      form.p * (one - form.q) - form.C,
      form.q * (one - form.p) - form.C,
      (one - form.p) * (one - form.q) + form.C,
  };
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].sign() < 0)
      throw InfeasibleError("from_pqc: entry " + std::to_string(i + 1) +
                            " is negative (" + entries[i].str() + ")");
  return Proposition(std::move(entries));
}

PqcForm to_pqc(const Proposition& a) {
  require4(a, "to_pqc");
  return PqcForm{a[0] + a[1], a[0] + a[2], context(a)};
}

NearestProduct nearest_product_distance(const Proposition& a, int grid_denominator) {
  require4(a, "nearest_product_distance");
  if (grid_denominator < 4)
    throw OutOfRangeError("nearest_product_distance: grid denominator must be >= 4");
  const int g = grid_denominator;
  bool have = false;
  NearestProduct best{Rational(0), PqcForm{Rational(0), Rational(0), Rational(0)}};
  for (int i = 0; i <= g; ++i) {
    const Rational x(i, g);
    const Proposition first({x, Rational(1) - x});
    for (int j = 0; j <= g; ++j) {
      const Rational y(j, g);
      const Rational d = distance(a, tensor(first, Proposition({y, Rational(1) - y})));
      // strict improvement keeps the first (smallest x, then y) attainment
      if (!have || d < best.dist) {
        have = true;
        best = {d, PqcForm{x, y, Rational(0)}};
      }
    }
  }
  return best;
}

Proposition context_family(const Rational& c) {
  if (c < Rational(-1, 4) || c > Rational(1, 4))
    throw OutOfRangeError("context_family: C must lie in [-1/4, 1/4], got " + c.str());
  const Rational quarter(1, 4);
  return Proposition({quarter + c, quarter - c, quarter - c, quarter + c});
}

} // namespace cld
