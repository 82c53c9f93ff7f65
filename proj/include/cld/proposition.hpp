#ifndef CLD_PROPOSITION_HPP
#define CLD_PROPOSITION_HPP

#include <vector>

#include "cld/rational.hpp"

namespace cld {

// A probability vector over N >= 1 logical outcomes: every entry is a
// nonnegative exact rational and the entries sum to exactly 1. Immutable
// after construction.
class Proposition {
public:
  // Validating constructor. Throws EmptyError, NegativeEntryError or
  // NotNormalizedError.
  explicit Proposition(std::vector<Rational> probs);

  // All entries 1/n.
  static Proposition uniform(int n);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& probs() const { return probs_; }

  // "[3/8, 1/8, 1/8, 3/8]"
  std::string str() const;

  friend bool operator==(const Proposition&, const Proposition&) = default;

private:
  std::vector<Rational> probs_;
};

// Total-variation distance (1/2) * sum_i |p_i - q_i|. Requires equal outcome
// counts (ShapeMismatchError otherwise).
Rational distance(const Proposition& a, const Proposition& b);

} // namespace cld

#endif
