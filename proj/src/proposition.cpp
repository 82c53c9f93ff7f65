#include "cld/proposition.hpp"

#include <sstream>

#include "cld/errors.hpp"

namespace cld {

Proposition::Proposition(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw EmptyError("Proposition: no outcomes");
  Rational sum;
  for (size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i].sign() < 0)
      throw NegativeEntryError("Proposition: entry " + std::to_string(i + 1) +
                               " is negative (" + probs_[i].str() + ")");
    sum += probs_[i];
  }
  if (sum != Rational(1))
    throw NotNormalizedError("Proposition: entries sum to " + sum.str() +
                             ", expected 1");
}

Proposition Proposition::uniform(int n) {
  if (n < 1) throw EmptyError("uniform: outcome count must be >= 1");
  return Proposition(std::vector<Rational>(static_cast<size_t>(n), Rational(1, n)));
}

std::string Proposition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < probs_.size(); ++i) {
    if (i) os << ", ";
    os << probs_[i];
  }
  os << ']';
  return os.str();
}

Rational distance(const Proposition& a, const Proposition& b) {
  if (a.size() != b.size())
    throw ShapeMismatchError("distance: outcome counts differ (" +
                             std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + ")");
  Rational sum;
  for (int i = 0; i < a.size(); ++i) sum += (a[i] - b[i]).abs();
  return sum * Rational(1, 2);
}

} // namespace cld
