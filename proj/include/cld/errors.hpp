#ifndef CLD_ERRORS_HPP
#define CLD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cld {

// Base class for all domain errors thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Proposition construction.
struct EmptyError : Error {
  using Error::Error;
};
struct NegativeEntryError : Error {
  using Error::Error;
};
struct NotNormalizedError : Error {
  using Error::Error;
};

// Dimension disagreements between values.
struct ShapeMismatchError : Error {
  using Error::Error;
};

// Selector matrix construction.
struct RowOutOfRangeError : Error {
  using Error::Error;
};

// Composite-state operations.
struct NotDecomposableError : Error {
  using Error::Error;
};
struct InfeasibleError : Error {
  using Error::Error;
};
struct OutOfRangeError : Error {
  using Error::Error;
};

// Audit preconditions.
struct NotPreservingError : Error {
  using Error::Error;
};

} // namespace cld

#endif
