#ifndef ORBITCOVER_ERRORS_HPP
#define ORBITCOVER_ERRORS_HPP

#include <stdexcept>

namespace orbitcover {

// Index or mode index outside its cyclic range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Element is not a member of the set it was used with.
class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid input: non-units, size mismatches, k > n, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace orbitcover

#endif  // ORBITCOVER_ERRORS_HPP
