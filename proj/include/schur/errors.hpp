#pragma once

#include <stdexcept>

namespace schur {

// Partition input whose parts are not weakly decreasing.
class NotWeaklyDecreasing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// More than n nonzero parts for ambient rank n.
class TooManyParts : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cut index s outside 0..n-1.
class SOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Comparing products of different total degree.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Schur-basis elimination hit a non-partition leading term or a negative
// coefficient. Indicates a bug, never bad user input.
class DecompositionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed partition text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checked integer arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace schur
