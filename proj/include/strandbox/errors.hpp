#pragma once

#include <stdexcept>
#include <string>

namespace strandbox {

/// Precondition violated by the caller (bad vertex, malformed word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation is only defined for the type C~ family.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotLocallyFree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A consistency check between two independent computations failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace strandbox
