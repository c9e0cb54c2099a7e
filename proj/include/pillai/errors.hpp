#ifndef PILLAI_ERRORS_HPP
#define PILLAI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pillai {

/// An index or size exceeded the configured window.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Input outside an operation's mathematical domain (composite where a
/// prime is required, parity mismatch, failed lemma hypothesis, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Certified evaluation could not reach the required accuracy before the
/// precision cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Persisted state (checkpoint files) failed validation.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pillai

#endif  // PILLAI_ERRORS_HPP
