#pragma once

#include <stdexcept>
#include <string>

namespace psc {

// Malformed textual input (sequence files, CLI arguments).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but violates a mathematical precondition: an all-zero
// sequence, a monomial handed to the scaling fitter, a non-Golay pair handed
// to a constructor, an inadmissible length.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InadmissibleLength : public DomainError {
 public:
  explicit InadmissibleLength(long long length)
      : DomainError("inadmissible length " + std::to_string(length) +
                    ": not of the form 2^a * 10^b * 26^c"),
        length_(length) {}

  long long length() const noexcept { return length_; }

 private:
  long long length_;
};

}  // namespace psc
