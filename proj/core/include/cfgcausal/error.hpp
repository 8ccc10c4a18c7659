#pragma once

#include <stdexcept>
#include <string>

namespace cfgcausal {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Raised by the causal models when both sequences are symbol-for-symbol equal.
class IdenticalInput : public Error {
 public:
  IdenticalInput() : Error("identical sequences") {}
};

class AmbiguousNucleotide : public Error {
 public:
  AmbiguousNucleotide(char c, std::size_t position)
      : Error("ambiguous nucleotide '" + std::string(1, c) + "' at position " +
              std::to_string(position)),
        character_(c),
        position_(position) {}

  char character() const noexcept { return character_; }
  std::size_t position() const noexcept { return position_; }

 private:
  char character_;
  std::size_t position_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class DegenerateVariance : public Error {
 public:
  DegenerateVariance() : Error("both groups have zero winsorized variance") {}
};

}  // namespace cfgcausal
