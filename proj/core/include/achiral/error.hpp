#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace achiral {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes: InvalidInput -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Input is well formed but the requested object does not exist.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class NotSumOfTwoSquares : public Infeasible {
 public:
  NotSumOfTwoSquares(std::uint64_t n, std::uint64_t witness)
      : Infeasible(std::to_string(n) + " is not a sum of two squares, witness " +
                   std::to_string(witness)),
        n_(n),
        witness_(witness) {}

  std::uint64_t value() const noexcept { return n_; }
  std::uint64_t witness() const noexcept { return witness_; }

 private:
  std::uint64_t n_;
  std::uint64_t witness_;
};

class NoCoprimeDecomposition : public Infeasible {
 public:
  explicit NoCoprimeDecomposition(std::uint64_t n)
      : Infeasible(std::to_string(n) +
                   " is not a sum of squares of two coprime numbers") {}
};

class ExcludedValue : public Infeasible {
 public:
  explicit ExcludedValue(std::uint64_t n)
      : Infeasible(std::to_string(n) +
                   " is not the determinant of a prime alternating achiral knot") {}
};

class NonRealizable : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

// The closure produced more than one component where a knot was required.
class LinkNotKnot : public Infeasible {
 public:
  explicit LinkNotKnot(int components)
      : Infeasible("closure has " + std::to_string(components) +
                   " components, expected a knot"),
        components_(components) {}

  int components() const noexcept { return components_; }

 private:
  int components_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class MethodDisagreement : public Error {
 public:
  MethodDisagreement(std::string what, std::vector<std::string> transcript)
      : Error(std::move(what)), transcript_(std::move(transcript)) {}

  const std::vector<std::string>& transcript() const noexcept { return transcript_; }

 private:
  std::vector<std::string> transcript_;
};

}  // namespace achiral
