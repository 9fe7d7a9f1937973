// include/k3bn/errors.hpp - exception types shared by all k3bn modules.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace k3bn {

/// Invalid argument to an operation (negative rank, impossible Grassmannian, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A class or matrix whose shape does not match the lattice it is used with.
class DimensionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Product or evaluation in the scroll Chow ring outside degrees 0..3.
class DegreeError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Malformed textual input (JSON lattice, scroll class string, ...).
class ParseError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A prediction was requested without the hypotheses the theorem needs.
class HypothesisError : public std::logic_error {
 public:
  HypothesisError(std::string hypothesis, const std::string& what)
      : std::logic_error(what), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace k3bn
