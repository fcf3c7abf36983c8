#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace askey {

// A (q-)Pochhammer factor in a series denominator vanished before the
// series terminated.
class DenominatorVanished : public std::domain_error {
public:
  explicit DenominatorVanished(std::size_t index)
      : std::domain_error("denominator vanished at index " + std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

// Parameters violate a family's admissibility constraints.
class InadmissibleParams : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Weight or norm has a vanishing denominator at a lattice index.
class VanishingDenominator : public std::domain_error {
public:
  VanishingDenominator(const std::string& what, std::size_t index)
      : std::domain_error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

class NonPositiveWeight : public std::domain_error {
public:
  explicit NonPositiveWeight(std::size_t index)
      : std::domain_error("non-positive weight at x = " + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

// A point that needs a rational square root was not given as a Pythagorean pair.
class InadmissiblePoint : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ZeroArgument : public std::domain_error {
public:
  ZeroArgument() : std::domain_error("Laurent polynomial evaluated at z = 0") {}
};

class NonConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonFinite : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace askey
