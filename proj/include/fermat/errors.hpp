#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fermat {

// A quantity that must be an exact square is not one. `quantity` names the
// offending expression, `value` is its decimal rendering.
class NotASquare : public std::runtime_error {
 public:
  NotASquare(std::string quantity, std::string value)
      : std::runtime_error("not a square: " + quantity + " = " + value),
        quantity_(std::move(quantity)),
        value_(std::move(value)) {}

  const std::string& quantity() const noexcept { return quantity_; }
  const std::string& value() const noexcept { return value_; }

 private:
  std::string quantity_;
  std::string value_;
};

// A factor required nonzero by the selected closed-form branch
// (c, d, d+c, d-c, bc+ad or bc-ad) vanished.
class DegenerateSystem : public std::runtime_error {
 public:
  explicit DegenerateSystem(const std::string& what)
      : std::runtime_error("degenerate system: " + what) {}
};

class NonPositiveSum : public std::runtime_error {
 public:
  explicit NonPositiveSum(const std::string& sum)
      : std::runtime_error("x + y must be positive, got " + sum) {}
};

class InvalidGenerator : public std::runtime_error {
 public:
  explicit InvalidGenerator(const std::string& what)
      : std::runtime_error("invalid generator pair: " + what) {}
};

}  // namespace fermat
