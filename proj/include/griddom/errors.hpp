#pragma once

#include <stdexcept>
#include <string>

namespace griddom {

// A request exceeds a documented implementation bound.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A periodicity search ran past its horizon; retry with a larger one.
class HorizonError : public std::runtime_error {
 public:
  explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace griddom
