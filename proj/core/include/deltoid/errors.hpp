#ifndef DELTOID_ERRORS_HPP
#define DELTOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace deltoid {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidState : std::logic_error {
  using std::logic_error::logic_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCombination : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace deltoid

#endif
