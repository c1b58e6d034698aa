#ifndef LANGNET_ERRORS_HPP
#define LANGNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace langnet {

/// Invalid user-supplied parameter (out-of-range counts, unknown names).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition. Indicates a bug, not bad input.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or inconsistent input data (files, dumps).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace langnet

#endif  // LANGNET_ERRORS_HPP
