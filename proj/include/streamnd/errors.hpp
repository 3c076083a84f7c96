#ifndef STREAMND_ERRORS_HPP_
#define STREAMND_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streamnd {

// Argument and precondition failures are reported with std::invalid_argument.

/// Malformed input file; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &source, std::size_t line, const std::string &message);

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// An exhaustive routine refused to run because its size guard was exceeded.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// No feasible solution exists for the requested connectivity requirements.
class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A structural guarantee of a finished data structure did not hold.
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace streamnd

#endif // STREAMND_ERRORS_HPP_
