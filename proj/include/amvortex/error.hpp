#ifndef AMVORTEX_ERROR_HPP
#define AMVORTEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace amvortex {

/// Bad caller input: domain violations, malformed files, unsupported sizes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of a mathematical operation does not hold
/// (e.g. a function handed to the Darboux step does not solve its ODE).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact identity failed. Reaching this means an arithmetic bug,
/// never bad luck: every check that raises it is exact.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No solution exists for a linear system that was expected to be solvable.
class NoSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace amvortex

#endif  // AMVORTEX_ERROR_HPP
