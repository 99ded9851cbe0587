#pragma once

#include <stdexcept>
#include <string>

namespace k3n {

/// A caller-supplied value violates a documented precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Seeing one means either a bug or a
/// counterexample to one of the lattice-theoretic facts the library relies on.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A randomized or iterative search ran out of its budget without an answer.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace k3n
