#ifndef SEXTIC_ERRORS_HPP
#define SEXTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sextic {

// Argument outside an operation's documented domain (zero input, bad k, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An operation whose contract requires an irreducible polynomial was handed a
// reducible one.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

// The exact factorizer only supports degrees 1..6.
class UnsupportedDegreeError : public DomainError {
public:
    using DomainError::DomainError;
};

// p mod q has a repeated factor; callers iterating over primes skip q.
class NotSquarefreeModQError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Root reconstruction was still ambiguous at the precision cap (2048 bits).
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A decision table was entered with a value combination it cannot produce.
// Signals an implementation bug, never bad user input.
class InternalInconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sextic

#endif
