#ifndef JAMESLOOP_ERRORS_HPP
#define JAMESLOOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jamesloop
{

// Malformed input: bad rationals, bad JSON, dangling cube references.
// The CLI maps it to exit code 2.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A presentation that is syntactically broken: unknown cube, face arity
// mismatch, bad degeneracy word. Distinct from a cubical-relation violation.
class StructureError : public ParseError
{
public:
    using ParseError::ParseError;
};

// Violated precondition of a well-formed request. Exit code 1.
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace jamesloop

#endif
