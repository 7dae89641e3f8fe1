#ifndef FRAMEKIT_ERRORS_HPP
#define FRAMEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace framekit {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: not JSON, or not the documented shape.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// Well-formed document violating its own invariants (duplicate names,
// dangling cover references, cover cycles).
class SemanticError : public Error {
public:
    explicit SemanticError(const std::string& what) : Error("semantic error: " + what) {}
};

// A poset that is not a bounded lattice (missing bounds, missing meets/joins).
class LatticeError : public Error {
public:
    explicit LatticeError(const std::string& what) : Error("lattice error: " + what) {}
};

// A configurable size or enumeration cap was exceeded.
class CapError : public Error {
public:
    explicit CapError(const std::string& what) : Error("cap exceeded: " + what) {}
};

// An operation was called outside its contract (non-distributive lattice,
// operator over the wrong base, invalid congruence, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition violated: " + what) {}
};

// Redundant computations of the same value disagree. The redundancy is the
// test surface: this is never caught and turned into a default answer.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error("internal consistency error: " + what) {}
};

} // namespace framekit

#endif
