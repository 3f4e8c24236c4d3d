#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deza {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset` is the zero-based byte position of the
/// first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A verified identity failed on a concrete instance. Either the input is
/// outside the scope of the statement being checked or there is a bug.
class ContradictionError : public Error {
public:
    using Error::Error;
};

/// Parameters that cannot belong to any graph (negative radicand,
/// non-integral multiplicities and so on).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A spectrum does not have the +/- paired shape a check requires.
class ShapeError : public Error {
public:
    using Error::Error;
};

} // namespace deza
