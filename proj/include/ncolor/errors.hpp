// errors.hpp -- exception types

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncolor {

/// An argument violates the precondition of a domain operation.
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Text input could not be parsed. `index` is the 0-based offset of the
/// first offending character.
class ParseError : public DomainError
{
public:
    ParseError(const std::string& what, std::size_t index)
      : DomainError(what + " (at index " + std::to_string(index) + ")"),
        _index(index)
    {}

    std::size_t index() const noexcept { return _index; }

private:
    std::size_t _index;
};

} // namespace ncolor
