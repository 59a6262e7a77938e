#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decindex {

/// Malformed decimal or index text. position() is the zero-based offset of
/// the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A tuple violates the canonical-form constraints required by the caller.
class CanonicalityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rendering a tuple would exceed the configured character budget.
class RenderBudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace decindex
