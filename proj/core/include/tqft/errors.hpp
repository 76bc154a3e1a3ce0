#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tqft {

/// Input text could not be parsed; offset is a 0-based position when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    explicit ParseError(const std::string& what)
        : std::runtime_error(what), offset_(std::string::npos) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A configurable resource cap (recursion nodes, search size) was exceeded.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tqft
