#ifndef BOXKIT_ERRORS_HPP
#define BOXKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boxkit {

// Invalid argument, violated precondition, or malformed construction input.
class ParamError : public std::runtime_error {
public:
    explicit ParamError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed serialized input; byte_offset points at the failure when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset = 0)
        : std::runtime_error(msg), byte_offset_(byte_offset) {}
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// A configured cap (vertex count, node budget) was exceeded.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace boxkit

#endif
