#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stackwords {

// Malformed call: empty word where one is required, L < n, inverted ranges.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of an indexed sequence (e.g. f_0).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// tortoise_sort_index exceeded its iteration guard.
class iteration_cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Prefix doubling reached policy.max_length without the factor count settling.
class resource_cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace stackwords
