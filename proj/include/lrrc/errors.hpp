#pragma once

#include <stdexcept>
#include <string>

namespace lrrc {

// Input violates a mathematical precondition (non-member tableau, bad shape...).
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// A result failed a postcondition that should hold by theory.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace lrrc
