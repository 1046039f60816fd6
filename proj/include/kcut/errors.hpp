#pragma once

#include <stdexcept>
#include <string>

namespace kcut {

// Input could not be parsed (graph6, edge lists, family tags, CLI values).
// Messages carry the byte offset or line number of the offending token.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured work budget (partition count, subset count, edge limit for
// Steiner enumeration, packing nodes, wall clock) was exceeded.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed: two independent code paths disagreed, a
// certificate did not validate, or a guaranteed inequality was violated.
// Seeing this exception always means a bug in this library.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace kcut
