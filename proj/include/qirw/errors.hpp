#pragma once

#include <stdexcept>
#include <string>

namespace qirw {

// Bad caller input: unknown vertex, malformed file, violated precondition.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-backed postcondition failed at runtime. These are guaranteed by
// the construction, so a throw here means an implementation bug; the message
// carries the witness that broke the claim.
class AssertionError : public std::logic_error {
public:
    explicit AssertionError(const std::string& what) : std::logic_error(what) {}
};

// Resource guard tripped (e.g. exhaustive search asked for on too many vertices).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qirw
