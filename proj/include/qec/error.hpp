#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qec {

// Malformed graph expression or edge-list file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string& what)
        : std::runtime_error(what), offset_(std::string::npos) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A caller-side precondition was violated (bad size, non-symmetric input, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotConnected : public InvalidArgument {
public:
    NotConnected(int u, int v)
        : InvalidArgument("graph is not connected: no path between vertex " + std::to_string(u) +
                          " and vertex " + std::to_string(v)),
          u_(u), v_(v) {}

    int u() const noexcept { return u_; }
    int v() const noexcept { return v_; }

private:
    int u_, v_;
};

// Something that a proven identity guarantees cannot happen did happen.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qec
