#pragma once

#include <stdexcept>
#include <string>

namespace pfactor {

/// A size limit was exceeded: vertex cap, brute-force caps, enumeration overflow.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Malformed graph6 or edge-list input.
class FormatError : public std::invalid_argument {
public:
    explicit FormatError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pfactor
