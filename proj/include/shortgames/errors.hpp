#pragma once

#include <stdexcept>
#include <string>

namespace shortgames {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a GameId is not valid in the store it was handed to.
class UnknownHandleError : public Error {
public:
    UnknownHandleError() : Error("unknown game handle") {}
};

// Thrown by enumerate_tier for n >= 3; tier 3 already has 2^257 pairs of
// subsets, so exhaustive enumeration stops at tier 2.
class TierTooLargeError : public Error {
public:
    TierTooLargeError() : Error("tier too large to enumerate") {}
};

}  // namespace shortgames
