#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text or value sequence is not a valid permutation.
struct NotAPermutation : Error {
    using Error::Error;
};

/// Two operands were expected to have the same rank.
struct RankMismatch : Error {
    using Error::Error;
};

/// An exhaustive sweep would exceed the configured enumeration cap.
struct RankCapExceeded : Error {
    using Error::Error;
};

/// A parameter (k, m, d, ...) lies outside the operation's domain.
struct OutOfRange : Error {
    using Error::Error;
};

/// No permutation has the requested dot product with the identity.
struct NotAchievable : Error {
    using Error::Error;
};

/// The given vector is not the augmented zone-crossing vector of any permutation.
struct NotARealizableVector : Error {
    using Error::Error;
};

/// An operator required exact integer division and the input did not divide.
struct InexactDivision : Error {
    using Error::Error;
};

/// A closed form was requested outside the regime where it is stated.
struct OutOfRegime : Error {
    using Error::Error;
};

}  // namespace permstat
