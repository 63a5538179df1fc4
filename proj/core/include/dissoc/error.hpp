#pragma once

#include <stdexcept>
#include <string>

namespace dissoc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad vertex, odd d, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A size cap (vertex limit, enumeration cap, search cap) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Input bytes could not be parsed (graph6, partitions, manifests).
class MalformedInput : public Error {
public:
    using Error::Error;
};

}  // namespace dissoc
