#pragma once

#include <stdexcept>
#include <string>

namespace turan {

// Base class for every domain error raised by the library. The CLI maps
// these to exit status 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InvalidConstruction : public Error {
public:
    using Error::Error;
};

class UnsupportedDegree : public Error {
public:
    UnsupportedDegree(int degree, int cap)
        : Error("degree " + std::to_string(degree) + " exceeds the expansion cap of " +
                std::to_string(cap)),
          degree_(degree),
          cap_(cap) {}

    int degree() const noexcept { return degree_; }
    int cap() const noexcept { return cap_; }

private:
    int degree_;
    int cap_;
};

class NumericOverflow : public Error {
public:
    using Error::Error;
};

// A lemma or theorem hypothesis does not hold for the given input.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class OutOfRegime : public Error {
public:
    using Error::Error;
};

class SearchFailure : public Error {
public:
    using Error::Error;
};

}  // namespace turan
