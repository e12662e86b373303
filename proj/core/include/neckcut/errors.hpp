#pragma once

#include <stdexcept>
#include <string>

namespace neckcut {

/// Input violated the n-separability promise (or a consequence of it).
class PromiseViolation : public std::runtime_error {
public:
    explicit PromiseViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: files, token streams, alpha vectors, cuts.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured budget or size limit was exceeded.
class LimitExceeded : public std::runtime_error {
public:
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search found more than one object where uniqueness was promised.
class MultiplicityError : public PromiseViolation {
public:
    explicit MultiplicityError(const std::string& what) : PromiseViolation(what) {}
};

}  // namespace neckcut
