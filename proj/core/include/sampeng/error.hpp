#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sampeng {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad files, mismatched sizes, invalid parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The reachability-restricted node set is empty.
class NoValidPatterns : public Error {
public:
    NoValidPatterns() : Error("no valid patterns: no node has non-zero reachability at every hop") {}
};

/// Fewer than two valid patterns; pairwise matching is undefined.
class InsufficientPatterns : public Error {
public:
    explicit InsufficientPatterns(std::size_t n_valid)
        : Error("insufficient patterns: " + std::to_string(n_valid) +
                " valid node(s), at least 2 required"),
          n_valid_(n_valid) {}

    std::size_t n_valid() const noexcept { return n_valid_; }

private:
    std::size_t n_valid_;
};

/// A walk weight overflowed to a non-finite value while building adjacency powers.
class NumericalOverflow : public Error {
public:
    NumericalOverflow(std::size_t hop, std::size_t row)
        : Error("non-finite walk weight in adjacency power L=" + std::to_string(hop) +
                " at row " + std::to_string(row)),
          hop_(hop), row_(row) {}

    std::size_t hop() const noexcept { return hop_; }
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t hop_;
    std::size_t row_;
};

}  // namespace sampeng
