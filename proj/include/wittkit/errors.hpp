#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

/// Operands constructed over different rings were mixed in one operation.
class RingMismatchError : public std::invalid_argument {
  public:
    explicit RingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A value violates the domain of an operation (constant term != 1, bad
/// modulus, size budget, ...). CLI maps this to exit code 3.
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A ghost vector is not in the image of the ghost map over Z: some Newton
/// step required an inexact integer division.
class NonIntegralGhostError : public DomainError {
  public:
    explicit NonIntegralGhostError(const std::string& what) : DomainError(what) {}
};

/// lambda operations are only defined on effective elements (denominator 1).
class NotEffectiveError : public DomainError {
  public:
    explicit NotEffectiveError(const std::string& what) : DomainError(what) {}
};

/// Syntax error with a byte offset into the source text and the token set
/// that would have been accepted. CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset),
          expected_(expected) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

  private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace wittkit
