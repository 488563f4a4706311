#pragma once

#include <stdexcept>
#include <string>

namespace nonisog {

// Precondition violated by the caller (bad degree, repeated roots, zero input, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Input is legal but beyond what the exact engines are built to handle
// (degree caps, unfactorable cofactors, exhaustive-search limits).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation produced a combination that the mathematics rules out.
// Seeing one of these means an arithmetic bug, never a property of the input.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

}  // namespace nonisog
