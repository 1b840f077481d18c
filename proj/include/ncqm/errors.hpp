#ifndef NCQM_ERRORS_HPP
#define NCQM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncqm {

// Error taxonomy shared by the whole library; mirrored by the C API
// status codes.
enum class ErrorCode {
  Parse,       // expression text rejected by the grammar
  Domain,      // arithmetic left the coefficient field (vanishing denominator)
  Dimension,   // physical-unit exponents incompatible
  Invalid,     // argument outside the documented contract
  Resource,    // refused: would exceed the built-in size bounds
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string message)
      : Error(ErrorCode::Parse, std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public Error {
 public:
  explicit DomainError(std::string message)
      : Error(ErrorCode::Domain, std::move(message)) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(std::string message)
      : Error(ErrorCode::Dimension, std::move(message)) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(std::string message)
      : Error(ErrorCode::Invalid, std::move(message)) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(std::string message)
      : Error(ErrorCode::Resource, std::move(message)) {}
};

}  // namespace ncqm

#endif
