#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qq {

enum class ErrorCode {
  InvalidArgument,
  UnknownId,
  Validation,
  NonCommutative,
  Parse,
  Resource,
};

// Base of every error thrown by the toolkit. The C API maps `code()` onto its
// status enum, so new subclasses must pick one of the existing codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

class UnknownIdError : public Error {
 public:
  explicit UnknownIdError(const std::string& id)
      : Error(ErrorCode::UnknownId, "unknown id '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// Unitality, overlap or coverage violations in order tables and embeddings.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::Validation, what) {}
};

class NonCommutativeError : public Error {
 public:
  explicit NonCommutativeError(const std::string& block)
      : Error(ErrorCode::NonCommutative,
              "block '" + block + "' has size > 1; quiver is not commutative"),
        block_(block) {}
  const std::string& block() const noexcept { return block_; }

 private:
  std::string block_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorCode::Resource, what) {}
};

}  // namespace qq
