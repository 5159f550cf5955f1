#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bregkern {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad input: wrong shape, out-of-domain parameters, unparsable files.
/// The CLI maps this family to exit code 1.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// An iterative or factorization routine failed. CLI exit code 2.
class NumericalError : public Error {
  public:
    using Error::Error;
};

class ArgumentError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
  public:
    explicit DomainError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : ValidationError(index ? what + " (coordinate " + std::to_string(*index) + ")" : what),
          index_(index) {}

    /// First coordinate that put the input outside the domain, when known.
    [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

  private:
    std::optional<std::size_t> index_;
};

class ConversionError : public ValidationError {
  public:
    ConversionError(const std::string& from, const std::string& to, const std::string& reason)
        : ValidationError("cannot convert '" + from + "' to '" + to + "': " + reason), from_(from), to_(to) {}

    [[nodiscard]] const std::string& from() const noexcept { return from_; }
    [[nodiscard]] const std::string& to() const noexcept { return to_; }

  private:
    std::string from_;
    std::string to_;
};

class DegenerateBisectorError : public ArgumentError {
  public:
    DegenerateBisectorError() : ArgumentError("bisector of a point with itself is undefined") {}
};

class ParseError : public ValidationError {
  public:
    ParseError(const std::string& source, std::size_t line, const std::string& reason)
        : ValidationError(source + ":" + std::to_string(line) + ": " + reason), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class IoError : public ValidationError {
  public:
    IoError(const std::string& path, const std::string& reason)
        : ValidationError(path + ": " + reason), path_(path) {}

    [[nodiscard]] const std::string& path() const noexcept { return path_; }

  private:
    std::string path_;
};

class ConvergenceError : public NumericalError {
  public:
    ConvergenceError(const std::string& what, std::size_t iterations)
        : NumericalError(what + " did not converge after " + std::to_string(iterations) + " iterations"),
          iterations_(iterations) {}

    ConvergenceError(const std::string& what, std::size_t iterations, std::vector<double> last_iterate)
        : ConvergenceError(what, iterations) {
        last_iterate_ = std::move(last_iterate);
    }

    [[nodiscard]] std::size_t iterations() const noexcept { return iterations_; }
    [[nodiscard]] const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

  private:
    std::size_t iterations_;
    std::vector<double> last_iterate_;
};

} // namespace bregkern
