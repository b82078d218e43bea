#pragma once

#include <stdexcept>
#include <string>

namespace oulad {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries file name plus 1-based line and column.
class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, std::size_t column, const std::string& message)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          file_(std::move(file)),
          line_(line),
          column_(column) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string file_;
    std::size_t line_;
    std::size_t column_;
};

// Input data could not be obtained: missing file, failed download, bad archive.
class AcquisitionError : public Error {
public:
    using Error::Error;
};

// A requested module/presentation pair does not exist.
class SelectionError : public Error {
public:
    using Error::Error;
};

// Invalid parameters: bad week index, unknown mapping or column, malformed spec.
class SpecError : public Error {
public:
    using Error::Error;
};

// Data fails a referential requirement of the running pipeline step.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace oulad
