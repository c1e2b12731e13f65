#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nca {

/// Base class for every malformed-input condition. The CLI maps these to
/// exit status 1; anything else escaping a subcommand is a bug.
class DataError : public std::runtime_error {
 public:
  DataError(std::string what, std::size_t line)
      : std::runtime_error(std::move(what)), line_(line) {}

  /// 1-based line number in the offending input, 0 when unknown.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MalformedToken : public DataError {
 public:
  MalformedToken(std::size_t line, std::size_t column, std::string token,
                 const std::string& reason)
      : DataError("line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": malformed token '" + token +
                      "': " + reason,
                  line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t column_;
  std::string token_;
};

class MalformedLexLine : public DataError {
 public:
  MalformedLexLine(std::size_t line, const std::string& reason)
      : DataError("lexicon line " + std::to_string(line) + ": " + reason,
                  line) {}
};

class DuplicateEntry : public DataError {
 public:
  DuplicateEntry(std::size_t line, std::string surface)
      : DataError("lexicon line " + std::to_string(line) +
                      ": duplicate entry for '" + surface + "'",
                  line),
        surface_(std::move(surface)) {}

  const std::string& surface() const noexcept { return surface_; }

 private:
  std::string surface_;
};

class MalformedEventLine : public DataError {
 public:
  MalformedEventLine(std::size_t line, const std::string& reason)
      : DataError("event line " + std::to_string(line) + ": " + reason,
                  line) {}
};

class MalformedTableLine : public DataError {
 public:
  MalformedTableLine(std::size_t line, const std::string& reason)
      : DataError("table line " + std::to_string(line) + ": " + reason,
                  line) {}
};

class DuplicateKey : public DataError {
 public:
  DuplicateKey(std::size_t line, const std::string& key)
      : DataError("table line " + std::to_string(line) +
                      ": duplicate key " + key,
                  line) {}
};

class MalformedLabelLine : public DataError {
 public:
  MalformedLabelLine(std::size_t line, const std::string& reason)
      : DataError("label line " + std::to_string(line) + ": " + reason,
                  line) {}
};

class MalformedQueryLine : public DataError {
 public:
  MalformedQueryLine(std::size_t line, const std::string& reason)
      : DataError("query line " + std::to_string(line) + ": " + reason,
                  line) {}
};

}  // namespace nca
