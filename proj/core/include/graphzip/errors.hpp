#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphzip {

// Base class for everything this library throws on bad input or misuse.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Re-declaring a vertex with a different label.
class LabelConflictError : public Error {
public:
  using Error::Error;
};

class SelfLoopError : public Error {
public:
  using Error::Error;
};

// Edge endpoint was never declared and cannot be resolved.
class DanglingEdgeError : public Error {
public:
  using Error::Error;
};

class UnknownVertexError : public Error {
public:
  using Error::Error;
};

// Pattern with no edges where a non-empty pattern is required.
class EmptyPatternError : public Error {
public:
  using Error::Error;
};

// Host graph too large for the exhaustive reference matcher.
class OracleSizeError : public Error {
public:
  using Error::Error;
};

// Disconnected, empty, or otherwise unusable dictionary pattern.
class InvalidPatternError : public Error {
public:
  using Error::Error;
};

// Embedding does not replay against the batch it claims to come from.
class EmbeddingMismatchError : public Error {
public:
  using Error::Error;
};

// Batch carries more edges than the configured batch size.
class OversizeBatchError : public Error {
public:
  using Error::Error;
};

// Generator config that cannot be satisfied; message names the binding constraint.
class FeasibilityError : public Error {
public:
  using Error::Error;
};

// Unknown generator pattern name or malformed custom pattern.
class PatternSpecError : public Error {
public:
  using Error::Error;
};

// Ground-truth set violates its own invariants (duplicates, empty).
class TruthSetError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

// Malformed input text; carries the source name and 1-based line number.
class ParseError : public Error {
public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::string source_;
  std::size_t line_;
};

// Structurally valid lines that contradict the stream's declared shape
// (e.g. directedness flips between files of one run).
class FormatError : public ParseError {
public:
  using ParseError::ParseError;
};

}  // namespace graphzip
