#pragma once

#include <stdexcept>
#include <string>

namespace contracta {

/// Rejected input: malformed files, broken complexes, preconditions the
/// caller failed to meet. The CLI reports these with exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant. Seeing one of these is a bug, not a user
/// error; the CLI reports it with exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MissingFaceError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonMonotoneHeightError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DuplicateSimplexError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnknownVertexError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnknownSimplexError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnknownEdgeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class LinkConditionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DimensionMismatchError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DimensionOutOfRangeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotClosed2ManifoldError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotACycleError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnknownVertexInHeightFileError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonTriangleFaceError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace contracta
