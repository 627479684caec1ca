#pragma once

#include <stdexcept>
#include <string>

namespace goe {

/// Root of the toolkit's exception hierarchy. The CLI maps each subclass to a
/// stable exit code (parse 2, resource/bounds 3, precondition 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix, affine-map, code or presentation input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured bound was exceeded (degree bound, subset cap, float horizon).
class ResourceError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegreeError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

/// The caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Sturm counting was asked about an interval whose endpoint is a root.
class EndpointRootError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Trimming a presentation left nothing: the shift space is empty.
class EmptyShiftError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace goe
