#pragma once

#include <stdexcept>
#include <string>

namespace cfht {

// Base class for all failures the library surfaces to callers.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };        // malformed text input
struct ValidationError : Error { using Error::Error; };   // type invariant violated
struct DomainError : Error { using Error::Error; };       // argument outside documented domain
struct DimensionError : Error { using Error::Error; };    // shape mismatch between operands
struct NumericError : Error { using Error::Error; };      // non-finite value where finite required
struct StorageError : Error { using Error::Error; };      // template store I/O failure
struct IntegrityError : Error { using Error::Error; };    // stored record digest mismatch
struct NotFoundError : Error { using Error::Error; };
struct ConflictError : Error { using Error::Error; };
struct IncompatibleTemplateError : Error { using Error::Error; };
struct InsufficientDataError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace cfht
