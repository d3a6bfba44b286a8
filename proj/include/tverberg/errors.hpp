#ifndef TVERBERG_ERRORS_HPP
#define TVERBERG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tverberg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// complex construction
struct EmptyFacet : Error { using Error::Error; };
struct DanglingBoundary : Error { using Error::Error; };
struct BadGrading : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct UnknownCell : Error { using Error::Error; };

// homology
struct EmptyComplex : Error { using Error::Error; };

// deleted product / enumeration guards
struct SizeLimitExceeded : Error { using Error::Error; };
struct GuardExceeded : Error { using Error::Error; };

// graphs
struct LoopEdge : Error { using Error::Error; };

// file formats
struct ParseError : Error { using Error::Error; };

}  // namespace tverberg

#endif
