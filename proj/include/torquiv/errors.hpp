#pragma once

#include <stdexcept>
#include <string>

namespace torquiv {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidFanError : public Error { public: using Error::Error; };
class NotCompleteError : public Error { public: using Error::Error; };
class NotSmoothError : public Error { public: using Error::Error; };
class TorsionClassGroupError : public Error { public: using Error::Error; };
class InvalidDegMatrixError : public Error { public: using Error::Error; };
class LengthMismatchError : public Error { public: using Error::Error; };
class NoLiftError : public Error { public: using Error::Error; };

// A polytope handed to the lattice-point enumerator has a recession direction.
class UnboundedError : public Error { public: using Error::Error; };
// A cohomology search region came out unbounded; signals a broken invariant
// (non-forbidden subset or an incomplete fan slipped through).
class UnboundedRegionError : public Error { public: using Error::Error; };

class DuplicateClassError : public Error { public: using Error::Error; };
class CyclicHomsError : public Error { public: using Error::Error; };
class BadLabelDegreeError : public Error { public: using Error::Error; };
class BadOrientationError : public Error { public: using Error::Error; };

class UnknownKeyError : public Error { public: using Error::Error; };
class NoCollectionError : public Error { public: using Error::Error; };
class NoSuchEdgeError : public Error { public: using Error::Error; };
class NonCommutingError : public Error { public: using Error::Error; };

class JsonFormatError : public Error { public: using Error::Error; };

}  // namespace torquiv
