#pragma once

#include <stdexcept>
#include <string>

namespace twistcy {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lattice and fan construction.
class TriangulationError : public Error { using Error::Error; };
class SmoothnessError : public Error { using Error::Error; };
class CompletenessError : public Error { using Error::Error; };
class IndexError : public Error { using Error::Error; };

// Intersection theory.
class NotSmoothError : public Error { using Error::Error; };
class FacetDivisorNonzeroError : public Error { using Error::Error; };

// Linear algebra and twist solving.
class DimensionError : public Error { using Error::Error; };
class NoSolutionError : public Error { using Error::Error; };
class ClassificationError : public Error { using Error::Error; };

// Calculators and I/O.
class InputError : public Error { using Error::Error; };
class IOError : public Error { using Error::Error; };

}  // namespace twistcy
