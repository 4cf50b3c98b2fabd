#ifndef EINALG_ERRORS_HPP
#define EINALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace einalg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shapes of operands do not conform (wrong mode lists, bad products, ...).
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

/// Contracted mode lists differ between the two operands of an Einstein product.
class ContractionMismatch : public ShapeMismatch {
 public:
  explicit ContractionMismatch(const std::string& msg) : ShapeMismatch(msg) {}
};

/// An entry is NaN or infinite, or an input file carries such a value.
class InvalidValue : public Error {
 public:
  explicit InvalidValue(const std::string& msg) : Error(msg) {}
};

/// Jacobi sweeps exceeded the cap without reaching the off-diagonal threshold.
class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(const std::string& msg) : Error(msg) {}
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

/// Operation requires a nonzero tensor (reshaping rank >= 1).
class ZeroTensor : public Error {
 public:
  explicit ZeroTensor(const std::string& msg) : Error(msg) {}
};

/// A tensor that must be invertible is numerically singular.
class SingularTensor : public Error {
 public:
  explicit SingularTensor(const std::string& msg) : Error(msg) {}
};

class SingularTransform : public SingularTensor {
 public:
  explicit SingularTransform(const std::string& msg) : SingularTensor(msg) {}
};

class SingularCore : public SingularTensor {
 public:
  explicit SingularCore(const std::string& msg) : SingularTensor(msg) {}
};

class SingularWeight : public SingularTensor {
 public:
  explicit SingularWeight(const std::string& msg) : SingularTensor(msg) {}
};

/// A constructed-hypothesis generator cannot realize its hypotheses for the
/// requested shapes.
class HypothesisUnsatisfiable : public Error {
 public:
  explicit HypothesisUnsatisfiable(const std::string& msg) : Error(msg) {}
};

/// Malformed input file or JSON document.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace einalg

#endif  // EINALG_ERRORS_HPP
