#ifndef MAXREGION_ERROR_HPP
#define MAXREGION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maxregion {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MAXREGION_DEFINE_ERROR(Name)         \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(std::string(#Name ": ") + what) {} \
  }

// Input errors.
MAXREGION_DEFINE_ERROR(ParseError);
MAXREGION_DEFINE_ERROR(NotHomogeneous);
MAXREGION_DEFINE_ERROR(ZeroPolynomial);
MAXREGION_DEFINE_ERROR(DegreeTooSmall);

// Classification / region preconditions.
MAXREGION_DEFINE_ERROR(NotApplicable);
MAXREGION_DEFINE_ERROR(UnsupportedM);

// Numerical verification.
MAXREGION_DEFINE_ERROR(SolverDiverged);
MAXREGION_DEFINE_ERROR(OrderUndetected);
MAXREGION_DEFINE_ERROR(DegenerateIntegrand);
MAXREGION_DEFINE_ERROR(FrameDegenerate);

// An identity that must hold mathematically did not.
MAXREGION_DEFINE_ERROR(InternalInconsistency);

#undef MAXREGION_DEFINE_ERROR

}  // namespace maxregion

#endif  // MAXREGION_ERROR_HPP
