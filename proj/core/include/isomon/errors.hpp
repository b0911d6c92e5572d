#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isomon {

/// Failure categories raised by the library. Every thrown isomon::Error
/// carries exactly one of these.
enum class ErrorKind {
  InvalidArgument,    ///< malformed input (shapes, non-finite entries, parse errors)
  InvalidState,       ///< a domain invariant does not hold (e.g. Fuchs relation)
  ZeroPivot,          ///< pivot-free LU hit a vanishing leading minor
  NotDiagonalizable,  ///< a required diagonalization met a defective cluster
  NotRealizable,      ///< system shape outside the factored realization
  Unsupported,        ///< outside the supported class (ramified, rank >= 2, ...)
  ShapeMismatch,      ///< no admissible Laplace shape at the type level
  NotARefinement,     ///< confluence between non-nested partitions
  DegenerateMap,      ///< Moebius map with vanishing determinant
  ZeroEpsilon,        ///< separation parameter is zero
  SpectralCollision,  ///< eigenvalue coincidence that the construction forbids
  KernelDimension,    ///< kernel of the weight equation is not one-dimensional
  DivideByZero,       ///< a coordinate denominator vanished (non-generic orbit point)
  NoSolution,         ///< the multiplier construction has no solution
  NonUnique,          ///< the multiplier construction is not unique
  PoleAtCoincidence,  ///< Hamiltonian evaluated at t1 == t2
  StepFloor,          ///< adaptive integrator step dropped below the floor
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int index = -1)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Auxiliary index (1-based pivot for ZeroPivot, step index, ...); -1 if unused.
  int index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  int index_;
};

}  // namespace isomon
