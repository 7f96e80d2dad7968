#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace quadfact {

using cplx = std::complex<double>;
using RealFunction = std::function<double(double)>;

/// Raised when a numerical procedure cannot deliver the requested accuracy
/// (non-convergent series or quadrature, undetermined multiplicity, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The measure does not annihilate the kernel of the differential operator.
class KernelConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested derivative order exceeds what a function or series provides.
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returns the real part of `z` after checking the imaginary residue is at
/// most `rel_tol * max(1, |re z|, scale)`. Throws NumericalError otherwise.
double demote_to_real(cplx z, double rel_tol, double scale = 0.0,
                      const char* what = "value");

}  // namespace quadfact
