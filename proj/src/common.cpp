#include "quadfact/common.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quadfact {

double demote_to_real(cplx z, double rel_tol, double scale, const char* what) {
  const double bound = rel_tol * std::max({1.0, std::abs(z.real()), scale});
  if (!(std::abs(z.imag()) <= bound)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " has imaginary residue " << z.imag() << " (real part "
        << z.real() << ")";
    throw NumericalError(msg.str());
  }
  return z.real();
}

}  // namespace quadfact
