#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace csaw {

/// Exact integer counts. Enumeration tables are exact by contract, so all
/// counting paths use arbitrary precision end to end.
using BigInt = boost::multiprecision::cpp_int;

/// Working real type for weighted partition functions (50 decimal digits).
/// exp(-beta*n) against mu1^(n^sigma) spans many orders of magnitude, so the
/// weighting layer does not run in hardware doubles.
using Real = boost::multiprecision::cpp_bin_float_50;

using Rational = boost::rational<long long>;

/// Best available estimate of the square-lattice connective constant e^beta,
/// kept verbatim as a decimal string and never re-derived.
inline const char* kConnectiveConstantDecimal = "2.63815853035";

inline Real connective_constant() { return Real(kConnectiveConstantDecimal); }

/// beta = log(e^beta), evaluated at working precision.
inline Real beta_log_mu() { return log(connective_constant()); }

std::string format_real(const Real& x);
Real parse_real(const std::string& s);

std::string rational_to_string(const Rational& r);

} // namespace csaw
