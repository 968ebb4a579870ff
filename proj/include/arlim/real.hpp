#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/float128.hpp>

namespace arlim {

// Paths and estimator internals are carried in binary128. Under explosive and
// moderately explosive regimes rho_hat - rho falls far below the double ulp of
// rho (about 1e-24 at rho = 1 + 1/sqrt(2000), n = 2000), so the estimation
// error is only recoverable with a wider significand.
using Real = boost::multiprecision::float128;

/// Shortest decimal string that parses back to exactly `value`.
std::string format_real(const Real& value);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// Parses a decimal string; throws DomainError on malformed input.
Real parse_real(std::string_view text);

}  // namespace arlim
