#include "arlim/real.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include <quadmath.h>

#include "arlim/errors.hpp"

namespace arlim {

std::string format_real(const Real& value) {
  const __float128 raw = value.backend().value();
  char buffer[64];
  for (int digits = 1; digits <= 36; ++digits) {
    quadmath_snprintf(buffer, sizeof buffer, "%.*Qg", digits, raw);
    if (strtoflt128(buffer, nullptr) == raw) break;
  }
  return buffer;
}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

Real parse_real(std::string_view text) {
  const std::string owned(text);
  char* end = nullptr;
  const __float128 raw = strtoflt128(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size()) {
    throw DomainError("not a number: '" + owned + "'");
  }
  return Real(raw);
}

}  // namespace arlim
