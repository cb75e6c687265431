#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace designlab {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  InvalidArgument,
  InsufficientPrecision,
  CapExceeded,
  NotFound,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool cond, const std::string& message) {
  if (!cond) fail(ErrorCode::InvalidArgument, message);
}

// Internal postcondition guard; a failure here is a bug, not bad input.
inline void ensure(bool cond, const std::string& message) {
  if (!cond) fail(ErrorCode::Internal, message);
}

/// "num/den" with den >= 1, e.g. "-8/1".
std::string to_fraction_string(const Rational& r);

/// Accepts "n", "n/d" (optional sign, no decimals).
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);

/// Number of worker threads used by the enumeration kernels. Results never
/// depend on this value.
int worker_count();
void set_worker_count(int workers);

/// Directory holding fixtures/codes and fixtures/lattices. Resolution order:
/// explicit override, DESIGNLAB_FIXTURES, compiled-in default.
std::string fixture_dir();
void set_fixture_dir(std::string dir);

}  // namespace designlab
