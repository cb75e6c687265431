#include "designlab/common.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <thread>

#ifndef DESIGNLAB_DEFAULT_FIXTURES
#define DESIGNLAB_DEFAULT_FIXTURES "fixtures"
#endif

namespace designlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::InsufficientPrecision: return "insufficient_precision";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(s) + "'");
    std::string owned(s);
    if (owned.front() == '+') owned.erase(0, 1);
    return Integer(owned, 10);
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(trim(text.substr(0, slash)));
  Integer den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {
std::atomic<int> g_workers{0};
std::mutex g_fixture_mutex;
std::string g_fixture_override;
}  // namespace

int worker_count() {
  int w = g_workers.load();
  if (w > 0) return w;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_worker_count(int workers) { g_workers.store(std::max(0, workers)); }

std::string fixture_dir() {
  {
    std::lock_guard lock(g_fixture_mutex);
    if (!g_fixture_override.empty()) return g_fixture_override;
  }
  if (const char* env = std::getenv("DESIGNLAB_FIXTURES"); env && *env) return env;
  return DESIGNLAB_DEFAULT_FIXTURES;
}

void set_fixture_dir(std::string dir) {
  std::lock_guard lock(g_fixture_mutex);
  g_fixture_override = std::move(dir);
}

}  // namespace designlab
