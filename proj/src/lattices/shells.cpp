#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "designlab/lattices.hpp"
#include "designlab/parallel.hpp"
#include "shells_internal.hpp"

namespace designlab::lattices::detail {

Enumerator::Enumerator(const Lattice& l) : n_(l.rank()) {
  const size_t n = static_cast<size_t>(n_);
  Integer lcm = 1;
  for (const auto& row : l.gram)
    for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  ensure(lcm.fits_slong_p(), "Gram denominators too large");
  scale_ = lcm.get_si();
  gi_.assign(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational v = l.gram[i][j] * scale_;
      ensure(v.get_den() == 1 && v.get_num().fits_slong_p(), "scaled Gram entry out of range");
      gi_[i][j] = v.get_num().get_si();
    }
  // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  q_.assign(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q_[i][j] = l.gram[i][j].get_d();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      q_[j][i] = q_[i][j];
      q_[i][j] /= q_[i][i];
    }
    for (size_t k = i + 1; k < n; ++k)
      for (size_t m = k; m < n; ++m) q_[k][m] -= q_[k][i] * q_[i][m];
  }
}

long Enumerator::scaled_norm(const IntVec& v) const {
  const size_t n = static_cast<size_t>(n_);
  __int128 s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!v[i]) continue;
    __int128 row = 0;
    for (size_t j = 0; j < n; ++j) row += static_cast<__int128>(gi_[i][j]) * v[j];
    s += row * v[i];
  }
  ensure(s <= std::numeric_limits<long>::max(), "norm overflow");
  return static_cast<long>(s);
}

namespace {

constexpr double kSlack = 1.0 / (1 << 20);

}  // namespace

double Enumerator::search_bound(long scaled_bound) const {
  const double b = static_cast<double>(scaled_bound) / static_cast<double>(scale_);
  return b * (1.0 + kSlack) + kSlack;
}

std::pair<long, long> Enumerator::top_range(long scaled_bound) const {
  const size_t top = static_cast<size_t>(n_ - 1);
  const double r = std::sqrt(search_bound(scaled_bound) / q_[top][top]);
  const long hi = static_cast<long>(std::floor(r));
  return {-hi, hi};
}

void Enumerator::run(long scaled_bound, long top_lo, long top_hi, const Visitor& visit) const {
  const size_t n = static_cast<size_t>(n_);
  const double bound = search_bound(scaled_bound);
  IntVec x(n, 0);
  std::vector<double> remaining(n + 1, 0.0);
  const size_t top = n - 1;
  // iterative depth-first search from coordinate n-1 down to 0
  std::vector<long> hi(n, 0);
  std::vector<double> center(n, 0.0);
  remaining[top + 1] = bound;
  auto setup = [&](size_t i) -> bool {
    double c = 0;
    for (size_t j = i + 1; j < n; ++j) c -= q_[i][j] * static_cast<double>(x[j]);
    center[i] = c;
    const double rem = remaining[i + 1];
    if (rem < 0) {
      hi[i] = 0;
      x[i] = 0;
      return false;
    }
    const double r = std::sqrt(rem / q_[i][i]);
    long lo = static_cast<long>(std::ceil(c - r - kSlack));
    hi[i] = static_cast<long>(std::floor(c + r + kSlack));
    if (i == top) {
      lo = std::max(lo, top_lo);
      hi[i] = std::min(hi[i], top_hi);
    }
    x[i] = lo - 1;
    return true;
  };
  size_t i = top;
  if (!setup(i)) return;
  while (true) {
    ++x[i];
    if (x[i] > hi[i]) {
      if (i == top) return;
      x[i] = 0;
      ++i;
      continue;
    }
    const double d = static_cast<double>(x[i]) - center[i];
    remaining[i] = remaining[i + 1] - q_[i][i] * d * d;
    if (remaining[i] < -kSlack) continue;
    if (i == 0) {
      const long s = scaled_norm(x);
      if (s <= scaled_bound) visit(x, s);
      continue;
    }
    --i;
    setup(i);
  }
}

}  // namespace designlab::lattices::detail

namespace designlab::lattices {

using detail::Enumerator;

namespace {

// Splits the outermost coordinate range across workers; chunks are merged in order.
template <class Result, class Body>
std::vector<Result> over_top_range(const Enumerator& e, long scaled_bound, Body&& body) {
  auto [lo, hi] = e.top_range(scaled_bound);
  return parallel_chunks<Result>(lo, hi + 1, [&](long a, long b) { return body(a, b - 1); });
}

long scaled_target(const Enumerator& e, const Rational& norm, bool* attainable) {
  Rational s = norm * e.scale();
  *attainable = s.get_den() == 1;
  if (!*attainable) return 0;
  ensure(s.get_num().fits_slong_p(), "norm too large");
  return s.get_num().get_si();
}

}  // namespace

Shell shell_enum(const Lattice& l, const Rational& target, long cap) {
  require(target >= 0, "norm must be nonnegative");
  Shell out;
  out.norm = target;
  Enumerator e(l);
  bool ok = false;
  const long s = scaled_target(e, target, &ok);
  if (!ok) return out;
  auto parts = over_top_range<std::vector<IntVec>>(e, s, [&](long a, long b) {
    std::vector<IntVec> found;
    e.run(s, a, b, [&](const IntVec& v, long sn) {
      if (sn != s) return;
      found.push_back(v);
      if (static_cast<long>(found.size()) > cap)
        fail(ErrorCode::CapExceeded, "shell of norm " + to_fraction_string(target) + " exceeds the cap " +
                                         std::to_string(cap));
    });
    return found;
  });
  for (auto& p : parts) out.vectors.insert(out.vectors.end(), p.begin(), p.end());
  if (out.size() > cap)
    fail(ErrorCode::CapExceeded, "shell of norm " + to_fraction_string(target) + " exceeds the cap " +
                                     std::to_string(cap));
  return out;
}

std::vector<Shell> shells_up_to(const Lattice& l, const Rational& max_norm, long cap) {
  require(max_norm >= 0, "norm must be nonnegative");
  Enumerator e(l);
  const Rational sb = max_norm * e.scale();
  const long s = static_cast<long>(std::floor(sb.get_d()));
  auto parts = over_top_range<std::map<long, std::vector<IntVec>>>(e, s, [&](long a, long b) {
    std::map<long, std::vector<IntVec>> found;
    long total = 0;
    e.run(s, a, b, [&](const IntVec& v, long sn) {
      if (sn == 0) return;
      found[sn].push_back(v);
      if (++total > cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " vectors below the bound");
    });
    return found;
  });
  std::map<long, std::vector<IntVec>> merged;
  long total = 0;
  for (auto& p : parts)
    for (auto& [sn, vs] : p) {
      auto& dst = merged[sn];
      dst.insert(dst.end(), vs.begin(), vs.end());
      total += static_cast<long>(vs.size());
    }
  if (total > cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " vectors below the bound");
  std::vector<Shell> out;
  for (auto& [sn, vs] : merged) out.push_back(Shell{Rational(sn, e.scale()), std::move(vs)});
  for (auto& sh : out) sh.norm.canonicalize();
  return out;
}

std::vector<long> shell_sizes(const Lattice& l, long max_norm, long cap) {
  require(max_norm >= 0, "norm must be nonnegative");
  require(is_integral(l), "shell_sizes needs an integral lattice");
  Enumerator e(l);
  const long s = max_norm * e.scale();
  auto parts = over_top_range<std::vector<long>>(e, s, [&](long a, long b) {
    std::vector<long> counts(static_cast<size_t>(max_norm) + 1, 0);
    long total = 0;
    e.run(s, a, b, [&](const IntVec&, long sn) {
      ++counts[static_cast<size_t>(sn / e.scale())];
      if (++total > cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " vectors below the bound");
    });
    return counts;
  });
  std::vector<long> out(static_cast<size_t>(max_norm) + 1, 0);
  for (const auto& p : parts)
    for (size_t i = 0; i < out.size(); ++i) out[i] += p[i];
  return out;
}

std::string shell_csv(const Shell& s) {
  std::ostringstream os;
  for (const auto& v : s.vectors) {
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace designlab::lattices
