#include "designlab/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "designlab/parallel.hpp"

namespace designlab::codes {

namespace {

using BinomTable = std::array<std::array<long, kMaxLength + 1>, kMaxLength + 1>;

const BinomTable& binom_table() {
  static const BinomTable table = [] {
    BinomTable t{};
    for (int n = 0; n <= kMaxLength; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return binom_table()[n][k];
}

// Inverse of subset_rank for k-subsets.
Word subset_unrank(long rank, int k) {
  Word z = 0;
  for (int i = k; i >= 1; --i) {
    int e = i - 1;
    while (binom(e + 1, i) <= rank) ++e;
    rank -= binom(e, i);
    z |= Word(1) << e;
  }
  return z;
}

// Next subset with the same popcount (Gosper).
Word next_subset(Word v) {
  const Word t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

Word full_mask(int n) { return n >= 32 ? ~Word(0) : ((Word(1) << n) - 1); }

std::vector<int> bits_of(Word w) {
  std::vector<int> out;
  while (w) {
    out.push_back(std::countr_zero(w));
    w &= w - 1;
  }
  return out;
}

void check_enumerable(const BinaryCode& c) {
  if (c.k() > kMaxEnumDim)
    fail(ErrorCode::CapExceeded, "code dimension " + std::to_string(c.k()) + " exceeds the enumeration cap " +
                                     std::to_string(kMaxEnumDim));
}

BinaryCode load_fixture(const std::string& file, const std::string& label) {
  BinaryCode c = load_code_file(fixture_dir() + "/codes/" + file, label);
  ensure(is_doubly_even(c) && is_self_dual(c), label + " fixture is not doubly even self-dual");
  return c;
}

}  // namespace

long subset_rank(Word z) {
  long r = 0;
  int i = 1;
  while (z) {
    r += binom(std::countr_zero(z), i++);
    z &= z - 1;
  }
  return r;
}

BinaryCode code_from_generator(int n, const std::vector<Word>& input, std::string label) {
  require(n >= 0 && n <= kMaxLength, "code length must be in [0, 32]");
  const Word mask = full_mask(n);
  std::vector<Word> rows;
  for (Word r : input) {
    require((r & ~mask) == 0, "generator row has bits beyond the code length");
    rows.push_back(r);
  }
  size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    const Word bit = Word(1) << col;
    size_t piv = rank;
    while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t o = 0; o < rows.size(); ++o)
      if (o != rank && (rows[o] & bit)) rows[o] ^= rows[rank];
    ++rank;
  }
  BinaryCode c;
  c.n = n;
  c.dropped_dependent = rank < rows.size();
  rows.resize(rank);
  c.rows = std::move(rows);
  c.label = std::move(label);
  return c;
}

BinaryCode code_from_strings(const std::vector<std::string>& rows, std::string label) {
  int n = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<Word> words;
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == n, "generator rows must have equal length");
    require(n <= kMaxLength, "code length must be at most 32");
    Word w = 0;
    for (int i = 0; i < n; ++i) {
      require(r[i] == '0' || r[i] == '1', "generator rows may only contain '0' and '1'");
      if (r[i] == '1') w |= Word(1) << i;
    }
    words.push_back(w);
  }
  return code_from_generator(n, words, std::move(label));
}

BinaryCode load_code_file(const std::string& path, std::string label) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open generator matrix '" + path + "'");
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
               line.end());
    if (!line.empty()) rows.push_back(line);
  }
  require(!rows.empty(), "generator matrix '" + path + "' is empty");
  return code_from_strings(rows, label.empty() ? path : std::move(label));
}

BinaryCode hamming_e8() { return load_fixture("hamming8.txt", "hamming8"); }
BinaryCode golay_g24() { return load_fixture("golay24.txt", "golay24"); }
BinaryCode d16_plus() { return load_fixture("d16plus.txt", "d16plus"); }

BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b) {
  require(a.n + b.n <= kMaxLength, "direct sum longer than 32");
  std::vector<Word> rows = a.rows;
  for (Word r : b.rows) rows.push_back(r << a.n);
  return code_from_generator(a.n + b.n, rows, a.label + "+" + b.label);
}

BinaryCode code_by_name(const std::string& name) {
  require(!name.empty(), "empty code name");
  if (name.find('/') != std::string::npos || name.ends_with(".txt")) return load_code_file(name);
  auto plus = name.find('+');
  if (plus != std::string::npos) return direct_sum(code_by_name(name.substr(0, plus)), code_by_name(name.substr(plus + 1)));
  if (name == "hamming8") return hamming_e8();
  if (name == "golay24" || name == "g24") return golay_g24();
  if (name == "d16plus" || name == "d16+") return d16_plus();
  fail(ErrorCode::NotFound, "unknown code '" + name + "' (known: hamming8, golay24, d16plus, '+' sums, or a path)");
}

std::string word_string(Word w, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (w >> i & 1) s[static_cast<size_t>(i)] = '1';
  return s;
}

void for_each_codeword(const BinaryCode& c, const std::function<void(Word)>& fn) {
  check_enumerable(c);
  Word w = 0;
  fn(w);
  const std::uint64_t total = std::uint64_t(1) << c.k();
  for (std::uint64_t i = 1; i < total; ++i) {
    w ^= c.rows[static_cast<size_t>(std::countr_zero(i))];
    fn(w);
  }
}

std::vector<Word> codewords(const BinaryCode& c) {
  std::vector<Word> out;
  out.reserve(size_t(1) << c.k());
  for_each_codeword(c, [&](Word w) { out.push_back(w); });
  return out;
}

std::vector<long> weight_distribution(const BinaryCode& c) {
  std::vector<long> a(static_cast<size_t>(c.n) + 1, 0);
  for_each_codeword(c, [&](Word w) { ++a[static_cast<size_t>(std::popcount(w))]; });
  return a;
}

bool is_doubly_even(const BinaryCode& c) {
  auto a = weight_distribution(c);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && i % 4 != 0) return false;
  return true;
}

bool is_self_orthogonal(const BinaryCode& c) {
  for (size_t i = 0; i < c.rows.size(); ++i)
    for (size_t j = i; j < c.rows.size(); ++j)
      if (std::popcount(c.rows[i] & c.rows[j]) % 2) return false;
  return true;
}

bool is_self_dual(const BinaryCode& c) { return c.n % 2 == 0 && 2 * c.k() == c.n && is_self_orthogonal(c); }

int min_weight(const BinaryCode& c) {
  int best = 0;
  for_each_codeword(c, [&](Word w) {
    int wt = std::popcount(w);
    if (wt > 0 && (best == 0 || wt < best)) best = wt;
  });
  return best;
}

BlockFamily shells(const BinaryCode& c, const std::vector<int>& weights) {
  BlockFamily f;
  f.n = c.n;
  std::set<int> want;
  for (int w : weights) {
    require(w >= 0 && w <= c.n, "shell weight out of range");
    want.insert(w);
  }
  for_each_codeword(c, [&](Word w) {
    int wt = std::popcount(w);
    if (want.count(wt)) {
      f.blocks.push_back(w);
      f.sizes.insert(wt);
    }
  });
  std::sort(f.blocks.begin(), f.blocks.end());
  return f;
}

BlockFamily shell(const BinaryCode& c, int w) { return shells(c, {w}); }

DesignLambda design_lambda(const BlockFamily& f, int t, bool allow_mixed) {
  require(t >= 0 && t <= f.n, "t out of range");
  require(allow_mixed || f.sizes.size() <= 1, "mixed block sizes need the 2-weight variant");
  if (!f.sizes.empty()) require(t <= *f.sizes.begin(), "t exceeds the smallest block size");
  DesignLambda out;
  const long total = binom(f.n, t);
  out.subsets_checked = total;
  if (f.blocks.empty()) return out;

  struct Chunk {
    bool have = false;
    Word first = 0;
    long first_count = 0;
    bool mismatch = false;
    Word other = 0;
    long other_count = 0;
  };
  auto chunks = parallel_chunks<Chunk>(0, total, [&](long lo, long hi) {
    Chunk ch;
    if (lo >= hi) return ch;
    Word T = t == 0 ? 0 : subset_unrank(lo, t);
    for (long r = lo; r < hi; ++r) {
      long count = 0;
      for (Word b : f.blocks) count += (b & T) == T;
      if (!ch.have) {
        ch.have = true;
        ch.first = T;
        ch.first_count = count;
      } else if (count != ch.first_count) {
        ch.mismatch = true;
        ch.other = T;
        ch.other_count = count;
        break;
      }
      if (t > 0 && r + 1 < hi) T = next_subset(T);
    }
    return ch;
  });
  bool seeded = false;
  for (const auto& ch : chunks) {
    if (!ch.have) continue;
    if (!seeded) {
      seeded = true;
      out.lambda = ch.first_count;
      out.witness_a = ch.first;
      out.count_a = ch.first_count;
    }
    if (ch.first_count != out.lambda) {
      out.is_design = false;
      out.witness_b = ch.first;
      out.count_b = ch.first_count;
      break;
    }
    if (ch.mismatch) {
      out.is_design = false;
      out.witness_b = ch.other;
      out.count_b = ch.other_count;
      break;
    }
  }
  if (!out.is_design) out.lambda = -1;
  return out;
}

// -- harmonics ----------------------------------------------------------------

std::vector<std::pair<Word, Rational>> apply_gamma(const DiscreteHarmonic& f) {
  std::map<Word, Rational> acc;
  for (const auto& [z, v] : f.values) {
    Word rest = z;
    while (rest) {
      Word bit = rest & -rest;
      acc[z ^ bit] += v;
      rest ^= bit;
    }
  }
  std::vector<std::pair<Word, Rational>> out;
  for (auto& [y, v] : acc)
    if (v != 0) out.emplace_back(y, v);
  return out;
}

bool in_harm_kernel(const DiscreteHarmonic& f) {
  if (f.k == 0) return true;
  return apply_gamma(f).empty();
}

Integer harm_dim(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "harm_dim needs 0 <= k <= n");
  if (2 * k > n) return 0;
  return binomial(n, k) - binomial(n, k - 1);
}

namespace {

// (b_1 - a_1)...(b_k - a_k) expanded over the 2^k choices.
DiscreteHarmonic pair_product(int n, const std::vector<int>& a, const std::vector<int>& b) {
  DiscreteHarmonic f;
  f.n = n;
  f.k = static_cast<int>(a.size());
  const unsigned k = static_cast<unsigned>(a.size());
  f.values.reserve(size_t(1) << k);
  for (unsigned m = 0; m < (1u << k); ++m) {
    Word z = 0;
    for (unsigned i = 0; i < k; ++i) z |= Word(1) << ((m >> i & 1) ? b[i] : a[i]);
    const int minus = static_cast<int>(k) - std::popcount(m);
    f.values.emplace_back(z, Rational(minus % 2 ? -1 : 1));
  }
  std::sort(f.values.begin(), f.values.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return f;
}

}  // namespace

std::vector<DiscreteHarmonic> harm_basis(int n, int k, long cap) {
  require(n >= 0 && n <= kMaxLength && k >= 0 && k <= n, "harm_basis needs 0 <= k <= n <= 32");
  const Integer dim = harm_dim(n, k);
  if (dim > cap)
    fail(ErrorCode::CapExceeded, "dim Harm_" + std::to_string(k) + " on " + std::to_string(n) + " points is " +
                                     dim.get_str() + ", above the cap " + std::to_string(cap));
  std::vector<DiscreteHarmonic> basis;
  if (dim == 0) return basis;
  if (k == 0) {
    DiscreteHarmonic one{n, 0, {{0, Rational(1)}}};
    basis.push_back(one);
    return basis;
  }
  basis.reserve(dim.get_ui());
  const Word mask = full_mask(n);
  const long total = binom(n, k);
  Word b = full_mask(k);
  for (long r = 0; r < total; ++r, b = r < total ? next_subset(b) : b) {
    auto bs = bits_of(b);
    bool ballot = true;
    for (int i = 0; i < k && ballot; ++i) ballot = bs[static_cast<size_t>(i)] >= 2 * i + 1;
    if (ballot) {
      auto comp = bits_of(~b & mask);
      std::vector<int> a(comp.begin(), comp.begin() + k);
      basis.push_back(pair_product(n, a, bs));
    }
  }
  ensure(Integer(static_cast<long>(basis.size())) == dim, "polytabloid count differs from dim Harm_k");
  for (const auto& f : basis) ensure(in_harm_kernel(f), "polytabloid not killed by gamma");
  return basis;
}

std::vector<DiscreteHarmonic> sampled_harmonics(int n, int k, int count, std::uint64_t seed) {
  require(2 * k <= n, "sampled harmonics need 2k <= n");
  std::mt19937_64 rng(seed);
  std::vector<int> points(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) points[static_cast<size_t>(i)] = i;
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5);
  std::vector<DiscreteHarmonic> out;
  for (int s = 0; s < count; ++s) {
    std::map<Word, Rational> acc;
    for (int term = 0; term < 4; ++term) {
      std::shuffle(points.begin(), points.end(), rng);
      std::vector<int> a(points.begin(), points.begin() + k), b(points.begin() + k, points.begin() + 2 * k);
      int c = 0;
      while (c == 0) c = coef(rng);
      Rational scale(c, den(rng));
      scale.canonicalize();
      for (auto& [z, v] : pair_product(n, a, b).values) acc[z] += scale * v;
    }
    DiscreteHarmonic f{n, k, {}};
    for (auto& [z, v] : acc)
      if (v != 0) f.values.emplace_back(z, v);
    ensure(in_harm_kernel(f), "sampled harmonic not killed by gamma");
    out.push_back(std::move(f));
  }
  return out;
}

IncidenceTable::IncidenceTable(const BinaryCode& c, int k) : n_(c.n), k_(k) {
  require(k >= 0 && k <= c.n, "incidence degree out of range");
  counts_.assign(static_cast<size_t>(c.n) + 1, {});
  const size_t nsets = static_cast<size_t>(binom(c.n, k));
  std::vector<int> pos;
  for_each_codeword(c, [&](Word w) {
    const int wt = std::popcount(w);
    if (wt < k) return;
    auto& row = counts_[static_cast<size_t>(wt)];
    if (row.empty()) row.assign(nsets, 0);
    pos = bits_of(w);
    // walk all k-subsets of the support with incremental ranks
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      long r = 0;
      for (int i = 0; i < k; ++i) r += binom(pos[static_cast<size_t>(idx[static_cast<size_t>(i)])], i + 1);
      ++row[static_cast<size_t>(r)];
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == wt - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  });
}

long IncidenceTable::count(int weight, Word z) const {
  require(std::popcount(z) == k_, "incidence lookup needs a k-subset");
  const auto& row = counts_[static_cast<size_t>(weight)];
  return row.empty() ? 0 : row[static_cast<size_t>(subset_rank(z))];
}

std::vector<Rational> IncidenceTable::enumerator(const DiscreteHarmonic& f) const {
  require(f.n == n_ && f.k == k_, "harmonic does not match the incidence table");
  std::vector<Rational> c(static_cast<size_t>(n_) + 1, Rational(0));
  std::vector<long> ranks;
  ranks.reserve(f.values.size());
  for (const auto& [z, v] : f.values) ranks.push_back(subset_rank(z));
  for (int w = 0; w <= n_; ++w) {
    const auto& row = counts_[static_cast<size_t>(w)];
    if (row.empty()) continue;
    Rational sum = 0;
    for (size_t i = 0; i < ranks.size(); ++i) {
      const long m = row[static_cast<size_t>(ranks[i])];
      if (m) sum += f.values[i].second * m;
    }
    c[static_cast<size_t>(w)] = sum;
  }
  return c;
}

HarmonicWeightEnumerator harmonic_weight_enumerator(const BinaryCode& c, const DiscreteHarmonic& f) {
  require(f.n == c.n, "harmonic function and code have different lengths");
  IncidenceTable table(c, f.k);
  return {c.n, f.k, table.enumerator(f)};
}

namespace {

struct HarmonicFamily {
  std::vector<DiscreteHarmonic> functions;
  bool sampled = false;
};

HarmonicFamily harmonics_for(int n, int k, long cap, int samples, std::uint64_t seed) {
  HarmonicFamily fam;
  if (harm_dim(n, k) > cap) {
    fam.sampled = true;
    fam.functions = sampled_harmonics(n, k, samples, seed);
  } else {
    fam.functions = harm_basis(n, k, cap);
  }
  return fam;
}

// Sum over the given weights of c_f(w), for every f; first nonzero reported.
DegreeVerdict degree_verdict(const BinaryCode& c, int j, const std::vector<int>& weights, long cap) {
  DegreeVerdict v;
  v.degree = j;
  if (2 * j > c.n) return v;  // Harm_j = 0
  auto fam = harmonics_for(c.n, j, cap, 20, 7 + static_cast<std::uint64_t>(j));
  v.sampled = fam.sampled;
  IncidenceTable table(c, j);
  struct Hit {
    long index = -1;
    Rational sum;
  };
  auto hits = parallel_chunks<Hit>(0, static_cast<long>(fam.functions.size()), [&](long lo, long hi) {
    Hit h;
    for (long i = lo; i < hi; ++i) {
      auto e = table.enumerator(fam.functions[static_cast<size_t>(i)]);
      Rational s = 0;
      for (int w : weights) s += e[static_cast<size_t>(w)];
      if (s != 0) {
        h.index = i;
        h.sum = s;
        break;
      }
    }
    return h;
  });
  v.functions_checked = static_cast<long>(fam.functions.size());
  for (const auto& h : hits)
    if (h.index >= 0) {
      v.pass = false;
      v.witness_function = h.index;
      v.witness_sum = h.sum;
      break;
    }
  return v;
}

}  // namespace

AntisymmetryResult antisymmetry_check(const BinaryCode& c, int k, long cap, int samples, std::uint64_t seed) {
  require(k % 2 == 1, "antisymmetry_check needs odd k");
  require(is_doubly_even(c) && is_self_dual(c), "antisymmetry_check needs a doubly even self-dual code");
  AntisymmetryResult out;
  if (2 * k > c.n) return out;
  auto fam = harmonics_for(c.n, k, cap, samples, seed);
  out.sampled = fam.sampled;
  IncidenceTable table(c, k);
  struct Hit {
    long index = -1;
    int weight = -1;
    Rational value;
  };
  auto hits = parallel_chunks<Hit>(0, static_cast<long>(fam.functions.size()), [&](long lo, long hi) {
    Hit h;
    for (long i = lo; i < hi && h.index < 0; ++i) {
      auto e = table.enumerator(fam.functions[static_cast<size_t>(i)]);
      for (int w = 0; w <= c.n; ++w) {
        Rational s = e[static_cast<size_t>(w)] + e[static_cast<size_t>(c.n - w)];
        if (s != 0) {
          h = {i, w, s};
          break;
        }
      }
    }
    return h;
  });
  out.functions_checked = static_cast<long>(fam.functions.size());
  for (const auto& h : hits)
    if (h.index >= 0) {
      out.pass = false;
      out.witness_function = h.index;
      out.witness_weight = h.weight;
      out.witness_value = h.value;
      break;
    }
  return out;
}

bool TwoWeightReport::pass() const {
  for (const auto& d : degrees)
    if (!d.pass) return false;
  return true;
}

TwoWeightReport two_weight_design_check(const BinaryCode& c, int ell, const std::vector<int>& T, long cap) {
  require(ell >= 0 && ell <= c.n, "ell out of range");
  TwoWeightReport rep;
  rep.ell = ell;
  rep.weights = {ell};
  if (c.n - ell != ell) rep.weights.push_back(c.n - ell);
  BlockFamily fam = shells(c, rep.weights);
  rep.blocks = static_cast<long>(fam.blocks.size());
  const int bound = std::min(ell, c.n - ell);
  for (int j : T) {
    require(j >= 1 && j <= bound, "degree " + std::to_string(j) + " outside 1..min(ell, n-ell)");
    rep.degrees.push_back(degree_verdict(c, j, rep.weights, cap));
  }
  if (bound >= 1) rep.one_design = design_lambda(fam, 1, true);
  return rep;
}

std::vector<DegreeVerdict> harmonic_design_degrees(const BinaryCode& c, const std::vector<int>& weights, int max_degree,
                                                   long cap) {
  std::vector<DegreeVerdict> out;
  for (int j = 1; j <= max_degree; ++j) out.push_back(degree_verdict(c, j, weights, cap));
  return out;
}

int delsarte_strength(const BinaryCode& c, int w, int max_t, long cap) {
  int t = 0;
  for (int j = 1; j <= max_t; ++j) {
    if (!degree_verdict(c, j, {w}, cap).pass) break;
    t = j;
  }
  return t;
}

// -- binary forms ----------------------------------------------------------------

BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r;
  r.degree = a.degree + b.degree;
  r.coeffs.assign(static_cast<size_t>(r.degree) + 1, Rational(0));
  for (int i = 0; i <= a.degree; ++i) {
    if (a.coeffs[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j <= b.degree; ++j)
      r.coeffs[static_cast<size_t>(i + j)] += a.coeffs[static_cast<size_t>(i)] * b.coeffs[static_cast<size_t>(j)];
  }
  return r;
}

bool bf_is_zero(const BinaryForm& a) {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const Rational& r) { return r == 0; });
}

std::optional<BinaryForm> bf_divide(const BinaryForm& a, const BinaryForm& b, BinaryForm* remainder) {
  require(!bf_is_zero(b), "division by the zero form");
  const int qdeg = a.degree - b.degree;
  // dehomogenize at x = 1 and divide as polynomials in t = y/x
  int bdeg = b.degree;
  while (b.coeffs[static_cast<size_t>(bdeg)] == 0) --bdeg;
  std::vector<Rational> rem = a.coeffs;
  BinaryForm q;
  q.degree = std::max(qdeg, 0);
  q.coeffs.assign(static_cast<size_t>(q.degree) + 1, Rational(0));
  bool ok = qdeg >= 0 || bf_is_zero(a);
  for (int top = a.degree; top >= bdeg && ok; --top) {
    const Rational lead = rem[static_cast<size_t>(top)];
    if (lead == 0) continue;
    const int shift = top - bdeg;
    if (shift > qdeg) {
      ok = false;
      break;
    }
    const Rational f = lead / b.coeffs[static_cast<size_t>(bdeg)];
    q.coeffs[static_cast<size_t>(shift)] += f;
    for (int j = 0; j <= bdeg; ++j) rem[static_cast<size_t>(shift + j)] -= f * b.coeffs[static_cast<size_t>(j)];
  }
  if (ok) ok = std::all_of(rem.begin(), rem.end(), [](const Rational& r) { return r == 0; });
  if (remainder) *remainder = BinaryForm{a.degree, rem};
  if (!ok) return std::nullopt;
  return q;
}

namespace {

BinaryForm form(int degree, std::initializer_list<std::pair<int, long>> terms) {
  BinaryForm f;
  f.degree = degree;
  f.coeffs.assign(static_cast<size_t>(degree) + 1, Rational(0));
  for (auto [i, c] : terms) f.coeffs[static_cast<size_t>(i)] = c;
  return f;
}

BinaryForm bf_pow(const BinaryForm& a, int e) {
  BinaryForm r = form(0, {{0, 1}});
  for (int i = 0; i < e; ++i) r = bf_mul(r, a);
  return r;
}

}  // namespace

BinaryForm P8() { return form(8, {{0, 1}, {4, 14}, {8, 1}}); }

BinaryForm P12() {
  // x^2 y^2 (x^4 - y^4)^2
  return bf_mul(form(4, {{2, 1}}), bf_pow(form(4, {{0, 1}, {4, -1}}), 2));
}

BinaryForm P18() {
  // xy (x^8 - y^8)(x^8 - 34 x^4 y^4 + y^8)
  return bf_mul(bf_mul(form(2, {{1, 1}}), form(8, {{0, 1}, {8, -1}})), form(8, {{0, 1}, {4, -34}, {8, 1}}));
}

BinaryForm P24() { return bf_mul(form(8, {{4, 1}}), bf_pow(form(4, {{0, 1}, {4, -1}}), 4)); }

BinaryForm P30() { return bf_mul(P12(), P18()); }

DivisibilityResult divisibility_structure_check(const BinaryCode& c, const DiscreteHarmonic& f) {
  require(f.n == c.n, "harmonic function and code have different lengths");
  const int n = c.n, k = f.k;
  auto w = harmonic_weight_enumerator(c, f);
  DivisibilityResult out;
  out.enumerator_is_zero = std::all_of(w.coeffs.begin(), w.coeffs.end(), [](const Rational& r) { return r == 0; });
  for (int i = 0; i <= n; ++i) {
    if ((i < k || i > n - k) && w.coeffs[static_cast<size_t>(i)] != 0) {
      out.xy_power_divides = false;
      out.xy_witness = i;
      break;
    }
  }
  const int r = k % 4;
  out.invariant = r == 0 ? "1" : r == 1 ? "P30" : r == 2 ? "P12" : "P18";
  if (!out.xy_power_divides || r == 0 || 2 * k > n) return out;
  BinaryForm z;
  z.degree = n - 2 * k;
  z.coeffs.assign(w.coeffs.begin() + k, w.coeffs.begin() + (n - k) + 1);
  const BinaryForm divisor = r == 1 ? P30() : r == 2 ? P12() : P18();
  BinaryForm rem;
  out.invariant_divides = bf_divide(z, divisor, &rem).has_value();
  if (!out.invariant_divides) out.remainder = rem;
  return out;
}

}  // namespace designlab::codes
