#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "designlab/lattices.hpp"

namespace designlab::lattices {

std::vector<Rational> ldl_pivots(const Matrix& gram) {
  Matrix a = gram;
  const size_t n = a.size();
  std::vector<Rational> pivots;
  for (size_t k = 0; k < n; ++k) {
    const Rational p = a[k][k];
    pivots.push_back(p);
    if (p == 0) break;
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / p;
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return pivots;
}

Lattice lattice_from_gram(Matrix gram, std::string label) {
  const size_t n = gram.size();
  require(n >= 1, "Gram matrix is empty");
  for (const auto& row : gram) require(row.size() == n, "Gram matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) require(gram[i][j] == gram[j][i], "Gram matrix must be symmetric");
  for (const auto& p : ldl_pivots(gram)) require(p > 0, "Gram matrix is not positive definite");
  Lattice l;
  l.gram = std::move(gram);
  l.label = std::move(label);
  return l;
}

namespace {

Lattice from_frame(std::vector<IntVec> basis, const Rational& scale, std::string label) {
  const size_t n = basis.size();
  Matrix g(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long dot = 0;
      for (size_t c = 0; c < basis[i].size(); ++c) dot += basis[i][c] * basis[j][c];
      g[i][j] = scale * dot;
    }
  Lattice l = lattice_from_gram(std::move(g), std::move(label));
  l.frame = Frame{std::move(basis), scale};
  return l;
}

}  // namespace

Lattice lattice_zn(int n) {
  require(n >= 1, "Z^n needs n >= 1");
  std::vector<IntVec> b(static_cast<size_t>(n), IntVec(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return from_frame(std::move(b), Rational(1), "Z" + std::to_string(n));
}

Lattice lattice_a2() { return lattice_from_gram({{2, 1}, {1, 2}}, "A2"); }

Lattice construction_a(const codes::BinaryCode& c) {
  require(c.n >= 1, "construction A needs a nonempty code");
  require(codes::is_doubly_even(c), "construction A needs a doubly even code (the lattice would not be even)");
  const size_t n = static_cast<size_t>(c.n);
  std::vector<IntVec> basis;
  std::vector<bool> pivot(n, false);
  for (auto row : c.rows) {
    IntVec v(n, 0);
    for (size_t i = 0; i < n; ++i) v[i] = (row >> i) & 1;
    pivot[static_cast<size_t>(std::countr_zero(row))] = true;
    basis.push_back(std::move(v));
  }
  for (size_t j = 0; j < n; ++j) {
    if (pivot[j]) continue;
    IntVec v(n, 0);
    v[j] = 2;
    basis.push_back(std::move(v));
  }
  Lattice l = from_frame(std::move(basis), Rational(1, 2), "A(" + c.label + ")");
  l.source = c;
  return l;
}

Lattice lattice_e8() {
  Lattice l = construction_a(codes::hamming_e8());
  l.label = "E8";
  return l;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const size_t na = a.gram.size(), nb = b.gram.size(), n = na + nb;
  Matrix g(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) g[i][j] = a.gram[i][j];
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = 0; j < nb; ++j) g[na + i][na + j] = b.gram[i][j];
  Lattice l = lattice_from_gram(std::move(g), a.label + "+" + b.label);
  if (a.frame && b.frame && a.frame->scale == b.frame->scale) {
    const size_t da = a.frame->basis.front().size(), db = b.frame->basis.front().size();
    Frame f{{}, a.frame->scale};
    for (const auto& r : a.frame->basis) {
      IntVec v(r);
      v.resize(da + db, 0);
      f.basis.push_back(std::move(v));
    }
    for (const auto& r : b.frame->basis) {
      IntVec v(da, 0);
      v.insert(v.end(), r.begin(), r.end());
      f.basis.push_back(std::move(v));
    }
    l.frame = std::move(f);
    if (a.source && b.source) l.source = codes::direct_sum(*a.source, *b.source);
  }
  return l;
}

Lattice load_gram_file(const std::string& path, std::string label) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open Gram matrix '" + path + "'");
  Matrix g;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::vector<Rational> row;
    std::string tok;
    while (ss >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) g.push_back(std::move(row));
  }
  return lattice_from_gram(std::move(g), label.empty() ? path : std::move(label));
}

Lattice lattice_by_name(const std::string& name) {
  require(!name.empty(), "empty lattice name");
  if (name.find('/') != std::string::npos || name.ends_with(".txt")) return load_gram_file(name);
  if (name.starts_with("A:")) return construction_a(codes::code_by_name(name.substr(2)));
  if (name == "E8+E8") {
    Lattice l = direct_sum(lattice_e8(), lattice_e8());
    l.label = "E8+E8";
    return l;
  }
  if (name == "E8") return lattice_e8();
  if (name == "A2") return lattice_a2();
  if (name == "D16+") {
    Lattice l = construction_a(codes::d16_plus());
    l.label = "D16+";
    return l;
  }
  if (name == "golay24-A") {
    Lattice l = construction_a(codes::golay_g24());
    l.label = "golay24-A";
    return l;
  }
  if (name == "e8_cartan" || name == "a2" || name == "z2") {
    return load_gram_file(fixture_dir() + "/lattices/" + name + ".txt", name);
  }
  if (name.size() >= 2 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return lattice_zn(std::stoi(name.substr(1)));
  fail(ErrorCode::NotFound, "unknown lattice '" + name +
                                "' (known: Z<n>, A2, E8, E8+E8, D16+, golay24-A, A:<code>, e8_cartan, or a path)");
}

Rational determinant(const Lattice& l) {
  Rational d = 1;
  for (const auto& p : ldl_pivots(l.gram)) d *= p;
  return d;
}

bool is_integral(const Lattice& l) {
  for (const auto& row : l.gram)
    for (const auto& x : row)
      if (x.get_den() != 1) return false;
  return true;
}

bool is_even(const Lattice& l) {
  if (!is_integral(l)) return false;
  for (size_t i = 0; i < l.gram.size(); ++i)
    if (l.gram[i][i].get_num() % 2 != 0) return false;
  return true;
}

bool is_unimodular(const Lattice& l) { return is_integral(l) && determinant(l) == 1; }

Rational inner(const Lattice& l, const IntVec& u, const IntVec& v) {
  const size_t n = l.gram.size();
  require(u.size() == n && v.size() == n, "vector length differs from the lattice rank");
  Rational s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!u[i]) continue;
    for (size_t j = 0; j < n; ++j)
      if (v[j]) s += l.gram[i][j] * (u[i] * v[j]);
  }
  return s;
}

Rational inner(const Lattice& l, const IntVec& u, const RatVec& w) {
  const size_t n = l.gram.size();
  require(u.size() == n && w.size() == n, "vector length differs from the lattice rank");
  Rational s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!u[i]) continue;
    for (size_t j = 0; j < n; ++j)
      if (w[j] != 0) s += l.gram[i][j] * w[j] * u[i];
  }
  return s;
}

Rational norm(const Lattice& l, const IntVec& v) { return inner(l, v, v); }

IntVec ambient_vector(const Lattice& l, const IntVec& v) {
  require(l.frame.has_value(), "lattice '" + l.label + "' has no integer frame");
  const auto& b = l.frame->basis;
  IntVec y(b.front().size(), 0);
  for (size_t i = 0; i < b.size(); ++i)
    if (v[i])
      for (size_t c = 0; c < y.size(); ++c) y[c] += v[i] * b[i][c];
  return y;
}

RatVec ambient_to_lattice(const Lattice& l, const RatVec& e) {
  require(l.frame.has_value(), "lattice '" + l.label + "' has no integer frame");
  const auto& b = l.frame->basis;
  const size_t n = b.size();
  require(e.size() == b.front().size() && n == e.size(), "ambient vector has the wrong length");
  // solve B^T w = e
  Matrix a(n, std::vector<Rational>(n + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) a[r][c] = b[c][r];
    a[r][n] = e[r];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    ensure(p < n, "frame basis is singular");
    std::swap(a[p], a[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RatVec w(n);
  for (size_t r = 0; r < n; ++r) w[r] = a[r][n] / a[r][r];
  return w;
}

}  // namespace designlab::lattices
