#include <sstream>

#include "designlab/lattices.hpp"

namespace designlab::lattices {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  require(i >= 0 && i < nvars, "variable index out of range");
  Polynomial p(nvars);
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Polynomial::add_term(const std::vector<int>& exponents, const Rational& c) {
  require(static_cast<int>(exponents.size()) == n_, "monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (deg < 0) deg = d;
    require(d == deg, "polynomial is not homogeneous");
  }
  return deg;
}

Rational Polynomial::evaluate(const RatVec& x) const {
  require(static_cast<int>(x.size()) == n_, "point has the wrong dimension");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Rational Polynomial::evaluate(const IntVec& x) const {
  require(static_cast<int>(x.size()) == n_, "point has the wrong dimension");
  Rational s = 0;
  Integer m;
  for (const auto& [e, c] : terms_) {
    m = 1;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    if (m != 0) s += c * m;
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_fraction_string(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) os << "*x" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require(a.n_ == b.n_, "polynomials in different numbers of variables");
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Polynomial r(a.n_);
  if (s == 0) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require(a.n_ == b.n_, "polynomials in different numbers of variables");
  Polynomial r(a.n_);
  std::vector<int> e(static_cast<size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial pow(const Polynomial& p, int e) {
  require(e >= 0, "negative polynomial power");
  Polynomial r = Polynomial::constant(p.nvars(), Rational(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Polynomial laplacian(const Polynomial& p) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 2) continue;
      std::vector<int> d = e;
      d[i] -= 2;
      r.add_term(d, c * (e[i] * (e[i] - 1)));
    }
  }
  return r;
}

bool is_harmonic(const Polynomial& p) { return laplacian(p).is_zero(); }

HarmonicPolynomial make_harmonic(Polynomial p, std::string label) {
  require(is_harmonic(p), "polynomial is not harmonic");
  HarmonicPolynomial h;
  h.degree = std::max(0, p.homogeneous_degree());
  h.poly = std::move(p);
  h.label = std::move(label);
  return h;
}

std::vector<Rational> zonal_coefficients(int n, int k) {
  require(n >= 1 && k >= 0, "zonal coefficients need n >= 1, k >= 0");
  std::vector<Rational> a{Rational(1)};
  for (int i = 0; k - 2 * i >= 2; ++i) {
    const long num = -static_cast<long>(k - 2 * i) * (k - 2 * i - 1);
    const long den = 2L * (i + 1) * (n + 2 * k - 2 * i - 4);
    ensure(den != 0, "degenerate zonal recurrence");
    Rational next = a.back() * Rational(num, den);
    next.canonicalize();
    a.push_back(next);
  }
  return a;
}

HarmonicPolynomial zonal_harmonic(int n, int k, const RatVec& u) {
  require(static_cast<int>(u.size()) == n, "direction has the wrong dimension");
  Rational uu = 0;
  for (const auto& c : u) uu += c * c;
  require(uu != 0, "zonal direction must be nonzero");
  Polynomial xu(n), xx(n);
  for (int i = 0; i < n; ++i) {
    xu = xu + u[static_cast<size_t>(i)] * Polynomial::variable(n, i);
    xx = xx + pow(Polynomial::variable(n, i), 2);
  }
  const auto a = zonal_coefficients(n, k);
  Polynomial p(n);
  for (size_t i = 0; i < a.size(); ++i) {
    Rational s = a[i];
    for (size_t m = 0; m < i; ++m) s *= uu;
    p = p + s * (pow(xu, k - 2 * static_cast<int>(i)) * pow(xx, static_cast<int>(i)));
  }
  if (k == 0) p = Polynomial::constant(n, Rational(1));
  ensure(is_harmonic(p), "zonal polynomial failed its harmonicity check");
  HarmonicPolynomial h;
  h.poly = std::move(p);
  h.degree = k;
  h.label = "zonal" + std::to_string(k);
  return h;
}

ThetaWeight ThetaWeight::one() { return ThetaWeight{}; }

ThetaWeight ThetaWeight::zonal(int degree, RatVec direction) {
  require(degree >= 0, "zonal degree must be nonnegative");
  ThetaWeight w;
  w.kind = degree == 0 ? Kind::One : Kind::Zonal;
  w.degree = degree;
  w.direction = std::move(direction);
  return w;
}

ThetaWeight ThetaWeight::polynomial(HarmonicPolynomial p) {
  ThetaWeight w;
  w.kind = Kind::Poly;
  w.degree = p.degree;
  w.poly = std::move(p);
  return w;
}

std::string ThetaWeight::describe() const {
  switch (kind) {
    case Kind::One: return "one";
    case Kind::Zonal: {
      std::string s = "zonal" + std::to_string(degree) + "[";
      for (size_t i = 0; i < direction.size(); ++i) s += (i ? "," : "") + to_fraction_string(direction[i]);
      return s + "]";
    }
    case Kind::Poly: return poly.label.empty() ? poly.poly.to_string() : poly.label;
  }
  return "?";
}

Rational evaluate_weight(const Lattice& l, const ThetaWeight& w, const IntVec& v) {
  switch (w.kind) {
    case ThetaWeight::Kind::One: return 1;
    case ThetaWeight::Kind::Zonal: {
      const Rational xw = inner(l, v, w.direction);
      Rational ww = 0;
      for (size_t i = 0; i < w.direction.size(); ++i)
        for (size_t j = 0; j < w.direction.size(); ++j) ww += l.gram[i][j] * w.direction[i] * w.direction[j];
      const Rational s = norm(l, v) * ww;
      const auto a = zonal_coefficients(l.rank(), w.degree);
      Rational total = 0, sp = 1;
      for (size_t i = 0; i < a.size(); ++i) {
        Rational t = a[i] * sp;
        for (int e = 0; e < w.degree - 2 * static_cast<int>(i); ++e) t *= xw;
        total += t;
        sp *= s;
      }
      return total;
    }
    case ThetaWeight::Kind::Poly: {
      require(w.poly.poly.nvars() == l.rank(), "polynomial and lattice dimensions differ");
      return w.poly.poly.evaluate(ambient_vector(l, v));
    }
  }
  return 0;
}

}  // namespace designlab::lattices
