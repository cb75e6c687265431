#include "designlab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <sstream>
#include <string>

#include "designlab/codes.hpp"
#include "designlab/lattices.hpp"
#include "designlab/modforms.hpp"
#include "designlab/voa.hpp"
#include "json.hpp"

struct dl_series {
  designlab::modforms::QSeries s;
};
struct dl_code {
  designlab::codes::BinaryCode c;
};
struct dl_lattice {
  designlab::lattices::Lattice l;
};

namespace {

using designlab::ErrorCode;
using designlab::Rational;
using json = nlohmann::json;
namespace dl = designlab;
namespace lat = designlab::lattices;

thread_local std::string g_last_error;

dl_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return DL_INVALID_ARGUMENT;
    case ErrorCode::InsufficientPrecision: return DL_INSUFFICIENT_PRECISION;
    case ErrorCode::CapExceeded: return DL_CAP_EXCEEDED;
    case ErrorCode::NotFound: return DL_NOT_FOUND;
    case ErrorCode::Io: return DL_IO;
    case ErrorCode::Internal: return DL_INTERNAL;
  }
  return DL_INTERNAL;
}

template <class F>
dl_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return DL_OK;
  } catch (const dl::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DL_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DL_INTERNAL;
  }
}

void need(const void* p, const char* what) { dl::require(p != nullptr, std::string(what) + " must not be NULL"); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(json j, char** out) {
  need(out, "out");
  j["schema"] = "v1";
  *out = dup_string(j.dump());
}

std::string frac(const Rational& r) { return dl::to_fraction_string(r); }

std::vector<int> int_list(const int* p, int n) {
  dl::require(n >= 0, "list length must be nonnegative");
  if (n > 0) need(p, "list");
  return std::vector<int>(p, p + n);
}

Rational parse_norm(const char* norm) {
  need(norm, "norm");
  const Rational r = dl::parse_rational(norm);
  dl::require(r > 0, "norm must be positive");
  return r;
}

lat::RatVec default_direction(const lat::Lattice& l, int axis) {
  const size_t n = static_cast<size_t>(l.rank());
  dl::require(axis >= 0 && static_cast<size_t>(axis) < n, "axis out of range");
  lat::RatVec e(n, Rational(0));
  e[static_cast<size_t>(axis)] = 1;
  return l.frame ? lat::ambient_to_lattice(l, e) : e;
}

lat::ThetaWeight parse_weight(const lat::Lattice& l, const char* text) {
  need(text, "weight");
  const std::string s(text);
  if (s == "one" || s == "1") return lat::ThetaWeight::one();
  dl::require(s.rfind("zonal:", 0) == 0, "weight must be 'one' or 'zonal:<k>[:axis=<a> | :<w1>,<w2>,...]'");
  const std::string rest = s.substr(6);
  const auto colon = rest.find(':');
  int k = 0;
  try {
    k = std::stoi(rest.substr(0, colon));
  } catch (const std::exception&) {
    dl::fail(ErrorCode::InvalidArgument, "zonal degree is not an integer: '" + rest + "'");
  }
  dl::require(k >= 0, "zonal degree must be nonnegative");
  if (colon == std::string::npos) return lat::ThetaWeight::zonal(k, default_direction(l, 0));
  const std::string dir = rest.substr(colon + 1);
  if (dir.rfind("axis=", 0) == 0) return lat::ThetaWeight::zonal(k, default_direction(l, std::stoi(dir.substr(5))));
  lat::RatVec w;
  std::stringstream ss(dir);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(dl::parse_rational(tok));
  dl::require(static_cast<int>(w.size()) == l.rank(), "zonal direction needs one entry per lattice coordinate");
  return lat::ThetaWeight::zonal(k, std::move(w));
}

json vec_json(const lat::IntVec& v) { return json(v); }

json moment_json(const lat::MomentReport& m) {
  json per = json::array();
  for (const auto& v : m.per_k) per.push_back({{"k", v.k}, {"pass", v.pass}, {"lhs", frac(v.lhs)}, {"rhs", frac(v.rhs)}});
  return {{"strength", m.strength}, {"witness_k", m.witness_k}, {"antipodal", m.antipodal}, {"per_k", per}};
}

json degrees_json(const lat::TDesignReport& r) {
  json per = json::array();
  for (const auto& d : r.per_degree)
    per.push_back({{"degree", d.degree},
                   {"pass", d.pass},
                   {"kernel_sum", frac(d.kernel_sum)},
                   {"raw_moment_pass", d.raw_moment_pass},
                   {"in_expected", d.in_expected}});
  return per;
}

json lambda_json(const dl::codes::DesignLambda& d, int n) {
  json j = {{"is_design", d.is_design}, {"subsets_checked", d.subsets_checked}};
  if (d.is_design) {
    j["lambda"] = d.lambda;
  } else {
    j["lambda"] = nullptr;
    j["witness"] = {{"a", dl::codes::word_string(d.witness_a, n)},
                    {"count_a", d.count_a},
                    {"b", dl::codes::word_string(d.witness_b, n)},
                    {"count_b", d.count_b}};
  }
  return j;
}

json strength_json(const designlab::voa::StrengthReport& r) {
  json j = {{"central_charge", r.central_charge},
            {"ell", r.ell},
            {"base_T", r.base_T},
            {"includes_odd", true},
            {"contested_degree", r.contested_degree},
            {"coefficient", frac(r.coefficient)},
            {"coefficient_name", r.coefficient_name},
            {"contested_holds", r.contested_holds},
            {"verdict", r.verdict},
            {"strength", r.lower_bound ? json(">= " + std::to_string(r.strength)) : json(r.strength)}};
  if (r.central_charge == 16) {
    j["ord_criterion"] = r.criterion;
    j["reading_statement"] = r.reading_statement;
    j["reading_proof"] = r.reading_proof;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

extern "C" {

const char* dl_version(void) { return "1.0.0"; }
const char* dl_last_error(void) { return g_last_error.c_str(); }

const char* dl_status_name(dl_status s) {
  switch (s) {
    case DL_OK: return "ok";
    case DL_INVALID_ARGUMENT: return "invalid_argument";
    case DL_INSUFFICIENT_PRECISION: return "insufficient_precision";
    case DL_CAP_EXCEEDED: return "cap_exceeded";
    case DL_NOT_FOUND: return "not_found";
    case DL_IO: return "io";
    case DL_INTERNAL: return "internal";
  }
  return "unknown";
}

void dl_free_string(char* s) { std::free(s); }

dl_status dl_set_workers(int n) {
  return guarded([&] { dl::set_worker_count(n); });
}
int dl_get_workers(void) { return dl::worker_count(); }

dl_status dl_set_fixture_dir(const char* dir) {
  return guarded([&] { dl::set_fixture_dir(dir ? dir : ""); });
}

// -- series

dl_status dl_eta_quotient(const char* spec, long prec, dl_series** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new dl_series{dl::modforms::eta_quotient(dl::modforms::parse_eta_spec(spec), prec)};
  });
}

dl_status dl_eisenstein(int k, long prec, dl_series** out) {
  return guarded([&] {
    need(out, "out");
    *out = new dl_series{dl::modforms::eisenstein(k, prec)};
  });
}

dl_status dl_delta(long prec, dl_series** out) {
  return guarded([&] {
    need(out, "out");
    *out = new dl_series{dl::modforms::delta(prec)};
  });
}

dl_status dl_series_from_json(const char* text, dl_series** out) {
  return guarded([&] {
    need(text, "json");
    need(out, "out");
    *out = new dl_series{dl::modforms::series_from_json(text)};
  });
}

void dl_series_free(dl_series* s) { delete s; }
long dl_series_prec(const dl_series* s) { return s ? s->s.prec() : -1; }
long dl_series_offset24(const dl_series* s) { return s ? s->s.offset24() : 0; }

dl_status dl_series_coefficient(const dl_series* s, long i, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup_string(frac(s->s[i]));
  });
}

dl_status dl_series_to_json(const dl_series* s, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup_string(dl::modforms::to_json(s->s));
  });
}

dl_status dl_series_vanishing_json(const dl_series* s, long bound, char** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = dup_string(json(dl::modforms::vanishing_indices(s->s, bound)).dump());
  });
}

// -- codes

dl_status dl_code_load(const char* name, dl_code** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = new dl_code{dl::codes::code_by_name(name)};
  });
}

void dl_code_free(dl_code* c) { delete c; }

dl_status dl_code_info_json(const dl_code* h, char** out) {
  return guarded([&] {
    need(h, "code");
    const auto& c = h->c;
    emit({{"kind", "code_info"},
          {"code", c.label},
          {"n", c.n},
          {"k", c.k()},
          {"weight_distribution", dl::codes::weight_distribution(c)},
          {"min_weight", dl::codes::min_weight(c)},
          {"doubly_even", dl::codes::is_doubly_even(c)},
          {"self_dual", dl::codes::is_self_dual(c)},
          {"dropped_dependent_rows", c.dropped_dependent}},
         out);
  });
}

dl_status dl_code_design_json(const dl_code* h, const int* weights, int nweights, int t, char** out) {
  return guarded([&] {
    need(h, "code");
    const auto ws = int_list(weights, nweights);
    dl::require(!ws.empty(), "at least one weight is needed");
    const auto f = dl::codes::shells(h->c, ws);
    dl::require(!f.blocks.empty(), "the selected shells are empty");
    const auto d = dl::codes::design_lambda(f, t, ws.size() > 1);
    json j = {{"kind", "code_design"}, {"code", h->c.label}, {"n", h->c.n}, {"weights", ws},
              {"t", t},            {"blocks", f.blocks.size()}};
    j.update(lambda_json(d, h->c.n));
    j["verdict"] = d.is_design ? "design" : "not a design";
    emit(j, out);
  });
}

dl_status dl_code_tset_json(const dl_code* h, const int* weights, int nweights, const int* degrees, int ndegrees,
                            int max_degree, long cap, char** out) {
  return guarded([&] {
    need(h, "code");
    const auto ws = int_list(weights, nweights);
    dl::require(!ws.empty(), "at least one weight is needed");
    auto ds = int_list(degrees, ndegrees);
    dl::require(max_degree >= 1, "max_degree must be positive");
    for (int d : ds) dl::require(d >= 1 && d <= max_degree, "degrees must lie in 1..max_degree");
    const auto verdicts = dl::codes::harmonic_design_degrees(h->c, ws, max_degree, cap > 0 ? cap : dl::codes::kDefaultHarmCap);
    const auto f = dl::codes::shells(h->c, ws);
    const auto one = dl::codes::design_lambda(f, 1, true);
    json per = json::array();
    bool pass = true;
    for (const auto& v : verdicts) {
      const bool selected = ds.empty() || std::find(ds.begin(), ds.end(), v.degree) != ds.end();
      if (!selected) continue;
      pass = pass && v.pass;
      json e = {{"degree", v.degree}, {"pass", v.pass}, {"sampled", v.sampled}, {"functions_checked", v.functions_checked}};
      if (!v.pass) e["witness"] = {{"function", v.witness_function}, {"sum", frac(v.witness_sum)}};
      per.push_back(e);
    }
    json j = {{"kind", "code_tset"}, {"code", h->c.label}, {"weights", ws}, {"blocks", f.blocks.size()},
              {"degrees", per},      {"one_design", lambda_json(one, h->c.n)}};
    j["pass"] = pass && one.is_design;
    emit(j, out);
  });
}

dl_status dl_code_antisymmetry_json(const dl_code* h, int k, long cap, char** out) {
  return guarded([&] {
    need(h, "code");
    const auto r = dl::codes::antisymmetry_check(h->c, k, cap > 0 ? cap : dl::codes::kDefaultHarmCap);
    json j = {{"kind", "antisymmetry"}, {"code", h->c.label}, {"k", k}, {"pass", r.pass},
              {"sampled", r.sampled},   {"functions_checked", r.functions_checked}};
    if (!r.pass)
      j["witness"] = {{"function", r.witness_function}, {"weight", r.witness_weight}, {"value", frac(r.witness_value)}};
    emit(j, out);
  });
}

// -- lattices

dl_status dl_lattice_load(const char* name, dl_lattice** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = new dl_lattice{lat::lattice_by_name(name)};
  });
}

void dl_lattice_free(dl_lattice* l) { delete l; }

dl_status dl_lattice_info_json(const dl_lattice* h, char** out) {
  return guarded([&] {
    need(h, "lattice");
    const auto& l = h->l;
    json gram = json::array();
    for (const auto& row : l.gram) {
      json r = json::array();
      for (const auto& x : row) r.push_back(frac(x));
      gram.push_back(r);
    }
    emit({{"kind", "lattice_info"},
          {"lattice", l.label},
          {"rank", l.rank()},
          {"determinant", frac(lat::determinant(l))},
          {"integral", lat::is_integral(l)},
          {"even", lat::is_even(l)},
          {"unimodular", lat::is_unimodular(l)},
          {"framed", l.frame.has_value()},
          {"source_code", l.source ? json(l.source->label) : json(nullptr)},
          {"gram", gram}},
         out);
  });
}

dl_status dl_lattice_design_json(const dl_lattice* h, const char* norm, int t, long cap, char** out) {
  return guarded([&] {
    need(h, "lattice");
    const auto shell = lat::shell_enum(h->l, parse_norm(norm), cap > 0 ? cap : lat::kDefaultShellCap);
    json j = {{"kind", "lattice_design"}, {"lattice", h->l.label}, {"norm", frac(shell.norm)},
              {"shell_size", shell.size()}, {"t", t}};
    if (shell.empty()) {
      j["empty"] = true;
      emit(j, out);
      return;
    }
    const auto m = lat::moment_design_test(h->l, shell, t);
    std::vector<int> ds;
    for (int d = 1; d <= t; ++d) ds.push_back(d);
    const auto rep = lat::spherical_T_design_report(h->l, shell, ds);
    j["empty"] = false;
    j["moments"] = moment_json(m);
    j["strength"] = m.strength;
    j["witness_k"] = m.witness_k;
    j["degrees"] = degrees_json(rep);
    emit(j, out);
  });
}

dl_status dl_lattice_design_range_json(const dl_lattice* h, long lo, long hi, int t, char** out) {
  return guarded([&] {
    need(h, "lattice");
    dl::require(lo >= 1 && hi >= lo, "norm range must satisfy 1 <= lo <= hi");
    json shells = json::array();
    for (const auto& s : lat::shells_up_to(h->l, Rational(hi))) {
      if (s.norm < lo) continue;
      const auto m = lat::moment_design_test(h->l, s, t);
      shells.push_back({{"norm", frac(s.norm)}, {"size", s.size()}, {"strength", m.strength}, {"witness_k", m.witness_k}});
    }
    emit({{"kind", "lattice_design_range"}, {"lattice", h->l.label}, {"norm_lo", lo}, {"norm_hi", hi}, {"t", t},
          {"shells", shells}},
         out);
  });
}

dl_status dl_lattice_tset_json(const dl_lattice* h, const char* norm, const int* degrees, int ndegrees, long cap,
                               char** out) {
  return guarded([&] {
    need(h, "lattice");
    const auto ds = int_list(degrees, ndegrees);
    dl::require(!ds.empty(), "at least one degree is needed");
    const auto shell = lat::shell_enum(h->l, parse_norm(norm), cap > 0 ? cap : lat::kDefaultShellCap);
    dl::require(!shell.empty(), "shell of norm " + std::string(norm) + " is empty");
    const auto rep = lat::spherical_T_design_report(h->l, shell, ds);
    emit({{"kind", "lattice_tset"},
          {"lattice", h->l.label},
          {"norm", frac(shell.norm)},
          {"shell_size", shell.size()},
          {"antipodal", rep.antipodal},
          {"degrees", degrees_json(rep)},
          {"pass", rep.pass()}},
         out);
  });
}

dl_status dl_lattice_shell(const dl_lattice* h, const char* norm, long cap, const char* format, char** out) {
  return guarded([&] {
    need(h, "lattice");
    need(out, "out");
    const std::string fmt = format ? format : "json";
    const auto shell = lat::shell_enum(h->l, parse_norm(norm), cap > 0 ? cap : lat::kDefaultShellCap);
    if (fmt == "csv") {
      *out = dup_string(lat::shell_csv(shell));
      return;
    }
    dl::require(fmt == "json", "format must be json or csv");
    json vs = json::array();
    for (const auto& v : shell.vectors) vs.push_back(vec_json(v));
    emit({{"kind", "shell"}, {"lattice", h->l.label}, {"norm", frac(shell.norm)}, {"size", shell.size()}, {"vectors", vs}},
         out);
  });
}

dl_status dl_lattice_theta(const dl_lattice* h, const char* weight, long prec_norm, int route, dl_series** out) {
  return guarded([&] {
    need(h, "lattice");
    need(out, "out");
    dl::require(route >= 0 && route <= 2, "route must be 0, 1 or 2");
    const auto w = parse_weight(h->l, weight);
    *out = new dl_series{lat::harmonic_theta(h->l, w, prec_norm, static_cast<lat::ThetaRoute>(route))};
  });
}

dl_status dl_theta_membership_json(const dl_lattice* h, const char* weight, long prec, char** out) {
  return guarded([&] {
    need(h, "lattice");
    const auto w = parse_weight(h->l, weight);
    const auto m = lat::theta_membership_check(h->l, w, prec);
    json coords = json::array(), gcoords = json::array();
    for (const auto& c : m.fit.coords) coords.push_back(frac(c));
    for (const auto& c : m.fit.generator_coords) gcoords.push_back(frac(c));
    emit({{"kind", "theta_membership"},
          {"lattice", h->l.label},
          {"weight_function", w.describe()},
          {"modular_weight", m.weight},
          {"e6_factor", m.e6_factor},
          {"member", m.fit.member},
          {"checked_through", m.fit.checked_through},
          {"coords", coords},
          {"generators", m.generator_labels},
          {"generator_coords", gcoords}},
         out);
  });
}

// -- conformal designs

dl_status dl_trace_series(char which, long prec, dl_series** out) {
  return guarded([&] {
    need(out, "out");
    namespace v = designlab::voa;
    switch (which) {
      case 'a': *out = new dl_series{v::a_series(prec).series}; break;
      case 'b': *out = new dl_series{v::b_series(prec).series}; break;
      case 'c': *out = new dl_series{v::c_series(prec).series}; break;
      case 'd': *out = new dl_series{v::d_series(prec).series}; break;
      default: dl::fail(ErrorCode::InvalidArgument, "series must be one of a, b, c, d");
    }
  });
}

dl_status dl_graded_trace(const dl_lattice* h, const char* weight, long prec, dl_series** out) {
  return guarded([&] {
    need(h, "lattice");
    need(out, "out");
    *out = new dl_series{designlab::voa::graded_trace(h->l, parse_weight(h->l, weight), prec).series};
  });
}

int dl_ord_criterion(long ell) {
  int r = -1;
  guarded([&] { r = designlab::voa::ord_criterion(ell) ? 1 : 0; });
  return r;
}

dl_status dl_voa_strength_json(int c, long ell, long prec, char** out) {
  return guarded([&] {
    auto j = strength_json(designlab::voa::strength_at(c, ell, prec));
    j["kind"] = "voa_strength";
    emit(j, out);
  });
}

dl_status dl_voa_strength_scan_json(int c, long from, long to, char** out) {
  return guarded([&] {
    const auto reps = designlab::voa::strength_scan(c, from, to);
    std::map<std::string, long> counts;
    json holds = json::array(), mismatches = json::array();
    for (const auto& r : reps) {
      ++counts[r.lower_bound ? ">= " + std::to_string(r.strength) : std::to_string(r.strength)];
      if (r.contested_holds) holds.push_back(r.ell);
      if (!r.note.empty()) mismatches.push_back(r.ell);
    }
    const auto& first = reps.front();
    json j = {{"kind", "voa_strength_scan"},
              {"central_charge", c},
              {"from", from},
              {"to", to},
              {"base_T", first.base_T},
              {"includes_odd", true},
              {"contested_degree", first.contested_degree},
              {"strength_counts", counts},
              {"contested_holds_at", holds}};
    if (c == 16) j["ord_criterion_mismatches"] = mismatches;
    emit(j, out);
  });
}

dl_status dl_conformal_tset_json(int c, int max_even, char** out) {
  return guarded([&] {
    const auto t = designlab::voa::conformal_T_set(c, max_even);
    json der = json::array();
    for (const auto& d : t.derivation)
      der.push_back({{"degree", d.degree}, {"hardcoded", d.hardcoded}, {"derived", d.derived}, {"reason", d.reason}});
    emit({{"kind", "conformal_tset"},
          {"central_charge", c},
          {"finite_part", t.finite_part},
          {"includes_odd", t.includes_all_odd},
          {"derivation", der},
          {"agrees", t.derivation_agrees()}},
         out);
  });
}

dl_status dl_modular_obstruction_json(int c, int s, long mu, char** out) {
  return guarded([&] {
    const auto r = designlab::voa::modular_obstruction(c, s, mu);
    json w = json::array();
    for (const auto& f : r.witness) w.push_back(json::parse(dl::modforms::to_json(f)));
    emit({{"kind", "modular_obstruction"},
          {"central_charge", c},
          {"s", s},
          {"mu", mu},
          {"weight", r.weight},
          {"dim", r.dim},
          {"constraints", r.constraints},
          {"verdict", r.forced_vanishing ? "forced-vanishing" : "unobstructed with witness space"},
          {"reason", r.reason},
          {"witness_space", w}},
         out);
  });
}

dl_status dl_remark4_json(long prec, char** out) {
  return guarded([&] {
    const auto s = designlab::voa::remark4_series(prec);
    json head = json::array();
    for (long i = 0; i <= std::min(s.series.prec(), 9L); ++i) head.push_back(frac(s.series[i]));
    emit({{"kind", "remark4"},
          {"source", s.source},
          {"offset24", s.series.offset24()},
          {"checked_from", s.checked_from},
          {"checked_to", s.checked_to},
          {"zero_exponents", s.zeros},
          {"first_coefficients", head},
          {"verdict", s.zeros.empty() ? "no vanishing coefficients" : "vanishing coefficients found"}},
         out);
  });
}

dl_status dl_d_series_json(long prec, char** out) {
  return guarded([&] {
    const auto s = designlab::voa::d_series(prec);
    json head = json::array();
    for (long i = 1; i <= std::min(s.series.prec(), 10L); ++i) head.push_back(frac(s.series[i]));
    emit({{"kind", "d_series"},
          {"source", s.source},
          {"offset24", s.series.offset24()},
          {"checked_from", s.checked_from},
          {"checked_to", s.checked_to},
          {"zero_indices", s.zeros},
          {"first_coefficients", head}},
         out);
  });
}

dl_status dl_lehmer_json(long bound, long shell_bound, char** out) {
  return guarded([&] {
    const auto s = designlab::voa::lehmer_scan(bound, shell_bound);
    json entries = json::array();
    bool conv = true;
    for (const auto& e : s.entries) {
      conv = conv && e.convolution_check;
      json x = {{"ell", e.ell}, {"tau", e.tau.get_str()}, {"nonzero", e.nonzero}, {"convolution_check", e.convolution_check}};
      if (e.shell_checked) x["e8_shell_fails_degree8"] = e.shell_fails_degree8;
      entries.push_back(x);
    }
    emit({{"kind", "lehmer"},
          {"bound", bound},
          {"shell_bound", shell_bound},
          {"zeros", s.zeros},
          {"convolution_ok", conv},
          {"entries", entries}},
         out);
  });
}

}  // extern "C"
