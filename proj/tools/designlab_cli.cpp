// designlab command-line front end. Talks to the library only through designlab.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "designlab.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct ApiError {
  dl_status status;
  std::string message;
};

void check(dl_status s) {
  if (s != DL_OK) throw ApiError{s, dl_last_error()};
}

json take_json(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, dl_free_string);
  return json::parse(raw);
}

template <class Fn>
json call_json(Fn&& fn) {
  char* out = nullptr;
  check(fn(&out));
  return take_json(out);
}

struct SeriesHandle {
  dl_series* p = nullptr;
  ~SeriesHandle() { dl_series_free(p); }
};
struct CodeHandle {
  dl_code* p = nullptr;
  ~CodeHandle() { dl_code_free(p); }
};
struct LatticeHandle {
  dl_lattice* p = nullptr;
  ~LatticeHandle() { dl_lattice_free(p); }
};

json series_json(const dl_series* s, const std::string& kind, const std::string& source) {
  char* raw = nullptr;
  check(dl_series_to_json(s, &raw));
  json j = take_json(raw);
  j["kind"] = kind;
  j["source"] = source;
  j["schema"] = "v1";
  return j;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ApiError{DL_INVALID_ARGUMENT, "not an integer list: '" + text + "'"};
    }
  }
  return out;
}

int route_code(const std::string& r) {
  if (r == "auto") return 0;
  if (r == "enumerate") return 1;
  if (r == "codeword") return 2;
  throw ApiError{DL_INVALID_ARGUMENT, "route must be auto, enumerate or codeword"};
}

// -- rendering

std::string scalar(const json& v) {
  if (!v.is_string()) return v.dump();
  std::string s = v.get<std::string>();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0 && s.find('/') == s.size() - 2) s.resize(s.size() - 2);
  return s;
}

std::string exponent_text(long off24) {
  long g = std::gcd(off24 < 0 ? -off24 : off24, 24L);
  if (g == 0) return "1";
  const long num = off24 / g, den = 24 / g;
  if (den == 1) return num == 1 ? "q" : "q^" + std::to_string(num);
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string series_text(const json& j) {
  std::ostringstream os;
  const long off = j.at("offset24").get<long>();
  // Integral offsets print absolute exponents; otherwise q^(a/24) * (...).
  const bool integral = off % 24 == 0;
  const long shift = integral ? off / 24 : 0;
  if (!integral) os << exponent_text(off) << " * (";
  bool first = true;
  for (const auto& e : j.at("coeffs")) {
    std::string c = scalar(e[1]);
    const long i = e[0].get<long>() + shift;
    if (!first) os << (c[0] == '-' ? " - " : " + ");
    if (!first && c[0] == '-') c = c.substr(1);
    first = false;
    if (i == 0 || (c != "1" && c != "-1")) os << c << (i ? " " : "");
    else if (c == "-1") os << "-";
    if (i == 1) os << "q";
    if (i != 0 && i != 1) os << "q^" << i;
  }
  if (first) os << "0";
  os << " + O(q^" << j.at("prec").get<long>() + 1 + shift << ")";
  if (!integral) os << ")";
  if (j.contains("source")) os << "    [" << scalar(j["source"]) << "]";
  return os.str();
}

std::string series_csv(const json& j) {
  std::ostringstream os;
  os << "index,exponent24,coefficient\n";
  const long off = j.at("offset24").get<long>(), prec = j.at("prec").get<long>();
  std::vector<std::string> c(static_cast<size_t>(prec) + 1, "0/1");
  for (const auto& e : j.at("coeffs")) c[e[0].get<size_t>()] = e[1].get<std::string>();
  for (long i = 0; i <= prec; ++i) os << i << "," << off + 24 * i << "," << c[static_cast<size_t>(i)] << "\n";
  return os.str();
}

std::string generic_csv(const json& j) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : j.items())
    if (!v.is_structured()) os << k << "," << scalar(v) << "\n";
  return os.str();
}

std::string table_csv(const json& rows, const std::vector<std::string>& cols) {
  std::ostringstream os;
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (r.contains(cols[i]) ? scalar(r[cols[i]]) : "");
    os << "\n";
  }
  return os.str();
}

std::string set_text(const json& finite, bool odd) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < finite.size(); ++i) os << (i ? "," : "") << finite[i].get<int>();
  os << "}";
  if (odd) os << " u T2";
  return os.str();
}

std::string render_text(const json& j) {
  const std::string kind = j.value("kind", "");
  std::ostringstream os;
  if (kind == "series") return series_text(j);
  if (kind == "code_design") {
    os << j["code"].get<std::string>() << " shells " << j["weights"].dump() << " (" << j["blocks"] << " blocks), t = "
       << j["t"] << ": ";
    if (j["is_design"].get<bool>()) {
      os << "design, lambda = " << j["lambda"];
    } else {
      const auto& w = j["witness"];
      os << "not a design; " << scalar(w["a"]) << " lies in " << w["count_a"] << " blocks, " << scalar(w["b"])
         << " in " << w["count_b"];
    }
    return os.str();
  }
  if (kind == "code_tset") {
    os << j["code"].get<std::string>() << " shells " << j["weights"].dump() << ": " << (j["pass"].get<bool>() ? "pass" : "fail")
       << "\n  1-design: " << (j["one_design"]["is_design"].get<bool>() ? "yes" : "no");
    for (const auto& d : j["degrees"])
      os << "\n  degree " << d["degree"] << ": " << (d["pass"].get<bool>() ? "pass" : "fail")
         << (d["sampled"].get<bool>() ? " (sampled)" : "");
    return os.str();
  }
  if (kind == "antisymmetry") {
    os << j["code"].get<std::string>() << " Harm_" << j["k"] << ": " << (j["pass"].get<bool>() ? "antisymmetric" : "FAILS")
       << " over " << j["functions_checked"] << (j["sampled"].get<bool>() ? " sampled" : " basis") << " functions";
    return os.str();
  }
  if (kind == "lattice_design") {
    os << j["lattice"].get<std::string>() << " norm " << scalar(j["norm"]) << " (" << j["shell_size"] << " vectors): ";
    if (j["empty"].get<bool>()) return os.str() + "empty shell";
    os << "strength " << j["strength"];
    if (j["witness_k"].get<int>() > 0) os << " (fails k = " << j["witness_k"] << ")";
    else os << " (all k <= " << j["t"] << " pass)";
    return os.str();
  }
  if (kind == "lattice_design_range") {
    os << j["lattice"].get<std::string>() << " shells of norm " << j["norm_lo"] << ".." << j["norm_hi"] << ":";
    for (const auto& s : j["shells"])
      os << "\n  norm " << scalar(s["norm"]) << " size " << s["size"] << " strength " << s["strength"];
    return os.str();
  }
  if (kind == "lattice_tset") {
    os << j["lattice"].get<std::string>() << " norm " << scalar(j["norm"]) << ": " << (j["pass"].get<bool>() ? "pass" : "fail");
    for (const auto& d : j["degrees"])
      os << "\n  degree " << d["degree"] << ": " << (d["pass"].get<bool>() ? "pass" : "fail");
    return os.str();
  }
  if (kind == "shell") return j["lattice"].get<std::string>() + " norm " + scalar(j["norm"]) + ": " + j["size"].dump() + " vectors";
  if (kind == "theta_membership") {
    os << "theta[" << j["lattice"].get<std::string>() << ", " << scalar(j["weight_function"]) << "] in M_"
       << j["modular_weight"] << ": " << (j["member"].get<bool>() ? "member" : "NOT a member");
    if (j["e6_factor"].get<bool>()) os << " (E6 factor)";
    return os.str();
  }
  if (kind == "voa_strength") {
    os << "c = " << j["central_charge"] << ", l = " << j["ell"] << ": " << scalar(j["verdict"]) << "; "
       << scalar(j["coefficient_name"]) << " = " << scalar(j["coefficient"]);
    if (j.contains("reading_statement"))
      os << "\n  statement reading: " << scalar(j["reading_statement"]) << "; proof reading: " << scalar(j["reading_proof"]);
    return os.str();
  }
  if (kind == "voa_strength_scan") {
    os << "c = " << j["central_charge"] << ", l = " << j["from"] << ".." << j["to"] << ":";
    for (const auto& [k, v] : j["strength_counts"].items()) os << "\n  strength " << k << ": " << v << " weights";
    return os.str();
  }
  if (kind == "conformal_tset") {
    os << "c = " << j["central_charge"] << ": T = " << set_text(j["finite_part"], j["includes_odd"].get<bool>())
       << "; derivation " << (j["agrees"].get<bool>() ? "agrees" : "DISAGREES");
    for (const auto& d : j["derivation"])
      os << "\n  degree " << d["degree"] << ": " << (d["derived"].get<bool>() ? "forced" : "open") << " ("
         << scalar(d["reason"]) << ")";
    return os.str();
  }
  if (kind == "modular_obstruction")
    return "c = " + j["central_charge"].dump() + ", s = " + j["s"].dump() + ", mu = " + j["mu"].dump() + ": " +
           scalar(j["verdict"]) + " (" + scalar(j["reason"]) + ")";
  if (kind == "remark4")
    return scalar(j["source"]) + ", exponents " + j["checked_from"].dump() + ".." + j["checked_to"].dump() + ": " +
           scalar(j["verdict"]);
  if (kind == "d_series") {
    os << scalar(j["source"]) << ", d(1.." << j["checked_to"] << "): ";
    if (j["zero_indices"].empty()) os << "no zero coefficients";
    else os << "zeros at " << j["zero_indices"].dump();
    return os.str();
  }
  if (kind == "lehmer") {
    os << "tau(l), l <= " << j["bound"] << ": " << (j["zeros"].empty() ? "no zeros" : "zeros at " + j["zeros"].dump())
       << "; convolution check " << (j["convolution_ok"].get<bool>() ? "ok" : "FAILED");
    for (const auto& e : j["entries"])
      if (e.contains("e8_shell_fails_degree8"))
        os << "\n  l = " << e["ell"] << ": tau = " << scalar(e["tau"]) << ", E8 norm " << 2 * e["ell"].get<long>()
           << " shell " << (e["e8_shell_fails_degree8"].get<bool>() ? "fails" : "passes") << " degree 8";
    return os.str();
  }
  if (kind == "lattice_info" || kind == "code_info") {
    for (const auto& [k, v] : j.items())
      if (k != "schema" && k != "kind" && k != "gram") os << k << ": " << scalar(v) << "\n";
    std::string s = os.str();
    if (!s.empty()) s.pop_back();
    return s;
  }
  return j.dump(2);
}

std::string render_csv(const json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "series") return series_csv(j);
  if (kind == "lattice_design" && !j["empty"].get<bool>()) return table_csv(j["moments"]["per_k"], {"k", "pass", "lhs", "rhs"});
  if (kind == "lattice_design_range") return table_csv(j["shells"], {"norm", "size", "strength", "witness_k"});
  if (kind == "lattice_tset") return table_csv(j["degrees"], {"degree", "pass", "kernel_sum", "raw_moment_pass"});
  if (kind == "code_tset") return table_csv(j["degrees"], {"degree", "pass", "sampled", "functions_checked"});
  if (kind == "conformal_tset") return table_csv(j["derivation"], {"degree", "hardcoded", "derived", "reason"});
  if (kind == "lehmer") return table_csv(j["entries"], {"ell", "tau", "nonzero", "convolution_check"});
  if (kind == "voa_strength_scan") {
    std::ostringstream os;
    os << "strength,count\n";
    for (const auto& [k, v] : j["strength_counts"].items()) os << k << "," << v << "\n";
    return os.str();
  }
  return generic_csv(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact design-strength verification for codes, lattices and lattice VOAs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  int workers = 0;
  std::string fixtures;
  app.add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--workers", workers, "worker threads (default: hardware concurrency)")->check(CLI::NonNegativeNumber);
  app.add_option("--fixtures", fixtures, "fixture directory (overrides DESIGNLAB_FIXTURES)");

  // Each subcommand fills `result` (or, for raw CSV output, `raw`).
  json result;
  std::optional<std::string> raw;
  std::function<void()> run;

  auto* eta = app.add_subcommand("eta", "eta quotient expansion");
  std::string eta_spec;
  long eta_prec = 20;
  eta->add_option("--spec", eta_spec, "e.g. 1:8, 3:8, 2:15,1:-7 (empty for 1)")->required();
  eta->add_option("--prec", eta_prec, "last coefficient index")->check(CLI::NonNegativeNumber);
  eta->callback([&] {
    run = [&] {
      SeriesHandle s;
      check(dl_eta_quotient(eta_spec.c_str(), eta_prec, &s.p));
      result = series_json(s.p, "series", "eta quotient " + eta_spec);
    };
  });

  auto* series = app.add_subcommand("series", "a, b, c, d trace series or E4, E6, Delta");
  std::string series_name;
  long series_prec = 20;
  series->add_option("--name", series_name, "a, b, c, d, E4, E6 or Delta")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d", "E4", "E6", "Delta"}));
  series->add_option("--prec", series_prec)->check(CLI::NonNegativeNumber);
  series->callback([&] {
    run = [&] {
      SeriesHandle s;
      if (series_name == "E4" || series_name == "E6") check(dl_eisenstein(series_name == "E4" ? 4 : 6, series_prec, &s.p));
      else if (series_name == "Delta") check(dl_delta(series_prec, &s.p));
      else check(dl_trace_series(series_name[0], series_prec, &s.p));
      result = series_json(s.p, "series", series_name);
    };
  });

  auto* cdesign = app.add_subcommand("code-design", "combinatorial design tests on code shells");
  std::string code_name, weights_text, tset_text;
  int code_t = 0, max_degree = 0;
  long harm_cap = 0;
  cdesign->add_option("--code", code_name, "hamming8, golay24, d16plus, sums like hamming8+hamming8, or a path")->required();
  auto* wopt = cdesign->add_option("--weight", weights_text, "shell weight");
  cdesign->add_option("--weights", weights_text, "comma-separated shell weights")->excludes(wopt);
  auto* topt = cdesign->add_option("--t", code_t, "brute-force t-design test")->check(CLI::PositiveNumber);
  cdesign->add_option("--Tset", tset_text, "harmonic degrees: odd, all, or a list like 1,3,5")->excludes(topt);
  cdesign->add_option("--max-degree", max_degree, "largest harmonic degree for --Tset")->check(CLI::PositiveNumber);
  cdesign->add_option("--cap", harm_cap, "largest Harm_k basis before sampling");
  cdesign->callback([&] {
    run = [&] {
      CodeHandle c;
      check(dl_code_load(code_name.c_str(), &c.p));
      auto ws = parse_ints(weights_text);
      if (ws.empty()) throw ApiError{DL_INVALID_ARGUMENT, "--weight or --weights is required"};
      if (!tset_text.empty()) {
        std::vector<int> ds;
        int top = max_degree;
        if (tset_text == "odd" || tset_text == "all") {
          if (top <= 0) throw ApiError{DL_INVALID_ARGUMENT, "--Tset odd/all needs --max-degree"};
          for (int d = 1; d <= top; ++d)
            if (tset_text == "all" || d % 2) ds.push_back(d);
        } else {
          ds = parse_ints(tset_text);
          for (int d : ds) top = std::max(top, d);
        }
        result = call_json([&](char** o) {
          return dl_code_tset_json(c.p, ws.data(), static_cast<int>(ws.size()), ds.data(), static_cast<int>(ds.size()),
                                   top, harm_cap, o);
        });
      } else {
        if (code_t <= 0) throw ApiError{DL_INVALID_ARGUMENT, "--t or --Tset is required"};
        result = call_json(
            [&](char** o) { return dl_code_design_json(c.p, ws.data(), static_cast<int>(ws.size()), code_t, o); });
      }
    };
  });

  auto* antisym = app.add_subcommand("code-antisymmetry", "c(i) + c(n-i) = 0 for harmonic weight enumerators");
  std::string anti_code;
  int anti_k = 1;
  long anti_cap = 0;
  antisym->add_option("--code", anti_code)->required();
  antisym->add_option("--k", anti_k, "odd harmonic degree")->check(CLI::PositiveNumber);
  antisym->add_option("--cap", anti_cap, "largest Harm_k basis before sampling");
  antisym->callback([&] {
    run = [&] {
      CodeHandle c;
      check(dl_code_load(anti_code.c_str(), &c.p));
      result = call_json([&](char** o) { return dl_code_antisymmetry_json(c.p, anti_k, anti_cap, o); });
    };
  });

  auto* ldesign = app.add_subcommand("lattice-design", "spherical design strength of lattice shells");
  std::string lat_name, lat_norm, norm_range;
  int lat_t = 8;
  long shell_cap = 0;
  ldesign->add_option("--lattice", lat_name, "Z<n>, A2, E8, E8+E8, D16+, golay24-A, A:<code>, e8_cartan, or a path")->required();
  auto* nopt = ldesign->add_option("--norm", lat_norm, "shell norm, n or n/d");
  ldesign->add_option("--norm-range", norm_range, "lo..hi: every nonempty shell in range")->excludes(nopt);
  ldesign->add_option("--t", lat_t, "largest moment degree")->check(CLI::PositiveNumber);
  ldesign->add_option("--cap", shell_cap, "largest shell to enumerate");
  ldesign->callback([&] {
    run = [&] {
      LatticeHandle l;
      check(dl_lattice_load(lat_name.c_str(), &l.p));
      if (!norm_range.empty()) {
        const auto dots = norm_range.find("..");
        if (dots == std::string::npos) throw ApiError{DL_INVALID_ARGUMENT, "--norm-range must look like 1..50"};
        long lo = 0, hi = 0;
        try {
          lo = std::stol(norm_range.substr(0, dots));
          hi = std::stol(norm_range.substr(dots + 2));
        } catch (const std::exception&) {
          throw ApiError{DL_INVALID_ARGUMENT, "--norm-range must look like 1..50"};
        }
        result = call_json([&](char** o) { return dl_lattice_design_range_json(l.p, lo, hi, lat_t, o); });
      } else {
        if (lat_norm.empty()) throw ApiError{DL_INVALID_ARGUMENT, "--norm or --norm-range is required"};
        result = call_json([&](char** o) { return dl_lattice_design_json(l.p, lat_norm.c_str(), lat_t, shell_cap, o); });
      }
    };
  });

  auto* shell = app.add_subcommand("shell", "enumerate one lattice shell");
  std::string sh_lat, sh_norm;
  long sh_cap = 0;
  shell->add_option("--lattice", sh_lat)->required();
  shell->add_option("--norm", sh_norm)->required();
  shell->add_option("--cap", sh_cap);
  shell->callback([&] {
    run = [&] {
      LatticeHandle l;
      check(dl_lattice_load(sh_lat.c_str(), &l.p));
      if (format == "csv") {
        char* o = nullptr;
        check(dl_lattice_shell(l.p, sh_norm.c_str(), sh_cap, "csv", &o));
        std::unique_ptr<char, void (*)(char*)> g(o, dl_free_string);
        raw = std::string(o);
      } else {
        result = call_json([&](char** o) { return dl_lattice_shell(l.p, sh_norm.c_str(), sh_cap, "json", o); });
      }
    };
  });

  auto* theta = app.add_subcommand("theta", "weighted theta series, exponent = norm (q = e^{pi i z})");
  std::string th_lat, th_poly = "one", th_route = "auto";
  long th_prec = 10;
  bool th_modular = false, th_membership = false, th_trace = false;
  theta->add_option("--lattice", th_lat)->required();
  theta->add_option("--poly", th_poly, "one, zonal:<k>, zonal:<k>:axis=<a>, zonal:<k>:<w1>,...");
  theta->add_option("--prec", th_prec, "largest norm (with --modular/--membership/--graded-trace: last q-index)")
      ->check(CLI::NonNegativeNumber);
  theta->add_option("--route", th_route, "auto, enumerate or codeword");
  theta->add_flag("--modular", th_modular, "reindex to q = e^{2 pi i z} (even lattices)");
  theta->add_flag("--membership", th_membership, "fit into the level-one space of the right weight");
  theta->add_flag("--graded-trace", th_trace, "divide by eta^rank");
  theta->callback([&] {
    run = [&] {
      LatticeHandle l;
      check(dl_lattice_load(th_lat.c_str(), &l.p));
      if (th_membership) {
        result = call_json([&](char** o) { return dl_theta_membership_json(l.p, th_poly.c_str(), th_prec, o); });
        return;
      }
      SeriesHandle s;
      if (th_trace) {
        check(dl_graded_trace(l.p, th_poly.c_str(), th_prec, &s.p));
        result = series_json(s.p, "series", "graded trace " + th_lat + " " + th_poly);
        return;
      }
      check(dl_lattice_theta(l.p, th_poly.c_str(), th_modular ? 2 * th_prec : th_prec, route_code(th_route), &s.p));
      if (th_modular) {
        // reindex through JSON: exponents are norms, halve them
        json j = series_json(s.p, "series", "");
        json c = json::array();
        for (const auto& e : j["coeffs"]) {
          const long i = e[0].get<long>();
          if (i % 2) throw ApiError{DL_INVALID_ARGUMENT, "odd norm present; the lattice is not even"};
          c.push_back({i / 2, e[1]});
        }
        j["coeffs"] = c;
        j["prec"] = th_prec;
        result = j;
      } else {
        result = series_json(s.p, "series", "");
      }
      result["source"] = "theta " + th_lat + " " + th_poly + (th_modular ? " (modular q)" : " (q^norm)");
    };
  });

  auto* tset = app.add_subcommand("t-set", "conformal T-set derivation, or per-degree lattice verdicts");
  int ts_c = 0, ts_max_even = 12;
  std::string ts_lat, ts_norm, ts_degrees;
  long ts_cap = 0;
  tset->add_option("--c", ts_c, "central charge 8, 16 or 24");
  tset->add_option("--max-even", ts_max_even)->check(CLI::PositiveNumber);
  tset->add_option("--lattice", ts_lat);
  tset->add_option("--norm", ts_norm);
  tset->add_option("--degrees", ts_degrees, "comma-separated degrees");
  tset->add_option("--cap", ts_cap);
  tset->callback([&] {
    run = [&] {
      if (!ts_lat.empty()) {
        if (ts_norm.empty() || ts_degrees.empty())
          throw ApiError{DL_INVALID_ARGUMENT, "--lattice needs --norm and --degrees"};
        LatticeHandle l;
        check(dl_lattice_load(ts_lat.c_str(), &l.p));
        auto ds = parse_ints(ts_degrees);
        result = call_json([&](char** o) {
          return dl_lattice_tset_json(l.p, ts_norm.c_str(), ds.data(), static_cast<int>(ds.size()), ts_cap, o);
        });
      } else {
        if (ts_c == 0) throw ApiError{DL_INVALID_ARGUMENT, "--c or --lattice is required"};
        result = call_json([&](char** o) { return dl_conformal_tset_json(ts_c, ts_max_even, o); });
      }
    };
  });

  auto* obstruction = app.add_subcommand("obstruction", "modular obstruction for eta^{-c} (weight c/2+s form)");
  int ob_c = 24, ob_s = 2;
  long ob_mu = 1;
  obstruction->add_option("--c", ob_c)->required();
  obstruction->add_option("--s", ob_s)->required();
  obstruction->add_option("--mu", ob_mu, "minimal q-order");
  obstruction->callback([&] {
    run = [&] { result = call_json([&](char** o) { return dl_modular_obstruction_json(ob_c, ob_s, ob_mu, o); }); };
  });

  auto* voa = app.add_subcommand("voa-strength", "conformal design strength of (V_L)_l for c = 8, 16, 24");
  int v_c = 0;
  long v_ell = 0, v_scan = 0, v_prec = -1;
  voa->add_option("--c", v_c)->required()->check(CLI::IsMember({8, 16, 24}));
  auto* ell_opt = voa->add_option("--ell", v_ell)->check(CLI::PositiveNumber);
  voa->add_option("--scan-to", v_scan, "report every l = 1..N")->check(CLI::PositiveNumber)->excludes(ell_opt);
  voa->add_option("--prec", v_prec, "series precision (default l)");
  voa->callback([&] {
    run = [&] {
      if (v_scan > 0) {
        result = call_json([&](char** o) { return dl_voa_strength_scan_json(v_c, 1, v_scan, o); });
      } else {
        if (v_ell <= 0) throw ApiError{DL_INVALID_ARGUMENT, "--ell or --scan-to is required"};
        result = call_json([&](char** o) { return dl_voa_strength_json(v_c, v_ell, v_prec, o); });
      }
    };
  });

  auto* remark4 = app.add_subcommand("remark4", "q^{1/24} eta(2z)^15 / eta(z)^7 nonvanishing scan");
  long r4_prec = 1000;
  remark4->add_option("--prec", r4_prec, "largest exponent")->check(CLI::PositiveNumber);
  remark4->callback([&] { run = [&] { result = call_json([&](char** o) { return dl_remark4_json(r4_prec, o); }); }; });

  auto* dser = app.add_subcommand("d-series", "E4 eta^8 zero scan");
  long d_prec = 1000;
  dser->add_option("--prec", d_prec)->check(CLI::PositiveNumber);
  dser->callback([&] { run = [&] { result = call_json([&](char** o) { return dl_d_series_json(d_prec, o); }); }; });

  auto* lehmer = app.add_subcommand("lehmer", "tau(l) nonvanishing scan with E8 shell cross-checks");
  long lb = 100, lsb = 3;
  lehmer->add_option("--bound", lb)->check(CLI::PositiveNumber);
  lehmer->add_option("--shell-bound", lsb, "test E8 shells of norm 2l for l up to this");
  lehmer->callback([&] { run = [&] { result = call_json([&](char** o) { return dl_lehmer_json(lb, lsb, o); }); }; });

  auto* info = app.add_subcommand("info", "basic invariants of a code or lattice");
  std::string info_code, info_lat;
  info->add_option("--code", info_code);
  info->add_option("--lattice", info_lat);
  info->callback([&] {
    run = [&] {
      if (!info_code.empty()) {
        CodeHandle c;
        check(dl_code_load(info_code.c_str(), &c.p));
        result = call_json([&](char** o) { return dl_code_info_json(c.p, o); });
      } else if (!info_lat.empty()) {
        LatticeHandle l;
        check(dl_lattice_load(info_lat.c_str(), &l.p));
        result = call_json([&](char** o) { return dl_lattice_info_json(l.p, o); });
      } else {
        throw ApiError{DL_INVALID_ARGUMENT, "--code or --lattice is required"};
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    check(dl_set_workers(workers));
    if (!fixtures.empty()) check(dl_set_fixture_dir(fixtures.c_str()));
    run();
    if (raw) {
      std::cout << *raw;
    } else if (format == "json") {
      std::cout << result.dump() << "\n";
    } else if (format == "text") {
      std::cout << render_text(result) << "\n";
    } else {
      std::cout << render_csv(result);
    }
  } catch (const ApiError& e) {
    json err = {{"schema", "v1"}, {"error", {{"status", dl_status_name(e.status)}, {"message", e.message}}}};
    std::cerr << err.dump() << "\n";
    return 10 + static_cast<int>(e.status);
  } catch (const std::exception& e) {
    json err = {{"schema", "v1"}, {"error", {{"status", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 10 + static_cast<int>(DL_INTERNAL);
  }
  return 0;
}
