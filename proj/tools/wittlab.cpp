// wittlab: invariants of graded Lie algebras from characteristic polynomials,
// dimension tables via the necklace/Moebius machinery, and graph instances.

#include <complex>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wittlab/charpoly.hpp"
#include "wittlab/graphs.hpp"
#include "wittlab/json_io.hpp"
#include "wittlab/numtheory.hpp"
#include "wittlab/presets.hpp"
#include "wittlab/series.hpp"

namespace {

using namespace wittlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;
constexpr int kExitNumeric = 4;

struct RunConfig {
  int order = 64;     // truncation order N
  long dims_cap = 64; // dims table cap K
  double tol = 1e-10;         // target root residual
  double report_tol = 1e-4;   // residual above this counts as non-convergence
  std::string format = "table";

  bool json() const { return format == "json"; }
  void validate() const {
    if (dims_cap < 1 || order < static_cast<int>(dims_cap))
      throw std::invalid_argument("config: need order N >= dims cap K >= 1");
    if (tol <= 0 || report_tol <= 0) throw std::invalid_argument("config: tolerance must be positive");
    if (format != "table" && format != "json")
      throw std::invalid_argument("config: format must be table or json");
  }
};

int graph_vertex_limit() {
  if (const char* env = std::getenv("WITTLAB_MAX_VERTICES")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
    }
    throw std::invalid_argument("WITTLAB_MAX_VERTICES must be a positive integer");
  }
  return kDefaultMaxVertices;
}

std::pair<long, long> parse_range(const std::string& s) {
  const size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(s);
      return {v, v};
    }
    const long lo = std::stol(s.substr(0, dots));
    const long hi = std::stol(s.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (...) {
    throw std::invalid_argument("bad range: '" + s + "' (use N or LO..HI)");
  }
}

std::vector<mpq_class> parse_rational_list(const std::string& s) {
  std::vector<mpq_class> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto q = parse_bigrat(item);
    if (!q) throw std::invalid_argument("bad rational: '" + item + "'");
    out.push_back(std::move(*q));
  }
  if (out.empty()) throw std::invalid_argument("empty value list");
  return out;
}

CharPolynomial parse_poly_arg(const std::string& s) {
  auto coeffs = parse_bigint_list(s);
  if (!coeffs) throw std::invalid_argument("bad coefficient list: '" + s + "'");
  try {
    return CharPolynomial(std::move(*coeffs));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(e.what()) +
                                " (coefficients are listed from degree 0 upward)");
  }
}

std::string poly_row(const std::vector<mpz_class>& coeffs) {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ' ';
    out += coeffs[i].get_str();
  }
  return out;
}

std::string fmt_complex(const std::complex<double>& z) {
  std::ostringstream o;
  o.precision(12);
  o << z.real();
  if (z.imag() != 0.0) o << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return o.str();
}

std::string fmt_residual(double r) {
  std::ostringstream o;
  o.precision(2);
  o << std::scientific << r;
  return o.str();
}

Graph load_graph(const std::string& file) {
  if (file.empty()) return parse_graph(std::cin);
  return parse_graph_file(file);
}

// ---------------------------------------------------------------------------

int cmd_char_analyze(const std::string& coeffs, const RunConfig& cfg) {
  const CharPolynomial chi = parse_poly_arg(coeffs);
  const auto spectral = spectral_report(chi, cfg.tol);
  const auto report = finiteness_verdict(chi, cfg.dims_cap);

  bool numerics_ok = true;
  for (double r : spectral.residuals)
    if (r > cfg.report_tol) numerics_ok = false;

  if (cfg.json()) {
    json j = to_json(report);
    j["polynomial"] = to_json(chi);
    j["degree"] = chi.degree();
    j["spectral"] = to_json(spectral);
    j["descartes_alternating"] = descartes_check(chi);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "polynomial      : " << poly_row(chi.coeffs()) << "  (degree " << chi.degree()
              << ")\n";
    std::cout << "conductor       : " << spectral.conductor.get_str() << "\n";
    std::cout << "euler-poincare  : " << spectral.euler_poincare.get_str() << "\n";
    std::cout << "sign pattern    : "
              << (descartes_check(chi) ? "alternating (Koszul-compatible)" : "not alternating")
              << "\n";
    if (!spectral.eigenvalues.empty()) {
      std::cout << "eigenvalues     :\n";
      for (size_t i = 0; i < spectral.eigenvalues.size(); ++i)
        std::cout << "    " << fmt_complex(spectral.eigenvalues[i]) << "   (residual "
                  << fmt_residual(spectral.residuals[i]) << ")\n";
      const auto& e = spectral.entropy;
      std::cout << "entropy         : ";
      if (e.exactness == EntropyExactness::ExactOne)
        std::cout << "1 (exact: all eigenvalues are roots of unity)\n";
      else {
        std::ostringstream o;
        o.precision(10);
        o << e.value;
        std::cout << o.str() << " (numeric, residual " << fmt_residual(e.residual) << ")\n";
      }
    }
    std::cout << "cyclotomic      : ";
    if (report.factorization.multiplicities.empty())
      std::cout << "no cyclotomic factor";
    else {
      bool first = true;
      for (const auto& [m, mult] : report.factorization.multiplicities) {
        if (!first) std::cout << " * ";
        std::cout << "Phi_" << m << "^" << mult;
        first = false;
      }
    }
    if (!report.factorization.complete())
      std::cout << "  | remainder " << poly_row(report.factorization.remainder.coeffs());
    std::cout << "\n";
    std::cout << "dims k=1.." << report.dims.dims.size() << "  : " << poly_row(report.dims.dims)
              << "\n";
    if (!report.dims.realizable())
      std::cout << "dims break      : l_" << *report.dims.failed_k << " = "
                << report.dims.failed_value->get_str() << "\n";
    std::cout << "power sums      : " << poly_row(report.power_sums) << "\n";
    std::cout << "verdict         : ";
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FiniteDimensional>) {
            std::cout << "FiniteDimensional  (total dim " << v.total_dim.get_str()
                      << ", vanishing bound k* = " << v.vanishing_bound.get_str() << ", "
                      << (v.vanishing_verified
                              ? "vanishing verified"
                              : (v.vanishing_checked ? "VANISHING CHECK FAILED" : "bound not checked"))
                      << (v.degree_check ? ", degree check ok" : ", DEGREE CHECK FAILED") << ")";
          } else if constexpr (std::is_same_v<T, InfiniteDimensional>) {
            std::ostringstream o;
            o.precision(10);
            o << v.entropy;
            std::cout << "InfiniteDimensional  (entropy " << o.str() << " "
                      << (v.entropy_exceeds_one_exact ? "[> 1 certified exactly]"
                                                      : "[numeric witness]")
                      << ", witness root " << fmt_complex(v.witness_root) << ")";
          } else {
            std::cout << "NotRealizable  (first failure at k = " << v.first_bad_k << ", l_k = "
                      << v.value.get_str() << ")";
          }
        },
        report.verdict);
    std::cout << "\n";
  }
  return numerics_ok ? kExitOk : kExitNumeric;
}

int cmd_graph_clique_poly(const std::string& file, const RunConfig& cfg) {
  const Graph g = load_graph(file);
  const auto chi = clique_polynomial(g, graph_vertex_limit());
  if (cfg.json())
    std::cout << json{{"clique_polynomial", to_json(chi)}}.dump() << "\n";
  else
    std::cout << poly_row(chi.coeffs()) << "\n";
  return kExitOk;
}

int cmd_graph_ranks(const std::string& file, long K, const RunConfig& cfg) {
  const Graph g = load_graph(file);
  const auto ranks = lcs_ranks(g, K, graph_vertex_limit());
  if (cfg.json()) {
    json arr = json::array();
    for (const auto& r : ranks) arr.push_back(to_json(r));
    std::cout << json{{"lcs_ranks", std::move(arr)}}.dump() << "\n";
  } else {
    std::cout << poly_row(ranks) << "\n";
  }
  return kExitOk;
}

int cmd_graph_turan(const std::string& file, const RunConfig& cfg) {
  const Graph g = load_graph(file);
  const auto r = turan_check(g, graph_vertex_limit());
  if (cfg.json()) {
    std::cout << to_json(r).dump() << "\n";
  } else {
    std::cout << "clique number d : " << r.clique_number << "\n";
    std::cout << "c1 (vertices)   : " << r.c1.get_str() << "\n";
    std::cout << "c2 (edges)      : " << r.c2.get_str() << "\n";
    if (r.mantel_applicable)
      std::cout << "mantel bound    : " << (r.mantel_holds ? "holds" : "VIOLATED")
                << " (applicable: triangle-free)\n";
    else
      std::cout << "mantel bound    : not applicable (graph has triangles); c2 <= c1^2/4 is "
                << (r.mantel_holds ? "true" : "false") << "\n";
    std::cout << "turan question  : " << (r.turan_question_holds ? "holds" : "violated") << "\n";
  }
  return kExitOk;
}

int cmd_graph_cayley(int n, const std::string& set_arg, const RunConfig& cfg) {
  auto gens = parse_bigint_list(set_arg);
  if (!gens) throw std::invalid_argument("bad connection set: '" + set_arg + "'");
  if (n < 1) throw std::invalid_argument("cayley: modulus must be positive");
  std::vector<int> s;
  for (const auto& z : *gens) {
    if (!z.fits_sint_p()) throw std::invalid_argument("connection element out of range");
    const int r = static_cast<int>(z.get_si());
    s.push_back(r);
    s.push_back(n - ((r % n) + n) % n);  // close under negation
  }
  const Graph g = cayley_graph(n, s);
  if (cfg.json())
    std::cout << graph_to_json(g) << "\n";
  else
    std::cout << graph_to_text(g);
  return kExitOk;
}

int cmd_necklace(const std::string& k_range, const std::string& x_list, const RunConfig& cfg) {
  const auto [klo, khi] = parse_range(k_range);
  if (klo < 1) throw std::invalid_argument("necklace: k must be positive");
  const auto xs = parse_rational_list(x_list);
  json rows = json::array();
  for (const auto& x : xs) {
    std::string line;
    json row = json::array();
    for (long k = klo; k <= khi; ++k) {
      const mpq_class v = necklace_eval(k, x);
      if (cfg.json())
        row.push_back(to_json(v));
      else {
        if (!line.empty()) line += ' ';
        line += v.get_str();
      }
    }
    if (cfg.json())
      rows.push_back({{"x", to_json(x)}, {"values", std::move(row)}});
    else
      std::cout << line << "\n";
  }
  if (cfg.json())
    std::cout << json{{"k", {klo, khi}}, {"rows", std::move(rows)}}.dump() << "\n";
  return kExitOk;
}

int cmd_ramanujan(const std::string& which, const std::string& k_range,
                  const std::string& m_range, const RunConfig& cfg) {
  if (which != "P" && which != "C")
    throw std::invalid_argument("ramanujan: expected P or C, got '" + which + "'");
  const auto [klo, khi] = parse_range(k_range);
  const auto [mlo, mhi] = parse_range(m_range);
  if (klo < 1 || mlo < 1) throw std::invalid_argument("ramanujan: ranges must be positive");
  json rows = json::array();
  bool anomaly = false;
  for (long k = klo; k <= khi; ++k) {
    std::string line;
    json row = json::array();
    for (long m = mlo; m <= mhi; ++m) {
      mpq_class v = (which == "P") ? mpq_class(ramanujan_P(k, m)) : necklace_root_sum_C(k, m);
      if (!is_integral(v)) anomaly = true;
      if (cfg.json())
        row.push_back(to_json(v));
      else {
        if (!line.empty()) line += ' ';
        line += v.get_str();
      }
    }
    if (cfg.json())
      rows.push_back({{"k", k}, {"values", std::move(row)}});
    else
      std::cout << line << "\n";
  }
  if (cfg.json())
    std::cout << json{{"function", which}, {"m", {mlo, mhi}}, {"rows", std::move(rows)}}.dump()
              << "\n";
  if (anomaly)
    std::cerr << "note: non-integral C_k(m) encountered; values printed exactly, not rounded\n";
  return kExitOk;
}

int cmd_preset(const std::string& name, const std::vector<std::string>& params,
               const RunConfig& cfg) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("preset " + name + ": expected " + std::to_string(n) +
                                  " parameter(s)");
  };
  auto as_long = [](const std::string& s) {
    auto z = parse_bigint(s);
    if (!z || !z->fits_slong_p()) throw std::invalid_argument("bad integer parameter: " + s);
    return z->get_si();
  };
  auto emit_poly = [&](const CharPolynomial& chi) {
    if (cfg.json())
      std::cout << json{{"polynomial", to_json(chi)}}.dump() << "\n";
    else
      std::cout << poly_row(chi.coeffs()) << "\n";
  };

  if (name == "free") {
    need(1);
    emit_poly(presets::free(as_long(params[0])));
  } else if (name == "free-sum") {
    need(2);
    emit_poly(presets::free_sum(as_long(params[0]), as_long(params[1])));
  } else if (name == "one-relator") {
    need(1);
    emit_poly(presets::one_relator(as_long(params[0])));
  } else if (name == "labute") {
    need(1);
    const auto dims = presets::labute_dims(as_long(params[0]), cfg.dims_cap);
    if (cfg.json()) {
      json arr = json::array();
      for (const auto& d : dims) arr.push_back(to_json(d));
      std::cout << json{{"dims", std::move(arr)}}.dump() << "\n";
    } else {
      std::cout << poly_row(dims) << "\n";
    }
  } else if (name == "filiform") {
    need(0);
    const auto s = presets::filiform_series(cfg.order);
    if (cfg.json()) {
      json arr = json::array();
      for (const auto& c : s.coeffs()) arr.push_back(to_json(c));
      std::cout << json{{"series", std::move(arr)}, {"order", s.order()}}.dump() << "\n";
    } else {
      std::string line;
      for (const auto& c : s.coeffs()) {
        if (!line.empty()) line += ' ';
        line += c.get_str();
      }
      std::cout << line << "\n";
    }
  } else if (name == "braid") {
    need(1);
    emit_poly(presets::braid_arrangement(as_long(params[0])));
  } else if (name == "spiga") {
    need(0);
    if (cfg.json())
      std::cout << graph_to_json(presets::spiga()) << "\n";
    else
      std::cout << graph_to_text(presets::spiga());
  } else {
    throw std::invalid_argument(
        "unknown preset '" + name +
        "' (available: free, free-sum, one-relator, labute, filiform, braid, spiga)");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of N-graded Lie algebras: characteristic polynomials, Witt "
               "dimension tables, cyclotomic finiteness certificates, entropy, and "
               "graph-defined instances"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  auto* order_opt =
      app.add_option("--order", cfg.order, "truncation order N for series computations")
          ->capture_default_str();
  auto* dims_opt = app.add_option("--dims", cfg.dims_cap, "dimension table cap K")
                       ->capture_default_str();
  app.add_option("--tol", cfg.tol, "target residual for eigenvalue iteration")
      ->capture_default_str();
  app.add_option("--report-tol", cfg.report_tol,
                 "residuals above this cause a non-convergence exit code")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format: table or json")->capture_default_str();

  auto* chr = app.add_subcommand("char", "characteristic polynomial analysis");
  chr->require_subcommand(1);
  auto* analyze = chr->add_subcommand("analyze", "full report for one polynomial");
  std::string poly_arg;
  analyze->add_option("coefficients", poly_arg,
                      "comma-separated integer coefficients, degree 0 first (e.g. 1,-11,33)")
      ->required();

  auto* graph = app.add_subcommand("graph", "graph-defined Lie algebra instances");
  graph->require_subcommand(1);
  std::string gfile;
  auto* gpoly = graph->add_subcommand("clique-poly", "alternating clique polynomial");
  gpoly->add_option("file", gfile, "graph file (stdin when omitted)");
  auto* granks = graph->add_subcommand("ranks", "lower-central-series ranks");
  long ranks_k = 8;
  granks->add_option("file", gfile, "graph file (stdin when omitted)");
  granks->add_option("--k", ranks_k, "number of ranks")->capture_default_str();
  auto* gturan = graph->add_subcommand("turan", "Mantel/Turan inequality screens");
  gturan->add_option("file", gfile, "graph file (stdin when omitted)");
  auto* gcayley = graph->add_subcommand("cayley", "circulant (Cayley) graph of Z/n");
  int cayley_n = 0;
  std::string cayley_set;
  gcayley->add_option("n", cayley_n, "modulus")->required();
  gcayley->add_option("set", cayley_set, "comma-separated connection residues; closed under negation")
      ->required();

  auto* neck = app.add_subcommand("necklace", "necklace polynomial values M_k(x)");
  std::string neck_k = "1..8", neck_x = "2";
  neck->add_option("--k", neck_k, "k or lo..hi")->capture_default_str();
  neck->add_option("--x", neck_x, "comma-separated rationals")->capture_default_str();

  auto* ram = app.add_subcommand("ramanujan", "root-of-unity power/necklace sums P_k(m), C_k(m)");
  std::string ram_which, ram_k = "1", ram_m = "1..12";
  ram->add_option("function", ram_which, "P or C")->required();
  ram->add_option("--k", ram_k, "k or lo..hi")->capture_default_str();
  ram->add_option("--m", ram_m, "m or lo..hi")->capture_default_str();

  auto* preset = app.add_subcommand("preset", "worked examples");
  std::string preset_name;
  std::vector<std::string> preset_params;
  preset->add_option("name", preset_name, "free | free-sum | one-relator | labute | filiform | braid | spiga")
      ->required();
  preset->add_option("params", preset_params, "preset parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    // Keep N >= K when only one of the two knobs was set explicitly.
    if (order_opt->count() && !dims_opt->count() && cfg.order < cfg.dims_cap)
      cfg.dims_cap = cfg.order;
    if (dims_opt->count() && !order_opt->count() && cfg.order < cfg.dims_cap)
      cfg.order = static_cast<int>(cfg.dims_cap);
    cfg.validate();
    if (analyze->parsed()) return cmd_char_analyze(poly_arg, cfg);
    if (gpoly->parsed()) return cmd_graph_clique_poly(gfile, cfg);
    if (granks->parsed()) return cmd_graph_ranks(gfile, ranks_k, cfg);
    if (gturan->parsed()) return cmd_graph_turan(gfile, cfg);
    if (gcayley->parsed()) return cmd_graph_cayley(cayley_n, cayley_set, cfg);
    if (neck->parsed()) return cmd_necklace(neck_k, neck_x, cfg);
    if (ram->parsed()) return cmd_ramanujan(ram_which, ram_k, ram_m, cfg);
    if (preset->parsed()) return cmd_preset(preset_name, preset_params, cfg);
    std::cerr << "no subcommand\n";
    return kExitInput;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
