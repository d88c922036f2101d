#include "wittlab/json_io.hpp"

#include <stdexcept>

namespace wittlab {

using nlohmann::json;

nlohmann::json to_json(const mpz_class& z) {
  if (fits_int64(z)) return static_cast<int64_t>(z.get_si());
  return z.get_str();
}

mpz_class bigint_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<int64_t>()));
  if (j.is_string()) {
    auto v = parse_bigint(j.get<std::string>());
    if (v) return *v;
  }
  throw std::invalid_argument("expected integer or decimal string: " + j.dump());
}

nlohmann::json to_json(const mpq_class& q) {
  if (is_integral(q)) return to_json(q.get_num());
  return q.get_str();
}

nlohmann::json to_json(const CharPolynomial& chi) {
  json arr = json::array();
  for (const auto& a : chi.coeffs()) arr.push_back(to_json(a));
  return arr;
}

CharPolynomial charpoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<mpz_class> coeffs;
  for (const auto& e : j) coeffs.push_back(bigint_from_json(e));
  return CharPolynomial(std::move(coeffs));
}

nlohmann::json to_json(const CycloFactorization& f) {
  json mult = json::object();
  for (const auto& [m, k] : f.multiplicities) mult[std::to_string(m)] = k;
  return json{{"multiplicities", std::move(mult)},
              {"remainder", to_json(f.remainder)},
              {"complete", f.complete()}};
}

nlohmann::json to_json(const DimsTable& t) {
  json j;
  json dims = json::array();
  for (const auto& d : t.dims) dims.push_back(to_json(d));
  j["dims"] = std::move(dims);
  if (t.failed_k) {
    j["failed_k"] = *t.failed_k;
    j["failed_value"] = to_json(*t.failed_value);
  }
  return j;
}

namespace {

json complex_to_json(const std::complex<double>& z, double residual) {
  return json{{"re", z.real()}, {"im", z.imag()}, {"residual", residual}};
}

}  // namespace

nlohmann::json to_json(const SpectralReport& r) {
  json eig = json::array();
  for (size_t i = 0; i < r.eigenvalues.size(); ++i)
    eig.push_back(complex_to_json(r.eigenvalues[i], r.residuals[i]));
  json entropy{{"value", r.entropy.value},
               {"exact", r.entropy.exactness == EntropyExactness::ExactOne},
               {"residual", r.entropy.residual},
               {"max_is_positive_real", r.entropy.max_is_positive_real}};
  return json{{"eigenvalues", std::move(eig)},
              {"converged", r.converged},
              {"entropy", std::move(entropy)},
              {"conductor", to_json(r.conductor)},
              {"euler_poincare", to_json(r.euler_poincare)},
              {"all_roots_of_unity", r.all_roots_of_unity}};
}

nlohmann::json to_json(const Verdict& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteDimensional>) {
          json dims = json::object();
          for (const auto& [k, d] : x.dims_by_degree) dims[std::to_string(k)] = d;
          return json{{"kind", "FiniteDimensional"},
                      {"dims_by_degree", std::move(dims)},
                      {"total_dim", to_json(x.total_dim)},
                      {"degree_sum", to_json(x.degree_sum)},
                      {"degree_check", x.degree_check},
                      {"vanishing_bound", to_json(x.vanishing_bound)},
                      {"vanishing_verified", x.vanishing_verified},
                      {"vanishing_checked", x.vanishing_checked}};
        } else if constexpr (std::is_same_v<T, InfiniteDimensional>) {
          return json{{"kind", "InfiniteDimensional"},
                      {"entropy", x.entropy},
                      {"residual", x.residual},
                      {"witness_root", {{"re", x.witness_root.real()}, {"im", x.witness_root.imag()}}},
                      {"entropy_exceeds_one_exact", x.entropy_exceeds_one_exact}};
        } else {
          return json{{"kind", "NotRealizable"},
                      {"first_bad_k", x.first_bad_k},
                      {"value", to_json(x.value)}};
        }
      },
      v);
}

nlohmann::json to_json(const WittReport& r) {
  json p = json::array();
  for (const auto& x : r.power_sums) p.push_back(to_json(x));
  json j = to_json(r.dims);
  j["power_sums"] = std::move(p);
  j["cyclotomic"] = to_json(r.factorization);
  j["verdict"] = to_json(r.verdict);
  return j;
}

nlohmann::json to_json(const TuranReport& r) {
  return json{{"mantel_applicable", r.mantel_applicable},
              {"mantel_holds", r.mantel_holds},
              {"turan_question_holds", r.turan_question_holds},
              {"clique_number", r.clique_number},
              {"c1", to_json(r.c1)},
              {"c2", to_json(r.c2)}};
}

}  // namespace wittlab
