#pragma once

#include <string>

#include "json.hpp"
#include "wittlab/charpoly.hpp"
#include "wittlab/graphs.hpp"

namespace wittlab {

/// Big integers are emitted as JSON numbers when they fit in int64 and as
/// decimal strings otherwise; readers accept both.
nlohmann::json to_json(const mpz_class& z);
mpz_class bigint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const mpq_class& q);  // "p/q" string or integer form

/// Polynomials are arrays of coefficients, index = degree.
nlohmann::json to_json(const CharPolynomial& chi);
CharPolynomial charpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CycloFactorization& f);
nlohmann::json to_json(const DimsTable& t);
nlohmann::json to_json(const SpectralReport& r);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const WittReport& r);
nlohmann::json to_json(const TuranReport& r);

}  // namespace wittlab
