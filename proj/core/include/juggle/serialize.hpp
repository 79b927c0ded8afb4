#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "juggle/card.hpp"
#include "juggle/counting.hpp"
#include "juggle/matrix.hpp"
#include "juggle/oracle.hpp"
#include "juggle/structure.hpp"

namespace juggle {

// Integers are rendered as decimal strings throughout so consumers without
// big-integer support never overflow; polynomials are ascending
// coefficient arrays of decimal strings.

nlohmann::json to_json(const card& c);
nlohmann::json to_json(const polynomial& p);

nlohmann::json matrix_json(const exact_matrix& m, const std::string& variant, int b);
nlohmann::json matrix_json(const poly_matrix& m, const std::string& variant, int b);

nlohmann::json to_json(const table_record& rec);
nlohmann::json table_json(const std::vector<table_record>& records);

/// Header "b,n,kappa,jp"; unbounded capacity renders as "inf".
std::string table_csv(const std::vector<table_record>& records);

nlohmann::json to_json(const check_result& r);
nlohmann::json to_json(const trace_identity_report& r);
nlohmann::json to_json(const count_detail& d);
nlohmann::json to_json(const count_detail_q& d);
nlohmann::json to_json(const conjecture_report& r);
nlohmann::json to_json(const charpoly_report& r);
nlohmann::json to_json(const containment_witness& w);
nlohmann::json siteswap_json(const siteswap_code& code);

}  // namespace juggle
