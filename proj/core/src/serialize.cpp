#include "juggle/serialize.hpp"

#include <sstream>

namespace juggle {

using nlohmann::json;

namespace {

json str_int(const big_int& v) { return v.get_str(); }

json composition_json(const composition& c) { return json(c.parts()); }

json labels_json(const std::vector<composition>& labels) {
    json out = json::array();
    for (const auto& l : labels) out.push_back(composition_json(l));
    return out;
}

std::string kappa_str(const std::optional<int>& kappa) {
    return kappa ? std::to_string(*kappa) : "inf";
}

}  // namespace

json to_json(const card& c) {
    json out;
    out["left"] = composition_json(c.left());
    out["right"] = composition_json(c.right());
    out["indices"] = c.is_trivial() ? json(nullptr) : json(c.indices());
    out["crossings"] = c.crossings();
    return out;
}

json to_json(const polynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(str_int(c));
    return coeffs;
}

json matrix_json(const exact_matrix& m, const std::string& variant, int b) {
    json entries = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(str_int(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"b", b},
                {"variant", variant},
                {"labels", labels_json(m.labels())},
                {"entries", entries}};
}

json matrix_json(const poly_matrix& m, const std::string& variant, int b) {
    json entries = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"b", b},
                {"variant", variant},
                {"labels", labels_json(m.labels())},
                {"entries", entries}};
}

json to_json(const table_record& rec) {
    return json{{"b", rec.balls},
                {"n", rec.period},
                {"kappa", rec.capacity ? json(*rec.capacity) : json(nullptr)},
                {"jp", str_int(rec.patterns)}};
}

json table_json(const std::vector<table_record>& records) {
    json out = json::array();
    for (const auto& r : records) out.push_back(to_json(r));
    return out;
}

std::string table_csv(const std::vector<table_record>& records) {
    std::ostringstream out;
    out << "b,n,kappa,jp\n";
    for (const auto& r : records)
        out << r.balls << ',' << r.period << ',' << kappa_str(r.capacity) << ','
            << r.patterns.get_str() << '\n';
    return out.str();
}

json to_json(const check_result& r) {
    return json{{"name", r.name},
                {"parameters", r.parameters},
                {"expected", r.expected},
                {"actual", r.actual},
                {"pass", r.pass}};
}

json to_json(const trace_identity_report& r) {
    return json{{"b", r.balls},
                {"trace", str_int(r.trace)},
                {"partition_weighted_sum", str_int(r.partition_weighted_sum)},
                {"ones_power_sum", str_int(r.ones_power_sum)},
                {"period1_patterns", str_int(r.period1_patterns)},
                {"partitions", str_int(r.partitions)},
                {"pass", r.pass()}};
}

json to_json(const count_detail& d) {
    return json{{"b", d.balls},
                {"n", d.period},
                {"kappa", d.capacity ? json(*d.capacity) : json(nullptr)},
                {"ss", str_int(d.siteswaps)},
                {"ms", str_int(d.minimal_siteswaps)},
                {"jp", str_int(d.patterns)},
                {"traces_used", d.traces_used}};
}

json to_json(const count_detail_q& d) {
    return json{{"b", d.balls},
                {"n", d.period},
                {"kappa", d.capacity ? json(*d.capacity) : json(nullptr)},
                {"ss", to_json(d.siteswaps)},
                {"ms", to_json(d.minimal_siteswaps)},
                {"jp", to_json(d.patterns)},
                {"ss_str", d.siteswaps.str("q")},
                {"ms_str", d.minimal_siteswaps.str("q")},
                {"jp_str", d.patterns.str("q")},
                {"traces_used", d.traces_used}};
}

json to_json(const conjecture_report& r) {
    json per_b = json::array();
    for (std::size_t i = 0; i < r.card_totals.size(); ++i)
        per_b.push_back(json{{"b", i},
                             {"card_total", str_int(r.card_totals[i])},
                             {"series_coefficient", str_int(r.series[i])},
                             {"pass", static_cast<bool>(r.matches[i])}});
    return json{{"b_max", r.b_max},
                {"series_identity_ok", r.series_identity_ok},
                {"coefficients", per_b},
                {"pass", r.all_pass()}};
}

json to_json(const charpoly_report& r) {
    json out{{"b", r.balls},
             {"characteristic", to_json(r.characteristic)},
             {"characteristic_str", r.characteristic.str()},
             {"exponents_used", r.exponents_used},
             {"division_ok", r.division_ok},
             {"residual", to_json(r.residual)},
             {"residual_str", r.residual.str()},
             {"residual_monic", r.residual_monic},
             {"expected_degree", r.expected_degree},
             {"actual_degree", r.actual_degree},
             {"expected_second_coefficient", str_int(r.expected_second_coefficient)},
             {"actual_second_coefficient", str_int(r.actual_second_coefficient)},
             {"expected_constant", str_int(r.expected_constant)},
             {"actual_constant", str_int(r.actual_constant)},
             {"notes", r.notes},
             {"pass", r.pass()}};
    if (!r.division_failure.empty()) out["division_failure"] = r.division_failure;
    if (r.expected_residual) out["expected_residual"] = to_json(*r.expected_residual);
    return out;
}

json to_json(const containment_witness& w) {
    return json{{"b", w.balls},
                {"embedding", w.embedding},
                {"triangular_order_found", w.triangular_order_found},
                {"full_order", w.full_order}};
}

json siteswap_json(const siteswap_code& code) {
    json beats = json::array();
    for (const auto& beat : code) beats.push_back(beat);
    return json{{"beats", beats}, {"display", display_siteswap(code)}};
}

}  // namespace juggle
