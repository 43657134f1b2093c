#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbseries/verify.hpp"

namespace cbseries {

/// Stable JSON schema: {id, params, method, estimate, reference,
/// abs_discrepancy, terms_used, digits, verdict, offset_note, paper_ref}.
/// Numbers travel as decimal strings; binary doubles never appear.
inline nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    return nlohmann::json{{"id", rep.id},
                          {"params", params},
                          {"method", method_str(rep.method)},
                          {"estimate", rep.estimate},
                          {"reference", rep.reference},
                          {"abs_discrepancy", rep.abs_discrepancy},
                          {"terms_used", rep.terms_used},
                          {"digits", rep.digits},
                          {"verdict", rep.verdict ? "pass" : "fail"},
                          {"offset_note", rep.offset_note},
                          {"paper_ref", rep.paper_ref}};
}

inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& reps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reps) arr.push_back(report_to_json(r));
    return arr;
}

namespace detail {
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string params_compact(const std::map<std::string, std::string>& params) {
    std::string out;
    for (const auto& [k, v] : params) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
}
}  // namespace detail

inline std::string csv_header() {
    return "id,params,method,estimate,reference,abs_discrepancy,terms_used,digits,verdict,"
           "offset_note,paper_ref";
}

inline std::string report_to_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << detail::csv_escape(rep.id) << ',' << detail::csv_escape(detail::params_compact(rep.params))
       << ',' << method_str(rep.method) << ',' << rep.estimate << ',' << rep.reference << ','
       << rep.abs_discrepancy << ',' << rep.terms_used << ',' << rep.digits << ','
       << (rep.verdict ? "pass" : "fail") << ',' << (rep.offset_note ? "true" : "false") << ','
       << detail::csv_escape(rep.paper_ref);
    return os.str();
}

inline std::string report_to_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << (rep.verdict ? "[pass] " : "[FAIL] ") << rep.id;
    std::string p = detail::params_compact(rep.params);
    if (!p.empty()) os << " (" << p << ")";
    os << "\n  method:      " << method_str(rep.method) << "\n  estimate:    " << rep.estimate
       << "\n  reference:   " << rep.reference << "\n  discrepancy: " << rep.abs_discrepancy
       << "\n  terms: " << rep.terms_used << "  digits: " << rep.digits;
    if (rep.offset_note) os << "\n  note: discrepancy matches one boundary term (start-index?)";
    if (!rep.paper_ref.empty()) os << "\n  source: " << rep.paper_ref;
    return os.str();
}

inline std::string report_line(const VerificationReport& rep) {
    std::ostringstream os;
    os << (rep.verdict ? "pass  " : "FAIL  ") << std::left << std::setw(40);
    std::string label = rep.id;
    std::string p = detail::params_compact(rep.params);
    if (!p.empty()) label += " " + p;
    os << label << " disc=" << rep.abs_discrepancy << " terms=" << rep.terms_used
       << " method=" << method_str(rep.method);
    if (rep.offset_note) os << " [offset?]";
    return os.str();
}

}  // namespace cbseries
