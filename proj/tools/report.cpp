#include "report.hpp"

#include <sstream>

namespace drg::cli {

std::string_view verification_name(Verification v) {
    switch (v) {
        case Verification::closed_form_only: return "closed_form_only";
        case Verification::oracle_only: return "oracle_only";
        case Verification::verified_match: return "verified_match";
        case Verification::mismatch: return "mismatch";
    }
    return "?";
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["source"] = r.source;
    j["n"] = r.n.str();
    j["diameter"] = r.diameter;
    if (r.array) {
        j["intersection_array"] = {{"b", r.array->b()}, {"c", r.array->c()}};
    } else {
        j["intersection_array"] = nullptr;
    }
    nlohmann::json coeffs = nlohmann::json::array();
    if (r.hosoya.is_zero()) {
        coeffs.push_back("0");
    } else {
        for (const BigInt& c : r.hosoya.coeffs())
            coeffs.push_back(c.str());
    }
    j["hosoya"] = coeffs;
    j["wiener"] = r.wiener.str();
    j["hyper_wiener"] = r.hyper_wiener.str();
    j["verification"] = std::string(verification_name(r.verification));
    j["witness"] = r.witness;
    return j;
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "source: " << r.source_text << "\n";
    for (const std::string& w : r.warnings)
        out << "warning: " << w << "\n";
    out << "n: " << r.n.str() << "\n";
    out << "diameter: " << r.diameter << "\n";
    if (r.array)
        out << "intersection array: " << r.array->render() << "\n";
    out << "hosoya: " << r.hosoya.render() << "\n";
    if (r.hosoya_simplified)
        out << "hosoya (simplified form): " << r.hosoya_simplified->render() << "\n";
    out << "wiener: " << r.wiener.str() << "\n";
    out << "hyper-wiener: " << r.hyper_wiener.str() << "\n";
    out << "verification: " << verification_name(r.verification) << "\n";
    if (!r.witness.is_null())
        out << "witness: " << r.witness.value("reason", r.witness.dump()) << "\n";
    return out.str();
}

std::string to_csv(const Report& r) {
    std::ostringstream out;
    out << "k,count\n";
    for (int k = 1; k <= r.hosoya.degree(); ++k)
        out << k << "," << r.hosoya.coeff(k).str() << "\n";
    return out.str();
}

std::string format_report(const Report& r, Format f) {
    switch (f) {
        case Format::text: return to_text(r);
        case Format::json: return to_json(r).dump(2) + "\n";
        case Format::csv: return to_csv(r);
    }
    return {};
}

}  // namespace drg::cli
