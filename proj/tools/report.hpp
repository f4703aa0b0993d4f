#ifndef DRG_TOOLS_REPORT_HPP
#define DRG_TOOLS_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "drg/intersection.hpp"
#include "drg/polynomial.hpp"

namespace drg::cli {

enum class Verification { closed_form_only, oracle_only, verified_match, mismatch };

std::string_view verification_name(Verification v);

/// Everything a command produced, renderable as text, JSON, or CSV.
/// verified_match implies the closed-form and oracle polynomials (and the
/// Wiener/hyper-Wiener values) agreed exactly.
struct Report {
    nlohmann::json source;           // machine-readable source descriptor
    std::string source_text;         // human-readable source line
    BigInt n;
    int diameter = 0;
    std::optional<IntersectionArray> array;
    IntPolynomial hosoya;
    BigInt wiener;
    BigInt hyper_wiener;
    Verification verification = Verification::closed_form_only;
    nlohmann::json witness;          // null unless oracle_only or mismatch
    std::vector<std::string> warnings;
    std::optional<IntPolynomial> hosoya_simplified;  // srg command only
};

enum class Format { text, json, csv };

/// Stable machine schema. Big values (n, wiener, hyper_wiener, hosoya
/// coefficients) are decimal strings so consumers never truncate them.
nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);
/// One row per distance k with the pair count d(G,k).
std::string to_csv(const Report& r);

std::string format_report(const Report& r, Format f);

}  // namespace drg::cli

#endif
