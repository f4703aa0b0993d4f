#ifndef DRG_TOOLS_COMMANDS_HPP
#define DRG_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

#include "drg/families.hpp"
#include "drg/intersection.hpp"

namespace drg::cli {

/// Closed forms from a raw intersection array; errors if a declared order
/// disagrees with the order the array determines.
Report cmd_array(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c,
                 const std::optional<BigInt>& declared_n);

/// Feasibility-gated strongly regular closed forms; both Corollary routes
/// are computed and must agree.
Report cmd_srg(const SrgParams& p);

/// Builds the graph, runs the brute-force oracle and the distance-regularity
/// checker, and compares the closed forms against the oracle exactly.
Report cmd_verify(const FamilySpec& spec, std::int64_t max_vertices = k_default_vertex_cap);
Report cmd_verify_file(const std::string& path, std::optional<int> declared_n,
                       std::int64_t max_vertices = k_default_vertex_cap);

/// Full command-line entry point. Exit status: 0 on success (including
/// oracle_only), 2 on invalid input, 3 when a closed form disagrees with the
/// oracle.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace drg::cli

#endif
