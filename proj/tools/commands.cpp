#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"

#include "drg/distance_regular.hpp"
#include "drg/graph.hpp"
#include "drg/oracle.hpp"

namespace drg::cli {

namespace {

nlohmann::json rejection_json(const DrgRejection& r) {
    nlohmann::json j;
    j["reason"] = r.reason;
    if (r.kind == DrgRejection::Kind::not_regular) {
        j["kind"] = "not_regular";
        j["vertex"] = r.vertex;
        j["degree"] = r.found;
        j["expected_degree"] = r.expected;
    } else {
        j["kind"] = "not_distance_regular";
        if (r.u >= 0) {
            j["u"] = r.u;
            j["v"] = r.v;
            j["level"] = r.level;
            j["constant"] = std::string(1, r.constant);
            j["expected"] = r.expected;
            j["found"] = r.found;
        }
    }
    return j;
}

Report verify_graph(const Graph& g, nlohmann::json source, std::string source_text) {
    Report r;
    r.source = std::move(source);
    r.source_text = std::move(source_text);

    const DistanceDistribution dist = distance_distribution(g);
    r.n = dist.n;
    r.diameter = dist.diameter;
    const IntPolynomial oracle_h = hosoya_polynomial(dist);
    const BigInt oracle_w = wiener_index(dist);
    const BigInt oracle_ww = hyper_wiener_index(dist);

    // The oracle is ground truth; closed-form values are reported only when
    // they agree with it.
    r.hosoya = oracle_h;
    r.wiener = oracle_w;
    r.hyper_wiener = oracle_ww;

    const DrgCheckResult check = check_distance_regular(g);
    if (!check.accepted()) {
        r.verification = Verification::oracle_only;
        r.witness = rejection_json(*check.rejection);
        return r;
    }

    r.array = check.array;
    const IntPolynomial closed_h = hosoya_closed_form(*r.array);
    const BigInt closed_w = wiener_closed_form(*r.array);
    const BigInt closed_ww = hyper_wiener_closed_form(*r.array);

    if (closed_h == oracle_h && closed_w == oracle_w && closed_ww == oracle_ww) {
        r.verification = Verification::verified_match;
        return r;
    }

    r.verification = Verification::mismatch;
    nlohmann::json w;
    if (closed_h != oracle_h) {
        const int top = std::max(closed_h.degree(), oracle_h.degree());
        for (int i = 0; i <= top; ++i) {
            if (closed_h.coeff(i) != oracle_h.coeff(i)) {
                w["kind"] = "coefficient_mismatch";
                w["index"] = i;
                w["closed_form"] = closed_h.coeff(i).str();
                w["oracle"] = oracle_h.coeff(i).str();
                w["reason"] = "closed-form coefficient of t^" + std::to_string(i) + " is " +
                              closed_h.coeff(i).str() + " but the oracle counted " +
                              oracle_h.coeff(i).str();
                break;
            }
        }
    } else {
        const bool wiener_differs = closed_w != oracle_w;
        w["kind"] = "invariant_mismatch";
        w["invariant"] = wiener_differs ? "wiener" : "hyper_wiener";
        w["closed_form"] = (wiener_differs ? closed_w : closed_ww).str();
        w["oracle"] = (wiener_differs ? oracle_w : oracle_ww).str();
        w["reason"] = std::string("closed-form ") +
                      (wiener_differs ? "Wiener" : "hyper-Wiener") + " index is " +
                      (wiener_differs ? closed_w : closed_ww).str() +
                      " but the oracle computed " +
                      (wiener_differs ? oracle_w : oracle_ww).str();
    }
    r.witness = w;
    return r;
}

BigInt parse_bigint(const std::string& text) {
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw Error("not an integer: \"" + text + "\"");
    }
}

Format parse_format(const std::string& name) {
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return Format::text;
}

}  // namespace

Report cmd_array(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c,
                 const std::optional<BigInt>& declared_n) {
    std::vector<std::string> warnings;
    const IntersectionArray a = validate(b, c, &warnings);
    const SphereSizes s = sphere_sizes(a);
    if (declared_n && *declared_n != s.n)
        throw Error("declared n = " + declared_n->str() +
                    " but the intersection array determines n = " + s.n.str());

    Report r;
    r.source = {{"type", "array"},
                {"b", a.b()},
                {"c", a.c()},
                {"declared_n",
                 declared_n ? nlohmann::json(declared_n->str()) : nlohmann::json(nullptr)}};
    r.source_text = "array " + a.render();
    r.warnings = std::move(warnings);
    r.n = s.n;
    r.diameter = a.diameter();
    r.array = a;
    r.hosoya = hosoya_closed_form(a);
    r.wiener = wiener_closed_form(a);
    r.hyper_wiener = hyper_wiener_closed_form(a);
    r.verification = Verification::closed_form_only;
    return r;
}

Report cmd_srg(const SrgParams& p) {
    std::ostringstream params;
    params << "(" << p.n << "," << p.k << "," << p.lambda << "," << p.mu << ")";

    const SrgFeasibility feasibility = srg_feasibility(p);
    if (!feasibility.ok)
        throw Error("infeasible strongly regular parameters " + params.str() + ": " +
                    feasibility.reason);

    const IntersectionArray a = srg_to_array(p);
    const IntPolynomial h = srg_hosoya(p);
    const IntPolynomial h_simplified = srg_hosoya_simplified(p);
    const IntPolynomial h_array = hosoya_closed_form(a);
    if (h != h_simplified || h != h_array)
        throw std::logic_error("Corollary routes disagree for feasible parameters " +
                               params.str());
    const SphereSizes s = sphere_sizes(a);
    if (s.n != p.n)
        throw std::logic_error("array-derived order disagrees with n for " + params.str());

    Report r;
    r.source = {{"type", "srg"}, {"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
    r.source_text = "srg" + params.str();
    r.n = p.n;
    r.diameter = 2;
    r.array = a;
    r.hosoya = h;
    r.hosoya_simplified = h_simplified;
    r.wiener = wiener_closed_form(a);
    r.hyper_wiener = hyper_wiener_closed_form(a);
    r.verification = Verification::closed_form_only;
    return r;
}

Report cmd_verify(const FamilySpec& spec, std::int64_t max_vertices) {
    const Graph g = build(spec, max_vertices);
    nlohmann::json source = {{"type", "family"},
                             {"spec", spec.to_string()},
                             {"family", std::string(family_name(spec.family))},
                             {"params", spec.params}};
    return verify_graph(g, std::move(source), "family " + spec.to_string());
}

Report cmd_verify_file(const std::string& path, std::optional<int> declared_n,
                       std::int64_t max_vertices) {
    std::ifstream in(path);
    if (!in)
        throw BadInput("cannot open edge-list file \"" + path + "\"");
    const Graph g = read_edge_list(in, declared_n);
    if (g.vertex_count() > max_vertices)
        throw SizeLimit("file graph has " + std::to_string(g.vertex_count()) +
                        " vertices, above the cap of " + std::to_string(max_vertices));
    nlohmann::json source = {
        {"type", "file"},
        {"path", path},
        {"declared_n", declared_n ? nlohmann::json(*declared_n) : nlohmann::json(nullptr)}};
    return verify_graph(g, std::move(source), "file " + path);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hosoya polynomial, Wiener and hyper-Wiener indices of "
                 "distance-regular graphs, with exact oracle verification"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    std::int64_t max_vertices = k_default_vertex_cap;
    app.add_option("--max-vertices", max_vertices, "cap on generated/loaded vertex counts")
        ->capture_default_str();

    auto* array_cmd =
        app.add_subcommand("array", "closed forms from an intersection array");
    array_cmd->fallthrough();
    std::vector<std::int64_t> b, c;
    std::string declared_n;
    array_cmd->add_option("--b", b, "b_0,...,b_{D-1} (comma separated)")
        ->required()
        ->delimiter(',');
    array_cmd->add_option("--c", c, "c_1,...,c_D (comma separated)")
        ->required()
        ->delimiter(',');
    array_cmd->add_option("--n", declared_n, "declared order, checked against the array");

    auto* srg_cmd =
        app.add_subcommand("srg", "closed forms from strongly regular parameters");
    srg_cmd->fallthrough();
    SrgParams params{};
    srg_cmd->add_option("n", params.n, "order")->required();
    srg_cmd->add_option("k", params.k, "degree")->required();
    srg_cmd->add_option("lambda", params.lambda, "common neighbours of adjacent pairs")
        ->required();
    srg_cmd->add_option("mu", params.mu, "common neighbours of non-adjacent pairs")
        ->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "compare the closed form against the BFS oracle");
    verify_cmd->fallthrough();
    std::string family, file;
    int file_n = 0;
    auto* family_opt =
        verify_cmd->add_option("--family", family, "family spec, e.g. hypercube:6");
    auto* file_opt = verify_cmd->add_option("--file", file, "edge-list file path");
    auto* file_n_opt =
        verify_cmd->add_option("--n", file_n, "declared vertex count for --file");
    family_opt->excludes(file_opt);
    family_opt->excludes(file_n_opt);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("drg");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Report report;
        if (array_cmd->parsed()) {
            std::optional<BigInt> n;
            if (!declared_n.empty())
                n = parse_bigint(declared_n);
            report = cmd_array(b, c, n);
        } else if (srg_cmd->parsed()) {
            report = cmd_srg(params);
        } else {
            if (family_opt->count() == 0 && file_opt->count() == 0)
                throw Error("verify needs one of --family or --file");
            if (family_opt->count() > 0)
                report = cmd_verify(FamilySpec::parse(family), max_vertices);
            else
                report = cmd_verify_file(
                    file, file_n_opt->count() ? std::optional<int>(file_n) : std::nullopt,
                    max_vertices);
        }
        out << format_report(report, parse_format(format));
        return report.verification == Verification::mismatch ? 3 : 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace drg::cli
