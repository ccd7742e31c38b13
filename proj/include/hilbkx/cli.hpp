#ifndef HILBKX_CLI_HPP
#define HILBKX_CLI_HPP

#include <hilbkx/gl_complex.hpp>
#include <hilbkx/local_model.hpp>
#include <hilbkx/pfaffian.hpp>
#include <hilbkx/property_suite.hpp>
#include <hilbkx/surface_data.hpp>
#include <hilbkx/virtual_degree.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hilbkx::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kValidationFailure = 2;
inline constexpr int kParseFailure = 3;

using nlohmann::json;

enum class Format { Text, Json };

struct RunConfig {
    std::string command;
    std::string spec_path;
    std::string product;  // "g1,g2"
    std::uint64_t seed = 0;
    std::size_t trials = 8;
    Format format = Format::Text;
    std::string at;
    bool generic = false;
    std::string g1_range, g2_range;
    std::size_t p_max = 6, q_max = 8, instances = 100, samples = 100;
};

// Raised inside command handlers; carries the exit code.
struct CommandError {
    int code;
    std::string message;
};

inline json rational_json(const Rational& r) { return to_string(r); }

inline json vector_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json form_matrix_json(const LinearFormMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json sampling_json(const SampleMetadata& s) {
    return {{"trials_per_stage", s.trials_per_stage}, {"bounds", s.bounds}, {"seed", s.seed},
            {"samples_drawn", s.samples_drawn}};
}

// Indented "key: value" rendering of a report.
inline void render_text(const json& j, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& item : j.items()) {
        const auto& v = item.value();
        const bool nested_rows = v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array());
        if (v.is_object()) {
            out << pad << item.key() << ":\n";
            render_text(v, out, indent + 2);
        } else if (nested_rows) {
            out << pad << item.key() << ":\n";
            for (const auto& row : v) {
                if (row.is_object()) {
                    std::string line;
                    for (const auto& f : row.items())
                        line += (line.empty() ? "" : "  ") + f.key() + "=" +
                                (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
                    out << pad << "  " << line << "\n";
                } else {
                    std::string line;
                    for (const auto& x : row) line += (line.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
                    out << pad << "  [" << line << "]\n";
                }
            }
        } else if (v.is_array()) {
            std::string line;
            for (const auto& x : v) line += (line.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
            out << pad << item.key() << ": (" << line << ")\n";
        } else {
            out << pad << item.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

inline void emit(const json& doc, Format format, std::ostream& out) {
    if (format == Format::Json) out << doc.dump(2) << "\n";
    else render_text(doc, out);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError{kParseFailure, "cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::pair<std::size_t, std::size_t> parse_genus_pair(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        return {std::stoul(text.substr(0, comma)), std::stoul(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CommandError{kValidationFailure, "--product expects 'g1,g2', got '" + text + "'"};
    }
}

inline SurfaceSpec load_input(const RunConfig& cfg) {
    if (!cfg.product.empty()) {
        auto [g1, g2] = parse_genus_pair(cfg.product);
        return product_of_curves(g1, g2);
    }
    if (cfg.spec_path.empty()) throw CommandError{kValidationFailure, "need a spec file or --product g1,g2"};
    const auto text = read_file(cfg.spec_path);
    try {
        return load_spec(text);
    } catch (const SpecError& e) {
        const int code = e.kind() == SpecError::Kind::IndexOutOfRange ? kValidationFailure : kParseFailure;
        throw CommandError{code, e.what()};
    }
}

inline RationalVector parse_point(const std::string& text) {
    try {
        return parse_rational_list(text);
    } catch (const std::invalid_argument& e) {
        throw CommandError{kValidationFailure, std::string("--at: ") + e.what()};
    }
}

inline const char* kHypothesisNotMet = "hypothesis p_g>0 not met";

inline json witness_json(const WitnessReport& w) {
    return {{"generic_rank", w.rank},
            {"semantics", GenericRank::semantics},
            {"witness_z", vector_json(w.witness_z)},
            {"fiber_dim", w.fiber_dim},
            {"dim_M_tilde", w.dim_M_tilde},
            {"dim_M", w.dim_M},
            {"chi", w.chi},
            {"parity_ok", w.parity_ok},
            {"sampling", sampling_json(w.trials)}};
}

inline json degree_json(const DegreeReport& d) {
    return {{"degree", d.degree}, {"chi", d.chi}, {"dim_M", d.dim_M}, {"paths_agree", d.paths_agree}};
}

inline json generic_cohomology_json(const GenericCohomology& g) {
    return {{"h0", g.dims.h0},
            {"h1", g.dims.h1},
            {"h2", g.dims.h2},
            {"witness_t", vector_json(g.witness_t)},
            {"semantics", "fiberwise, sampled: upper bound for generic dimensions"},
            {"sampling", sampling_json(g.trials)}};
}

inline SamplingPolicy witness_sampler(const RunConfig& cfg) { return SamplingPolicy::staged(cfg.trials, cfg.seed); }
inline SamplingPolicy complex_sampler(const RunConfig& cfg) { return SamplingPolicy::single_box(cfg.trials, cfg.seed); }

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto text = read_file(cfg.spec_path);
    SurfaceSpec spec;
    try {
        spec = parse_spec_document(text);
    } catch (const SpecError& e) {
        err << "parse error: " << e.what() << "\n";
        emit({{"status", "parse error"}, {"error", e.what()}}, cfg.format, out);
        return kParseFailure;
    }
    const auto report = validate(spec.tensor);
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(v.message);
    emit({{"label", spec.label}, {"q", spec.q()}, {"p", spec.p()}, {"valid", report.ok()}, {"violations", violations}},
         cfg.format, out);
    return report.ok() ? kOk : kValidationFailure;
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto spec = load_input(cfg);
    const auto cx = build_complex(spec.tensor);
    json doc;
    doc["label"] = spec.label;
    doc["q"] = spec.q();
    doc["p"] = spec.p();
    doc["chi"] = euler_characteristic(spec);
    doc["complex_verified"] = verify_complex(cx);
    doc["generic_cohomology"] = generic_cohomology_json(generic_cohomology_dims(cx, complex_sampler(cfg)));
    if (spec.p() == 0) {
        doc["local_model"] = {{"status", kHypothesisNotMet}};
        doc["degree"] = {{"status", kHypothesisNotMet}};
        doc["localization"] = {{"status", kHypothesisNotMet}};
    } else {
        const auto d = poincare_degree(spec, witness_sampler(cfg));
        doc["local_model"] = witness_json(d.witness);
        doc["degree"] = degree_json(d);
        const auto support = localization_support(spec);
        doc["localization"] = {{"support", support.support}, {"virtual_dimension", support.virtual_dimension_text()}};
    }
    emit(doc, cfg.format, out);
    return kOk;
}

inline int cmd_degree(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto spec = load_input(cfg);
    try {
        const auto d = poincare_degree(spec, witness_sampler(cfg));
        json doc = degree_json(d);
        doc["label"] = spec.label;
        emit(doc, cfg.format, out);
        return kOk;
    } catch (const HypothesisViolated& e) {
        throw CommandError{kValidationFailure, e.what()};
    }
}

inline int cmd_pencil(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto spec = load_input(cfg);
    const auto pencil = build_pencil(spec.tensor);
    json doc{{"label", spec.label}, {"q", spec.q()}, {"p", spec.p()}};
    if (!cfg.at.empty()) {
        const auto z = parse_point(cfg.at);
        if (z.size() != spec.p())
            throw CommandError{kValidationFailure, "--at needs p=" + std::to_string(spec.p()) + " coordinates"};
        const auto b = pencil.evaluate(z);
        const auto r = rank(b);
        doc["z"] = vector_json(z);
        doc["B"] = matrix_json(b);
        doc["rank"] = r;
        doc["fiber_dim"] = spec.q() - r;
        if (spec.q() <= 8) doc["pfaffian_rank"] = pfaffian_rank(b);
    } else {
        if (spec.p() == 0) throw CommandError{kValidationFailure, "hypothesis violated: pencil analysis needs p_g(X) > 0"};
        doc["witness"] = witness_json(find_smooth_witness(pencil, witness_sampler(cfg)));
    }
    emit(doc, cfg.format, out);
    return kOk;
}

inline int cmd_complex(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto spec = load_input(cfg);
    const auto cx = build_complex(spec.tensor);
    json doc{{"label", spec.label}, {"q", spec.q()}, {"p", spec.p()}, {"verified", verify_complex(cx)},
             {"A0", form_matrix_json(cx.a0)}, {"A1", form_matrix_json(cx.a1)}};
    if (!cfg.at.empty()) {
        const auto t = parse_point(cfg.at);
        if (t.size() != spec.q())
            throw CommandError{kValidationFailure, "--at needs q=" + std::to_string(spec.q()) + " coordinates"};
        const auto d = cohomology_dims(cx, t);
        doc["t"] = vector_json(t);
        doc["cohomology"] = {{"h0", d.h0}, {"h1", d.h1}, {"h2", d.h2}, {"semantics", "fiberwise at t"}};
    } else {
        doc["generic_cohomology"] = generic_cohomology_json(generic_cohomology_dims(cx, complex_sampler(cfg)));
    }
    emit(doc, cfg.format, out);
    return kOk;
}

// "a..b" (empty when b < a) or a single integer.
inline std::pair<long, long> parse_range(const std::string& text) {
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CommandError{kValidationFailure, "range must look like 'a..b', got '" + text + "'"};
    }
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto r1 = parse_range(cfg.g1_range), r2 = parse_range(cfg.g2_range);
    for (const auto& [lo, hi] : {r1, r2})
        if (lo <= hi && (lo < 2 || hi > 8))
            throw CommandError{kValidationFailure, "genus ranges must lie within [2, 8] (general type)"};
    json rows = json::array();
    for (long g1 = r1.first; g1 <= r1.second; ++g1)
        for (long g2 = r2.first; g2 <= r2.second; ++g2) {
            const auto spec = product_of_curves(static_cast<std::size_t>(g1), static_cast<std::size_t>(g2));
            const auto d = poincare_degree(spec, witness_sampler(cfg));
            rows.push_back({{"g1", g1},
                            {"g2", g2},
                            {"q", spec.q()},
                            {"p", spec.p()},
                            {"chi", d.chi},
                            {"generic_rank", d.witness.rank},
                            {"dim_M", d.dim_M},
                            {"degree", d.degree}});
        }
    emit({{"rows", rows}}, cfg.format, out);
    return kOk;
}

inline int cmd_random_check(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                            const std::function<CupTensor(const CupTensor&)>& corrupt = {}) {
    if (cfg.p_max == 0 || cfg.q_max == 0) throw CommandError{kValidationFailure, "bounds must be positive"};
    RandomCheckConfig rc;
    rc.p_max = cfg.p_max;
    rc.q_max = cfg.q_max;
    rc.instances = cfg.instances;
    rc.seed = cfg.seed;
    rc.samples = cfg.samples;
    rc.corrupt = corrupt;
    const auto result = run_random_check(rc);
    json doc{{"instances", result.instances_run}, {"checks", result.checks}, {"passed", result.passed()}};
    if (result.failure) {
        const auto& f = *result.failure;
        doc["failure"] = {{"seed", f.seed}, {"instance", f.instance}, {"invariant", f.invariant}, {"detail", f.detail}};
        err << "invariant '" << f.invariant << "' failed: " << f.detail << "\n"
            << "reproduce with --seed " << f.seed << ", instance " << f.instance << "\n";
    }
    emit(doc, cfg.format, out);
    return result.passed() ? kOk : kPropertyFailure;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "validate") return cmd_validate(cfg, out, err);
        if (cfg.command == "report") return cmd_report(cfg, out, err);
        if (cfg.command == "degree") return cmd_degree(cfg, out, err);
        if (cfg.command == "pencil") return cmd_pencil(cfg, out, err);
        if (cfg.command == "complex") return cmd_complex(cfg, out, err);
        if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
        if (cfg.command == "random-check") return cmd_random_check(cfg, out, err);
        err << "unknown command '" << cfg.command << "'\n";
        return kValidationFailure;
    } catch (const CommandError& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParityFailure& e) {
        err << "parity failure: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const HypothesisViolated& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"hilbkx: exact local models and localized degree for Hilb^{k_X} of surfaces"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", cfg.seed, "Sampling seed");
        sub->add_option("--trials", cfg.trials, "Samples per stage")->check(CLI::PositiveNumber);
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("spec", cfg.spec_path, "Spec file (JSON)");
        sub->add_option("--product", cfg.product, "Use the product of curves of genera g1,g2");
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check a spec file; exit 2 on violations, 3 on parse errors");
    validate_cmd->add_option("spec", cfg.spec_path, "Spec file (JSON)")->required();
    validate_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* report_cmd = app.add_subcommand("report", "Full surface report");
    add_input(report_cmd);
    add_common(report_cmd);

    auto* degree_cmd = app.add_subcommand("degree", "Localized virtual degree of Hilb^{k_X}");
    add_input(degree_cmd);
    add_common(degree_cmd);

    auto* pencil_cmd = app.add_subcommand("pencil", "Skew pencil B(z): evaluate at --at z or sample (--generic)");
    add_input(pencil_cmd);
    add_common(pencil_cmd);
    auto* pencil_at = pencil_cmd->add_option("--at", cfg.at, "Comma-separated rationals z_1..z_p");
    pencil_cmd->add_flag("--generic", cfg.generic, "Sampled generic rank and smooth witness")->excludes(pencil_at);

    auto* complex_cmd = app.add_subcommand("complex", "Deformation complex: cohomology at --at t or sampled (--generic)");
    add_input(complex_cmd);
    add_common(complex_cmd);
    auto* complex_at = complex_cmd->add_option("--at", cfg.at, "Comma-separated rationals t_1..t_q");
    complex_cmd->add_flag("--generic", cfg.generic, "Sampled generic cohomology")->excludes(complex_at);

    auto* sweep_cmd = app.add_subcommand("sweep", "Degree table over products of curves");
    sweep_cmd->add_option("--g1", cfg.g1_range, "Genus range a..b")->required();
    sweep_cmd->add_option("--g2", cfg.g2_range, "Genus range a..b")->required();
    add_common(sweep_cmd);

    auto* check_cmd = app.add_subcommand("random-check", "Invariant suite over random tensors");
    check_cmd->add_option("--p-max", cfg.p_max, "Largest p");
    check_cmd->add_option("--q-max", cfg.q_max, "Largest q");
    check_cmd->add_option("--instances", cfg.instances, "Number of random tensors");
    check_cmd->add_option("--samples", cfg.samples, "Random z and t per tensor");
    check_cmd->add_option("--seed", cfg.seed, "Seed");
    check_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidationFailure;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? Format::Json : Format::Text;
    return dispatch(cfg, out, err);
}

}  // namespace hilbkx::cli

#endif  // HILBKX_CLI_HPP
