// front-atlas: classification of singular points on wave fronts given as
// parametrized surfaces, with invariants, Gauss-map singularity types,
// contact orders, Gaussian-curvature boundedness, and D4 height analysis.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatlas/corpus.hpp"
#include "fatlas/report.hpp"

using namespace fatlas;
using nlohmann::ordered_json;

namespace {

struct CommonArgs {
    std::string surface_path;
    std::string at = "0,0";
    int order = 0;
    double tol = 0.0;
    bool json = false;
};

Point2 parse_at(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--at expects 'u,v'");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("--at expects numeric 'u,v', got '" + s + "'");
    }
}

ReportOptions make_options(const CommonArgs& c) {
    ReportOptions o;
    o.order = c.order;
    if (c.tol > 0.0) {
        o.tol.classify = c.tol;
        o.tol.ridge = c.tol;
    }
    return o;
}

void add_common(CLI::App* cmd, CommonArgs& c, bool needs_surface = true) {
    if (needs_surface)
        cmd->add_option("--surface", c.surface_path, "surface definition file")->required();
    cmd->add_option("--at", c.at, "evaluation point 'u,v' (default 0,0)");
    cmd->add_option("--order", c.order, "jet order (default 6; FRONT_ATLAS_ORDER overrides)");
    cmd->add_option("--tol", c.tol, "classification tolerance (default 1e-8)");
    cmd->add_flag("--json", c.json, "emit JSON");
}

int emit_stage(const CommonArgs& c, const std::string& stage) {
    SurfaceDef def = load_surface_file(c.surface_path);
    Report rep = run_report(def, parse_at(c.at), make_options(c));
    if (!rep.data.contains(stage)) {
        std::cerr << "stage '" << stage << "' did not run (kind mismatch?)\n";
        return 3;
    }
    const ordered_json& j = rep.data[stage];
    if (j.contains("error")) {
        std::cerr << j["error"].get<std::string>() << "\n";
        std::string msg = j["error"].get<std::string>();
        if (msg.rfind("BranchAmbiguity", 0) == 0 || msg.rfind("ClassifierDisagreement", 0) == 0 ||
            msg.rfind("InconsistentIdentifier", 0) == 0 || msg.rfind("ConsistencyViolation", 0) == 0 ||
            msg.rfind("CorankPropositionViolated", 0) == 0 || msg.rfind("ClosedFormMismatch", 0) == 0)
            return 4;
        return 3;
    }
    if (c.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << " = " << it.value().dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"front-atlas: singular-point and Gauss-map classification for wave fronts"};
    app.require_subcommand(1);

    CommonArgs classify_args, inv_args, gauss_args, contact_args, height_args, report_args;
    CLI::App* cmd_classify = app.add_subcommand("classify", "singular point class with witnesses");
    add_common(cmd_classify, classify_args);
    CLI::App* cmd_inv = app.add_subcommand("invariants", "edge invariants at a singular point");
    add_common(cmd_inv, inv_args);
    CLI::App* cmd_gauss = app.add_subcommand("gauss", "Gauss map singularity classification");
    add_common(cmd_gauss, gauss_args);
    CLI::App* cmd_contact = app.add_subcommand("contact", "contact order of singular and parabolic curves");
    add_common(cmd_contact, contact_args);
    CLI::App* cmd_height = app.add_subcommand("height", "extended height function / D4 analysis");
    add_common(cmd_height, height_args);
    CLI::App* cmd_report = app.add_subcommand("report", "full report");
    add_common(cmd_report, report_args);

    // trace
    CommonArgs trace_args;
    std::string trace_field = "lambda";
    std::string csv_path;
    double trace_step = 0.01;
    int trace_count = 101;
    CLI::App* cmd_trace = app.add_subcommand("trace", "march along a zero curve");
    add_common(cmd_trace, trace_args);
    cmd_trace->add_option("--field", trace_field, "lambda | kappa");
    cmd_trace->add_option("--step", trace_step, "arclength step (sign picks the direction)");
    cmd_trace->add_option("--count", trace_count, "number of points");
    cmd_trace->add_option("--csv", csv_path, "write CSV (u,v,residual) to this path");

    // corpus
    std::string corpus_kind = "first";
    std::uint64_t corpus_seed = 1;
    int corpus_count = 1;
    std::string corpus_out;
    CommonArgs corpus_args;
    CLI::App* cmd_corpus = app.add_subcommand("corpus", "generate validated test surfaces");
    cmd_corpus->add_option("--kind", corpus_kind, "first | second");
    cmd_corpus->add_option("--seed", corpus_seed, "generator seed");
    cmd_corpus->add_option("--count", corpus_count, "number of surfaces");
    cmd_corpus->add_option("--out", corpus_out, "directory for .surf files (default: stdout)");
    cmd_corpus->add_flag("--json", corpus_args.json, "emit JSON listing");

    bool show_config = false;
    app.add_flag("--show-config", show_config, "print the active tolerances and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (show_config && app.get_subcommands().empty()) {
            std::cout << tolerances_json(Tolerances{}, default_order()).dump(2) << "\n";
            return 0;
        }
        if (cmd_classify->parsed()) return emit_stage(classify_args, "classification");
        if (cmd_inv->parsed()) return emit_stage(inv_args, "invariants");
        if (cmd_gauss->parsed()) return emit_stage(gauss_args, "gauss");
        if (cmd_contact->parsed()) return emit_stage(contact_args, "contact");
        if (cmd_height->parsed()) return emit_stage(height_args, "height");
        if (cmd_report->parsed()) {
            SurfaceDef def = load_surface_file(report_args.surface_path);
            Report rep = run_report(def, parse_at(report_args.at), make_options(report_args));
            std::cout << rep.data.dump(2) << "\n";
            return rep.fatal ? 3 : 0;
        }
        if (cmd_trace->parsed()) {
            SurfaceDef def = load_surface_file(trace_args.surface_path);
            ReportOptions opts = make_options(trace_args);
            FieldTag tag = trace_field == "kappa" ? FieldTag::kappa_zero : FieldTag::lambda_zero;
            FieldEval field = tag == FieldTag::kappa_zero ? make_kappa_field(def, opts.tol)
                                                          : make_lambda_field(def, opts.tol);
            Polyline line = trace_zero_curve(field, tag, parse_at(trace_args.at), trace_step,
                                             trace_count, opts.tol);
            std::string csv = polyline_csv(line);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path, std::ios::binary);
                if (!out) throw UsageError("cannot open '" + csv_path + "' for writing");
                out << csv;
                std::cout << line.points.size() << " points -> " << csv_path << "\n";
            } else {
                std::cout << csv;
            }
            return 0;
        }
        if (cmd_corpus->parsed()) {
            SurfaceKind kind = corpus_kind == "second" ? SurfaceKind::second_kind_adapted
                               : corpus_kind == "first" ? SurfaceKind::first_kind_adapted
                                                        : SurfaceKind::unknown;
            auto defs = generate_corpus(corpus_seed, corpus_count, kind);
            if (!corpus_out.empty()) {
                for (const SurfaceDef& d : defs) {
                    std::string path = corpus_out + "/" + d.name + ".surf";
                    std::ofstream out(path, std::ios::binary);
                    if (!out) throw UsageError("cannot open '" + path + "' for writing");
                    out << print_surface(d);
                }
                std::cout << defs.size() << " surfaces -> " << corpus_out << "\n";
            } else if (corpus_args.json) {
                ordered_json arr = ordered_json::array();
                for (const SurfaceDef& d : defs)
                    arr.push_back({{"name", d.name}, {"source", print_surface(d)}});
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const SurfaceDef& d : defs) std::cout << print_surface(d) << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(e.category());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 1;
}
