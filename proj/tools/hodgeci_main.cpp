#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hodgeci/hodgeci.hpp"

using namespace hodgeci;

namespace {

struct TargetArgs {
    std::string ambient_pos, degrees_pos;
    std::string ambient_flag, ambient_file, degrees_flag;
    std::string split;
    std::string format = "pretty";
};

void add_target_options(CLI::App* cmd, TargetArgs& a, bool with_csv = true) {
    cmd->add_option("AMBIENT", a.ambient_pos, "ambient space, e.g. P4");
    cmd->add_option("DEGREES", a.degrees_pos, "comma-separated degrees, e.g. 5 or 2,3");
    cmd->add_option("--ambient", a.ambient_flag, "ambient space, e.g. P4");
    cmd->add_option("--ambient-file", a.ambient_file, "JSON description of a custom ambient");
    cmd->add_option("--degrees", a.degrees_flag, "comma-separated degrees");
    cmd->add_option("--split", a.split, "split d1,d2 of the largest degree (default 1,d-1)");
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"pretty", "json", "csv"}
                                       : std::vector<std::string>{"pretty", "json"}));
}

AmbientSpec resolve_ambient(const TargetArgs& a) {
    int given = (a.ambient_pos.empty() ? 0 : 1) + (a.ambient_flag.empty() ? 0 : 1) +
                (a.ambient_file.empty() ? 0 : 1);
    if (given == 0) throw SchemaError("no ambient given; pass P<N>, --ambient, or --ambient-file");
    if (given > 1) throw SchemaError("ambient given more than once");
    if (!a.ambient_file.empty()) {
        std::ifstream in(a.ambient_file);
        if (!in) throw SchemaError("cannot read ambient file '" + a.ambient_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        AmbientSpec amb = parse_ambient_file(buf.str());
        ValidationReport rep = validate_custom_spec(amb);
        if (!rep.valid()) {
            std::string msg = "ambient file '" + a.ambient_file + "' is inconsistent:";
            for (const Violation& v : rep.violations) msg += "\n  " + v.where + ": " + v.what;
            throw SchemaError(msg);
        }
        return amb;
    }
    return parse_projective_ambient(a.ambient_pos.empty() ? a.ambient_flag : a.ambient_pos);
}

std::vector<int> resolve_degrees(const TargetArgs& a) {
    if (!a.degrees_pos.empty() && !a.degrees_flag.empty()) throw SchemaError("degrees given more than once");
    const std::string& s = a.degrees_pos.empty() ? a.degrees_flag : a.degrees_pos;
    if (s.empty()) throw SchemaError("no degrees given");
    return parse_degrees(s);
}

SplitPlan resolve_split(const TargetArgs& a, const std::vector<int>& degrees) {
    int dmax = *std::max_element(degrees.begin(), degrees.end());
    if (a.split.empty()) return choose_split(dmax);
    return parse_split_arg(a.split, dmax);
}

std::string spec_label(const AmbientSpec& amb, const std::vector<int>& degrees) {
    std::string s = "degrees [";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(degrees[i]);
    }
    return s + "] in " + amb.label();
}

int run_diamond(const TargetArgs& a) {
    AmbientSpec amb = resolve_ambient(a);
    CISpec spec{amb, resolve_degrees(a)};
    MemoStore memo;
    Context ctx{memo};
    std::optional<SplitPlan> split;
    if (!a.split.empty()) split = resolve_split(a, spec.degrees);
    HodgeDiamond d = compute_diamond(spec, ctx, split);
    if (a.format == "json") {
        std::cout << diamond_to_json(d).dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << render_diamond_csv(d);
    } else {
        std::cout << spec_label(amb, spec.degrees) << ", dimension " << d.dim() << "\n\n"
                  << render_diamond_pretty(d) << "\neuler characteristic: " << euler_characteristic(d)
                  << "\n";
    }
    return 0;
}

int run_mhs(const TargetArgs& a) {
    AmbientSpec amb = resolve_ambient(a);
    CISpec spec{amb, resolve_degrees(a)};
    MemoStore memo;
    Context ctx{memo};
    SplitPlan split = resolve_split(a, spec.degrees);
    MiddleSummands s = middle_summands(spec, split, ctx);
    WeightGradedMHS mhs = assemble_amhs(spec, split, ctx);
    BigradedDims middle = middle_hodge(spec, split, ctx);
    if (a.format == "json") {
        std::cout << mhs_to_json(mhs).dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << render_mhs_csv(mhs);
    } else {
        std::cout << spec_label(amb, spec.degrees) << ", limit structure on degree " << mhs.degree()
                  << "\n\n"
                  << render_mhs_pretty(mhs, s, middle);
    }
    return 0;
}

int run_table(const TargetArgs& a) {
    AmbientSpec amb = resolve_ambient(a);
    CISpec spec{amb, resolve_degrees(a)};
    MemoStore memo;
    Context ctx{memo};
    SplitPlan split = resolve_split(a, spec.degrees);
    MiddleSummands s = middle_summands(spec, split, ctx);
    BigradedDims middle = middle_hodge(spec, split, ctx);
    if (a.format == "json") {
        std::cout << summands_to_json(s, middle).dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << render_summands_csv(s, middle);
    } else {
        std::cout << spec_label(amb, spec.degrees) << ", middle degree " << s.n << "\n\n"
                  << render_summands_pretty(s, middle);
    }
    return 0;
}

int run_trace(const TargetArgs& a) {
    AmbientSpec amb = resolve_ambient(a);
    CISpec spec{amb, resolve_degrees(a)};
    MemoStore memo;
    TraceLog log;
    Context ctx{memo, &log};
    std::optional<SplitPlan> split;
    if (!a.split.empty()) split = resolve_split(a, spec.degrees);
    compute_diamond(spec, ctx, split);
    const std::string root = detail::make_problem(spec.ambient, spec.degrees).key();
    if (a.format == "json")
        std::cout << trace_to_json(log, root).dump(2) << "\n";
    else
        std::cout << render_trace_pretty(log, root);
    return 0;
}

int run_verify(const VerifyOptions& opt, const std::string& format) {
    VerifySummary sum = run_verification(opt);
    if (format == "json")
        std::cout << verify_to_json(sum).dump(2) << "\n";
    else
        std::cout << render_verify_pretty(sum);
    return sum.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge diamonds and limit mixed structures of smooth complete intersections"};
    app.require_subcommand(1);

    TargetArgs diamond_args, mhs_args, table_args, trace_args;
    CLI::App* cmd_diamond = app.add_subcommand("diamond", "full Hodge diamond of a complete intersection");
    add_target_options(cmd_diamond, diamond_args);
    CLI::App* cmd_mhs = app.add_subcommand("mhs", "weight-graded limit structure on the middle degree");
    add_target_options(cmd_mhs, mhs_args);
    CLI::App* cmd_table =
        app.add_subcommand("table", "the five middle-degree summands and their assembly");
    add_target_options(cmd_table, table_args);
    CLI::App* cmd_trace = app.add_subcommand("trace", "recursion tree of the computation");
    add_target_options(cmd_trace, trace_args, /*with_csv=*/false);

    VerifyOptions vopt;
    std::string verify_format = "pretty";
    bool unreduced = false;
    CLI::App* cmd_verify = app.add_subcommand("verify", "cross-check the engine against independent counts");
    cmd_verify->add_option("--max-degree", vopt.max_degree, "largest hypersurface degree swept")
        ->check(CLI::Range(2, 40));
    cmd_verify->add_option("--max-ambient-dim", vopt.max_ambient_dim, "largest projective ambient dimension")
        ->check(CLI::Range(2, 10));
    cmd_verify->add_option("--ci-max-degree", vopt.ci_max_degree, "largest intersection factor degree")
        ->check(CLI::Range(2, 10));
    cmd_verify->add_option("--ci-max-factors", vopt.ci_max_factors, "most intersection factors")
        ->check(CLI::Range(1, 5));
    cmd_verify->add_flag("--unreduced-points", unreduced,
                         "demonstration: count point sets unreduced and watch the genus check fail");
    cmd_verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));

    int rc = 0;
    cmd_diamond->callback([&] { rc = run_diamond(diamond_args); });
    cmd_mhs->callback([&] { rc = run_mhs(mhs_args); });
    cmd_table->callback([&] { rc = run_table(table_args); });
    cmd_trace->callback([&] { rc = run_trace(trace_args); });
    cmd_verify->callback([&] {
        vopt.reduced_point_prim = !unreduced;
        rc = run_verify(vopt, verify_format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
