// Command-line front end. Talks to the core library exclusively through
// the C API in rpg.h. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rpg.h"

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { rpg_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

int die_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        return fallback;
    }
}

std::string env_str(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? v : fallback;
}

// Group argument: a spec string, or a path to a .json/.csv Cayley table.
rpg_status load_group(const std::string& arg, const rpg_caps& caps, rpg_group** out) {
    bool json = arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0;
    bool csv = arg.size() > 4 && arg.compare(arg.size() - 4, 4, ".csv") == 0;
    if (!json && !csv) return rpg_group_from_spec(arg.c_str(), &caps, out);
    std::ifstream in(arg);
    if (!in) {
        // Surface a readable message through the normal error path.
        return rpg_group_from_table_json("", &caps, out);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (json) return rpg_group_from_table_json(text.c_str(), &caps, out);
    return rpg_group_from_table_csv(text.c_str(), arg.c_str(), &caps, out);
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream out(path);
    if (!out) return die_input("cannot open output file: " + path);
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Finite-group power graph toolkit.\n"
        "Environment variables (flags take precedence): RPG_MAX_ORDER, "
        "RPG_SOLVER_CAP, RPG_HAMILTONIAN_CAP, RPG_PERFECT_CAP, "
        "RPG_PARALLELISM, RPG_FORMAT, RPG_OUTPUT."};
    app.require_subcommand(1);

    rpg_caps caps;
    rpg_caps_default(&caps);
    caps.max_order = env_int("RPG_MAX_ORDER", caps.max_order);
    caps.solver_cap = env_int("RPG_SOLVER_CAP", caps.solver_cap);
    caps.hamiltonian_cap = env_int("RPG_HAMILTONIAN_CAP", caps.hamiltonian_cap);
    caps.perfect_cap = env_int("RPG_PERFECT_CAP", caps.perfect_cap);

    std::string format = env_str("RPG_FORMAT", "");
    std::string output = env_str("RPG_OUTPUT", "");
    app.add_option("--format", format, "Output format (dot|json|csv|table)");
    app.add_option("--output", output, "Write output to a file instead of stdout");
    app.add_option("--solver-cap", caps.solver_cap, "Exact-solver size cap");
    app.add_option("--hamiltonian-cap", caps.hamiltonian_cap, "Hamiltonicity search cap");
    app.add_option("--perfect-cap", caps.perfect_cap, "Perfectness check cap");

    std::string group_arg;
    bool flag_power = false, flag_reduced = false, flag_directed = false, flag_proper = false;

    auto* cmd_group = app.add_subcommand("group", "Construct a group and print it");
    cmd_group->add_option("spec", group_arg, "Group spec (e.g. Z12, D8, Q8, SD16, Z4xZ2) or table file")
        ->required();

    auto* cmd_graph = app.add_subcommand("graph", "Build and export a power graph");
    cmd_graph->add_option("spec", group_arg, "Group spec or table file")->required();
    cmd_graph->add_flag("--power", flag_power, "Power graph (non-strict inclusion)");
    cmd_graph->add_flag("--reduced", flag_reduced, "Reduced power graph (default)");
    cmd_graph->add_flag("--directed", flag_directed, "Directed variant");
    cmd_graph->add_flag("--proper", flag_proper, "Drop the identity vertex");

    auto* cmd_inv = app.add_subcommand("invariants", "Compute graph invariants");
    cmd_inv->add_option("spec", group_arg, "Group spec or table file")->required();
    cmd_inv->add_flag("--power", flag_power, "Power graph (non-strict inclusion)");
    cmd_inv->add_flag("--reduced", flag_reduced, "Reduced power graph (default)");
    cmd_inv->add_flag("--proper", flag_proper, "Drop the identity vertex");

    int max_order = env_int("RPG_MAX_ORDER", 32);
    int parallelism = env_int("RPG_PARALLELISM", 1);
    std::string only;
    auto* cmd_verify = app.add_subcommand("verify", "Run the verification suite");
    cmd_verify->add_option("--max-order", max_order, "Catalog order bound");
    cmd_verify->add_option("--only", only, "Comma-separated check ids (e.g. T6,T18)");
    cmd_verify->add_option("--parallelism", parallelism, "Worker thread count");

    int cat_max_order = env_int("RPG_MAX_ORDER", 32);
    auto* cmd_catalog = app.add_subcommand("catalog", "List the verification catalog");
    cmd_catalog->add_option("--max-order", cat_max_order, "Catalog order bound");

    // Let the shared options (--format, --output, caps) be given after
    // the subcommand name as well.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (flag_power && flag_reduced) return die_input("--power and --reduced are exclusive");
    int reduced = flag_power ? 0 : 1;

    if (*cmd_group) {
        if (format.empty()) format = "summary";
        if (format == "table") format = "summary";
        rpg_group* g = nullptr;
        if (load_group(group_arg, caps, &g) != RPG_OK) return die_input(rpg_last_error());
        StringOut text;
        rpg_status st = rpg_group_export(g, format.c_str(), &text.s);
        rpg_group_free(g);
        if (st != RPG_OK) return die_input(rpg_last_error());
        return write_output(text.str(), output);
    }

    if (*cmd_graph) {
        if (format.empty()) format = "dot";
        rpg_group* g = nullptr;
        if (load_group(group_arg, caps, &g) != RPG_OK) return die_input(rpg_last_error());
        rpg_graph* gr = nullptr;
        rpg_status st = rpg_build_graph(g, reduced, flag_directed ? 1 : 0, flag_proper ? 1 : 0, &gr);
        rpg_group_free(g);
        if (st != RPG_OK) return die_input(rpg_last_error());
        StringOut text;
        st = rpg_graph_export(gr, format.c_str(), &text.s);
        rpg_graph_free(gr);
        if (st != RPG_OK) return die_input(rpg_last_error());
        return write_output(text.str(), output);
    }

    if (*cmd_inv) {
        if (format.empty()) format = "table";
        rpg_group* g = nullptr;
        if (load_group(group_arg, caps, &g) != RPG_OK) return die_input(rpg_last_error());
        StringOut text;
        rpg_status st = rpg_invariants(g, reduced, flag_proper ? 1 : 0, &caps, format.c_str(), &text.s);
        rpg_group_free(g);
        if (st != RPG_OK) return die_input(rpg_last_error());
        return write_output(text.str(), output);
    }

    if (*cmd_verify) {
        if (format.empty()) format = "table";
        StringOut report;
        int failures = 0;
        rpg_status st = rpg_verify(max_order, only.empty() ? nullptr : only.c_str(), &caps,
                                   parallelism, format.c_str(), &report.s, &failures);
        if (st != RPG_OK) return die_input(rpg_last_error());
        int rc = write_output(report.str(), output);
        if (rc != 0) return rc;
        return failures > 0 ? 1 : 0;
    }

    if (*cmd_catalog) {
        StringOut text;
        if (rpg_catalog(cat_max_order, &caps, &text.s) != RPG_OK) return die_input(rpg_last_error());
        return write_output(text.str(), output);
    }

    return 2;
}
