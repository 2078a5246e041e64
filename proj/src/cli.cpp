#include "ssperm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssperm/bijections.hpp"
#include "ssperm/enumeration.hpp"
#include "ssperm/verify.hpp"

namespace ssperm {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

ordered_json trace_json(const Trace& trace) {
    ordered_json arr = ordered_json::array();
    for (const TraceStep& s : trace) {
        ordered_json step;
        step["depth"] = s.depth;
        step["case"] = s.label;
        step["input"] = s.input;
        step["output"] = s.output;
        arr.push_back(std::move(step));
    }
    return arr;
}

void print_trace(const Trace& trace, std::ostream& out) {
    for (const TraceStep& s : trace) {
        for (int i = 0; i < s.depth; ++i) out << "  ";
        out << "case=" << s.label << " input=" << s.input << " -> " << s.output << "\n";
    }
}

struct StatCmd {
    std::string perm_text;
    std::vector<std::string> stats;
    bool all = false;
    std::string format = "text";
};

int run_stat(const StatCmd& cmd, std::ostream& out) {
    const Permutation pi = Permutation::parse(cmd.perm_text);
    std::vector<std::string> names = cmd.stats;
    if (cmd.all || names.empty()) names = statistic_names();
    ordered_json jstats;
    for (const std::string& name : names) {
        StatFn fn = statistic_by_name(name);
        if (!fn) throw std::invalid_argument("unknown statistic: " + name);
        const int value = fn(pi);
        if (cmd.format == "json")
            jstats[name] = value;
        else
            out << name << "=" << value << "\n";
    }
    if (cmd.format == "json") {
        ordered_json j;
        j["input"] = pi.str();
        j["stats"] = std::move(jstats);
        out << j.dump() << "\n";
    }
    return kExitOk;
}

struct SortCmd {
    std::string perm_text;
    int iterate = 1;
    bool check = false;
    std::string format = "text";
};

int run_sort(const SortCmd& cmd, std::ostream& out) {
    Permutation pi = Permutation::parse(cmd.perm_text);
    const bool sortable = is_stack_sortable(pi);
    std::vector<std::string> stages;
    for (int i = 0; i < cmd.iterate; ++i) {
        pi = stack_sort(pi);
        stages.push_back(pi.str());
    }
    if (cmd.format == "json") {
        ordered_json j;
        j["input"] = cmd.perm_text;
        j["stages"] = stages;
        if (cmd.check) j["stack_sortable"] = sortable;
        out << j.dump() << "\n";
    } else {
        for (const std::string& s : stages) out << s << "\n";
        if (cmd.check) out << "stack_sortable=" << (sortable ? "true" : "false") << "\n";
    }
    return kExitOk;
}

struct MapCmd {
    std::string name;
    std::string input;
    bool trace = false;
    std::string format = "text";
};

int run_map(const MapCmd& cmd, std::ostream& out) {
    Trace trace;
    Trace* tp = cmd.trace ? &trace : nullptr;
    std::string result;
    if (cmd.name == "f")
        result = f_involution(Permutation::parse(cmd.input), tp).str();
    else if (cmd.name == "g")
        result = g_map(Permutation::parse(cmd.input), tp).str();
    else if (cmd.name == "g-inv")
        result = g_inv(Permutation::parse(cmd.input), tp).str();
    else if (cmd.name == "h")
        result = h_map(FullBinaryTree::parse(cmd.input), tp).str();
    else if (cmd.name == "h-plus")
        result = h_plus(FullBinaryTree::parse(cmd.input), tp).str();
    else if (cmd.name == "h-plus-inv")
        result = h_plus_inv(Permutation::parse(cmd.input), tp).str();
    else if (cmd.name == "z")
        result = z_map(PlaneTree::parse(cmd.input), tp).str();
    else if (cmd.name == "z-inv")
        result = z_inv(Permutation::parse(cmd.input), tp).str();
    else
        throw std::invalid_argument("unknown map: " + cmd.name);

    if (cmd.format == "json") {
        ordered_json j;
        j["map"] = cmd.name;
        j["input"] = cmd.input;
        j["output"] = result;
        if (cmd.trace) j["trace"] = trace_json(trace);
        out << j.dump() << "\n";
    } else {
        if (cmd.trace) print_trace(trace, out);
        out << result << "\n";
    }
    return kExitOk;
}

struct DistributionCmd {
    std::string stat;
    std::string klass;
    std::string range;
    std::string format = "csv";
    std::string out_path;
};

std::pair<int, int> parse_range(const std::string& text) {
    const size_t dots = text.find("..");
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty length in range");
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad length: " + s);
            v = v * 10 + (c - '0');
            if (v > 1000) throw std::invalid_argument("length out of range: " + s);
        }
        return v;
    };
    if (dots == std::string::npos) {
        const int n = parse_int(text);
        return {n, n};
    }
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range: " + text);
    return {lo, hi};
}

int run_distribution(const DistributionCmd& cmd, std::ostream& out, std::ostream& err) {
    const PermClass cls = PermClass::parse(cmd.klass);
    const auto [lo, hi] = parse_range(cmd.range);
    const DistributionTable table = distribution_table(cmd.stat, cls, lo, hi);
    const std::string payload =
        cmd.format == "json" ? table.to_json_string() + "\n" : table.to_csv();
    if (!cmd.out_path.empty()) {
        std::ofstream file(cmd.out_path);
        if (!file) {
            err << "cannot open output file: " << cmd.out_path << "\n";
            return kExitIo;
        }
        file << payload;
        if (!file.flush()) {
            err << "write failed: " << cmd.out_path << "\n";
            return kExitIo;
        }
    } else {
        out << payload;
    }
    return kExitOk;
}

struct VerifyCmd {
    std::string theorem;
    int n_max = -1;  // -1: per-theorem default
    std::string format = "text";
};

int run_verify(const VerifyCmd& cmd, std::ostream& out) {
    struct Entry {
        const char* id;
        int default_n;
        VerificationReport (*fn)(int);
    };
    static const Entry entries[] = {
        {"thm3.1", 9, &verify_thm_3_1},  {"thm4.1", 9, &verify_thm_4_1},
        {"thm4.2", 8, &verify_thm_4_2},  {"thm5.1", 8, &verify_thm_5_1},
        {"formulas", 9, &verify_formulas}, {"table2", 12, &verify_table_2},
    };
    std::vector<VerificationReport> reports;
    bool known = false;
    for (const Entry& e : entries) {
        if (cmd.theorem == "all" || cmd.theorem == e.id) {
            known = true;
            int n = cmd.n_max >= 0 ? cmd.n_max : e.default_n;
            if (cmd.theorem == "all" && std::string(e.id) == "table2") n = std::min(n, 12);
            reports.push_back(e.fn(n));
        }
    }
    if (!known) throw std::invalid_argument("unknown theorem id: " + cmd.theorem);

    bool all_passed = true;
    if (cmd.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const VerificationReport& r : reports) {
            arr.push_back(ordered_json::parse(report_json_string(r)));
            all_passed = all_passed && r.passed();
        }
        out << arr.dump() << "\n";
    } else {
        for (const VerificationReport& r : reports) {
            out << report_text(r);
            all_passed = all_passed && r.passed();
        }
    }
    return all_passed ? kExitOk : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stack-sortable permutation statistics, bijections and verification"};
    app.require_subcommand(1);

    StatCmd stat_cmd;
    CLI::App* stat_app = app.add_subcommand("stat", "evaluate statistics of a permutation");
    stat_app->add_option("perm", stat_cmd.perm_text, "permutation, comma-separated")
        ->required();
    stat_app->add_option("stats", stat_cmd.stats, "statistic names (default: all nine)");
    stat_app->add_flag("--all", stat_cmd.all, "print all nine statistics");
    stat_app->add_option("--format", stat_cmd.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    SortCmd sort_cmd;
    CLI::App* sort_app = app.add_subcommand("sort", "apply the stack-sorting operator");
    sort_app->add_option("perm", sort_cmd.perm_text, "permutation, comma-separated")
        ->required();
    sort_app->add_option("--iterate", sort_cmd.iterate, "number of applications")
        ->check(CLI::Range(1, 1000));
    sort_app->add_flag("--check", sort_cmd.check, "also report stack-sortability");
    sort_app->add_option("--format", sort_cmd.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    MapCmd map_cmd;
    CLI::App* map_app = app.add_subcommand("map", "apply one of the bijections");
    map_app->add_option("name", map_cmd.name, "f|g|g-inv|h|h-plus|h-plus-inv|z|z-inv")
        ->required();
    map_app->add_option("input", map_cmd.input,
                        "permutation or balanced-parentheses tree (default: empty)");
    map_app->add_flag("--trace", map_cmd.trace, "print the recursion steps");
    map_app->add_option("--format", map_cmd.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    DistributionCmd dist_cmd;
    CLI::App* dist_app =
        app.add_subcommand("distribution", "exact statistic histogram over a class");
    dist_app->add_option("stat", dist_cmd.stat, "statistic name")->required();
    dist_app->add_option("class", dist_cmd.klass, "all or avoid:<pattern>")->required();
    dist_app->add_option("n", dist_cmd.range, "length n or range lo..hi")->required();
    dist_app->add_option("--format", dist_cmd.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    dist_app->add_option("--out", dist_cmd.out_path, "write to file instead of stdout");

    VerifyCmd verify_cmd;
    CLI::App* verify_app = app.add_subcommand("verify", "run the theorem harness");
    verify_app
        ->add_option("theorem", verify_cmd.theorem,
                     "thm3.1|thm4.1|thm4.2|thm5.1|formulas|table2|all")
        ->required();
    verify_app->add_option("--n-max", verify_cmd.n_max, "override the checked range")
        ->check(CLI::Range(0, 12));
    verify_app->add_option("--format", verify_cmd.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (stat_app->parsed()) return run_stat(stat_cmd, out);
        if (sort_app->parsed()) return run_sort(sort_cmd, out);
        if (map_app->parsed()) return run_map(map_cmd, out);
        if (dist_app->parsed()) return run_distribution(dist_cmd, out, err);
        if (verify_app->parsed()) return run_verify(verify_cmd, out);
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace ssperm
