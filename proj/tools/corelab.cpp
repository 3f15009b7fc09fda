#include "corelab/bijection.hpp"
#include "corelab/error.hpp"
#include "corelab/harness.hpp"
#include "corelab/json_forms.hpp"
#include "corelab/oracle.hpp"
#include "corelab/partition.hpp"
#include "corelab/path.hpp"
#include "corelab/poset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

using namespace corelab;

namespace {

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw InvalidInput("bad range '" + text + "', expected A..B");
    }
}

double default_budget() {
    if (const char* env = std::getenv("CORELAB_BUDGET_SECS")) {
        try {
            return std::stod(env);
        } catch (const std::logic_error&) {
            throw InvalidInput(std::string("CORELAB_BUDGET_SECS is not a number: ") + env);
        }
    }
    return 60.0;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_input(const std::string& arg) {
    if (arg != "-") return arg;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

std::vector<Partition> cores_via_ideals(int s, int k) {
    std::vector<Partition> out;
    for (const CoreIdeal& i : enumerate_nice_ideals(s, k)) {
        Partition p = ideal_to_core(i);
        if (!is_consecutive_core(p, s, k)) throw InternalError("nice ideal decoded to a non-core");
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() > b.parts();
    });
    return out;
}

std::vector<Partition> sc_cores(int s, int k, bool oracle, double budget) {
    if (!oracle) return cores_via_ideals(s, k);
    OracleOptions opts;
    opts.deadline = Deadline::after_seconds(budget);
    return enumerate_sc_cores_stable(s, k, opts).cores;
}

void print_failures(const VerificationReport& report) {
    for (const CellReport& c : report.cells) {
        if (c.skipped) std::cerr << "s=" << c.s << " k=" << c.k << ": skipped (budget exceeded)\n";
        for (const CheckResult& r : c.checks)
            if (!r.pass) std::cerr << "s=" << c.s << " k=" << c.k << ": " << r.name << " failed: " << r.detail << '\n';
        if (!c.counterexample.is_null()) std::cerr << "  counterexample: " << c.counterexample.dump() << '\n';
    }
    for (const CheckResult& r : report.global)
        if (!r.pass) std::cerr << r.name << " failed" << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-conjugate simultaneous cores, poset ideals and symmetric Dyck paths"};
    app.require_subcommand(1);

    int s = 0;
    int k = 0;
    std::string what;
    bool oracle = false;
    std::string format;
    std::string out_path;
    double budget = 0;
    std::string s_range;
    std::string k_range;
    std::string suite = "all";
    bool stable = false;
    unsigned threads = 0;
    std::string from;
    std::string to;
    std::string input;
    std::string poset_kind = "core";

    const std::vector<std::string> whats{"sc-cores", "nice-ideals", "admissible-ideals", "sym-dyck"};

    auto* count_cmd = app.add_subcommand("count", "Count one family at (s, k)");
    count_cmd->add_option("--what", what)->required()->check(CLI::IsMember(whats));
    count_cmd->add_option("--s", s)->required();
    count_cmd->add_option("--k", k)->required();
    count_cmd->add_flag("--oracle", oracle, "Count cores with the brute-force oracle");
    count_cmd->add_option("--budget-secs", budget);

    auto* enum_cmd = app.add_subcommand("enumerate", "List one family at (s, k) as JSON lines");
    enum_cmd->add_option("--what", what)->required()->check(CLI::IsMember(whats));
    enum_cmd->add_option("--s", s)->required();
    enum_cmd->add_option("--k", k)->required();
    enum_cmd->add_flag("--oracle", oracle, "Enumerate cores with the brute-force oracle");
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"json"}));
    enum_cmd->add_option("--out", out_path);
    enum_cmd->add_option("--budget-secs", budget);

    auto* map_cmd = app.add_subcommand("map", "Send one object through the correspondence");
    map_cmd->add_option("--s", s)->required();
    map_cmd->add_option("--k", k)->required();
    map_cmd->add_option("--from", from)->required()->check(CLI::IsMember({"core", "ideal", "path"}));
    map_cmd->add_option("--to", to)->required()->check(CLI::IsMember({"core", "ideal", "path"}));
    map_cmd->add_option("--input", input, "JSON payload, or - for stdin")->required();
    map_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites over a sweep");
    auto* table_cmd = app.add_subcommand("table", "Emit the count table over a sweep");
    for (auto* cmd : {verify_cmd, table_cmd}) {
        cmd->add_option("--s", s);
        cmd->add_option("--k", k);
        cmd->add_option("--s-range", s_range, "A..B");
        cmd->add_option("--k-range", k_range, "A..B");
        cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path);
        cmd->add_option("--budget-secs", budget);
        cmd->add_option("--threads", threads);
        cmd->add_flag("--stable", stable, "Write 0 in the millis column");
    }
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"equinumerosity", "roundtrip", "structure", "golden", "all"}));

    auto* hasse_cmd = app.add_subcommand("hasse", "Emit the Hasse diagram of P(s,k) or P'(s,k)");
    hasse_cmd->add_option("--s", s)->required();
    hasse_cmd->add_option("--k", k)->required();
    hasse_cmd->add_option("--poset", poset_kind)->check(CLI::IsMember({"core", "planar"}));
    hasse_cmd->add_option("--format", format)->check(CLI::IsMember({"dot"}));
    hasse_cmd->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget <= 0) budget = default_budget();

        if (count_cmd->parsed()) {
            std::uint64_t n = 0;
            if (what == "sc-cores") n = sc_cores(s, k, oracle, budget).size();
            else if (what == "nice-ideals") n = count_nice_ideals(s, k);
            else if (what == "admissible-ideals") n = count_admissible_ideals(s, k);
            else n = count_symmetric_dyck(s, k);
            std::cout << n << '\n';
            return 0;
        }

        if (enum_cmd->parsed()) {
            std::ostringstream out;
            if (what == "sc-cores") {
                for (const Partition& p : sc_cores(s, k, oracle, budget)) out << to_json(p).dump() << '\n';
            } else if (what == "nice-ideals") {
                for (const CoreIdeal& i : enumerate_nice_ideals(s, k)) out << to_json(i).dump() << '\n';
            } else if (what == "admissible-ideals") {
                for (const PlanarIdeal& i : enumerate_admissible_ideals(s, k)) out << to_json(i).dump() << '\n';
            } else {
                for (const PathWord& w : enumerate_symmetric_dyck(s, k)) out << path_to_json(s, k, w).dump() << '\n';
            }
            write_output(out_path, out.str());
            return 0;
        }

        if (map_cmd->parsed()) {
            const nlohmann::json payload = nlohmann::json::parse(read_input(input));
            nlohmann::json result;
            if (from == to) throw InvalidInput("--from and --to must differ");
            if (from == "core") {
                const Partition p = partition_from_json(payload);
                if (to == "ideal") result = to_json(chi_image(core_to_ideal(s, k, p)));
                else result = path_to_json(s, k, core_to_path(s, k, p));
            } else if (from == "ideal") {
                const PlanarIdeal ideal = planar_ideal_from_json(payload);
                if (ideal.s != s || ideal.k != k) throw InvalidInput("payload (s, k) does not match --s/--k");
                if (to == "path") result = path_to_json(s, k, ideal_to_path(s, k, ideal));
                else result = to_json(ideal_to_core(chi_preimage(ideal)));
            } else {
                if (payload.value("s", s) != s || payload.value("k", k) != k)
                    throw InvalidInput("payload (s, k) does not match --s/--k");
                const PathWord w = path_from_json(payload);
                if (to == "ideal") result = to_json(path_to_ideal(s, k, w));
                else result = to_json(path_to_core(s, k, w));
            }
            write_output(out_path, result.dump() + "\n");
            return 0;
        }

        if (verify_cmd->parsed() || table_cmd->parsed()) {
            SweepConfig config;
            const Range sr = !s_range.empty() ? parse_range(s_range) : Range{s, s};
            const Range kr = !k_range.empty() ? parse_range(k_range) : Range{k, k};
            config.s_lo = sr.lo;
            config.s_hi = sr.hi;
            config.k_lo = kr.lo;
            config.k_hi = kr.hi;
            config.budget_secs = budget;
            config.threads = threads;
            config.suites = table_cmd->parsed() ? std::vector<Suite>{Suite::Equinumerosity} : parse_suites(suite);
            const VerificationReport report = run_sweep(config);
            write_output(out_path, emit_table(report, format.empty() ? "csv" : format, stable));
            print_failures(report);
            return report.pass() ? 0 : 1;
        }

        if (hasse_cmd->parsed()) {
            write_output(out_path, emit_hasse(s, k, poset_kind == "planar" ? PosetKind::Planar : PosetKind::Core));
            return 0;
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
