// ifsx command-line tool. Links only the public C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifsx/ifsx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;   // malformed config / input / usage
constexpr int kExitComputation = 2;  // non-convergence, infeasible builds, failed targets

int exit_code_for(ifsx_status st) {
    switch (st) {
        case IFSX_OK:
            return kExitOk;
        case IFSX_ERR_NOT_CONVERGED:
        case IFSX_ERR_INFEASIBLE:
        case IFSX_ERR_INTERNAL:
            return kExitComputation;
        default:
            return kExitBadInput;
    }
}

int report_error(ifsx_status st) {
    std::cerr << "error: " << ifsx_last_error() << "\n";
    return exit_code_for(st);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { ifsx_string_free(value); }
};

struct SetGuard {
    ifsx_set* value = nullptr;
    ~SetGuard() { ifsx_set_free(value); }
};

struct SystemGuard {
    ifsx_system* value = nullptr;
    ~SystemGuard() { ifsx_system_free(value); }
};

int load_system(const std::string& config_path, SystemGuard& sys) {
    std::string text;
    if (!read_file(config_path, text)) {
        std::cerr << "error: cannot read config file: " << config_path << "\n";
        return kExitBadInput;
    }
    if (ifsx_status st = ifsx_system_parse_json(text.c_str(), &sys.value)) return report_error(st);
    return kExitOk;
}

int cmd_attractor(const std::string& config, double tol, std::size_t max_iter, double resolution,
                  const std::string& out_path) {
    SystemGuard sys;
    if (int rc = load_system(config, sys)) return rc;
    SetGuard result;
    std::size_t iterations = 0;
    double residual = 0.0;
    int converged = 0;
    if (ifsx_status st = ifsx_attractor_run(sys.value, tol, max_iter, resolution, &result.value,
                                            &iterations, &residual, &converged))
        return report_error(st);
    StringGuard csv;
    if (ifsx_status st = ifsx_set_to_csv(result.value, &csv.value)) return report_error(st);
    if (!out_path.empty()) {
        if (!write_file(out_path, csv.value)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitBadInput;
        }
    } else {
        std::cout << csv.value;
    }
    std::printf("points=%zu iterations=%zu residual=%.17g converged=%d\n",
                ifsx_set_size(result.value), iterations, residual, converged);
    return converged ? kExitOk : kExitComputation;
}

int cmd_hausdorff(const std::string& file_a, const std::string& file_b) {
    SetGuard a, b;
    if (ifsx_status st = ifsx_set_load_csv(file_a.c_str(), &a.value)) return report_error(st);
    if (ifsx_status st = ifsx_set_load_csv(file_b.c_str(), &b.value)) return report_error(st);
    double distance = 0.0;
    StringGuard witnesses;
    if (ifsx_status st = ifsx_hausdorff(a.value, b.value, &distance, &witnesses.value))
        return report_error(st);
    std::printf("distance=%.17g\n", distance);
    std::printf("witnesses=%s", witnesses.value);
    return kExitOk;
}

int cmd_approx(const std::string& config, const std::string& schedule_text, double tol,
               std::size_t max_iter, double resolution, double target,
               const std::string& out_path) {
    SystemGuard sys;
    if (int rc = load_system(config, sys)) return rc;
    std::vector<std::size_t> schedule;
    std::istringstream in(schedule_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size() || v <= 0) throw std::invalid_argument(item);
            schedule.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            std::cerr << "error: bad k-schedule entry '" << item << "'\n";
            return kExitBadInput;
        }
    }
    if (schedule.empty()) {
        std::cerr << "error: empty k-schedule\n";
        return kExitBadInput;
    }
    StringGuard csv;
    if (ifsx_status st = ifsx_approx_study_run(sys.value, schedule.data(), schedule.size(), tol,
                                               max_iter, resolution, &csv.value))
        return report_error(st);
    if (!out_path.empty()) {
        if (!write_file(out_path, csv.value)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitBadInput;
        }
    } else {
        std::cout << csv.value;
    }
    // Final-row distance check against the convergence target.
    std::string text = csv.value;
    auto last_newline = text.find_last_of('\n', text.size() - 2);
    std::string last_row = text.substr(last_newline + 1);
    auto last_comma = last_row.find_last_of(',');
    double final_distance = std::stod(last_row.substr(last_comma + 1));
    std::printf("final_distance=%.17g target=%.17g\n", final_distance, target);
    return final_distance <= target ? kExitOk : kExitComputation;
}

int cmd_witness(const std::string& kind, std::size_t n, std::size_t depth,
                const std::string& out_path) {
    std::size_t param = (kind == "ladder") ? n : depth;
    StringGuard json;
    int all_pass = 0;
    if (ifsx_status st = ifsx_witness_build(kind.c_str(), param, &json.value, &all_pass)) {
        std::cerr << "error: " << ifsx_last_error() << "\n";
        // Builder failures are computation errors unless the arguments were bad.
        return st == IFSX_ERR_INVALID_ARGUMENT ? kExitBadInput : kExitComputation;
    }
    if (!out_path.empty()) {
        if (!write_file(out_path, json.value)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitBadInput;
        }
    } else {
        std::cout << json.value;
    }
    std::printf("audits=%s\n", all_pass ? "pass" : "FAIL");
    return all_pass ? kExitOk : kExitComputation;
}

int cmd_search(const std::string& witness_path, std::size_t n, std::size_t trials,
               std::uint64_t seed, double tol, std::size_t max_iter, double resolution,
               const std::string& out_path) {
    std::string witness;
    if (!read_file(witness_path, witness)) {
        std::cerr << "error: cannot read witness file: " << witness_path << "\n";
        return kExitBadInput;
    }
    StringGuard report;
    int violated = 0;
    if (ifsx_status st = ifsx_separation_search(witness.c_str(), n, trials, seed, tol, max_iter,
                                                resolution, &report.value, &violated))
        return report_error(st);
    if (!out_path.empty()) {
        if (!write_file(out_path, report.value)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitBadInput;
        }
    } else {
        std::cout << report.value;
    }
    return violated ? kExitComputation : kExitOk;
}

int cmd_render(const std::string& csv_path, const std::string& out_path) {
    SetGuard cloud;
    if (ifsx_status st = ifsx_set_load_csv(csv_path.c_str(), &cloud.value))
        return report_error(st);
    StringGuard svg;
    if (ifsx_status st = ifsx_render_svg(cloud.value, &svg.value)) return report_error(st);
    if (!out_path.empty()) {
        if (!write_file(out_path, svg.value)) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitBadInput;
        }
    } else {
        std::cout << svg.value;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ifsx: attractors of (weak) iterated function systems on [0,1]^d"};
    app.require_subcommand(1);

    std::string config, out_path, kind, schedule = "1,2,4,8,16,32,64,128,256";
    std::string file_a, file_b, witness_path;
    double tol = 1e-6, resolution = 1e-4, target = 0.02;
    std::size_t max_iter = 1000000, n = 2, depth = 3, trials = 10000, search_n = 0;
    double search_resolution = 1e-3;
    std::uint64_t seed = 42;

    auto* attractor = app.add_subcommand("attractor", "compute a system's attractor cloud");
    attractor->add_option("--config", config, "system JSON file")->required();
    attractor->add_option("--tol", tol, "convergence tolerance");
    attractor->add_option("--resolution", resolution, "re-netting radius");
    attractor->add_option("--max-iter", max_iter, "iteration cap");
    attractor->add_option("--out", out_path, "output CSV path (default: stdout)");

    auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance of two CSV clouds");
    hausdorff->add_option("fileA", file_a, "first CSV cloud")->required();
    hausdorff->add_option("fileB", file_b, "second CSV cloud")->required();

    auto* approx = app.add_subcommand("approx", "polygonal approximation study");
    approx->add_option("--config", config, "weak system JSON file")->required();
    approx->add_option("--k-schedule", schedule, "comma-separated node counts");
    approx->add_option("--tol", tol, "convergence tolerance");
    approx->add_option("--resolution", resolution, "re-netting radius");
    approx->add_option("--max-iter", max_iter, "iteration cap");
    approx->add_option("--target", target, "required final distance");
    approx->add_option("--out", out_path, "output CSV path (default: stdout)");

    auto* witness = app.add_subcommand("witness", "build an audited witness set");
    witness->add_option("--kind", kind, "prop-p | ladder | intervals")->required();
    witness->add_option("--n", n, "block count (ladder)");
    witness->add_option("--depth", depth, "truncation depth (prop-p, intervals)");
    witness->add_option("--out", out_path, "output JSON path (default: stdout)");

    auto* search = app.add_subcommand("search", "randomized separation probe against a ladder");
    search->add_option("witness", witness_path, "ladder witness JSON file")->required();
    search->add_option("--n", search_n, "system size (0 = use the witness claim size)");
    search->add_option("--trials", trials, "number of sampled systems");
    search->add_option("--seed", seed, "PRNG seed");
    search->add_option("--tol", tol, "attractor tolerance");
    search->add_option("--resolution", search_resolution, "attractor re-netting radius");
    search->add_option("--max-iter", max_iter, "attractor iteration cap");
    search->add_option("--out", out_path, "report JSON path (default: stdout)");

    auto* render = app.add_subcommand("render", "render a CSV cloud as SVG");
    render->add_option("csv", file_a, "input CSV cloud")->required();
    render->add_option("--out", out_path, "output SVG path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    if (app.got_subcommand(attractor))
        return cmd_attractor(config, tol, max_iter, resolution, out_path);
    if (app.got_subcommand(hausdorff)) return cmd_hausdorff(file_a, file_b);
    if (app.got_subcommand(approx))
        return cmd_approx(config, schedule, tol, max_iter, resolution, target, out_path);
    if (app.got_subcommand(witness)) return cmd_witness(kind, n, depth, out_path);
    if (app.got_subcommand(search))
        return cmd_search(witness_path, search_n, trials, seed, tol, max_iter, search_resolution,
                          out_path);
    if (app.got_subcommand(render)) return cmd_render(file_a, out_path);
    return kExitBadInput;
}
