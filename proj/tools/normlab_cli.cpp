// normlab command-line driver: single-norm evaluation, the quantitative
// separation experiments, and a selftest sweep.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normlab/experiments.hpp"
#include "normlab/io.hpp"
#include "normlab/norm_engines.hpp"

namespace {

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
    std::vector<std::size_t> out;
    for (double v : parse_double_list(csv)) out.push_back(static_cast<std::size_t>(v));
    return out;
}

void emit(const normlab::Table& table, const std::string& out_path) {
    if (out_path.empty()) {
        table.write_csv(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        table.write_csv(out);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normlab: subrearrangement-invariant norm laboratory"};
    app.require_subcommand(1);

    // norm subcommand
    auto* norm_cmd = app.add_subcommand("norm", "compute one norm of an input file");
    std::string space = "G", weight_spec = "power:0.5", input_path;
    double p = 1.0, grid = 1.0 / 256.0;
    norm_cmd->add_option("--space", space, "norm: g | G | Y | Lp")
        ->check(CLI::IsMember({"g", "G", "Y", "Lp"}));
    norm_cmd->add_option("--weight", weight_spec, "weight spec, e.g. power:0.5");
    norm_cmd->add_option("--p", p, "exponent p >= 1");
    norm_cmd->add_option("--grid", grid, "DP grid step h");
    norm_cmd->add_option("--input", input_path, "step-function file (sequence file for g)")
        ->required();

    // verify subcommand
    auto* verify_cmd = app.add_subcommand("verify", "run one separation experiment");
    std::string experiment, b_csv = "1,4,16,100", r_csv, n_csv = "1,2,4,8,16", blocks_csv,
                            out_path;
    std::size_t cells = 4096, trials = 100;
    std::uint64_t seed = 20240801;
    verify_cmd->add_option("--experiment", experiment, "y | divergence | charbasis | lpblocks")
        ->check(CLI::IsMember({"y", "divergence", "charbasis", "lpblocks"}))
        ->required();
    verify_cmd->add_option("--b", b_csv, "comma list of b values (y)");
    verify_cmd->add_option("--r", r_csv, "comma list of r values (divergence)");
    verify_cmd->add_option("--cells", cells, "discretization cells (divergence)");
    verify_cmd->add_option("--N", n_csv, "comma list of N values (charbasis)");
    verify_cmd->add_option("--blocks", blocks_csv, "block boundaries k_i (lpblocks)");
    verify_cmd->add_option("--trials", trials, "random coefficient trials (lpblocks)");
    verify_cmd->add_option("--weight", weight_spec, "weight spec");
    verify_cmd->add_option("--p", p, "exponent p >= 1");
    verify_cmd->add_option("--grid", grid, "DP grid step h");
    verify_cmd->add_option("--seed", seed, "RNG seed (NORMLAB_SEED overrides)");
    verify_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

    // selftest subcommand
    auto* selftest_cmd = app.add_subcommand("selftest", "oracle-equivalence and invariant sweep");
    selftest_cmd->add_option("--seed", seed, "RNG seed (NORMLAB_SEED overrides)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* env_seed = std::getenv("NORMLAB_SEED")) seed = std::strtoull(env_seed, nullptr, 10);

    try {
        if (*norm_cmd) {
            double value = 0.0;
            if (space == "g") {
                auto f = normlab::load_sequence(input_path);
                auto w = normlab::parse_sequence_weight_spec(weight_spec, f.size(), p);
                value = normlab::gnorm(f, w);
            } else {
                normlab::StepFunction f = normlab::load_step_function(input_path);
                if (space == "Y") {
                    value = normlab::schreier_y_norm(f);
                } else if (space == "Lp") {
                    value = normlab::lp_norm(f, p);
                } else {
                    normlab::GNormParams params{p, normlab::parse_weight_spec(weight_spec), grid,
                                                true};
                    value = normlab::garling_function_norm(f, params);
                }
            }
            std::printf("%.12g\n", value);
            return 0;
        }

        if (*verify_cmd) {
            normlab::Table table;
            if (experiment == "y") {
                table = normlab::run_y_counterexample(parse_double_list(b_csv));
            } else if (experiment == "divergence") {
                std::vector<double> r_list = r_csv.empty()
                                                 ? std::vector<double>{1, 10, 100, 1000,
                                                                       std::exp(8.0) - 1.0}
                                                 : parse_double_list(r_csv);
                table = normlab::run_garling_divergence(r_list, cells);
            } else if (experiment == "charbasis") {
                table = normlab::run_char_basis_check(parse_size_list(n_csv),
                                                      normlab::parse_weight_spec(weight_spec), p,
                                                      grid);
            } else {
                auto boundaries = blocks_csv.empty() ? normlab::default_block_boundaries(6)
                                                     : parse_size_list(blocks_csv);
                table = normlab::run_lp_block_check(
                    boundaries, trials, normlab::parse_weight_spec(weight_spec), p, seed);
            }
            emit(table, out_path);
            return table.pass ? 0 : 1;
        }

        if (*selftest_cmd) {
            normlab::Table table = normlab::run_selftest(seed);
            table.write_csv(std::cout);
            std::cout << (table.pass ? "selftest: PASS\n" : "selftest: FAIL\n");
            return table.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
