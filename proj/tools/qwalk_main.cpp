#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/commands.hpp"

namespace {

// exit codes: 0 success, 1 verification failure, 2 usage/parse error
constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coined walk on a line via its 4-state population lift"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool json = false;
    auto* verify = app.add_subcommand("verify", "run the named identity suite");
    verify->add_option("--seed", seed, "seed for the suite's random starts");
    verify->add_flag("--json", json, "machine-readable report");

    qwalk::RunRequest req;
    std::string sites_arg = "auto";
    std::string boundary_arg = "none";
    std::string scaling_arg = "sqrt2-step";
    std::string format_arg = "csv";
    auto* run = app.add_subcommand("run", "evolve the lifted walk and write a per-site dataset");
    run->add_option("--steps", req.steps, "number of steps")->required();
    run->add_option("--sites", sites_arg, "lattice size, or 'auto' for 2n+3 centered");
    run->add_option("--boundary", boundary_arg, "none|cyclic|reflect1|reflect2|trap");
    run->add_option("--initial", req.initial,
                    "point:SITE:(RE,IM),(RE,IM) or uniform:FIRST-LAST:(RE,IM),(RE,IM)")
        ->required();
    run->add_option("--scaling", scaling_arg, "sqrt2-step|unscaled");
    run->add_option("--output", req.output, "dataset path")->required();
    run->add_option("--format", format_arg, "csv|json");

    std::size_t cmp_sites = 0;
    std::uint64_t cmp_steps = 0;
    std::string cmp_boundary = "none";
    std::string cmp_initial;
    auto* compare = app.add_subcommand("compare", "lifted-then-projected vs direct unitary, dense");
    compare->add_option("--sites", cmp_sites)->required();
    compare->add_option("--steps", cmp_steps)->required();
    compare->add_option("--boundary", cmp_boundary, "none|cyclic|reflect1|reflect2|trap");
    compare->add_option("--initial", cmp_initial)->required();

    int figure_id = 0;
    std::string output_dir = ".";
    auto* figure = app.add_subcommand("figure", "write a bundled dataset preset");
    figure->add_option("id", figure_id, "3|4|5|8|9")->required();
    figure->add_option("--output-dir", output_dir);

    std::vector<std::size_t> bench_sites;
    std::vector<std::uint64_t> bench_steps;
    auto* bench = app.add_subcommand("bench", "time structural (omp/serial) vs dense evolution");
    bench->add_option("--sites", bench_sites, "comma-separated lattice sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--steps", bench_steps, "comma-separated step counts")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (verify->parsed()) return qwalk::cmd_verify(seed, json, std::cout);
        if (run->parsed()) {
            if (sites_arg != "auto") {
                std::size_t m = 0;
                try {
                    std::size_t pos = 0;
                    m = std::stoull(sites_arg, &pos);
                    if (pos != sites_arg.size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw std::invalid_argument("sites: must be a positive integer or 'auto'");
                }
                req.sites = m;
            }
            req.boundary.kind = qwalk::boundary_kind_from_string(boundary_arg);
            if (scaling_arg == "sqrt2-step")
                req.scaling = qwalk::Scaling::SqrtTwoPerStep;
            else if (scaling_arg == "unscaled")
                req.scaling = qwalk::Scaling::Unscaled;
            else
                throw std::invalid_argument("scaling: must be 'sqrt2-step' or 'unscaled'");
            req.format = qwalk::data_format_from_string(format_arg);
            return qwalk::cmd_run(req, std::cerr);
        }
        if (compare->parsed()) {
            qwalk::BoundarySpec b;
            b.kind = qwalk::boundary_kind_from_string(cmp_boundary);
            return qwalk::cmd_compare(cmp_sites, cmp_steps, b, cmp_initial, std::cout);
        }
        if (figure->parsed()) return qwalk::cmd_figure(figure_id, output_dir, std::cout);
        if (bench->parsed()) return qwalk::cmd_bench(bench_sites, bench_steps, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
