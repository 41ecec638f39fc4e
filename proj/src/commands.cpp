#include "qwalk/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "qwalk/figures.hpp"
#include "qwalk/oracle.hpp"

namespace qwalk {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int cmd_verify(std::uint64_t seed, bool json, std::ostream& out) {
    const auto report = oracle::equivalence_suite(seed);
    bool all = true;
    if (json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& c : report) {
            rows.push_back({{"name", c.name},
                            {"residual", static_cast<double>(c.residual)},
                            {"tolerance", static_cast<double>(c.tolerance)},
                            {"pass", c.pass}});
            all = all && c.pass;
        }
        out << rows.dump(2) << '\n';
    } else {
        for (const auto& c : report) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-6s residual %.3e  tolerance %.0e  %s",
                          c.name.c_str(), static_cast<double>(c.residual),
                          static_cast<double>(c.tolerance), c.pass ? "pass" : "FAIL");
            out << buf << '\n';
            all = all && c.pass;
        }
        out << (all ? "all identities hold" : "IDENTITY FAILURES") << '\n';
    }
    return all ? 0 : 1;
}

Dataset build_run_dataset(const RunRequest& req) {
    std::size_t m;
    bool centered;
    if (req.sites.has_value()) {
        m = *req.sites;
        centered = false;
        if (m < 2) throw std::invalid_argument("sites: need at least 2");
    } else {
        if (req.boundary.kind != BoundaryKind::None)
            throw std::invalid_argument("sites: 'auto' is only valid with boundary 'none'");
        m = 2 * static_cast<std::size_t>(req.steps) + 3;
        centered = true;
    }
    const SiteLabeling labeling{m, centered};
    const InitialSpec spec = InitialSpec::parse(req.initial);
    LiftedState s = make_lifted_initial(spec, labeling, req.scaling);
    evolve(s, make_markov_step(Lattice{m}, req.boundary), req.steps);
    return make_dataset(s, labeling);
}

int cmd_run(const RunRequest& req, std::ostream& diag) {
    try {
        const Dataset d = build_run_dataset(req);
        std::ofstream out(req.output);
        if (!out) throw std::invalid_argument("output: cannot open '" + req.output + "'");
        write_dataset(d, req.format, out);
        return 0;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_compare(std::size_t sites, std::uint64_t steps, const BoundarySpec& boundary,
                const std::string& initial, std::ostream& out) {
    try {
        const SiteLabeling labeling{sites, false};
        const InitialSpec spec = InitialSpec::parse(initial);
        const LiftedState p0 = make_lifted_initial(spec, labeling, Scaling::Unscaled);
        const real residual = lift_equivalence_residual(sites, steps, p0, boundary);
        char buf[96];
        std::snprintf(buf, sizeof buf, "max deviation %.3e (unitary vs lifted, %zu sites, %llu steps)",
                      static_cast<double>(residual), sites,
                      static_cast<unsigned long long>(steps));
        out << buf << '\n';
        return residual < 1e-9L ? 0 : 1;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_figure(int id, const std::string& output_dir, std::ostream& out) {
    try {
        const auto outputs = build_figure(id);
        std::filesystem::create_directories(output_dir);
        for (const auto& f : outputs) {
            const auto path = std::filesystem::path(output_dir) / f.filename;
            std::ofstream os(path);
            if (!os) throw std::invalid_argument("output-dir: cannot open '" + path.string() + "'");
            write_dataset(f.data, DataFormat::Csv, os);
            out << path.string() << "  (" << f.data.rows() << " sites)\n";
        }
        out << "figure " << id << ": " << figure_note(id) << '\n';
        return 0;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return 2;
    }
}

namespace {

LiftedState bench_start(std::size_t m) {
    LiftedState s = make_lifted_state(m, Scaling::SqrtTwoPerStep);
    const CoinPopulation p = lift({1, 0}, LiftMode::SignSplit);
    for (int c = 0; c < 4; ++c) s.v[4 * (m / 2) + static_cast<std::size_t>(c)] = p.p[c];
    return s;
}

void bench_row(std::ostream& out, const char* engine, std::size_t m, std::uint64_t n,
               double secs) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s,%zu,%llu,%.6f,%.1f", engine, m,
                  static_cast<unsigned long long>(n), secs,
                  secs > 0 ? static_cast<double>(n) / secs : 0.0);
    out << buf << '\n';
}

// structural vs dense on the same start before any timing is reported
real bench_crosscheck(std::ostream& out) {
    const std::size_t m = 64;
    const std::uint64_t n = 20;
    LiftedState a = bench_start(m);
    LiftedState b = a;
    evolve(a, make_markov_step(Lattice{m}, BoundarySpec{}), n, Engine::Parallel);
    const auto dense = oracle::dense_assemble(m, BoundarySpec{}, oracle::SystemKind::Lifted);
    auto v = oracle::dense_evolve(dense, b.v, n);
    const real s = sqrt2_pow(n);
    for (auto& z : v) z *= s;
    const real dev = max_abs_diff(a.v.data(), v.data(), v.size());
    char buf[96];
    std::snprintf(buf, sizeof buf, "# crosscheck m=64 n=20 structural vs dense: max dev %.3e",
                  static_cast<double>(dev));
    out << buf << '\n';
    return dev;
}

}  // namespace

int cmd_bench(const std::vector<std::size_t>& sites, const std::vector<std::uint64_t>& steps,
              std::ostream& out) {
    const real dev = bench_crosscheck(out);
    out << "engine,m,n,seconds,steps_per_sec\n";
    for (std::size_t m : sites) {
        for (std::uint64_t n : steps) {
            const MarkovStep op = make_markov_step(Lattice{m}, BoundarySpec{});
            {
                LiftedState s = bench_start(m);
                const auto t0 = std::chrono::steady_clock::now();
                evolve(s, op, n, Engine::Parallel);
                bench_row(out, "structural-omp", m, n, seconds_since(t0));
            }
            {
                LiftedState s = bench_start(m);
                const auto t0 = std::chrono::steady_clock::now();
                evolve(s, op, n, Engine::Serial);
                bench_row(out, "structural-serial", m, n, seconds_since(t0));
            }
            if (m <= oracle::kMaxDenseSites && n <= oracle::kMaxDenseSteps) {
                const auto dense = oracle::dense_assemble(m, BoundarySpec{}, oracle::SystemKind::Lifted);
                LiftedState s = bench_start(m);
                const auto t0 = std::chrono::steady_clock::now();
                auto v = oracle::dense_evolve(dense, s.v, n);
                bench_row(out, "dense", m, n, seconds_since(t0));
            }
        }
    }
    return dev < 1e-10L ? 0 : 1;
}

}  // namespace qwalk
