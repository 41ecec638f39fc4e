#include "qwalk/figures.hpp"

#include <stdexcept>

#include "qwalk/initial_spec.hpp"

namespace qwalk {

namespace {

// Point start at the origin of an auto lattice, trimmed to the 2n+1
// reachable sites.
Dataset origin_run(std::uint64_t steps, cplx a0, cplx a1) {
    const std::size_t m = 2 * static_cast<std::size_t>(steps) + 3;
    const SiteLabeling labeling{m, true};
    InitialSpec spec;
    spec.kind = InitialSpec::Kind::Point;
    spec.first = spec.last = 0;
    spec.a0 = a0;
    spec.a1 = a1;

    LiftedState s = make_lifted_initial(spec, labeling, Scaling::SqrtTwoPerStep);
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{}), steps);
    Dataset d = make_dataset(s, labeling);

    // drop the two edge guard sites
    const auto trim = [](auto& vec) {
        vec.erase(vec.begin());
        vec.pop_back();
    };
    trim(d.site);
    trim(d.dist.p0); trim(d.dist.p1); trim(d.dist.m1); trim(d.dist.m0);
    trim(d.dist.prob0); trim(d.dist.prob1); trim(d.dist.prob_total);
    trim(d.dist.classical); trim(d.dist.phase0); trim(d.dist.phase1);
    return d;
}

// 25-site reflecting line, every interior site at (|0> - |1>)/sqrt(46).
Dataset reflecting_run(std::uint64_t steps) {
    const std::size_t m = 25;
    const SiteLabeling labeling{m, false};
    InitialSpec spec;
    spec.kind = InitialSpec::Kind::Uniform;
    spec.first = 2;
    spec.last = 24;
    const real amp = 1 / std::sqrt(static_cast<real>(46));
    spec.a0 = amp;
    spec.a1 = -amp;

    LiftedState s = make_lifted_initial(spec, labeling, Scaling::SqrtTwoPerStep);
    evolve(s, make_markov_step(Lattice{m}, BoundarySpec{BoundaryKind::Reflect1, false}), steps);
    return make_dataset(s, labeling);
}

}  // namespace

std::vector<int> figure_ids() { return {3, 4, 5, 8, 9}; }

const char* figure_note(int id) {
    switch (id) {
        case 3: return "four coin-state distributions and quantum probabilities, 100 steps from |0> at the origin";
        case 4: return "classical vs quantum distribution, 100 steps from |0> at the origin";
        case 5: return "quantum probabilities and phase differences, 50 steps from (|0>+i|1>)/sqrt2";
        case 8: return "25-site reflecting line, uniform (|0>-|1>)/sqrt46 interior start, 35 and 65 steps";
        case 9: return "random-walk reading of the 25-site reflecting line after 65 steps (classical column normalized to unit initial mass)";
        default: return "";
    }
}

std::vector<FigureOutput> build_figure(int id) {
    const real inv_sqrt2 = 1 / std::sqrt(static_cast<real>(2));
    switch (id) {
        case 3:
            return {{"figure3.csv", origin_run(100, 1, 0)}};
        case 4:
            return {{"figure4.csv", origin_run(100, 1, 0)}};
        case 5:
            return {{"figure5.csv", origin_run(50, inv_sqrt2, cplx{0, 1} * inv_sqrt2)}};
        case 8:
            return {{"figure8_n35.csv", reflecting_run(35)},
                    {"figure8_n65.csv", reflecting_run(65)}};
        case 9: {
            Dataset d = reflecting_run(65);
            // normalize the classical column so the random walker starts with
            // total probability 1 (initial population mass is sqrt(46))
            real mass = 0;
            {
                Dataset at0 = reflecting_run(0);
                for (real x : at0.dist.classical) mass += x;
            }
            for (real& x : d.dist.classical) x /= mass;
            return {{"figure9.csv", d}};
        }
        default:
            throw std::invalid_argument("figure: unknown id " + std::to_string(id) +
                                        " (expected 3, 4, 5, 8 or 9)");
    }
}

}  // namespace qwalk
