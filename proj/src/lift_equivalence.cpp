#include "qwalk/oracle.hpp"
#include "qwalk/walk.hpp"

#include <stdexcept>

namespace qwalk {

real lift_equivalence_residual(std::size_t sites, std::uint64_t steps, const LiftedState& p0,
                               const BoundarySpec& b) {
    if (sites > oracle::kMaxDenseSites)
        throw std::domain_error("lift_equivalence_residual: sites > 64 (dense verification scale)");
    if (steps > 20)
        throw std::domain_error("lift_equivalence_residual: steps > 20 (dense verification scale)");
    if (p0.sites != sites)
        throw std::invalid_argument("lift_equivalence_residual: state and lattice sizes differ");

    const oracle::DenseOperator lifted = oracle::dense_assemble(sites, b, oracle::SystemKind::Lifted);
    const oracle::DenseOperator wave = oracle::dense_assemble(sites, b, oracle::SystemKind::Unitary);

    const auto lhs = oracle::dense_evolve(wave, interference_collapse(p0.v), steps);
    auto rhs = interference_collapse(oracle::dense_evolve(lifted, p0.v, steps));
    const real s = sqrt2_pow(steps);
    for (auto& z : rhs) z *= s;
    return max_abs_diff(lhs.data(), rhs.data(), lhs.size());
}

}  // namespace qwalk
