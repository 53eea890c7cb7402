#include "assortflow/policies.hpp"

#include <algorithm>
#include <cmath>

#include "assortflow/cdlp.hpp"
#include "assortflow/fluid.hpp"

namespace assortflow {

SamplingPolicy build_sampling_policy(const CustomerTypeSet& types, const InventoryVector& c,
                                     double T) {
    MultiTypeLpResult lp = multi_type_sblp_reference(types, c, T);
    SamplingPolicy policy;
    policy.per_type.resize(types.m());
    for (int k = 0; k < types.m(); ++k) {
        double horizon = types.lambda[k] * T;
        auto& atoms = policy.per_type[k];
        if (horizon <= 0.0) {
            atoms.push_back({Assortment{}, 1.0});
            continue;
        }
        // The fluid process started from the sales row consumes exactly the
        // sales, so phase durations translate into offer probabilities.
        FluidTrace trace = sequence(types.types[k], lp.sales[k], horizon);
        double covered = 0.0;
        for (std::size_t l = 0; l < trace.phases.size(); ++l) {
            Assortment s = trace.phase_assortment(l);
            double p = trace.phases[l].duration / horizon;
            if (p <= 0.0) continue;
            if (s.empty()) continue;  // folded into the empty atom below
            atoms.push_back({std::move(s), p});
            covered += p;
        }
        if (covered < 1.0 - 1e-12) atoms.push_back({Assortment{}, 1.0 - covered});
    }
    return policy;
}

Assortment sampling_offer(const SamplingPolicy& policy, int type, const Assortment& available,
                          std::mt19937_64& rng) {
    const auto& atoms = policy.atoms(type);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u = unif(rng);
    const Assortment* drawn = &atoms.back().assortment;
    for (const auto& atom : atoms) {
        if (u < atom.prob) {
            drawn = &atom.assortment;
            break;
        }
        u -= atom.prob;
    }
    Assortment offered;
    std::set_intersection(drawn->begin(), drawn->end(), available.begin(), available.end(),
                          std::back_inserter(offered));
    return offered;
}

Assortment greedy_offer(const Catalog& type_catalog, const Assortment& available) {
    return optimal_static_assortment(type_catalog, available);
}

}  // namespace assortflow
