#pragma once

#include <random>
#include <vector>

#include "assortflow/catalog.hpp"
#include "assortflow/choice.hpp"

namespace assortflow {

// Static per-type assortment distribution read off the multi-type CDLP
// optimum; probabilities per type sum to 1 (an empty-assortment atom absorbs
// slack).
struct SamplingPolicy {
    struct Atom {
        Assortment assortment;
        double prob;
    };
    std::vector<std::vector<Atom>> per_type;

    const std::vector<Atom>& atoms(int type) const { return per_type[type]; }
};

SamplingPolicy build_sampling_policy(const CustomerTypeSet& types, const InventoryVector& c,
                                     double T);

// Draws S_t from the arriving type's distribution and offers S_t intersected
// with the currently available set.
Assortment sampling_offer(const SamplingPolicy& policy, int type, const Assortment& available,
                          std::mt19937_64& rng);

// Static optimal assortment over what is available, for the arriving type.
Assortment greedy_offer(const Catalog& type_catalog, const Assortment& available);

}  // namespace assortflow
