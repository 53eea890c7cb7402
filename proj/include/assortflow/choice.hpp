#pragma once

#include <vector>

#include "assortflow/catalog.hpp"

namespace assortflow {

// Product indices, 0-based internal order, stored sorted ascending.
using Assortment = std::vector<int>;

// MNL purchase probability of product i (or the outside option, i = -1)
// when assortment S is offered. Requires i in S or i = -1.
double choice_prob(const Catalog& catalog, int i, const Assortment& S);

// R(S) = sum_{i in S} r_i * phi(i, S); zero for the empty assortment.
double assortment_revenue(const Catalog& catalog, const Assortment& S);

// Best revenue-ordered prefix of `available` (prefixes by descending price),
// optionally capped at max_size products. Ties go to the shorter prefix.
Assortment optimal_static_assortment(const Catalog& catalog, const Assortment& available,
                                     int max_size = -1);

}  // namespace assortflow
