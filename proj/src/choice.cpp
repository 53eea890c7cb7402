#include "assortflow/choice.hpp"

#include <algorithm>
#include <cmath>

namespace assortflow {

double choice_prob(const Catalog& catalog, int i, const Assortment& S) {
    double denom = 1.0;
    bool member = (i == -1);
    for (int j : S) {
        require(j >= 0 && j < catalog.n(), "assortment index out of range");
        denom += catalog.weights[j];
        member = member || (j == i);
    }
    require(member, "product not offered in assortment");
    return (i == -1) ? 1.0 / denom : catalog.weights[i] / denom;
}

double assortment_revenue(const Catalog& catalog, const Assortment& S) {
    double denom = 1.0, num = 0.0;
    for (int j : S) {
        require(j >= 0 && j < catalog.n(), "assortment index out of range");
        denom += catalog.weights[j];
        num += catalog.prices[j] * catalog.weights[j];
    }
    return num / denom;
}

Assortment optimal_static_assortment(const Catalog& catalog, const Assortment& available,
                                     int max_size) {
    Assortment sorted = available;
    std::sort(sorted.begin(), sorted.end());  // ascending index = descending price
    std::size_t cap = sorted.size();
    if (max_size >= 0) cap = std::min<std::size_t>(cap, max_size);

    double denom = 1.0, num = 0.0;
    double best = 0.0;
    std::size_t best_len = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
        int j = sorted[len - 1];
        denom += catalog.weights[j];
        num += catalog.prices[j] * catalog.weights[j];
        double rev = num / denom;
        if (rev > best + 1e-12) {
            best = rev;
            best_len = len;
        }
    }
    return Assortment(sorted.begin(), sorted.begin() + best_len);
}

}  // namespace assortflow
