#pragma once

#include <random>
#include <utility>
#include <vector>

#include "kaplansky/group_ring.hpp"

namespace kaplansky::testutil {

// Random sparse Laurent polynomial with exponents in [-2, 2]^3.
inline Laurent random_laurent(std::mt19937& rng, PrimeChar d, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::int32_t> exp(-2, 2);
    std::uniform_int_distribution<std::int64_t> coeff(0, d.value() - 1);
    std::vector<std::pair<ExpVec, std::int64_t>> entries;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        entries.emplace_back(ExpVec{exp(rng), exp(rng), exp(rng)}, coeff(rng));
    return Laurent::make(d, entries);
}

inline GroupRingElem random_element(std::mt19937& rng, PrimeChar d, int max_terms = 5) {
    return GroupRingElem(random_laurent(rng, d, max_terms), random_laurent(rng, d, max_terms),
                         random_laurent(rng, d, max_terms), random_laurent(rng, d, max_terms));
}

} // namespace kaplansky::testutil
