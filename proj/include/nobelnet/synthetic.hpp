#pragma once

#include <cstdint>

#include "nobelnet/core.hpp"

namespace nobelnet {

/// Parameters for seeded random genealogy DAGs. Node ids are zero-padded
/// ("n00".."n39"), so ascending id order equals generation order and every
/// edge points from a lower to a higher index — acyclic by construction.
struct SyntheticSpec {
    std::uint64_t seed = 1;
    std::size_t nodes = 40;
    int max_advisors = 3;          // per node, drawn 0..max (capped by predecessors)
    double laureate_fraction = 0.3;
    int first_prize_year = 1969;
    int last_prize_year = 2021;
    int first_degree_year = 1900;
    int degree_year_span = 80;     // degree years uniform in [first, first+span)
    std::size_t institutions = 5;  // names "u0".."u<k-1>"; 0 = leave unset
};

/// Deterministic random DAG for the given spec; identical seeds give
/// identical graphs on every platform.
GenealogyGraph synthetic_dag(const SyntheticSpec& spec);

}  // namespace nobelnet
