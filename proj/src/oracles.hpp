#pragma once

// Brute-force references used by the verification suites. They share no code
// with the routines they check.

#include <vector>

#include "level1kit/network.hpp"
#include "level1kit/systems.hpp"

namespace level1::detail {

/// Maximal SN-sets other than X, by testing every subset of X.
std::vector<TaxonSet> brute_force_maximal_sn_sets(const TripletSystem& system);

/// Isomorphism fixing leaf labels, by backtracking over child orders.
bool isomorphic(const Network& a, const Network& b);

/// Same network with shuffled vertex ids and arc order.
Network relabel_vertices(const Network& network, std::uint64_t seed);

}  // namespace level1::detail
