#pragma once

// Bitset forms of S(N) and R(N) for networks with at most 7 taxa. Used by the
// exhaustive scans, where building std::set systems per network is too slow.

#include <bitset>
#include <cstdint>

#include "level1kit/network.hpp"
#include "level1kit/systems.hpp"

namespace level1::detail {

constexpr std::size_t kFastMaxTaxa = 7;
using Bits = std::bitset<128>;

/// Bit m is set iff the taxon mask m is a softwired cluster.
Bits softwired_bits(const Network& network);

/// ab|c is in R(N) iff some softwired cluster holds a and b but not c.
Bits triplet_bits(const Bits& clusters, std::size_t n);

/// Position of ab|c; independent of n (colex rank of the 3-set, times 3,
/// plus the rank of the outlier inside the 3-set).
std::size_t triplet_bit(std::uint32_t a, std::uint32_t b, std::uint32_t outlier);
Triplet triplet_at(std::size_t bit);

Bits to_bits(const TripletSystem& system);
Bits to_bits(const ClusterSystem& system);
TripletSystem triplets_from_bits(const Bits& bits, const std::vector<std::string>& taxa);
ClusterSystem clusters_from_bits(const Bits& bits, const std::vector<std::string>& taxa);

}  // namespace level1::detail
