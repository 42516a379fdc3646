#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "level1kit/network.hpp"

namespace level1 {

enum class Filter { Proper, Simple, Saturated, FourOutwards, Tree };

/// Parses "proper", "simple", "saturated", "four_outwards" (or
/// "4-outwards"), "tree". Throws std::invalid_argument.
Filter parse_filter(const std::string& name);
bool passes(const Classification& c, const std::vector<Filter>& filters);

inline constexpr std::size_t kMaxEnumerateTaxa = 7;

struct EnumSpec {
  std::vector<std::string> taxa;
  std::vector<Filter> filters;
  std::optional<std::size_t> max_count;
};

/// Taxon names x1..xk.
std::vector<std::string> default_taxa(std::size_t k);

/// Calls `visit` once per network of L1(taxa) up to equivalence, in a fixed
/// order. Stops early when `visit` returns false or max_count is reached.
/// Throws TooManyTaxa above kMaxEnumerateTaxa, TooFewTaxa below 2.
void for_each_level1(const EnumSpec& spec, const std::function<bool(const Network&)>& visit);
std::vector<Network> enumerate_level1(const EnumSpec& spec);

/// Simple network with hybrid child `hybrid_leaf`. Both side lists are read
/// from the hybrid toward the gall root, so (x1, [x2..x_{i-1}], [x_n..x_i])
/// is the usual v_1..v_{n+1} labeling with the root at v_i.
Network construct_simple(const std::string& hybrid_leaf, const std::vector<std::string>& left,
                         const std::vector<std::string>& right);

/// Leaf order x_1..x_n of a simple network and the root position i
/// (root = v_i). `side` picks which gall side carries x_2..x_{i-1}: 0 for
/// Gall::first_side, 1 for Gall::second_side. Throws NotSimple.
struct SimpleLayout {
  std::vector<std::string> x;  // x[0] is x_1, the hybrid leaf
  std::size_t i = 0;
};
SimpleLayout simple_layout(const Network& simple, int side);

struct WitnessPair {
  Network first;
  Network second;
  std::size_t triplets_first = 0;
  std::size_t triplets_second = 0;
  std::size_t x_prime = 0;
  bool exhaustive = false;
};

/// Two networks on n taxa with equal numbers of galls and non-trivial cut
/// arcs whose triplet systems have sizes C(n,3)+1 and C(n,3)+1+(n-4).
/// n <= 7 scans L1(n); larger n builds the witness family directly.
/// Throws NotFound.
WitnessPair search_prop42_pair(std::size_t n);
/// The directly built witness pair, for any n >= 6.
WitnessPair construct_witness_pair(std::size_t n);

/// Seeded random network; each pendant block of >= 3 taxa becomes a gall
/// with probability `gall_probability`. Deterministic across platforms.
Network random_level1(const std::vector<std::string>& taxa, std::uint64_t seed, double gall_probability);

}  // namespace level1
