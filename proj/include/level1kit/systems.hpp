#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "level1kit/network.hpp"

namespace level1 {

/// Rooted triplet ab|c: `a` and `b` form the cherry, `c` is the outlier.
/// Fields are taxon indices; a < b always.
struct Triplet {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;

  static Triplet make(std::uint32_t x, std::uint32_t y, std::uint32_t outlier) {
    return x < y ? Triplet{x, y, outlier} : Triplet{y, x, outlier};
  }
  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

/// Set of triplets over a named taxon list (sorted, same indexing as Network).
struct TripletSystem {
  std::vector<std::string> taxa;
  std::set<Triplet> triplets;

  std::size_t size() const { return triplets.size(); }
  bool contains(const Triplet& t) const { return triplets.count(t) > 0; }
  bool is_subset_of(const TripletSystem& other) const;
  friend bool operator==(const TripletSystem&, const TripletSystem&) = default;
};

/// Set of nonempty clusters over a named taxon list.
struct ClusterSystem {
  std::vector<std::string> taxa;
  std::set<TaxonSet> clusters;

  std::size_t size() const { return clusters.size(); }
  bool contains(const TaxonSet& c) const { return clusters.count(c) > 0; }
  bool is_subset_of(const ClusterSystem& other) const;
  /// Clusters other than the full taxon set.
  ClusterSystem without_full() const;
  friend bool operator==(const ClusterSystem&, const ClusterSystem&) = default;
};

/// T(N): one representative per equivalence class, sorted by canonical form.
std::vector<Network> displayed_trees(const Network& network);

/// C(N) = { C_N(v) : v in V(N) }.
ClusterSystem hardwired_clusters(const Network& network);

/// S(N): union of C(T) over displayed trees T. Use `.without_full()` for S(N)^-.
ClusterSystem softwired_clusters(const Network& network);

/// R(N). Each candidate triplet is decided on the restriction of the network
/// to its three taxa. Throws TooFewLeaves when |X| < 3.
TripletSystem triplets(const Network& network);

/// Two-vertex, disjoint-path consistency of ab|c with the network.
bool consistent(const Network& network, const Triplet& t);
/// Name-based overload; throws UnknownTaxon.
bool consistent(const Network& network, const std::string& a, const std::string& b,
                const std::string& outlier);

/// S ⊆ S(N). Clusters of S may use any subset of the network's taxa.
bool displays_clusters(const Network& network, const ClusterSystem& system);

/// Translates a system onto another (super)set of taxa by name. Throws
/// UnknownTaxon when a taxon is missing from the target list.
TripletSystem remap(const TripletSystem& system, const std::vector<std::string>& taxa);
ClusterSystem remap(const ClusterSystem& system, const std::vector<std::string>& taxa);

}  // namespace level1
