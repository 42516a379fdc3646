#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "level1kit/network.hpp"
#include "level1kit/systems.hpp"

namespace level1 {

/// Disjoint cover of a taxon list. Blocks are kept sorted.
struct Partition {
  std::vector<std::string> taxa;
  std::vector<TaxonSet> blocks;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// No triplet xy|z in the system has x, z inside `set` and y outside.
bool is_sn_set(const TripletSystem& system, const TaxonSet& set);

/// Smallest SN-set containing `seed`.
TaxonSet sn_closure(const TripletSystem& system, const TaxonSet& seed);

/// Maximal non-trivial SN-sets. Throws NotAPartition when they do not
/// partition the taxa, which never happens for a system induced by a
/// level-1 network.
Partition maximal_sn_sets(const TripletSystem& system);

/// Cut(N): clusters below the highest cut arcs.
Partition cut_partition(const Network& network);

/// Highest cut arcs: no cut arc (u', v') has a directed path from v' to u.
std::vector<Arc> highest_cut_arcs(const Network& network);

/// N restricted to `keep`, using the five cleanup operations in a fixed
/// order. Throws TooFewTaxa when fewer than two taxa are kept and
/// UnknownTaxon for names not in the network.
Network restrict(const Network& network, const std::vector<std::string>& keep);
Network restrict(const Network& network, const TaxonSet& keep);

/// Same as restrict, but each cleanup step is drawn uniformly at random
/// from the applicable ones. Used to check order independence.
Network restrict_random_order(const Network& network, const TaxonSet& keep, std::mt19937_64& rng);

struct CollapseResult {
  Network collapsed;
  /// Cut(N) block -> chosen taxon name.
  std::map<TaxonSet, std::string> representative_of;
  /// Representative -> pendant subnetwork; nullopt for singleton blocks.
  std::map<std::string, std::optional<Network>> pendant;
};

using RepresentativeChooser = std::function<std::string(const Network&, const TaxonSet&)>;

/// Replaces each pendant subnetwork below a highest cut arc by one taxon of
/// its block. The default chooser picks the lexicographically smallest name.
/// Throws BadRepresentative when a chooser returns a taxon outside the block.
CollapseResult collapse(const Network& network, const RepresentativeChooser& choose = {});

/// { x_w | x_u x_v : some t in R(N) has its taxa in the blocks of w, u, v },
/// expressed over the representatives of `result`.
TripletSystem collapse_projection(const Network& network, const TripletSystem& induced,
                                  const CollapseResult& result);

}  // namespace level1
