#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "level1kit/error.hpp"
#include "level1kit/taxon_set.hpp"

namespace level1 {

using VertexId = std::uint32_t;

struct Arc {
  VertexId tail;
  VertexId head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unvalidated input: arbitrary integer vertex ids, arcs, and leaf labels.
struct RawGraph {
  std::vector<std::pair<long long, long long>> arcs;
  std::map<long long, std::string> labels;

  void add_arc(long long tail, long long head) { arcs.emplace_back(tail, head); }
  void set_label(long long v, std::string name) { labels[v] = std::move(name); }
};

/// A non-trivial biconnected component of the underlying graph.
///
/// `cycle` starts at the gall root, runs down `first_side` to the hybrid and
/// back up `second_side`. Both side lists are read from the root toward the
/// hybrid and exclude root and hybrid.
struct Gall {
  VertexId root = 0;
  VertexId hybrid = 0;
  std::vector<VertexId> first_side;
  std::vector<VertexId> second_side;
  std::vector<VertexId> cycle;
  std::vector<Arc> outgoing;
};

struct CutArcs {
  std::vector<Arc> trivial;
  std::vector<Arc> non_trivial;
};

struct Classification {
  bool is_tree = false;
  bool is_proper = false;
  bool is_simple = false;
  bool is_saturated = false;
  bool is_four_outwards = false;
  std::size_t n = 0;
  std::size_t num_vertices = 0;
  std::size_t num_arcs = 0;
  std::size_t g = 0;
  std::size_t c = 0;
};

/// Rooted binary level-1 phylogenetic network. Immutable once built; the only
/// way to obtain one is `Network::validate`.
///
/// Vertex ids are dense (0..num_vertices-1) and carry no meaning beyond this
/// object. Taxa are kept sorted by name; a taxon index is a position in
/// `taxa()` and is what every TaxonSet over this network refers to.
class Network {
 public:
  static Network validate(const RawGraph& raw);

  std::size_t num_vertices() const noexcept { return children_.size(); }
  std::size_t num_arcs() const noexcept { return num_arcs_; }
  std::size_t num_taxa() const noexcept { return taxa_.size(); }
  VertexId root() const noexcept { return root_; }

  std::span<const VertexId> children(VertexId v) const { return children_[v]; }
  std::span<const VertexId> parents(VertexId v) const { return parents_[v]; }
  bool is_leaf(VertexId v) const { return children_[v].empty(); }
  bool is_hybrid(VertexId v) const { return parents_[v].size() == 2; }

  /// Taxon index of a leaf, -1 for interior vertices.
  int taxon_of(VertexId v) const { return taxon_of_[v]; }
  const std::string& label(VertexId v) const;
  const std::vector<std::string>& taxa() const noexcept { return taxa_; }
  VertexId leaf_of(std::size_t taxon) const { return leaf_of_[taxon]; }
  VertexId leaf(std::string_view name) const;
  std::size_t taxon_index(std::string_view name) const;

  std::vector<Arc> arcs() const;
  /// Parents before children; starts at the root.
  const std::vector<VertexId>& topological_order() const noexcept { return topo_; }

  const std::vector<Gall>& galls() const noexcept { return galls_; }
  /// Index into galls() of the gall containing v, or -1.
  int gall_of(VertexId v) const { return gall_of_[v]; }
  bool is_cut_arc(VertexId tail, VertexId head) const {
    return gall_of_[tail] < 0 || gall_of_[tail] != gall_of_[head];
  }

  /// C_N(v) for every vertex, indexed by vertex id.
  std::vector<TaxonSet> vertex_clusters() const;
  TaxonSet all_taxa() const { return TaxonSet::full(taxa_.size()); }

 private:
  Network() = default;

  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
  std::vector<int> taxon_of_;
  std::vector<std::string> taxa_;
  std::vector<VertexId> leaf_of_;
  std::vector<VertexId> topo_;
  std::vector<Gall> galls_;
  std::vector<int> gall_of_;
  VertexId root_ = 0;
  std::size_t num_arcs_ = 0;
};

/// Same as network.galls(); one entry per non-trivial biconnected component.
const std::vector<Gall>& galls(const Network& network);
CutArcs cut_arcs(const Network& network);
Classification classify(const Network& network);

struct BoundsReport {
  bool lower_ok = false;
  bool upper_ok = false;
  bool vertex_identity_ok = false;  // |V| = 2n - 1 + 2g
  bool arc_identity_ok = false;     // |A| = 2n + 3g - 2
  bool all() const { return lower_ok && upper_ok && vertex_identity_ok && arc_identity_ok; }
};

/// Vertex/arc count bounds for a proper network; throws NotProper for trees.
BoundsReport vertex_arc_bounds(const Network& network);

/// Byte string that is equal for two networks exactly when they are
/// equivalent (isomorphic by a map fixing every leaf label).
std::string canonical_form(const Network& network);

/// Equivalence fixing leaf labels. Throws LabelSetMismatch when the taxon
/// sets differ.
bool equivalent(const Network& a, const Network& b);

}  // namespace level1
