#pragma once

// Mutable multigraph used while deleting taxa or hybrid arcs and applying the
// restriction cleanup operations. Internal to the library.

#include <cstdint>
#include <random>
#include <vector>

#include "level1kit/network.hpp"

namespace level1::detail {

enum class CleanupOp : std::uint8_t {
  SuppressUnary,    // (i)   in 1 / out 1
  DeleteSink,       // (ii)  out 0 and not a kept taxon
  CollapseMultiArc, // (iii) two parallel arcs
  DissolveGall,     // (iv)  gall with exactly two outgoing cut arcs
  DeleteSource,     // (v)   in 0 / out 1
};

struct CleanupStep {
  CleanupOp op;
  VertexId vertex;                  // subject vertex (gall root r for DissolveGall)
  VertexId other = 0;               // multi-arc head
  std::vector<VertexId> component{};  // DissolveGall only
};

class WorkGraph {
 public:
  explicit WorkGraph(const Network& network);

  void remove_arc(VertexId tail, VertexId head);
  void add_arc(VertexId tail, VertexId head);
  /// Drops the taxon from the kept set and deletes the leaf with its arcs.
  void delete_taxon(std::size_t taxon);

  std::vector<CleanupStep> applicable_steps() const;
  void apply(const CleanupStep& step);
  /// Applies cleanup steps in a fixed priority order until none applies.
  void clean();
  /// Applies a uniformly chosen applicable step until none applies.
  void clean_random(std::mt19937_64& rng);

  /// Validates the current graph as a network on the kept taxa.
  Network to_network() const;

  const std::vector<VertexId>& children(VertexId v) const { return out_[v]; }
  const std::vector<VertexId>& parents(VertexId v) const { return in_[v]; }
  bool alive(VertexId v) const { return alive_[v] != 0; }
  std::size_t size() const { return out_.size(); }

 private:
  bool apply_simple_step();
  bool find_gall_step(CleanupStep* out) const;
  void delete_vertex(VertexId v);

  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<int> taxon_;
  std::vector<char> alive_;
  const std::vector<std::string>* names_;
};

}  // namespace level1::detail
