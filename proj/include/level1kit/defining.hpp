#pragma once

#include <bitset>
#include <memory>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "level1kit/network.hpp"
#include "level1kit/systems.hpp"

namespace level1 {

enum class SystemKind { Triplets, Clusters };
/// "triplets" or "clusters"; throws std::invalid_argument.
SystemKind parse_kind(const std::string& name);

inline constexpr std::size_t kMaxUniverseTaxa = 6;

/// Bit positions: triplets by rank of (3-set, outlier); clusters by taxon mask.
using SystemBits = std::bitset<128>;

SystemBits triplet_bits(const TripletSystem& system);
SystemBits cluster_bits(const ClusterSystem& system);

/// All of L1(X) for one taxon list, with R(N) and S(N) as bitsets. Built
/// once per taxon list and cached.
class Universe {
 public:
  struct Entry {
    SystemBits triplets;
    SystemBits clusters;
    Classification info;
  };

  /// Throws UniverseTooLarge above kMaxUniverseTaxa taxa.
  static const Universe& get(const std::vector<std::string>& taxa);

  const std::vector<std::string>& taxa() const { return taxa_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  /// Index of the network equivalent to `network`; throws NotFound.
  std::size_t index_of(const Network& network) const;
  /// Materializes networks by index (one enumeration pass).
  std::vector<Network> networks(const std::vector<std::size_t>& indices) const;

  /// Indices whose induced system contains `bits`.
  std::vector<std::size_t> containing(SystemKind kind, const SystemBits& bits) const;
  /// Indices whose induced system equals `bits`.
  std::vector<std::size_t> equal_to(SystemKind kind, const SystemBits& bits) const;

 private:
  explicit Universe(std::vector<std::string> taxa);

  std::vector<std::string> taxa_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct DefinitionReport {
  Network target;
  SystemKind kind;
  std::variant<TripletSystem, ClusterSystem> system;
  std::vector<Network> consistent_networks;
  bool defines = false;
};

/// Triplet system of size at most 2n - 1 that L1-defines a simple network
/// (n >= 4): R of the 4-leaf restriction, plus two triplets per further
/// leaf. `side` selects the layout orientation (see simple_layout).
/// Throws NotSimple, TooFewLeaves.
TripletSystem defining_triplets_simple(const Network& simple, int side = 0);

/// Cluster system of size at most n that L1-defines a simple network (n >= 4).
ClusterSystem defining_clusters_simple(const Network& simple);

/// Every network of L1(X) whose induced system contains `system`.
/// Throws UniverseTooLarge when |X| exceeds max_n_universe or 6.
DefinitionReport check_defines(const TripletSystem& system, const Network& target,
                               std::size_t max_n_universe = kMaxUniverseTaxa);
DefinitionReport check_defines(const ClusterSystem& system, const Network& target,
                               std::size_t max_n_universe = kMaxUniverseTaxa);

/// True iff no other network of L1(X) induces exactly the same system.
bool check_encoded(const Network& target, SystemKind kind);

}  // namespace level1
