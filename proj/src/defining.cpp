#include "level1kit/defining.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fast_systems.hpp"
#include "level1kit/enumerate.hpp"
#include "level1kit/parallel.hpp"
#include "level1kit/snops.hpp"

namespace level1 {

SystemKind parse_kind(const std::string& name) {
  if (name == "triplets") return SystemKind::Triplets;
  if (name == "clusters") return SystemKind::Clusters;
  throw std::invalid_argument("unknown system kind '" + name + "'");
}

SystemBits triplet_bits(const TripletSystem& system) { return detail::to_bits(system); }
SystemBits cluster_bits(const ClusterSystem& system) { return detail::to_bits(system); }

Universe::Universe(std::vector<std::string> taxa) : taxa_(std::move(taxa)) {
  const std::size_t n = taxa_.size();
  for_each_level1({taxa_, {}, {}}, [&](const Network& net) {
    Entry e;
    e.clusters = detail::softwired_bits(net);
    e.triplets = detail::triplet_bits(e.clusters, n);
    e.info = classify(net);
    index_.emplace(canonical_form(net), entries_.size());
    entries_.push_back(e);
    return true;
  });
}

const Universe& Universe::get(const std::vector<std::string>& taxa) {
  if (taxa.size() > kMaxUniverseTaxa)
    throw Error(ErrorKind::UniverseTooLarge, std::to_string(taxa.size()) + " taxa; at most " +
                                                 std::to_string(kMaxUniverseTaxa) + " supported");
  std::vector<std::string> sorted = taxa;
  std::sort(sorted.begin(), sorted.end());
  static std::mutex mutex;
  static std::map<std::vector<std::string>, std::unique_ptr<Universe>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[sorted];
  if (!slot) slot.reset(new Universe(sorted));
  return *slot;
}

std::size_t Universe::index_of(const Network& network) const {
  if (network.taxa() != taxa_) throw Error(ErrorKind::LabelSetMismatch, "network is on a different taxon set");
  auto it = index_.find(canonical_form(network));
  if (it == index_.end()) throw Error(ErrorKind::NotFound, "network missing from the universe");
  return it->second;
}

std::vector<Network> Universe::networks(const std::vector<std::size_t>& indices) const {
  std::vector<std::size_t> wanted = indices;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  std::vector<Network> out;
  if (wanted.empty()) return out;
  std::size_t i = 0, next = 0;
  for_each_level1({taxa_, {}, {}}, [&](const Network& net) {
    if (i++ == wanted[next]) {
      out.push_back(net);
      ++next;
    }
    return next < wanted.size();
  });
  return out;
}

std::vector<std::size_t> Universe::containing(SystemKind kind, const SystemBits& bits) const {
  return parallel_filter(entries_.size(), [&](std::size_t i) {
    const SystemBits& have = kind == SystemKind::Triplets ? entries_[i].triplets : entries_[i].clusters;
    return (bits & ~have).none();
  });
}

std::vector<std::size_t> Universe::equal_to(SystemKind kind, const SystemBits& bits) const {
  return parallel_filter(entries_.size(), [&](std::size_t i) {
    const SystemBits& have = kind == SystemKind::Triplets ? entries_[i].triplets : entries_[i].clusters;
    return have == bits;
  });
}

namespace {

SimpleLayout checked_layout(const Network& simple, int side) {
  if (!classify(simple).is_simple) throw Error(ErrorKind::NotSimple, "network is not simple");
  if (simple.num_taxa() < 4) throw Error(ErrorKind::TooFewLeaves, "need at least four leaves");
  return simple_layout(simple, side);
}

}  // namespace

TripletSystem defining_triplets_simple(const Network& simple, int side) {
  const SimpleLayout layout = checked_layout(simple, side);
  const std::size_t n = layout.x.size();
  auto id = [&](std::size_t j) { return static_cast<std::uint32_t>(simple.taxon_index(layout.x[j - 1])); };
  TripletSystem out{simple.taxa(), {}};
  // Base: R of the restriction to x_1..x_4, which is simple with the same layout.
  TaxonSet base(simple.num_taxa());
  for (std::size_t j = 1; j <= 4; ++j) base.insert(id(j));
  const Network four = restrict(simple, base);
  for (const Triplet& t : remap(triplets(four), simple.taxa()).triplets) out.triplets.insert(t);
  // Leaf x_m is added back at level m; the right side then holds
  // x_i..x_m, so the root is v_{m+1} when that side is empty and v_m when
  // it has one leaf.
  for (std::size_t m = 5; m <= n; ++m) {
    const std::size_t right = m + 1 > layout.i ? m + 1 - layout.i : 0;
    const Triplet one_outlier = Triplet::make(id(m - 1), id(m), id(1));       // x_1 | x_{m-1} x_m
    const Triplet last_outlier = Triplet::make(id(1), id(m - 1), id(m));      // x_m | x_1 x_{m-1}
    const Triplet before_last_outlier = Triplet::make(id(m), id(1), id(m - 1));  // x_{m-1} | x_m x_1
    if (right == 0) {
      out.triplets.insert(one_outlier);
      out.triplets.insert(last_outlier);
    } else if (right == 1) {
      out.triplets.insert(before_last_outlier);
      out.triplets.insert(last_outlier);
    } else {
      out.triplets.insert(one_outlier);
      out.triplets.insert(before_last_outlier);
    }
  }
  return out;
}

ClusterSystem defining_clusters_simple(const Network& simple) {
  const Gall& gall = simple.galls().empty() ? Gall{} : simple.galls().front();
  // The side carrying x_2..x_{i-1} must hold at least as many leaves as the other.
  const int side = gall.second_side.size() > gall.first_side.size() ? 1 : 0;
  const SimpleLayout layout = checked_layout(simple, side);
  const std::size_t n = layout.x.size(), i = layout.i;
  ClusterSystem out{simple.taxa(), {}};
  auto cluster = [&](std::initializer_list<std::size_t> js) {
    TaxonSet c(simple.num_taxa());
    for (std::size_t j : js) c.insert(simple.taxon_index(layout.x[j - 1]));
    out.clusters.insert(std::move(c));
  };
  auto range = [&](std::size_t from, std::size_t to) {
    TaxonSet c(simple.num_taxa());
    for (std::size_t j = std::min(from, to); j <= std::max(from, to); ++j)
      c.insert(simple.taxon_index(layout.x[j - 1]));
    out.clusters.insert(std::move(c));
  };
  if (i == n + 1) {
    for (std::size_t j = 2; j <= n - 1; ++j) range(1, j);
    range(2, n);
  } else if (i == n) {
    for (std::size_t j = 3; j <= n - 1; ++j) range(2, j);
    cluster({1, 2});
    cluster({1, n});
    cluster({1, 2, 3});
  } else {
    for (std::size_t j = 3; j <= i - 1; ++j) range(2, j);
    for (std::size_t j = i; j <= n - 1; ++j) range(j, n);
    cluster({1, 2});
    cluster({1, n});
    cluster({1, n, n - 1});
  }
  return out;
}

namespace {

template <class System>
DefinitionReport run_check(const System& system, SystemKind kind, const Network& target, std::size_t max_n) {
  const std::size_t n = target.num_taxa();
  if (n > std::min(max_n, kMaxUniverseTaxa))
    throw Error(ErrorKind::UniverseTooLarge, std::to_string(n) + " taxa exceed the universe cap");
  System mapped = remap(system, target.taxa());
  const Universe& u = Universe::get(target.taxa());
  const auto bits = detail::to_bits(mapped);
  const auto survivors = u.containing(kind, bits);
  const std::size_t self = u.index_of(target);
  const bool defines = survivors.size() == 1 && survivors.front() == self;
  return {target, kind, std::move(mapped), u.networks(survivors), defines};
}

}  // namespace

DefinitionReport check_defines(const TripletSystem& system, const Network& target, std::size_t max_n_universe) {
  return run_check(system, SystemKind::Triplets, target, max_n_universe);
}

DefinitionReport check_defines(const ClusterSystem& system, const Network& target, std::size_t max_n_universe) {
  return run_check(system, SystemKind::Clusters, target, max_n_universe);
}

bool check_encoded(const Network& target, SystemKind kind) {
  const Universe& u = Universe::get(target.taxa());
  const std::size_t self = u.index_of(target);
  const auto& e = u[self];
  const auto same = u.equal_to(kind, kind == SystemKind::Triplets ? e.triplets : e.clusters);
  return same.size() == 1;
}

}  // namespace level1
