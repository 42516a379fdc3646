#include "level1kit/systems.hpp"

#include <algorithm>
#include <map>

#include "level1kit/snops.hpp"
#include "work_graph.hpp"

namespace level1 {

bool TripletSystem::is_subset_of(const TripletSystem& other) const {
  if (taxa == other.taxa)
    return std::includes(other.triplets.begin(), other.triplets.end(), triplets.begin(), triplets.end());
  try {
    const TripletSystem mine = remap(*this, other.taxa);
    return std::includes(other.triplets.begin(), other.triplets.end(), mine.triplets.begin(),
                         mine.triplets.end());
  } catch (const Error&) {
    return false;
  }
}

bool ClusterSystem::is_subset_of(const ClusterSystem& other) const {
  if (taxa == other.taxa)
    return std::includes(other.clusters.begin(), other.clusters.end(), clusters.begin(), clusters.end());
  try {
    const ClusterSystem mine = remap(*this, other.taxa);
    return std::includes(other.clusters.begin(), other.clusters.end(), mine.clusters.begin(),
                         mine.clusters.end());
  } catch (const Error&) {
    return false;
  }
}

ClusterSystem ClusterSystem::without_full() const {
  ClusterSystem out{taxa, {}};
  const TaxonSet full = TaxonSet::full(taxa.size());
  for (const auto& c : clusters)
    if (c != full) out.clusters.insert(c);
  return out;
}

namespace {

std::vector<std::size_t> index_map(const std::vector<std::string>& from, const std::vector<std::string>& to) {
  std::vector<std::size_t> out;
  for (const auto& name : from) {
    auto it = std::lower_bound(to.begin(), to.end(), name);
    if (it == to.end() || *it != name) throw Error(ErrorKind::UnknownTaxon, name);
    out.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  return out;
}

}  // namespace

TripletSystem remap(const TripletSystem& system, const std::vector<std::string>& taxa) {
  const auto map = index_map(system.taxa, taxa);
  TripletSystem out{taxa, {}};
  for (const Triplet& t : system.triplets) {
    out.triplets.insert(Triplet::make(static_cast<std::uint32_t>(map[t.a]), static_cast<std::uint32_t>(map[t.b]),
                                      static_cast<std::uint32_t>(map[t.c])));
  }
  return out;
}

ClusterSystem remap(const ClusterSystem& system, const std::vector<std::string>& taxa) {
  const auto map = index_map(system.taxa, taxa);
  ClusterSystem out{taxa, {}};
  for (const TaxonSet& c : system.clusters) {
    TaxonSet d(taxa.size());
    for (std::size_t i : c.members()) d.insert(map[i]);
    out.clusters.insert(d);
  }
  return out;
}

std::vector<Network> displayed_trees(const Network& network) {
  const auto& gs = network.galls();
  std::map<std::string, Network> unique;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gs.size()); ++mask) {
    detail::WorkGraph work(network);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const VertexId h = gs[i].hybrid;
      work.remove_arc(network.parents(h)[(mask >> i) & 1U], h);
    }
    work.clean();
    Network tree = work.to_network();
    unique.emplace(canonical_form(tree), std::move(tree));
  }
  std::vector<Network> out;
  for (auto& [form, tree] : unique) out.push_back(std::move(tree));
  return out;
}

ClusterSystem hardwired_clusters(const Network& network) {
  ClusterSystem out{network.taxa(), {}};
  for (auto& c : network.vertex_clusters()) out.clusters.insert(std::move(c));
  return out;
}

// Every displayed tree is the subgraph left after keeping one in-arc per
// hybrid; suppressed vertices repeat a cluster of their child, so the
// clusters of that subgraph are exactly C(T). This avoids building trees.
ClusterSystem softwired_clusters(const Network& network) {
  const auto& gs = network.galls();
  const auto& topo = network.topological_order();
  ClusterSystem out{network.taxa(), {}};
  std::vector<TaxonSet> cluster(network.num_vertices());
  std::vector<VertexId> kept_parent(network.num_vertices(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gs.size()); ++mask) {
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const VertexId h = gs[i].hybrid;
      kept_parent[h] = network.parents(h)[(mask >> i) & 1U];
    }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const VertexId v = *it;
      TaxonSet c(network.num_taxa());
      if (network.taxon_of(v) >= 0) c.insert(static_cast<std::size_t>(network.taxon_of(v)));
      for (VertexId w : network.children(v))
        if (!network.is_hybrid(w) || kept_parent[w] == v) c |= cluster[w];
      cluster[v] = c;
      out.clusters.insert(std::move(c));
    }
  }
  return out;
}

TripletSystem triplets(const Network& network) {
  const std::size_t n = network.num_taxa();
  if (n < 3) throw Error(ErrorKind::TooFewLeaves, "triplets need at least three taxa");
  TripletSystem out{network.taxa(), {}};
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      for (std::uint32_t z = y + 1; z < n; ++z) {
        TaxonSet keep(n);
        keep.insert(x);
        keep.insert(y);
        keep.insert(z);
        const Network small = restrict(network, keep);
        // On three taxa, the triplets are the two-element softwired clusters.
        const std::uint32_t ids[3] = {x, y, z};
        for (const TaxonSet& c : softwired_clusters(small).clusters) {
          if (c.size() != 2) continue;
          const auto m = c.members();
          std::uint32_t outlier = 0;
          for (std::size_t k = 0; k < 3; ++k)
            if (k != m[0] && k != m[1]) outlier = ids[k];
          out.triplets.insert(Triplet::make(ids[m[0]], ids[m[1]], outlier));
        }
      }
    }
  }
  return out;
}

namespace {

using Path = std::vector<VertexId>;

// All directed paths from `from` to `to`.
std::vector<Path> all_paths(const Network& net, VertexId from, VertexId to,
                            const std::vector<std::vector<char>>& reaches) {
  std::vector<Path> out;
  Path current{from};
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (v == to) {
      out.push_back(current);
      return;
    }
    for (VertexId c : net.children(v)) {
      if (!reaches[c][to]) continue;
      current.push_back(c);
      self(self, c);
      current.pop_back();
    }
  };
  if (reaches[from][to]) dfs(dfs, from);
  return out;
}

bool interiors_disjoint(const Path& p, const Path& q) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    for (std::size_t j = 1; j + 1 < q.size(); ++j)
      if (p[i] == q[j]) return false;
  return true;
}

}  // namespace

bool consistent(const Network& network, const Triplet& t) {
  const std::size_t n = network.num_taxa();
  if (t.a >= n || t.b >= n || t.c >= n) throw Error(ErrorKind::UnknownTaxon, "taxon index out of range");
  if (t.a == t.b || t.a == t.c || t.b == t.c) throw Error(ErrorKind::DuplicateTaxon, "triplet taxa must be distinct");
  const std::size_t nv = network.num_vertices();
  // reaches[x][y]: directed path (possibly empty) from x to y.
  std::vector<std::vector<char>> reaches(nv, std::vector<char>(nv, 0));
  const auto& topo = network.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const VertexId v = *it;
    reaches[v][v] = 1;
    for (VertexId c : network.children(v))
      for (VertexId y = 0; y < nv; ++y)
        if (reaches[c][y]) reaches[v][y] = 1;
  }
  const VertexId a = network.leaf_of(t.a), b = network.leaf_of(t.b), c = network.leaf_of(t.c);
  for (VertexId w = 0; w < nv; ++w) {
    if (!reaches[w][a] || !reaches[w][b] || network.is_leaf(w)) continue;
    const auto to_a = all_paths(network, w, a, reaches);
    const auto to_b = all_paths(network, w, b, reaches);
    for (VertexId v = 0; v < nv; ++v) {
      if (v == w || !reaches[v][w] || !reaches[v][c]) continue;
      const auto to_w = all_paths(network, v, w, reaches);
      const auto to_c = all_paths(network, v, c, reaches);
      for (const Path& pa : to_a)
        for (const Path& pb : to_b) {
          if (!interiors_disjoint(pa, pb)) continue;
          for (const Path& pw : to_w) {
            if (!interiors_disjoint(pw, pa) || !interiors_disjoint(pw, pb)) continue;
            for (const Path& pc : to_c)
              if (interiors_disjoint(pc, pa) && interiors_disjoint(pc, pb) && interiors_disjoint(pc, pw))
                return true;
          }
        }
    }
  }
  return false;
}

bool consistent(const Network& network, const std::string& a, const std::string& b, const std::string& outlier) {
  const auto ia = static_cast<std::uint32_t>(network.taxon_index(a));
  const auto ib = static_cast<std::uint32_t>(network.taxon_index(b));
  const auto ic = static_cast<std::uint32_t>(network.taxon_index(outlier));
  return consistent(network, Triplet::make(ia, ib, ic));
}

bool displays_clusters(const Network& network, const ClusterSystem& system) {
  const ClusterSystem mapped = remap(system, network.taxa());
  const ClusterSystem soft = softwired_clusters(network);
  return std::includes(soft.clusters.begin(), soft.clusters.end(), mapped.clusters.begin(), mapped.clusters.end());
}

}  // namespace level1
