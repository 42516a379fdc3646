#include "level1kit/snops.hpp"

#include <algorithm>
#include <numeric>

#include "work_graph.hpp"

namespace level1 {

bool is_sn_set(const TripletSystem& system, const TaxonSet& set) {
  for (const Triplet& t : system.triplets) {
    if (!set.contains(t.c)) continue;
    if (set.contains(t.a) != set.contains(t.b)) return false;
  }
  return true;
}

TaxonSet sn_closure(const TripletSystem& system, const TaxonSet& seed) {
  TaxonSet s = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Triplet& t : system.triplets) {
      if (!s.contains(t.c)) continue;
      if (s.contains(t.a) && !s.contains(t.b)) {
        s.insert(t.b);
        grew = true;
      } else if (s.contains(t.b) && !s.contains(t.a)) {
        s.insert(t.a);
        grew = true;
      }
    }
  }
  return s;
}

// x ~ y when some non-trivial SN-set holds both, i.e. closure({x, y}) != X.
// If the maximal non-trivial SN-sets partition X they are exactly the classes
// of ~; each class is then checked to be a non-trivial SN-set.
Partition maximal_sn_sets(const TripletSystem& system) {
  const std::size_t n = system.taxa.size();
  const TaxonSet full = TaxonSet::full(n);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (find(x) == find(y)) continue;
      TaxonSet seed(n);
      seed.insert(x);
      seed.insert(y);
      if (sn_closure(system, seed) != full) parent[find(x)] = find(y);
    }
  }
  std::vector<TaxonSet> blocks;
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = find(x);
    if (block_of[r] == n) {
      block_of[r] = blocks.size();
      blocks.emplace_back(n);
    }
    blocks[block_of[r]].insert(x);
  }
  for (const TaxonSet& b : blocks) {
    if ((b == full && n > 1) || !is_sn_set(system, b))
      throw Error(ErrorKind::NotAPartition, "maximal SN-sets do not partition the taxa");
  }
  std::sort(blocks.begin(), blocks.end());
  return {system.taxa, std::move(blocks)};
}

namespace {

// under[v]: v is the head of a cut arc or lies below one.
std::vector<char> below_cut_arc(const Network& network) {
  std::vector<char> under(network.num_vertices(), 0);
  for (VertexId v : network.topological_order()) {
    for (VertexId p : network.parents(v)) {
      if (under[p] || network.is_cut_arc(p, v)) under[v] = 1;
    }
  }
  return under;
}

}  // namespace

std::vector<Arc> highest_cut_arcs(const Network& network) {
  const auto under = below_cut_arc(network);
  std::vector<Arc> out;
  for (const Arc& a : network.arcs())
    if (network.is_cut_arc(a.tail, a.head) && !under[a.tail]) out.push_back(a);
  return out;
}

Partition cut_partition(const Network& network) {
  const auto clusters = network.vertex_clusters();
  Partition p{network.taxa(), {}};
  for (const Arc& a : highest_cut_arcs(network)) p.blocks.push_back(clusters[a.head]);
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

namespace {

detail::WorkGraph prepare_restriction(const Network& network, const TaxonSet& keep) {
  if (keep.universe() != network.num_taxa())
    throw Error(ErrorKind::UnknownTaxon, "taxon set is over a different taxon list");
  if (keep.size() < 2) throw Error(ErrorKind::TooFewTaxa, "restriction needs at least two taxa");
  detail::WorkGraph work(network);
  for (std::size_t i = 0; i < network.num_taxa(); ++i)
    if (!keep.contains(i)) work.delete_taxon(i);
  return work;
}

}  // namespace

Network restrict(const Network& network, const TaxonSet& keep) {
  auto work = prepare_restriction(network, keep);
  work.clean();
  return work.to_network();
}

Network restrict(const Network& network, const std::vector<std::string>& keep) {
  TaxonSet set(network.num_taxa());
  for (const auto& name : keep) set.insert(network.taxon_index(name));
  return restrict(network, set);
}

Network restrict_random_order(const Network& network, const TaxonSet& keep, std::mt19937_64& rng) {
  auto work = prepare_restriction(network, keep);
  work.clean_random(rng);
  return work.to_network();
}

namespace {

Network descendants_network(const Network& network, VertexId top) {
  RawGraph raw;
  std::vector<char> seen(network.num_vertices(), 0);
  std::vector<VertexId> stack{top};
  seen[top] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (network.taxon_of(v) >= 0) raw.set_label(v, network.label(v));
    for (VertexId c : network.children(v)) {
      raw.add_arc(v, c);
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  return Network::validate(raw);
}

}  // namespace

CollapseResult collapse(const Network& network, const RepresentativeChooser& choose) {
  const auto clusters = network.vertex_clusters();
  const auto under = below_cut_arc(network);
  const auto highest = highest_cut_arcs(network);

  RawGraph raw;
  for (const Arc& a : network.arcs())
    if (!under[a.head]) raw.add_arc(a.tail, a.head);

  CollapseResult result{network, {}, {}};
  std::vector<std::pair<TaxonSet, std::string>> reps;
  long long next_id = static_cast<long long>(network.num_vertices());
  for (const Arc& a : highest) {
    const TaxonSet& block = clusters[a.head];
    std::string rep = choose ? choose(network, block) : network.taxa()[block.members().front()];
    const auto& names = network.taxa();
    auto it = std::lower_bound(names.begin(), names.end(), rep);
    if (it == names.end() || *it != rep || !block.contains(static_cast<std::size_t>(it - names.begin())))
      throw Error(ErrorKind::BadRepresentative, "'" + rep + "' is not in its block");
    raw.add_arc(a.tail, next_id);
    raw.set_label(next_id, rep);
    ++next_id;
    result.representative_of.emplace(block, rep);
    if (block.size() >= 2)
      result.pendant.emplace(rep, descendants_network(network, a.head));
    else
      result.pendant.emplace(rep, std::nullopt);
  }
  result.collapsed = Network::validate(raw);
  return result;
}

TripletSystem collapse_projection(const Network& network, const TripletSystem& induced,
                                  const CollapseResult& result) {
  const TripletSystem system = remap(induced, network.taxa());
  const auto& reps_taxa = result.collapsed.taxa();
  std::vector<std::uint32_t> rep_index(network.num_taxa(), 0);
  for (const auto& [block, rep] : result.representative_of) {
    const auto r = static_cast<std::uint32_t>(result.collapsed.taxon_index(rep));
    for (std::size_t i : block.members()) rep_index[i] = r;
  }
  TripletSystem out{reps_taxa, {}};
  for (const Triplet& t : system.triplets) {
    const auto a = rep_index[t.a], b = rep_index[t.b], c = rep_index[t.c];
    if (a != b && a != c && b != c) out.triplets.insert(Triplet::make(a, b, c));
  }
  return out;
}

}  // namespace level1
