#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace level1::detail {

std::vector<TaxonSet> brute_force_maximal_sn_sets(const TripletSystem& system) {
  const std::size_t n = system.taxa.size();
  std::vector<std::uint64_t> sn;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    bool ok = true;
    for (const Triplet& t : system.triplets) {
      const bool a = s >> t.a & 1U, b = s >> t.b & 1U, c = s >> t.c & 1U;
      if (c && a != b) {
        ok = false;
        break;
      }
    }
    if (ok) sn.push_back(s);
  }
  std::vector<TaxonSet> out;
  for (std::uint64_t s : sn) {
    const bool maximal = std::none_of(sn.begin(), sn.end(), [&](std::uint64_t t) { return t != s && (s & t) == s; });
    if (!maximal) continue;
    TaxonSet set(n);
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1U) set.insert(i);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Network& a, const Network& b)
      : a_(a), b_(b), map_(a.num_vertices(), kNone), used_(b.num_vertices(), 0) {}

  bool run() {
    if (a_.num_vertices() != b_.num_vertices() || a_.num_arcs() != b_.num_arcs() || a_.taxa() != b_.taxa())
      return false;
    if (!assign(a_.root(), b_.root())) return false;
    std::vector<VertexId> queue{a_.root()};
    return extend(queue, 0);
  }

 private:
  static constexpr VertexId kNone = static_cast<VertexId>(-1);

  bool assign(VertexId x, VertexId y) {
    if (map_[x] != kNone) return map_[x] == y;
    if (used_[y]) return false;
    if (a_.children(x).size() != b_.children(y).size() || a_.parents(x).size() != b_.parents(y).size())
      return false;
    if (a_.is_leaf(x) && a_.label(x) != b_.label(y)) return false;
    map_[x] = y;
    used_[y] = 1;
    return true;
  }

  void undo(VertexId x) {
    used_[map_[x]] = 0;
    map_[x] = kNone;
  }

  // Processes queue[k..]: maps the children of queue[k] onto those of its image.
  bool extend(std::vector<VertexId>& queue, std::size_t k) {
    if (k == queue.size()) return true;
    const VertexId x = queue[k];
    const auto xs = a_.children(x);
    const auto ys = b_.children(map_[x]);
    std::vector<std::size_t> order(ys.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<VertexId> fresh;
      bool ok = true;
      for (std::size_t i = 0; i < xs.size() && ok; ++i) {
        const bool was = map_[xs[i]] != kNone;
        ok = assign(xs[i], ys[order[i]]);
        if (ok && !was) fresh.push_back(xs[i]);
      }
      if (ok) {
        const std::size_t size = queue.size();
        queue.insert(queue.end(), fresh.begin(), fresh.end());
        if (extend(queue, k + 1)) return true;
        queue.resize(size);
      }
      for (VertexId f : fresh) undo(f);
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  }

  const Network& a_;
  const Network& b_;
  std::vector<VertexId> map_;
  std::vector<char> used_;
};

}  // namespace

bool isomorphic(const Network& a, const Network& b) { return IsoSearch(a, b).run(); }

Network relabel_vertices(const Network& network, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<long long> ids(network.num_vertices());
  std::iota(ids.begin(), ids.end(), 100);
  std::shuffle(ids.begin(), ids.end(), rng);
  auto arcs = network.arcs();
  std::shuffle(arcs.begin(), arcs.end(), rng);
  RawGraph raw;
  for (const Arc& a : arcs) raw.add_arc(ids[a.tail], ids[a.head]);
  for (std::size_t t = 0; t < network.num_taxa(); ++t) raw.set_label(ids[network.leaf_of(t)], network.taxa()[t]);
  return Network::validate(raw);
}

}  // namespace level1::detail
