#include "fast_systems.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

namespace level1::detail {

namespace {

constexpr std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return k > n ? 0 : r;
}

// kClusterTriplets[n][m]: triplets ab|c with a, b in m and c outside m, c < n.
const std::array<std::array<Bits, 128>, kFastMaxTaxa + 1>& cluster_triplets() {
  static const auto table = [] {
    std::array<std::array<Bits, 128>, kFastMaxTaxa + 1> t{};
    for (std::size_t n = 0; n <= kFastMaxTaxa; ++n) {
      for (std::uint32_t m = 0; m < (1U << n); ++m) {
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t b = a + 1; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
              if ((m >> a & 1U) && (m >> b & 1U) && !(m >> c & 1U)) t[n][m].set(triplet_bit(a, b, c));
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::size_t triplet_bit(std::uint32_t a, std::uint32_t b, std::uint32_t outlier) {
  std::uint32_t s[3] = {a, b, outlier};
  std::sort(s, s + 3);
  const std::size_t rank = choose(s[0], 1) + choose(s[1], 2) + choose(s[2], 3);
  const std::size_t pos = outlier == s[0] ? 0 : outlier == s[1] ? 1 : 2;
  return 3 * rank + pos;
}

Triplet triplet_at(std::size_t bit) {
  std::size_t rank = bit / 3;
  const std::size_t pos = bit % 3;
  // Invert the colex rank greedily from the largest element.
  std::uint32_t s[3];
  for (int k = 3; k >= 1; --k) {
    std::uint32_t x = static_cast<std::uint32_t>(k - 1);
    while (choose(x + 1, static_cast<std::size_t>(k)) <= rank) ++x;
    rank -= choose(x, static_cast<std::size_t>(k));
    s[k - 1] = x;
  }
  const std::uint32_t outlier = s[pos];
  std::uint32_t pair[2];
  std::size_t j = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != pos) pair[j++] = s[i];
  return Triplet::make(pair[0], pair[1], outlier);
}

Bits softwired_bits(const Network& network) {
  const auto& gs = network.galls();
  const auto& topo = network.topological_order();
  const std::size_t nv = network.num_vertices();
  std::vector<std::uint32_t> mask(nv, 0);
  std::vector<VertexId> kept_parent(nv, 0);
  Bits out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << gs.size()); ++choice) {
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const VertexId h = gs[i].hybrid;
      kept_parent[h] = network.parents(h)[(choice >> i) & 1U];
    }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const VertexId v = *it;
      std::uint32_t m = network.taxon_of(v) >= 0 ? 1U << network.taxon_of(v) : 0U;
      for (VertexId w : network.children(v))
        if (!network.is_hybrid(w) || kept_parent[w] == v) m |= mask[w];
      mask[v] = m;
      out.set(m);
    }
  }
  return out;
}

Bits triplet_bits(const Bits& clusters, std::size_t n) {
  const auto& table = cluster_triplets()[n];
  Bits out;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m)
    if (clusters[m]) out |= table[m];
  return out;
}

Bits to_bits(const TripletSystem& system) {
  Bits out;
  for (const Triplet& t : system.triplets) out.set(triplet_bit(t.a, t.b, t.c));
  return out;
}

Bits to_bits(const ClusterSystem& system) {
  Bits out;
  for (const TaxonSet& c : system.clusters) out.set(static_cast<std::size_t>(c.low_word()));
  return out;
}

TripletSystem triplets_from_bits(const Bits& bits, const std::vector<std::string>& taxa) {
  TripletSystem out{taxa, {}};
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out.triplets.insert(triplet_at(i));
  return out;
}

ClusterSystem clusters_from_bits(const Bits& bits, const std::vector<std::string>& taxa) {
  ClusterSystem out{taxa, {}};
  for (std::size_t m = 1; m < (std::size_t{1} << taxa.size()); ++m) {
    if (!bits[m]) continue;
    TaxonSet c(taxa.size());
    for (std::size_t i = 0; i < taxa.size(); ++i)
      if (m >> i & 1U) c.insert(i);
    out.clusters.insert(std::move(c));
  }
  return out;
}

}  // namespace level1::detail
