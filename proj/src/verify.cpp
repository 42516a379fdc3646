#include "level1kit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "fast_systems.hpp"
#include "json.hpp"
#include "level1kit/defining.hpp"
#include "level1kit/enumerate.hpp"
#include "level1kit/io.hpp"
#include "level1kit/snops.hpp"
#include "oracles.hpp"
#include "work_graph.hpp"

namespace level1 {

bool VerificationReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

namespace {

constexpr std::size_t kMaxStoredFailures = 25;

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void instance() { ++r_.instances; }
  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    if (r_.failures.size() < kMaxStoredFailures) r_.failures.push_back(describe());
    else ++dropped_;
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }
  ~Recorder() {
    if (dropped_) r_.failures.push_back("... and " + std::to_string(dropped_) + " more failures");
  }

 private:
  SuiteResult& r_;
  std::size_t dropped_ = 0;
};

std::string show(const Network& n) { return write_enewick(n); }

std::vector<Network> all_networks(std::size_t n) { return enumerate_level1({default_taxa(n), {}, {}}); }

// Taxon masks, valid while n <= 7.
std::uint32_t mask_of(const TaxonSet& s) { return static_cast<std::uint32_t>(s.low_word()); }

std::vector<std::uint32_t> masks(const std::vector<TaxonSet>& sets) {
  std::vector<std::uint32_t> out;
  for (const auto& s : sets) out.push_back(mask_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- counting

void clusters_count(Recorder& rec, std::size_t max_n) {
  auto check = [&](const Network& net) {
    rec.instance();
    const std::size_t n = net.num_taxa();
    const std::size_t got = softwired_clusters(net).without_full().size();
    const std::size_t want = 3 * n - 4 - classify(net).c;
    rec.check(got == want, [&] {
      return show(net) + " |S(N)^-|=" + std::to_string(got) + " expected " + std::to_string(want);
    });
  };
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 6); ++n)
    for_each_level1({default_taxa(n), {}, {}}, [&](const Network& net) {
      check(net);
      return true;
    });
  const double probabilities[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (std::size_t n = 7; n <= 12; ++n)
    for (std::uint64_t seed = 1; seed <= 1000; ++seed)
      check(random_level1(default_taxa(n), seed, probabilities[seed % 5]));
  rec.note("random networks: 1000 per n in 7..12");
}

void bounds(Recorder& rec, std::size_t max_n) {
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 6); ++n) {
    for_each_level1({default_taxa(n), {Filter::Proper}, {}}, [&](const Network& net) {
      rec.instance();
      const BoundsReport b = vertex_arc_bounds(net);
      rec.check(b.all(), [&] {
        return show(net) + " |V|=" + std::to_string(net.num_vertices()) + " |A|=" + std::to_string(net.num_arcs()) +
               " violates the vertex/arc bounds";
      });
      if (n == 3) {
        rec.check(net.num_vertices() == 7 && net.num_arcs() == 7,
                  [&] { return show(net) + " n=3 but |V|,|A| != 7"; });
      }
      return true;
    });
  }
}

void galls_bound(Recorder& rec, std::size_t max_n) {
  std::size_t tight = 0;
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 6); ++n) {
    for_each_level1({default_taxa(n), {}, {}}, [&](const Network& net) {
      rec.instance();
      const Classification c = classify(net);
      const bool three = std::all_of(net.galls().begin(), net.galls().end(),
                                     [](const Gall& g) { return g.outgoing.size() == 3; });
      rec.check(c.g + c.c + 2 <= n, [&] { return show(net) + " g > n - c - 2"; });
      if (c.is_tree || three) {
        ++tight;
        rec.check(c.g + c.c + 2 == n, [&] { return show(net) + " expected g = n - c - 2"; });
      }
      return true;
    });
  }
  rec.note("instances required to be tight: " + std::to_string(tight));
}

// ---------------------------------------------------------------- triplets

void triplet_size(Recorder& rec, std::size_t max_n) {
  auto check = [&](const WitnessPair& p, std::size_t n) {
    rec.instance();
    const std::size_t r1 = triplets(p.first).size(), r2 = triplets(p.second).size();
    const Classification c1 = classify(p.first), c2 = classify(p.second);
    const std::size_t base = n * (n - 1) * (n - 2) / 6 + 1;
    rec.note("n=" + std::to_string(n) + (p.exhaustive ? " (scan)" : " (built)") + ": |R(N1)|=" + std::to_string(r1) +
             " |R(N2)|=" + std::to_string(r2) + " g=" + std::to_string(c1.g) + " c=" + std::to_string(c1.c) +
             " N1=" + show(p.first) + " N2=" + show(p.second));
    rec.check(c1.g == c2.g && c1.c == c2.c && r1 == base && r2 == r1 + (n - 4), [&] {
      return "n=" + std::to_string(n) + " pair " + show(p.first) + " " + show(p.second) + " has |R| " +
             std::to_string(r1) + "/" + std::to_string(r2);
    });
  };
  check(search_prop42_pair(6), 6);
  if (max_n >= 6) check(search_prop42_pair(7), 7);
  for (std::size_t n = 6; n <= 9; ++n) {
    const WitnessPair p = construct_witness_pair(n);
    check(p, n);
    // N1 has one triplet per 3-set except {a,b,c} = {x1,x2,x3}, which carries a|bc and c|ab.
    const TripletSystem r = triplets(p.first);
    std::map<std::array<std::uint32_t, 3>, std::size_t> per_set;
    for (const Triplet& t : r.triplets) {
      std::array<std::uint32_t, 3> key{t.a, t.b, t.c};
      std::sort(key.begin(), key.end());
      ++per_set[key];
    }
    for (const auto& [key, count] : per_set) {
      const bool abc = key == std::array<std::uint32_t, 3>{0, 1, 2};
      rec.check(count == (abc ? 2U : 1U), [&, key = key] {
        return "built N1 at n=" + std::to_string(n) + " has " + std::to_string(count) + " triplets on {" +
               p.first.taxa()[key[0]] + "," + p.first.taxa()[key[1]] + "," + p.first.taxa()[key[2]] + "}";
      });
    }
    const auto a = p.first.taxon_index("x1"), b = p.first.taxon_index("x2"), c = p.first.taxon_index("x3");
    auto u32 = [](std::size_t x) { return static_cast<std::uint32_t>(x); };
    rec.check(r.contains(Triplet::make(u32(b), u32(c), u32(a))) && r.contains(Triplet::make(u32(a), u32(b), u32(c))),
              [&] { return "built N1 at n=" + std::to_string(n) + " lacks a|bc or c|ab"; });
  }
  // Data only: do equal (g, c) classes already differ in |R| at n = 5?
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::size_t>> sizes;
  for_each_level1({default_taxa(5), {}, {}}, [&](const Network& net) {
    const Classification c = classify(net);
    sizes[{c.g, c.c}].insert(detail::triplet_bits(detail::softwired_bits(net), 5).count());
    return true;
  });
  std::size_t mixed = 0;
  for (const auto& [key, s] : sizes) mixed += s.size() > 1;
  rec.note("n=5: " + std::to_string(mixed) + " of " + std::to_string(sizes.size()) +
           " (g,c) classes contain networks with different |R|");
}

// ---------------------------------------------------------------- SN-sets and Cut

struct Indexed {
  std::vector<Network> nets;
  std::vector<detail::Bits> r;
  std::vector<std::vector<std::uint32_t>> cut;
};

Indexed index_networks(std::size_t n) {
  Indexed out;
  out.nets = all_networks(n);
  for (const Network& net : out.nets) {
    out.r.push_back(detail::triplet_bits(detail::softwired_bits(net), n));
    out.cut.push_back(masks(cut_partition(net).blocks));
  }
  return out;
}

void sn_cut(Recorder& rec, std::size_t max_n) {
  std::size_t pairs = 0;
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 5); ++n) {
    const Indexed idx = index_networks(n);
    std::vector<std::vector<std::uint32_t>> maximal(idx.nets.size()), heads(idx.nets.size());
    for (std::size_t i = 0; i < idx.nets.size(); ++i) {
      const Network& net = idx.nets[i];
      rec.instance();
      const TripletSystem r = triplets(net);
      const auto cut = idx.cut[i];
      std::vector<std::uint32_t> closure_based;
      try {
        closure_based = masks(maximal_sn_sets(r).blocks);
      } catch (const Error& e) {
        rec.check(false, [&] { return show(net) + " maximal_sn_sets: " + e.what(); });
      }
      const auto brute = masks(detail::brute_force_maximal_sn_sets(r));
      rec.check(cut == closure_based && cut == brute,
                [&] { return show(net) + " Cut(N) differs from the maximal SN-sets of R(N)"; });
      maximal[i] = brute;
      const auto clusters = net.vertex_clusters();
      for (const Arc& a : net.arcs())
        if (net.is_cut_arc(a.tail, a.head) && !net.is_leaf(a.head)) heads[i].push_back(mask_of(clusters[a.head]));
    }
    // Cut-arc head clusters (split heads) of N and N' are compatible when R(N) ⊆ R(N').
    for (std::size_t i = 0; i < idx.nets.size(); ++i) {
      for (std::size_t j = 0; j < idx.nets.size(); ++j) {
        if ((idx.r[i] & ~idx.r[j]).any()) continue;
        ++pairs;
        for (std::uint32_t c : heads[i]) {
          for (std::uint32_t d : heads[j]) {
            const std::uint32_t both = c & d;
            rec.check(both == 0 || both == c || both == d, [&] {
              return show(idx.nets[i]) + " / " + show(idx.nets[j]) + " incompatible cut clusters";
            });
            if (both == c && c != d) {
              rec.check(!std::binary_search(maximal[i].begin(), maximal[i].end(), c), [&] {
                return show(idx.nets[i]) + " / " + show(idx.nets[j]) + " nested cluster is a maximal SN-set";
              });
            }
          }
        }
      }
    }
  }
  rec.note("pairs with R(N) contained in R(N'): " + std::to_string(pairs));
}

void samecut(Recorder& rec, std::size_t max_n) {
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 5); ++n) {
    const Indexed idx = index_networks(n);
    for (std::size_t i = 0; i < idx.nets.size(); ++i) {
      if (!classify(idx.nets[i]).is_saturated) continue;
      for (std::size_t j = 0; j < idx.nets.size(); ++j) {
        if ((idx.r[i] & ~idx.r[j]).any()) continue;
        rec.instance();
        rec.check(idx.cut[i] == idx.cut[j],
                  [&] { return show(idx.nets[i]) + " / " + show(idx.nets[j]) + " Cut(N) != Cut(N')"; });
      }
    }
  }
}

// ---------------------------------------------------------------- defining

void define_triplets(Recorder& rec, std::size_t max_n) {
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 6); ++n) {
    const Universe& u = Universe::get(default_taxa(n));
    for_each_level1({default_taxa(n), {Filter::Simple}, {}}, [&](const Network& net) {
      const std::size_t self = u.index_of(net);
      for (int side : {0, 1}) {
        rec.instance();
        const TripletSystem d = defining_triplets_simple(net, side);
        const auto bits = triplet_bits(d);
        rec.check(d.size() <= 2 * n - 1 && (bits & ~u[self].triplets).none(),
                  [&] { return show(net) + " constructed system too large or not in R(N)"; });
        const auto survivors = u.containing(SystemKind::Triplets, bits);
        rec.check(survivors == std::vector<std::size_t>{self}, [&] {
          return show(net) + " constructed triplets leave " + std::to_string(survivors.size()) + " networks";
        });
      }
      const auto all = u.containing(SystemKind::Triplets, u[self].triplets);
      rec.check(all == std::vector<std::size_t>{self}, [&] { return show(net) + " not defined by R(N)"; });
      return true;
    });
  }
}

void define_clusters(Recorder& rec, std::size_t max_n) {
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 6); ++n) {
    const Universe& u = Universe::get(default_taxa(n));
    for_each_level1({default_taxa(n), {Filter::Simple}, {}}, [&](const Network& net) {
      rec.instance();
      const std::size_t self = u.index_of(net);
      const ClusterSystem d = defining_clusters_simple(net);
      const auto bits = cluster_bits(d);
      rec.check(d.size() <= n && (bits & ~u[self].clusters).none(),
                [&] { return show(net) + " S_d too large or not in S(N)"; });
      const auto survivors = u.containing(SystemKind::Clusters, bits);
      rec.check(survivors == std::vector<std::size_t>{self}, [&] {
        return show(net) + " S_d leaves " + std::to_string(survivors.size()) + " networks";
      });
      return true;
    });
  }
}

void saturated_defines(Recorder& rec, std::size_t max_n, SystemKind kind) {
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 6); ++n) {
    const Universe& u = Universe::get(default_taxa(n));
    std::vector<std::size_t> failing;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto& e = u[i];
      if (!e.info.is_saturated || !e.info.is_four_outwards) continue;
      rec.instance();
      ++checked;
      const auto survivors = u.containing(kind, kind == SystemKind::Triplets ? e.triplets : e.clusters);
      if (survivors != std::vector<std::size_t>{i}) failing.push_back(i);
    }
    for (const Network& net : u.networks(failing))
      rec.check(false, [&] { return show(net) + " is not defined by its induced system"; });
    rec.note("n=" + std::to_string(n) + ": " + std::to_string(checked) + " saturated 4-outwards networks");
  }
  // Data only: which 4-outwards networks are defined by their induced system.
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 6); ++n) {
    const Universe& u = Universe::get(default_taxa(n));
    std::size_t four = 0, defined = 0, defined_unsaturated = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto& e = u[i];
      if (!e.info.is_four_outwards || e.info.is_tree) continue;
      ++four;
      const auto s = u.containing(kind, kind == SystemKind::Triplets ? e.triplets : e.clusters);
      if (s.size() == 1) {
        ++defined;
        defined_unsaturated += !e.info.is_saturated;
      }
    }
    rec.note("n=" + std::to_string(n) + ": " + std::to_string(defined) + " of " + std::to_string(four) +
             " proper 4-outwards networks are defined by their induced system; " +
             std::to_string(defined_unsaturated) + " of those are not saturated");
  }
}

// ---------------------------------------------------------------- counterexamples

// Induced systems listed for the five-leaf example networks.
const char* const kSixteenTriplets[16][3] = {
    {"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x1", "x2", "x5"}, {"x3", "x4", "x1"},
    {"x1", "x3", "x4"}, {"x3", "x5", "x1"}, {"x1", "x3", "x5"}, {"x4", "x5", "x1"},
    {"x3", "x4", "x2"}, {"x2", "x3", "x4"}, {"x3", "x5", "x2"}, {"x2", "x3", "x5"},
    {"x4", "x5", "x2"}, {"x4", "x5", "x3"}, {"x3", "x4", "x5"}, {"x2", "x3", "x1"},
};
const std::vector<std::vector<int>> kElevenClusters = {
    {1, 2, 3, 4, 5}, {2, 3, 4, 5}, {3, 4, 5}, {4, 5}, {2, 3, 4}, {3, 4}, {1}, {2}, {3}, {4}, {5},
};

// Subdivides the first and last of three consecutive cut arcs and joins the
// two new vertices. Returns nothing when N has no such path.
std::optional<Network> subdivide_path(const Network& net) {
  for (const Arc& a1 : net.arcs()) {
    if (!net.is_cut_arc(a1.tail, a1.head) || net.is_leaf(a1.head)) continue;
    for (VertexId p2 : net.children(a1.head)) {
      if (!net.is_cut_arc(a1.head, p2) || net.is_leaf(p2)) continue;
      for (VertexId p3 : net.children(p2)) {
        if (!net.is_cut_arc(p2, p3)) continue;
        RawGraph raw;
        const long long u = static_cast<long long>(net.num_vertices()), v = u + 1;
        for (const Arc& a : net.arcs()) {
          if (a == a1) {
            raw.add_arc(a.tail, u);
            raw.add_arc(u, a.head);
          } else if (a == Arc{p2, p3}) {
            raw.add_arc(p2, v);
            raw.add_arc(v, p3);
          } else {
            raw.add_arc(a.tail, a.head);
          }
        }
        raw.add_arc(u, v);
        for (std::size_t t = 0; t < net.num_taxa(); ++t) raw.set_label(net.leaf_of(t), net.taxa()[t]);
        return Network::validate(raw);
      }
    }
  }
  return std::nullopt;
}

void counterexamples(Recorder& rec) {
  const auto taxa = default_taxa(5);
  const Universe& u = Universe::get(taxa);
  TripletSystem sixteen{taxa, {}};
  for (const auto& t : kSixteenTriplets) {
    auto at = [&](const char* s) { return static_cast<std::uint32_t>(std::stoi(s + 1) - 1); };
    sixteen.triplets.insert(Triplet::make(at(t[0]), at(t[1]), at(t[2])));
  }
  ClusterSystem eleven{taxa, {}};
  for (const auto& c : kElevenClusters) {
    TaxonSet s(5);
    for (int x : c) s.insert(static_cast<std::size_t>(x - 1));
    eleven.clusters.insert(s);
  }

  // (a) the network with the sixteen triplets, and a 4-outwards partner below it.
  rec.instance();
  const auto r_equal = u.equal_to(SystemKind::Triplets, triplet_bits(sixteen));
  rec.check(r_equal.size() == 1,
            [&] { return "networks with the sixteen-triplet system: " + std::to_string(r_equal.size()); });
  if (r_equal.size() == 1) {
    const std::size_t self = r_equal.front();
    const Network target = u.networks({self}).front();
    rec.note("sixteen-triplet network: " + show(target));
    rec.check(u[self].info.is_four_outwards, [&] { return show(target) + " is not 4-outwards"; });
    std::vector<std::size_t> partners;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i == self || !u[i].info.is_four_outwards || !u[i].info.is_proper) continue;
      if ((u[i].triplets & ~u[self].triplets).none()) partners.push_back(i);
    }
    rec.note("proper 4-outwards N' with R(N') strictly inside R(N): " + std::to_string(partners.size()));
    rec.check(!partners.empty(), [] { return "no 4-outwards partner below the sixteen-triplet network"; });
    if (!partners.empty()) {
      const Network partner = u.networks({partners.front()}).front();
      rec.note("partner N': " + show(partner));
      const DefinitionReport report = check_defines(triplets(partner), partner);
      rec.check(!report.defines, [&] { return show(partner) + " is unexpectedly defined by R(N')"; });
      rec.check(check_encoded(partner, SystemKind::Triplets),
                [&] { return show(partner) + " is not encoded by R(N')"; });
    }
  }

  // (b) the network with the eleven clusters, and a network displaying them.
  rec.instance();
  const auto s_equal = u.equal_to(SystemKind::Clusters, cluster_bits(eleven));
  rec.check(s_equal.size() == 1,
            [&] { return "networks with the eleven-cluster system: " + std::to_string(s_equal.size()); });
  if (s_equal.size() == 1) {
    const std::size_t self = s_equal.front();
    const Network n1 = u.networks({self}).front();
    rec.note("eleven-cluster network: " + show(n1));
    rec.check(u[self].info.is_four_outwards && !u[self].info.is_saturated,
              [&] { return show(n1) + " should be 4-outwards and not saturated"; });
    auto above = u.containing(SystemKind::Clusters, u[self].clusters);
    above.erase(std::remove(above.begin(), above.end(), self), above.end());
    rec.note("N2 with S(N1) inside S(N2): " + std::to_string(above.size()));
    rec.check(!above.empty(), [] { return "no network displays the eleven clusters besides N1"; });
    if (!above.empty()) {
      rec.note("partner N2: " + show(u.networks({above.front()}).front()));
      rec.check(u[above.front()].info.is_four_outwards, [] { return "partner N2 is not 4-outwards"; });
    }
    const DefinitionReport report = check_defines(softwired_clusters(n1), n1);
    rec.check(!report.defines, [&] { return show(n1) + " is unexpectedly defined by S(N1)"; });
  }

  // A 4-outwards, non-saturated network defined by neither of its systems.
  rec.instance();
  std::optional<std::size_t> neither;
  for (std::size_t i = 0; i < u.size() && !neither; ++i) {
    const auto& e = u[i];
    if (!e.info.is_proper || !e.info.is_four_outwards || e.info.is_saturated) continue;
    if (u.containing(SystemKind::Triplets, e.triplets).size() > 1 &&
        u.containing(SystemKind::Clusters, e.clusters).size() > 1)
      neither = i;
  }
  rec.check(neither.has_value(), [] { return "no 4-outwards network fails both definitions"; });
  if (neither) rec.note("defined by neither system: " + show(u.networks({*neither}).front()));

  // Subdividing a path of three cut arcs only adds triplets.
  std::size_t built = 0;
  for (std::size_t n = 4; n <= 5; ++n) {
    for_each_level1({default_taxa(n), {Filter::FourOutwards}, {}}, [&](const Network& net) {
      const auto bigger = subdivide_path(net);
      if (!bigger) return true;
      rec.instance();
      ++built;
      const bool ok = triplets(net).is_subset_of(triplets(*bigger)) && !equivalent(net, *bigger);
      rec.check(ok, [&] { return show(net) + " -> " + show(*bigger) + " lost a triplet"; });
      return true;
    });
  }
  rec.note("path subdivisions checked: " + std::to_string(built));
}

void five_triplets(Recorder& rec) {
  const Universe& u = Universe::get(default_taxa(4));
  std::size_t candidates = 0, with_five = 0;
  std::map<std::size_t, std::size_t> smallest;  // smallest defining subset size -> networks
  std::string witness;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].triplets.count() != 7) continue;
    ++candidates;
    std::vector<std::size_t> bits;
    for (std::size_t b = 0; b < u[i].triplets.size(); ++b)
      if (u[i].triplets[b]) bits.push_back(b);
    std::size_t best = 8;
    bool five = false;
    for (std::uint32_t sub = 0; sub < (1U << 7); ++sub) {
      SystemBits s;
      for (std::size_t k = 0; k < 7; ++k)
        if (sub >> k & 1U) s.set(bits[k]);
      const auto survivors = u.containing(SystemKind::Triplets, s);
      if (survivors != std::vector<std::size_t>{i}) continue;
      const std::size_t size = static_cast<std::size_t>(std::popcount(sub));
      rec.instance();
      best = std::min(best, size);
      if (size == 5 && !five) {
        five = true;
        if (witness.empty()) {
          const Network net = u.networks({i}).front();
          witness = show(net) + " with " +
                    write_triplets(detail::triplets_from_bits(s, u.taxa()));
          std::replace(witness.begin(), witness.end(), '\n', ' ');
        }
      }
    }
    with_five += five;
    ++smallest[best];
  }
  rec.check(with_five > 0, [] { return "no 4-leaf network with |R|=7 is defined by five of its triplets"; });
  rec.note(std::to_string(with_five) + " of " + std::to_string(candidates) +
           " networks with |R|=7 are defined by some 5-subset");
  for (const auto& [size, count] : smallest)
    rec.note("smallest defining subset of size " + std::to_string(size) + ": " + std::to_string(count) + " networks");
  if (!witness.empty()) rec.note("witness: " + witness);
}

// ---------------------------------------------------------------- infrastructure

void infrastructure(Recorder& rec, std::size_t max_n) {
  const std::size_t top = std::min<std::size_t>(max_n, 5);
  for (std::size_t n = 2; n <= top; ++n) {
    for_each_level1({default_taxa(n), {}, {}}, [&](const Network& net) {
      rec.instance();
      const std::string text = write_enewick(net);
      const Network back = parse_enewick(text);
      rec.check(equivalent(net, back) && write_enewick(back) == text,
                [&] { return text + " does not round-trip"; });
      return true;
    });
  }

  // Restriction confluence: 100 random cleanup orders per (network, subset).
  std::mt19937_64 pick(20240521);
  for (std::size_t n = 3; n <= top; ++n) {
    for_each_level1({default_taxa(n), {}, {}}, [&](const Network& net) {
      std::vector<TaxonSet> subsets;
      const std::uint32_t full = (1U << n) - 1;
      for (std::uint32_t m = 1; m < full; ++m) {
        if (std::popcount(m) < 2) continue;
        TaxonSet s(n);
        for (std::size_t i = 0; i < n; ++i)
          if (m >> i & 1U) s.insert(i);
        subsets.push_back(std::move(s));
      }
      // All subsets up to four taxa; one random subset per network at five.
      if (n == 5) subsets = {subsets[pick() % subsets.size()]};
      for (const TaxonSet& keep : subsets) {
        rec.instance();
        const std::string expected = canonical_form(restrict(net, keep));
        std::mt19937_64 rng(pick());
        for (int round = 0; round < 100; ++round) {
          const std::string got = canonical_form(restrict_random_order(net, keep, rng));
          if (got != expected) {
            rec.check(false, [&] { return show(net) + " restriction depends on the cleanup order"; });
            break;
          }
        }
      }
      return true;
    });
  }

  // canonical_form against a pairwise isomorphism search, n <= 4, with
  // each network also present under two shuffled vertex numberings.
  std::vector<Network> pool;
  for (std::size_t n = 2; n <= std::min<std::size_t>(top, 4); ++n) {
    for_each_level1({default_taxa(n), {}, {}}, [&](const Network& net) {
      pool.push_back(net);
      pool.push_back(detail::relabel_vertices(net, pool.size()));
      pool.push_back(detail::relabel_vertices(net, pool.size() * 7 + 1));
      return true;
    });
  }
  std::vector<std::string> forms;
  for (const Network& net : pool) forms.push_back(canonical_form(net));
  std::set<std::string> distinct(forms.begin(), forms.end());
  std::size_t classes = 0;
  std::vector<int> cls(pool.size(), -1);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].taxa() != pool[j].taxa()) continue;
      rec.instance();
      const bool iso = detail::isomorphic(pool[i], pool[j]);
      rec.check(iso == (forms[i] == forms[j]), [&] {
        return show(pool[i]) + " / " + show(pool[j]) + " canonical form disagrees with isomorphism search";
      });
      if (iso && cls[j] < 0) cls[j] = cls[i] >= 0 ? cls[i] : static_cast<int>(classes);
      if (iso && cls[i] < 0) cls[i] = static_cast<int>(classes);
    }
    if (cls[i] == static_cast<int>(classes)) ++classes;
  }
  rec.check(classes == distinct.size(), [&] {
    return "isomorphism classes " + std::to_string(classes) + " vs canonical forms " + std::to_string(distinct.size());
  });
  rec.note("isomorphism pool: " + std::to_string(pool.size()) + " networks, " + std::to_string(classes) + " classes");
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "bounds",          "galls",           "clusters-count",    "triplet-size",       "sn-cut",
      "samecut",         "define-triplets", "define-clusters",   "saturated-triplet",  "saturated-cluster",
      "counterexamples", "five-triplets",            "infrastructure",
  };
  return ids;
}

SuiteResult run_suite(const std::string& id, const VerifyParams& params) {
  if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end())
    throw Error(ErrorKind::UnknownSuite, id);
  SuiteResult result;
  result.id = id;
  const auto start = std::chrono::steady_clock::now();
  {
    Recorder rec(result);
    const std::size_t n = params.max_n;
    try {
      if (id == "bounds") bounds(rec, n);
      else if (id == "galls") galls_bound(rec, n);
      else if (id == "clusters-count") clusters_count(rec, n);
      else if (id == "triplet-size") triplet_size(rec, n);
      else if (id == "sn-cut") sn_cut(rec, n);
      else if (id == "samecut") samecut(rec, n);
      else if (id == "define-triplets") define_triplets(rec, n);
      else if (id == "define-clusters") define_clusters(rec, n);
      else if (id == "saturated-triplet") saturated_defines(rec, n, SystemKind::Triplets);
      else if (id == "saturated-cluster") saturated_defines(rec, n, SystemKind::Clusters);
      else if (id == "counterexamples") counterexamples(rec);
      else if (id == "five-triplets") five_triplets(rec);
      else if (id == "infrastructure") infrastructure(rec, n);
    } catch (const std::exception& e) {
      rec.check(false, [&] { return std::string("suite aborted: ") + e.what(); });
    }
  }
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

VerificationReport run_suites(const std::vector<std::string>& ids, const VerifyParams& params) {
  VerificationReport report;
  report.max_n = params.max_n;
  for (const auto& id : ids) report.suites.push_back(run_suite(id, params));
  return report;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["max_n"] = report.max_n;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : report.suites) {
    nlohmann::ordered_json e;
    e["id"] = s.id;
    e["instances"] = s.instances;
    e["failures"] = s.failures;
    e["notes"] = s.notes;
    e["elapsed_ms"] = s.elapsed_ms;
    j["suites"].push_back(std::move(e));
  }
  j["pass"] = report.pass();
  return j.dump(2);
}

}  // namespace level1
