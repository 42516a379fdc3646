#include "level1kit/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "canonical.hpp"

namespace level1 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::MultipleRoots: return "MultipleRoots";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::LevelExceeded: return "LevelExceeded";
    case ErrorKind::ShortCycle: return "ShortCycle";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ParallelArc: return "ParallelArc";
    case ErrorKind::TooFewLeaves: return "TooFewLeaves";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::LabelSetMismatch: return "LabelSetMismatch";
    case ErrorKind::UnknownTaxon: return "UnknownTaxon";
    case ErrorKind::TooFewTaxa: return "TooFewTaxa";
    case ErrorKind::TooManyTaxa: return "TooManyTaxa";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::DuplicateTaxon: return "DuplicateTaxon";
    case ErrorKind::BadRepresentative: return "BadRepresentative";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::HybridTagMismatch: return "HybridTagMismatch";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

namespace {

struct Component {
  std::vector<VertexId> vertices;
  std::size_t num_edges = 0;
};

// Biconnected components of the underlying undirected graph, edges given as
// arcs. Iterative Tarjan so deep caterpillars do not exhaust the stack.
std::vector<Component> biconnected_components(std::size_t num_vertices,
                                              const std::vector<Arc>& arcs) {
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(num_vertices);
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    adj[arcs[e].tail].emplace_back(arcs[e].head, e);
    adj[arcs[e].head].emplace_back(arcs[e].tail, e);
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(num_vertices, kNone), low(num_vertices, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<Component> out;
  std::size_t timer = 0;

  struct Frame {
    VertexId v;
    std::size_t parent_edge;
    std::size_t next;
  };

  for (VertexId s = 0; s < num_vertices; ++s) {
    if (disc[s] != kNone) continue;
    disc[s] = low[s] = timer++;
    std::vector<Frame> frames{{s, kNone, 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      const VertexId v = f.v;
      if (f.next < adj[v].size()) {
        auto [w, e] = adj[v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == kNone) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          frames.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const std::size_t parent_edge = f.parent_edge;
      frames.pop_back();
      if (frames.empty()) break;
      const VertexId u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        Component comp;
        std::set<VertexId> verts;
        while (true) {
          const std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          ++comp.num_edges;
          verts.insert(arcs[e].tail);
          verts.insert(arcs[e].head);
          if (e == parent_edge) break;
        }
        comp.vertices.assign(verts.begin(), verts.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

std::string describe_vertex(const std::vector<long long>& original, VertexId v) {
  return "vertex " + std::to_string(original[v]);
}

}  // namespace

Network Network::validate(const RawGraph& raw) {
  // Dense ids in increasing order of the caller's ids.
  std::vector<long long> original;
  for (const auto& [t, h] : raw.arcs) {
    original.push_back(t);
    original.push_back(h);
  }
  for (const auto& [v, name] : raw.labels) original.push_back(v);
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  auto dense = [&](long long id) {
    return static_cast<VertexId>(std::lower_bound(original.begin(), original.end(), id) -
                                 original.begin());
  };
  const std::size_t nv = original.size();

  {
    std::set<std::string> seen;
    for (const auto& [v, name] : raw.labels) {
      if (!seen.insert(name).second) throw Error(ErrorKind::DuplicateLabel, name);
    }
  }

  Network net;
  net.children_.assign(nv, {});
  net.parents_.assign(nv, {});
  std::vector<Arc> arcs;
  {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [t, h] : raw.arcs) {
      const VertexId u = dense(t), w = dense(h);
      if (u == w) throw Error(ErrorKind::NotAcyclic, "self-loop at " + describe_vertex(original, u));
      if (!seen.emplace(u, w).second)
        throw Error(ErrorKind::ParallelArc, describe_vertex(original, u) + " -> " +
                                                describe_vertex(original, w));
      net.children_[u].push_back(w);
      net.parents_[w].push_back(u);
      arcs.push_back({u, w});
    }
  }
  net.num_arcs_ = arcs.size();

  // Kahn's algorithm; the order is reused as the topological order.
  {
    std::vector<std::size_t> indeg(nv);
    for (VertexId v = 0; v < nv; ++v) indeg[v] = net.parents_[v].size();
    std::vector<VertexId> sources;
    for (VertexId v = 0; v < nv; ++v)
      if (indeg[v] == 0) sources.push_back(v);
    std::vector<VertexId> queue = sources;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId c : net.children_[queue[head]])
        if (--indeg[c] == 0) queue.push_back(c);
    }
    if (queue.size() != nv) throw Error(ErrorKind::NotAcyclic, "directed cycle present");
    if (sources.size() != 1)
      throw Error(ErrorKind::MultipleRoots, std::to_string(sources.size()) + " vertices of in-degree 0");
    net.root_ = sources.front();
    net.topo_ = std::move(queue);
  }

  net.taxon_of_.assign(nv, -1);
  std::vector<std::pair<std::string, VertexId>> leaves;
  for (VertexId v = 0; v < nv; ++v) {
    const std::size_t in = net.parents_[v].size(), out = net.children_[v].size();
    const long long id = original[v];
    const bool labeled = raw.labels.count(id) > 0;
    bool ok;
    if (v == net.root_) {
      ok = out == 2 && !labeled;
    } else if (out == 0) {
      ok = in == 1 && labeled;
    } else {
      ok = !labeled && ((in == 1 && out == 2) || (in == 2 && out == 1));
    }
    if (!ok) {
      throw Error(ErrorKind::DegreeViolation,
                  describe_vertex(original, v) + " (in " + std::to_string(in) + ", out " +
                      std::to_string(out) + (labeled ? ", labeled " + raw.labels.at(id) : "") + ")");
    }
    if (out == 0) leaves.emplace_back(raw.labels.at(id), v);
  }
  if (leaves.size() < 2) throw Error(ErrorKind::TooFewLeaves, std::to_string(leaves.size()) + " leaves");
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    net.taxa_.push_back(leaves[i].first);
    net.leaf_of_.push_back(leaves[i].second);
    net.taxon_of_[leaves[i].second] = static_cast<int>(i);
  }

  net.gall_of_.assign(nv, -1);
  for (const Component& comp : biconnected_components(nv, arcs)) {
    if (comp.num_edges < 2) continue;
    std::vector<VertexId> hybrids;
    for (VertexId v : comp.vertices)
      if (net.parents_[v].size() == 2) hybrids.push_back(v);
    if (hybrids.size() != 1 || comp.num_edges != comp.vertices.size()) {
      throw Error(ErrorKind::LevelExceeded, "component containing " +
                                                describe_vertex(original, comp.vertices.front()) +
                                                " has " + std::to_string(hybrids.size()) +
                                                " hybrid vertices");
    }
    std::string members;
    for (VertexId v : comp.vertices) members += (members.empty() ? "" : ",") + std::to_string(original[v]);
    if (comp.vertices.size() < 4) throw Error(ErrorKind::ShortCycle, "cycle {" + members + "}");

    const int index = static_cast<int>(net.galls_.size());
    for (VertexId v : comp.vertices) net.gall_of_[v] = index;
    Gall gall;
    gall.hybrid = hybrids.front();
    for (VertexId v : comp.vertices) {
      const auto& ps = net.parents_[v];
      if (std::none_of(ps.begin(), ps.end(), [&](VertexId p) { return net.gall_of_[p] == index; }))
        gall.root = v;
    }
    auto walk = [&](VertexId start) {
      std::vector<VertexId> side;
      VertexId cur = start;
      while (cur != gall.hybrid) {
        side.push_back(cur);
        for (VertexId c : net.children_[cur]) {
          if (net.gall_of_[c] == index) {
            cur = c;
            break;
          }
        }
      }
      return side;
    };
    gall.first_side = walk(net.children_[gall.root][0]);
    gall.second_side = walk(net.children_[gall.root][1]);
    gall.cycle.push_back(gall.root);
    gall.cycle.insert(gall.cycle.end(), gall.first_side.begin(), gall.first_side.end());
    gall.cycle.push_back(gall.hybrid);
    gall.cycle.insert(gall.cycle.end(), gall.second_side.rbegin(), gall.second_side.rend());
    for (VertexId v : gall.cycle)
      for (VertexId c : net.children_[v])
        if (net.gall_of_[c] != index) gall.outgoing.push_back({v, c});
    net.galls_.push_back(std::move(gall));
  }
  return net;
}

const std::string& Network::label(VertexId v) const {
  static const std::string kEmpty;
  return taxon_of_[v] < 0 ? kEmpty : taxa_[static_cast<std::size_t>(taxon_of_[v])];
}

std::size_t Network::taxon_index(std::string_view name) const {
  auto it = std::lower_bound(taxa_.begin(), taxa_.end(), name);
  if (it == taxa_.end() || *it != name) throw Error(ErrorKind::UnknownTaxon, std::string(name));
  return static_cast<std::size_t>(it - taxa_.begin());
}

VertexId Network::leaf(std::string_view name) const { return leaf_of_[taxon_index(name)]; }

std::vector<Arc> Network::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs_);
  for (VertexId v = 0; v < children_.size(); ++v)
    for (VertexId c : children_[v]) out.push_back({v, c});
  return out;
}

std::vector<TaxonSet> Network::vertex_clusters() const {
  std::vector<TaxonSet> clusters(num_vertices(), TaxonSet(num_taxa()));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const VertexId v = *it;
    if (taxon_of_[v] >= 0) clusters[v].insert(static_cast<std::size_t>(taxon_of_[v]));
    for (VertexId c : children_[v]) clusters[v] |= clusters[c];
  }
  return clusters;
}

const std::vector<Gall>& galls(const Network& network) { return network.galls(); }

CutArcs cut_arcs(const Network& network) {
  CutArcs out;
  for (const Arc& a : network.arcs()) {
    if (!network.is_cut_arc(a.tail, a.head)) continue;
    (network.is_leaf(a.head) ? out.trivial : out.non_trivial).push_back(a);
  }
  return out;
}

Classification classify(const Network& network) {
  Classification c;
  c.n = network.num_taxa();
  c.num_vertices = network.num_vertices();
  c.num_arcs = network.num_arcs();
  c.g = network.galls().size();
  c.is_tree = c.g == 0;
  c.is_proper = c.g >= 1;

  std::vector<int> incident(network.num_vertices(), 0);
  for (const Arc& a : network.arcs()) {
    if (!network.is_cut_arc(a.tail, a.head)) continue;
    if (!network.is_leaf(a.head)) ++c.c;
    ++incident[a.tail];
    ++incident[a.head];
  }
  c.is_saturated = std::all_of(incident.begin(), incident.end(), [](int k) { return k <= 1; });
  c.is_four_outwards = std::all_of(network.galls().begin(), network.galls().end(),
                                   [](const Gall& g) { return g.cycle.size() > 4; });
  if (c.g == 1) {
    const Gall& gall = network.galls().front();
    c.is_simple = std::all_of(gall.outgoing.begin(), gall.outgoing.end(),
                              [&](const Arc& a) { return network.is_leaf(a.head); }) &&
                  gall.root == network.root();
  }
  return c;
}

BoundsReport vertex_arc_bounds(const Network& network) {
  const Classification c = classify(network);
  if (!c.is_proper) throw Error(ErrorKind::NotProper, "network has no gall");
  const std::size_t n = c.n, v = c.num_vertices, a = c.num_arcs, g = c.g;
  BoundsReport r;
  // floor(3.5 (n - 1)) == (7n - 7) / 2 in integers.
  r.lower_ok = v >= 2 * n + 1 && a >= 2 * n + 1;
  r.upper_ok = v <= 3 * n - 2 && a <= (7 * n - 7) / 2;
  r.vertex_identity_ok = v == 2 * n - 1 + 2 * g;
  r.arc_identity_ok = a + 2 == 2 * n + 3 * g;
  return r;
}

namespace {

std::string escape_label(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ',' || ch == '|' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

}  // namespace

namespace detail {

std::string encode(const Network& net, VertexId v) {
  if (net.is_leaf(v)) return escape_label(net.label(v));
  const int g = net.gall_of(v);
  if (g >= 0) {
    const Gall& gall = net.galls()[static_cast<std::size_t>(g)];
    auto pendant = [&](VertexId s) {
      for (VertexId c : net.children(s))
        if (net.gall_of(c) != g) return encode(net, c);
      return std::string();
    };
    std::vector<std::string> a, b;
    for (VertexId s : gall.first_side) a.push_back(pendant(s));
    for (VertexId s : gall.second_side) b.push_back(pendant(s));
    if (b < a) std::swap(a, b);
    return "[" + join(a) + "|" + join(b) + "|" + pendant(gall.hybrid) + "]";
  }
  std::string x = encode(net, net.children(v)[0]);
  std::string y = encode(net, net.children(v)[1]);
  if (y < x) std::swap(x, y);
  return "(" + x + "," + y + ")";
}

}  // namespace detail

std::string canonical_form(const Network& network) { return detail::encode(network, network.root()); }

bool equivalent(const Network& a, const Network& b) {
  if (a.taxa() != b.taxa()) throw Error(ErrorKind::LabelSetMismatch, "networks are on different taxon sets");
  return canonical_form(a) == canonical_form(b);
}

}  // namespace level1
