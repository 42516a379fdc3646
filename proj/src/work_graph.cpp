#include "work_graph.hpp"

#include <algorithm>
#include <set>

namespace level1::detail {

WorkGraph::WorkGraph(const Network& network)
    : out_(network.num_vertices()),
      in_(network.num_vertices()),
      taxon_(network.num_vertices()),
      alive_(network.num_vertices(), 1),
      names_(&network.taxa()) {
  for (VertexId v = 0; v < network.num_vertices(); ++v) {
    auto cs = network.children(v);
    auto ps = network.parents(v);
    out_[v].assign(cs.begin(), cs.end());
    in_[v].assign(ps.begin(), ps.end());
    taxon_[v] = network.taxon_of(v);
  }
}

void WorkGraph::remove_arc(VertexId tail, VertexId head) {
  auto& o = out_[tail];
  o.erase(std::find(o.begin(), o.end(), head));
  auto& i = in_[head];
  i.erase(std::find(i.begin(), i.end(), tail));
}

void WorkGraph::add_arc(VertexId tail, VertexId head) {
  out_[tail].push_back(head);
  in_[head].push_back(tail);
}

void WorkGraph::delete_vertex(VertexId v) {
  while (!in_[v].empty()) remove_arc(in_[v].back(), v);
  while (!out_[v].empty()) remove_arc(v, out_[v].back());
  alive_[v] = 0;
}

void WorkGraph::delete_taxon(std::size_t taxon) {
  for (VertexId v = 0; v < taxon_.size(); ++v) {
    if (taxon_[v] == static_cast<int>(taxon)) {
      taxon_[v] = -1;
      delete_vertex(v);
    }
  }
}

namespace {

bool has_duplicate(const std::vector<VertexId>& xs, VertexId* dup) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) {
        *dup = xs[i];
        return true;
      }
  return false;
}

}  // namespace

// Steps (i), (ii), (iii), (v): all local, found by scanning vertices.
bool WorkGraph::apply_simple_step() {
  for (VertexId v = 0; v < out_.size(); ++v) {
    if (!alive_[v]) continue;
    const std::size_t in = in_[v].size(), out = out_[v].size();
    if (out == 0 && taxon_[v] < 0) {
      apply({CleanupOp::DeleteSink, v});
      return true;
    }
    if (in == 1 && out == 1) {
      apply({CleanupOp::SuppressUnary, v});
      return true;
    }
    VertexId dup;
    if (has_duplicate(out_[v], &dup)) {
      apply({CleanupOp::CollapseMultiArc, v, dup});
      return true;
    }
    if (in == 0 && out == 1) {
      apply({CleanupOp::DeleteSource, v});
      return true;
    }
  }
  return false;
}

// Finds a non-trivial biconnected component G with exactly two outgoing arcs
// (u,v), (u',v') and a vertex r of G whose children are exactly u and u'.
bool WorkGraph::find_gall_step(CleanupStep* step) const {
  const std::size_t nv = out_.size();
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(nv);
  for (VertexId v = 0; v < nv; ++v) {
    if (!alive_[v]) continue;
    for (VertexId c : out_[v]) {
      adj[v].emplace_back(c, edges.size());
      adj[c].emplace_back(v, edges.size());
      edges.emplace_back(v, c);
    }
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(nv, kNone), low(nv, 0);
  std::vector<std::size_t> edge_stack;
  std::size_t timer = 0;
  std::vector<std::vector<VertexId>> components;

  // Recursive DFS is fine here: work graphs are derived from small networks.
  auto dfs = [&](auto&& self, VertexId v, std::size_t parent_edge) -> void {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : adj[v]) {
      if (e == parent_edge) continue;
      if (disc[w] == kNone) {
        edge_stack.push_back(e);
        self(self, w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::set<VertexId> verts;
          std::size_t count = 0;
          while (true) {
            const std::size_t f = edge_stack.back();
            edge_stack.pop_back();
            ++count;
            verts.insert(edges[f].first);
            verts.insert(edges[f].second);
            if (f == e) break;
          }
          if (count >= 2) components.emplace_back(verts.begin(), verts.end());
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (VertexId v = 0; v < nv; ++v)
    if (alive_[v] && disc[v] == kNone) dfs(dfs, v, kNone);

  for (auto& comp : components) {
    auto inside = [&](VertexId x) { return std::binary_search(comp.begin(), comp.end(), x); };
    std::vector<std::pair<VertexId, VertexId>> outgoing;
    for (VertexId x : comp)
      for (VertexId c : out_[x])
        if (!inside(c)) outgoing.emplace_back(x, c);
    if (outgoing.size() != 2) continue;
    const VertexId u = outgoing[0].first, u2 = outgoing[1].first;
    if (u == u2) continue;
    for (VertexId r : comp) {
      const auto& cs = out_[r];
      if (cs.size() == 2 && ((cs[0] == u && cs[1] == u2) || (cs[0] == u2 && cs[1] == u))) {
        *step = {CleanupOp::DissolveGall, r, 0, comp};
        return true;
      }
    }
  }
  return false;
}

std::vector<CleanupStep> WorkGraph::applicable_steps() const {
  std::vector<CleanupStep> steps;
  for (VertexId v = 0; v < out_.size(); ++v) {
    if (!alive_[v]) continue;
    const std::size_t in = in_[v].size(), out = out_[v].size();
    if (out == 0 && taxon_[v] < 0) steps.push_back({CleanupOp::DeleteSink, v});
    if (in == 1 && out == 1) steps.push_back({CleanupOp::SuppressUnary, v});
    VertexId dup;
    if (has_duplicate(out_[v], &dup)) steps.push_back({CleanupOp::CollapseMultiArc, v, dup});
    if (in == 0 && out == 1) steps.push_back({CleanupOp::DeleteSource, v});
  }
  CleanupStep gall;
  if (find_gall_step(&gall)) steps.push_back(std::move(gall));
  return steps;
}

void WorkGraph::apply(const CleanupStep& step) {
  const VertexId v = step.vertex;
  switch (step.op) {
    case CleanupOp::SuppressUnary: {
      const VertexId p = in_[v][0], c = out_[v][0];
      delete_vertex(v);
      add_arc(p, c);
      break;
    }
    case CleanupOp::DeleteSink:
    case CleanupOp::DeleteSource:
      delete_vertex(v);
      break;
    case CleanupOp::CollapseMultiArc:
      remove_arc(v, step.other);
      break;
    case CleanupOp::DissolveGall: {
      const auto& comp = step.component;
      auto inside = [&](VertexId x) { return std::binary_search(comp.begin(), comp.end(), x); };
      std::vector<VertexId> heads;
      std::vector<std::pair<VertexId, VertexId>> doomed;
      for (VertexId x : comp) {
        for (VertexId c : out_[x]) {
          if (!inside(c)) heads.push_back(c);
          doomed.emplace_back(x, c);
        }
      }
      for (auto [a, b] : doomed) remove_arc(a, b);
      for (VertexId h : heads) add_arc(v, h);
      for (VertexId x : comp)
        if (x != v && in_[x].empty() && out_[x].empty()) alive_[x] = 0;
      break;
    }
  }
}

void WorkGraph::clean() {
  while (true) {
    if (apply_simple_step()) continue;
    CleanupStep step;
    if (!find_gall_step(&step)) return;
    apply(step);
  }
}

void WorkGraph::clean_random(std::mt19937_64& rng) {
  while (true) {
    auto steps = applicable_steps();
    if (steps.empty()) return;
    apply(steps[rng() % steps.size()]);
  }
}

Network WorkGraph::to_network() const {
  RawGraph raw;
  for (VertexId v = 0; v < out_.size(); ++v) {
    if (!alive_[v]) continue;
    for (VertexId c : out_[v]) raw.add_arc(v, c);
    if (taxon_[v] >= 0) raw.set_label(v, (*names_)[static_cast<std::size_t>(taxon_[v])]);
  }
  return Network::validate(raw);
}

}  // namespace level1::detail
