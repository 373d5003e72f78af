// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gammoid/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammoid {

int Digraph::arc_count() const {
  int c = 0;
  for (int v = 0; v < n; ++v) c += forward(v).size();
  return c;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out_arcs;
  out_arcs.reserve(static_cast<std::size_t>(arc_count()));
  for (int u = 0; u < n; ++u) {
    for (int v : forward(u).elements()) out_arcs.emplace_back(u, v);
  }
  return out_arcs;
}

namespace {

// Unit-capacity flow on the vertex-split digraph: v_in = 2v, v_out = 2v+1,
// source = 2n, target = 2n+1. Every arc has capacity one; vertex capacities
// come from the in->out split arcs. Adjacency lists are built in ascending
// order and BFS scans them in that order, so augmenting paths, and with them
// the extracted linkings, are deterministic.
class SplitFlow {
 public:
  SplitFlow(const Digraph& d, ElemSet x) : node_count_(2 * d.n + 2) {
    head_.assign(static_cast<std::size_t>(node_count_), -1);
    for (int v = 0; v < d.n; ++v) add_edge(2 * v, 2 * v + 1);
    for (int u = 0; u < d.n; ++u) {
      for (int v : d.forward(u).elements()) add_edge(2 * u + 1, 2 * v);
    }
    for (int v : x.elements()) add_edge(source(), 2 * v);
    for (int v : d.sinks.elements()) add_edge(2 * v + 1, target());
  }

  int source() const { return node_count_ - 2; }
  int target() const { return node_count_ - 1; }

  int max_flow() {
    int total = 0;
    while (augment()) ++total;
    return total;
  }

  // Outgoing edge of `node` carrying flow, or -1. Unique for split nodes,
  // whose inflow is capped at one; the source is handled via used_starts().
  int flow_edge_from(int node) const {
    for (int e = head_[static_cast<std::size_t>(node)]; e >= 0;
         e = next_[static_cast<std::size_t>(e)]) {
      if ((e & 1) == 0 && cap_[static_cast<std::size_t>(e)] == 0) return e;
    }
    return -1;
  }

  int edge_to(int e) const { return to_[static_cast<std::size_t>(e)]; }

  // Vertices whose source edge carries flow, ascending.
  std::vector<int> used_starts() const {
    std::vector<int> starts;
    for (int e = head_[static_cast<std::size_t>(source())]; e >= 0;
         e = next_[static_cast<std::size_t>(e)]) {
      if ((e & 1) == 0 && cap_[static_cast<std::size_t>(e)] == 0) {
        starts.push_back(to_[static_cast<std::size_t>(e)] / 2);
      }
    }
    std::sort(starts.begin(), starts.end());
    return starts;
  }

  bool source_edge_saturated(int vertex) const {
    for (int e = head_[static_cast<std::size_t>(source())]; e >= 0;
         e = next_[static_cast<std::size_t>(e)]) {
      if ((e & 1) == 0 && to_[static_cast<std::size_t>(e)] == 2 * vertex) {
        return cap_[static_cast<std::size_t>(e)] == 0;
      }
    }
    return false;
  }

  // Nodes reachable from the source in the residual graph of the max flow.
  std::vector<char> reachable_from_source() const {
    std::vector<char> seen(static_cast<std::size_t>(node_count_), 0);
    std::vector<int> queue = {source()};
    seen[static_cast<std::size_t>(source())] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int e = head_[static_cast<std::size_t>(u)]; e >= 0;
           e = next_[static_cast<std::size_t>(e)]) {
        int v = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 &&
            !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

  // Nodes from which the target is reachable in the residual graph.
  std::vector<char> reaches_target() const {
    std::vector<std::vector<int>> reverse(
        static_cast<std::size_t>(node_count_));
    for (std::size_t e = 0; e < to_.size(); ++e) {
      if (cap_[e] > 0) {
        // Edge tail is the head of its paired reverse edge.
        reverse[static_cast<std::size_t>(to_[e])].push_back(
            to_[e ^ std::size_t{1}]);
      }
    }
    std::vector<char> seen(static_cast<std::size_t>(node_count_), 0);
    std::vector<int> queue = {target()};
    seen[static_cast<std::size_t>(target())] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (int u : reverse[static_cast<std::size_t>(queue[qi])]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  void add_edge(int u, int v) {
    // Forward edges get even ids, residual edges odd ids.
    to_.push_back(v);
    cap_.push_back(1);
    next_.push_back(head_[static_cast<std::size_t>(u)]);
    head_[static_cast<std::size_t>(u)] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    cap_.push_back(0);
    next_.push_back(head_[static_cast<std::size_t>(v)]);
    head_[static_cast<std::size_t>(v)] = static_cast<int>(to_.size()) - 1;
  }

  bool augment() {
    std::vector<int> parent_edge(static_cast<std::size_t>(node_count_), -1);
    std::vector<char> seen(static_cast<std::size_t>(node_count_), 0);
    std::vector<int> queue = {source()};
    seen[static_cast<std::size_t>(source())] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      // head_ holds edges in reverse insertion order; collect and reverse so
      // lower-indexed targets are explored first.
      std::vector<int> edges;
      for (int e = head_[static_cast<std::size_t>(u)]; e >= 0;
           e = next_[static_cast<std::size_t>(e)]) {
        edges.push_back(e);
      }
      std::reverse(edges.begin(), edges.end());
      for (int e : edges) {
        int v = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 &&
            !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          parent_edge[static_cast<std::size_t>(v)] = e;
          if (v == target()) {
            for (int cur = target(); cur != source();) {
              int pe = parent_edge[static_cast<std::size_t>(cur)];
              cap_[static_cast<std::size_t>(pe)] -= 1;
              cap_[static_cast<std::size_t>(pe ^ 1)] += 1;
              cur = to_[static_cast<std::size_t>(pe ^ 1)];
            }
            return true;
          }
          queue.push_back(v);
        }
      }
    }
    return false;
  }

  int node_count_;
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
};

}  // namespace

Linking linking_rank(const Digraph& d, ElemSet x) {
  SplitFlow flow(d, x);
  Linking linking;
  linking.rank = flow.max_flow();

  for (int start : flow.used_starts()) {
    std::vector<int> path;
    int node = 2 * start;
    while (true) {
      path.push_back(node / 2);
      int out_edge = flow.flow_edge_from(node + 1);  // from v_out
      if (out_edge < 0) break;
      int nxt = flow.edge_to(out_edge);
      if (nxt == flow.target()) break;
      node = nxt;
    }
    linking.paths.push_back(std::move(path));
  }
  return linking;
}

int linking_rank_value(const Digraph& d, ElemSet x) {
  SplitFlow flow(d, x);
  return flow.max_flow();
}

Matroid strict_gammoid(const Digraph& d) {
  Matroid::Ops ops;
  ops.rank = [d](ElemSet x) { return linking_rank_value(d, x); };
  // One max flow answers closure and restriction coloops for the whole set:
  // y joins the closure exactly when its in-node cannot reach the target in
  // the residual graph, and a linked x is a restriction coloop exactly when
  // its flow cannot be rerouted, i.e. the source no longer reaches its
  // in-node.
  ops.closure = [d](ElemSet x) {
    SplitFlow flow(d, x);
    flow.max_flow();
    std::vector<char> reach = flow.reaches_target();
    ElemSet out = x;
    for (int y = 0; y < d.n; ++y) {
      if (!x.contains(y) && !reach[static_cast<std::size_t>(2 * y)]) {
        out = out.with(y);
      }
    }
    return out;
  };
  ops.restriction_coloops = [d](ElemSet x) {
    SplitFlow flow(d, x);
    flow.max_flow();
    std::vector<char> reach = flow.reachable_from_source();
    ElemSet out;
    for (int v : x.elements()) {
      if (flow.source_edge_saturated(v) &&
          !reach[static_cast<std::size_t>(2 * v)]) {
        out = out.with(v);
      }
    }
    return out;
  };
  return Matroid(d.n, std::move(ops));
}

Minor gammoid_on(const Digraph& d, ElemSet ground_subset) {
  return restrict_to(strict_gammoid(d), ground_subset);
}

Digraph drop_vertex(const Digraph& d, int e) {
  auto shift = [e](ElemSet s) {
    ElemSet out;
    for (int v : s.elements()) {
      if (v < e) out = out.with(v);
      if (v > e) out = out.with(v - 1);
    }
    return out;
  };
  Digraph result = Digraph::empty(d.n - 1, shift(d.sinks.without(e)));
  for (int v = 0; v < d.n; ++v) {
    if (v == e) continue;
    result.out[static_cast<std::size_t>(v < e ? v : v - 1)] =
        shift(d.forward(v).without(e));
  }
  return result;
}

Digraph maximalize(const Digraph& d) {
  Matroid m = strict_gammoid(d);
  Digraph result = Digraph::empty(d.n, d.sinks);
  for (int v = 0; v < d.n; ++v) {
    if (d.sinks.contains(v)) continue;
    result.out[static_cast<std::size_t>(v)] =
        m.closure(d.closed_forward(v)).without(v);
  }

  // The matroid is unchanged by the added arcs, so each new neighbourhood is
  // closed and a second pass can add nothing. Verify against the result's own
  // matroid rather than trusting that argument.
  Matroid check = strict_gammoid(result);
  for (int v = 0; v < result.n; ++v) {
    if (result.sinks.contains(v)) continue;
    if (check.closure(result.closed_forward(v)) != result.closed_forward(v)) {
      throw std::logic_error("maximalize: fixpoint verification failed");
    }
  }
  return result;
}

FlatFamily read_flats(const Digraph& d_max) {
  Matroid m = strict_gammoid(d_max);
  FlatFamily family{d_max.n, {}};
  for (int v = 0; v < d_max.n; ++v) {
    if (d_max.sinks.contains(v)) continue;
    ElemSet hood = d_max.closed_forward(v);
    bool found = false;
    for (FlatRecord& rec : family.flats) {
      if (rec.set == hood) {
        rec.value = *rec.value + 1;
        found = true;
        break;
      }
    }
    if (!found) {
      family.flats.push_back(FlatRecord{hood, m.rank(hood), 1});
    }
  }
  family.sort_canonical();
  return family;
}

ConstructResult construct_from_flats(const FlatFamily& family, int n) {
  FlatFamily sorted = family;
  sorted.sort_canonical();

  int total = 0;
  for (const FlatRecord& rec : sorted.flats) {
    if (!rec.value || *rec.value < 1) {
      throw std::invalid_argument(
          "construct_from_flats: every member needs a value >= 1");
    }
    total += *rec.value;
  }
  if (total > n) {
    return ConstructResult{ConstructResult::kBoundExceeded, std::nullopt, {},
                           total};
  }

  SetSystem multiset{n, {}};
  for (const FlatRecord& rec : sorted.flats) {
    for (int c = 0; c < *rec.value; ++c) multiset.sets.push_back(rec.set);
  }

  TransversalResult tr = transversal_of(multiset);
  if (!tr.ok()) {
    return ConstructResult{ConstructResult::kNoTransversal, std::nullopt,
                           tr.hall_witness, total};
  }

  Digraph d = Digraph::empty(n, ElemSet::full(n));
  for (const auto& [e, j] : tr.matching->pairs()) {
    d.out[static_cast<std::size_t>(e)] =
        multiset.sets[static_cast<std::size_t>(j)].without(e);
    d.sinks = d.sinks.without(e);
  }
  return ConstructResult{ConstructResult::kOk, std::move(d), {}, total};
}

SetSystem neighbourhood_multiset(const Digraph& d) {
  SetSystem system{d.n, {}};
  for (int v = 0; v < d.n; ++v) {
    if (d.sinks.contains(v)) continue;
    system.sets.push_back(d.closed_forward(v));
  }
  return system;
}

}  // namespace gammoid
