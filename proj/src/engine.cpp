#include "mm/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mm::engine {

namespace {

// Two-level cost compared lexicographically. The first component carries the
// saturation reward, the second the (negated) edge weight, so cardinality,
// saturation and weight are prioritized without big-M arithmetic.
struct Cost {
  long long a = 0;
  long long b = 0;

  Cost operator+(const Cost& o) const { return {a + o.a, b + o.b}; }
  Cost operator-(const Cost& o) const { return {a - o.a, b - o.b}; }
  bool operator<(const Cost& o) const { return a != o.a ? a < o.a : b < o.b; }
};

struct FlowArc {
  int to;
  int cap;
  Cost cost;
  int rev;  // index of the reverse arc in graph[to]
};

struct FlowNetwork {
  std::vector<std::vector<FlowArc>> graph;

  explicit FlowNetwork(int n) : graph(n) {}

  void addArc(int from, int to, int cap, Cost cost) {
    graph[from].push_back({to, cap, cost, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, Cost{-cost.a, -cost.b}, static_cast<int>(graph[from].size()) - 1});
  }
};

// SPFA over the residual network. Deterministic: FIFO queue, arcs scanned in
// insertion order, relaxation on strict improvement only.
bool shortestAugmentingPath(const FlowNetwork& net, int source, int sink,
                            std::vector<int>& predNode, std::vector<int>& predArc) {
  const int n = static_cast<int>(net.graph.size());
  std::vector<Cost> dist(n);
  std::vector<char> reached(n, 0), inQueue(n, 0);
  predNode.assign(n, -1);
  predArc.assign(n, -1);
  std::deque<int> queue;
  dist[source] = Cost{};
  reached[source] = 1;
  queue.push_back(source);
  inQueue[source] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    inQueue[u] = 0;
    for (size_t k = 0; k < net.graph[u].size(); ++k) {
      const FlowArc& arc = net.graph[u][k];
      if (arc.cap <= 0) continue;
      const Cost cand = dist[u] + arc.cost;
      if (!reached[arc.to] || cand < dist[arc.to]) {
        dist[arc.to] = cand;
        reached[arc.to] = 1;
        predNode[arc.to] = u;
        predArc[arc.to] = static_cast<int>(k);
        if (!inQueue[arc.to]) {
          queue.push_back(arc.to);
          inQueue[arc.to] = 1;
        }
      }
    }
  }
  return reached[sink];
}

}  // namespace

MatchingOutcome maxSizeMaxWeightMatching(const WeightedBipartiteProblem& p) {
  const int numRight = static_cast<int>(p.rightCapacity.size());
  for (const auto& e : p.edges)
    if (e.left < 0 || e.left >= p.numLeft || e.right < 0 || e.right >= numRight)
      fail(ErrorKind::Contract, "bipartite edge endpoint out of range");
  for (int cap : p.rightCapacity)
    if (cap < 0) fail(ErrorKind::Contract, "negative right capacity");

  // Fixed edges are placed up front and removed from the optimization.
  std::vector<char> leftUsed(p.numLeft, 0), edgeFixed(p.edges.size(), 0);
  std::vector<int> remCap = p.rightCapacity;
  for (int e : p.fixedEdges) {
    if (e < 0 || e >= static_cast<int>(p.edges.size()))
      fail(ErrorKind::Contract, "fixed edge index out of range");
    if (edgeFixed[e]) continue;
    edgeFixed[e] = 1;
    const auto& edge = p.edges[e];
    if (leftUsed[edge.left])
      fail(ErrorKind::Contract, "fixed edges are not mutually feasible (shared left node)");
    leftUsed[edge.left] = 1;
    if (--remCap[edge.right] < 0)
      fail(ErrorKind::Contract, "fixed edges exceed a right node capacity");
  }

  std::vector<char> requireSaturated(numRight, 0);
  for (int r : p.saturatedRight) {
    if (r < 0 || r >= numRight) fail(ErrorKind::Contract, "saturated right index out of range");
    requireSaturated[r] = 1;
  }

  // Nodes: 0 = source, 1..numLeft = lefts, then rights, then sink.
  const int source = 0;
  const int leftBase = 1;
  const int rightBase = leftBase + p.numLeft;
  const int sink = rightBase + numRight;
  FlowNetwork net(sink + 1);

  for (int l = 0; l < p.numLeft; ++l)
    if (!leftUsed[l]) net.addArc(source, leftBase + l, 1, Cost{});

  std::vector<int> edgeArcPos(p.edges.size(), -1);  // position in graph[leftBase+left]
  for (size_t e = 0; e < p.edges.size(); ++e) {
    const auto& edge = p.edges[e];
    if (edgeFixed[e] || leftUsed[edge.left]) continue;
    edgeArcPos[e] = static_cast<int>(net.graph[leftBase + edge.left].size());
    net.addArc(leftBase + edge.left, rightBase + edge.right, 1, Cost{0, -edge.weight});
  }
  for (int r = 0; r < numRight; ++r)
    net.addArc(rightBase + r, sink, remCap[r],
               requireSaturated[r] ? Cost{-1, 0} : Cost{});

  std::vector<int> predNode, predArc;
  while (shortestAugmentingPath(net, source, sink, predNode, predArc)) {
    for (int v = sink; v != source; v = predNode[v]) {
      FlowArc& arc = net.graph[predNode[v]][predArc[v]];
      --arc.cap;
      ++net.graph[v][arc.rev].cap;
    }
  }

  for (int r = 0; r < numRight; ++r) {
    if (!requireSaturated[r]) continue;
    // flow into r = cap gained on the reverse arcs of its incoming edges,
    // equivalently remCap[r] minus residual on the r->sink arc.
    int residual = 0;
    for (const FlowArc& arc : net.graph[rightBase + r])
      if (arc.to == sink) residual = arc.cap;
    const int flow = remCap[r] - residual;
    if (flow < remCap[r]) {
      const int fixedHere = p.rightCapacity[r] - remCap[r];
      return SaturationInfeasible{r, fixedHere + flow, p.rightCapacity[r]};
    }
  }

  MatchingSolution sol;
  for (size_t e = 0; e < p.edges.size(); ++e) {
    bool chosen = edgeFixed[e];
    if (!chosen && edgeArcPos[e] >= 0) {
      const FlowArc& arc = net.graph[leftBase + p.edges[e].left][edgeArcPos[e]];
      chosen = arc.cap == 0;  // unit arc fully used
    }
    if (chosen) {
      sol.chosenEdges.push_back(static_cast<int>(e));
      ++sol.size;
      sol.weight += p.edges[e].weight;
    }
  }
  return sol;
}

PathsOutcome shortestPathsOrNegativeCycle(const DirectedWeightedGraph& g,
                                          const std::vector<int>& sources) {
  const int n = g.numNodes;
  for (const auto& arc : g.arcs) {
    if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n)
      fail(ErrorKind::Contract, "arc endpoint out of range");
    if (arc.from == arc.to) fail(ErrorKind::Contract, "self-loops are not permitted");
  }

  ShortestPathResult res;
  res.dist.assign(n, 0);
  res.reached.assign(n, 0);
  res.predArc.assign(n, -1);
  for (int s : sources) {
    if (s < 0 || s >= n) fail(ErrorKind::Contract, "source index out of range");
    res.reached[s] = 1;
    res.dist[s] = 0;
  }

  if (n == 0) return res;

  int lastUpdated = -1;
  for (int round = 0; round < n; ++round) {
    lastUpdated = -1;
    for (size_t k = 0; k < g.arcs.size(); ++k) {
      const Arc& arc = g.arcs[k];
      if (!res.reached[arc.from]) continue;
      const long long cand = res.dist[arc.from] + arc.weight;
      if (!res.reached[arc.to] || cand < res.dist[arc.to]) {
        res.dist[arc.to] = cand;
        res.reached[arc.to] = 1;
        res.predArc[arc.to] = static_cast<int>(k);
        lastUpdated = arc.to;
      }
    }
    if (lastUpdated == -1) return res;
  }

  // A relaxation in round n certifies a reachable negative cycle. Walk the
  // predecessor chain n steps to land on the cycle, then collect it.
  int v = lastUpdated;
  for (int i = 0; i < n; ++i) v = g.arcs[res.predArc[v]].from;
  NegativeCycle cycle;
  cycle.totalWeight = 0;
  int u = v;
  std::vector<int> rev;
  do {
    const int arcIdx = res.predArc[u];
    rev.push_back(arcIdx);
    cycle.totalWeight += g.arcs[arcIdx].weight;
    u = g.arcs[arcIdx].from;
  } while (u != v);
  cycle.arcs.assign(rev.rbegin(), rev.rend());
  if (cycle.totalWeight >= 0)
    fail(ErrorKind::Internal, "extracted cycle is not negative");
  return cycle;
}

}  // namespace mm::engine
