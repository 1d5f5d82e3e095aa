#include "structensor/flow.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "structensor/errors.h"

namespace structensor {

int FlowNetwork::AddArc(int from, int to, std::int64_t capacity) {
  if (from < 0 || from >= num_nodes() || to < 0 || to >= num_nodes()) {
    throw InvalidInstance("arc endpoint out of range");
  }
  if (capacity < 0) throw InvalidInstance("negative arc capacity");
  arcs_.push_back(FlowArc{from, to, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

std::string FlowNetwork::ToDimacs() const {
  std::ostringstream out;
  out << "p max " << num_nodes() << ' ' << arcs_.size() << '\n';
  out << "n " << source() + 1 << " s\n";
  out << "n " << sink() + 1 << " t\n";
  for (const FlowArc& a : arcs_) {
    out << "a " << a.from + 1 << ' ' << a.to + 1 << ' ' << a.capacity << '\n';
  }
  return out.str();
}

FlowNetwork BuildNetwork(const Instance& instance) {
  instance.Validate();
  const int cols = instance.num_cols();
  const int rows = instance.num_rows();
  FlowNetwork net(cols, rows);
  for (int j = 0; j < cols; ++j) {
    net.AddArc(net.source(), net.SupplyNode(j), instance.h[j]);
  }
  for (int n = 0; n < rows; ++n) {
    net.AddArc(net.DemandNode(n), net.sink(), instance.r[n]);
  }
  for (int j = 0; j < cols; ++j) {
    for (int n = 0; n < rows; ++n) {
      if (instance.pattern(n, j)) {
        net.AddArc(net.SupplyNode(j), net.DemandNode(n), instance.ceiling(n));
      }
    }
  }
  return net;
}

namespace {

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : source_(net.source()),
        sink_(net.sink()),
        adjacency_(net.num_nodes()),
        level_(net.num_nodes()),
        next_(net.num_nodes()) {
    const auto& arcs = net.arcs();
    edges_.reserve(arcs.size() * 2);
    for (const FlowArc& a : arcs) {
      adjacency_[a.from].push_back(static_cast<int>(edges_.size()));
      edges_.push_back(Edge{a.to, a.capacity});
      adjacency_[a.to].push_back(static_cast<int>(edges_.size()));
      edges_.push_back(Edge{a.from, 0});
    }
  }

  std::int64_t Run() {
    std::int64_t total = 0;
    while (BuildLevels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed =
                 Augment(source_, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  // Flow on original arc a: what its reverse edge has accumulated.
  std::int64_t FlowOn(std::size_t a) const { return edges_[2 * a + 1].residual; }

 private:
  struct Edge {
    int to;
    std::int64_t residual;
  };

  bool BuildLevels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> frontier;
    level_[source_] = 0;
    frontier.push(source_);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int e : adjacency_[u]) {
        const Edge& edge = edges_[e];
        if (edge.residual > 0 && level_[edge.to] < 0) {
          level_[edge.to] = level_[u] + 1;
          frontier.push(edge.to);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  std::int64_t Augment(int u, std::int64_t limit) {
    if (u == sink_) return limit;
    for (std::size_t& i = next_[u]; i < adjacency_[u].size(); ++i) {
      const int e = adjacency_[u][i];
      Edge& edge = edges_[e];
      if (edge.residual <= 0 || level_[edge.to] != level_[u] + 1) continue;
      const std::int64_t pushed =
          Augment(edge.to, std::min(limit, edge.residual));
      if (pushed > 0) {
        edge.residual -= pushed;
        edges_[e ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int source_;
  int sink_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

MaxFlowResult MaxFlow(const FlowNetwork& net) {
  Dinic solver(net);
  MaxFlowResult result;
  result.value = solver.Run();
  result.arc_flow.resize(net.arcs().size());
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    result.arc_flow[a] = solver.FlowOn(a);
  }
  return result;
}

IntMatrix ExtractMatrix(const FlowNetwork& net, const MaxFlowResult& flow) {
  IntMatrix a(net.num_rows(), net.num_cols());
  const auto& arcs = net.arcs();
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    if (net.IsSupplyNode(arcs[e].from) && net.IsDemandNode(arcs[e].to)) {
      const int j = arcs[e].from - 1;
      const int n = arcs[e].to - 1 - net.num_cols();
      a(n, j) += flow.arc_flow[e];
    }
  }
  return a;
}

std::int64_t CutCapacity(const FlowNetwork& net, const std::vector<bool>& in_m,
                         const std::vector<bool>& in_l) {
  std::int64_t supply_outside_m = 0;
  std::int64_t demand_outside_l = 0;
  std::int64_t crossing = 0;
  for (const FlowArc& a : net.arcs()) {
    if (a.from == net.source()) {
      if (!in_m[a.to - 1]) supply_outside_m += a.capacity;
    } else if (a.to == net.sink()) {
      if (!in_l[a.from - 1 - net.num_cols()]) demand_outside_l += a.capacity;
    } else if (in_m[a.from - 1] && in_l[a.to - 1 - net.num_cols()]) {
      crossing += a.capacity;
    }
  }
  return supply_outside_m + demand_outside_l + crossing;
}

CutCertificate MinCut(const FlowNetwork& net, const MaxFlowResult& flow) {
  std::vector<std::vector<int>> residual(net.num_nodes());
  const auto& arcs = net.arcs();
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    if (flow.arc_flow[e] < arcs[e].capacity) {
      residual[arcs[e].from].push_back(arcs[e].to);
    }
    if (flow.arc_flow[e] > 0) residual[arcs[e].to].push_back(arcs[e].from);
  }
  std::vector<bool> reached(net.num_nodes(), false);
  std::queue<int> frontier;
  reached[net.source()] = true;
  frontier.push(net.source());
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : residual[u]) {
      if (!reached[v]) {
        reached[v] = true;
        frontier.push(v);
      }
    }
  }
  CutCertificate cut;
  std::vector<bool> in_m(net.num_cols(), false);
  std::vector<bool> in_l(net.num_rows(), false);
  for (int j = 0; j < net.num_cols(); ++j) {
    if (reached[net.SupplyNode(j)]) {
      in_m[j] = true;
      cut.columns.push_back(j);
    }
  }
  for (int n = 0; n < net.num_rows(); ++n) {
    if (!reached[net.DemandNode(n)]) {
      in_l[n] = true;
      cut.rows.push_back(n);
    }
  }
  cut.capacity = CutCapacity(net, in_m, in_l);
  return cut;
}

CutCertificate MinCut(const FlowNetwork& net) {
  return MinCut(net, MaxFlow(net));
}

}  // namespace structensor
