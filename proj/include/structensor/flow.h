#ifndef STRUCTENSOR_FLOW_H_
#define STRUCTENSOR_FLOW_H_

#include <cstdint>
#include <string>
#include <vector>

#include "structensor/instance.h"
#include "structensor/matrix.h"

namespace structensor {

struct FlowArc {
  int from = 0;
  int to = 0;
  std::int64_t capacity = 0;
};

// Bipartite s-t network of a matrix class. Node ids are fixed: source 0,
// supply node of column j at 1 + j, demand node of row n at 1 + T + n,
// sink at T + N + 1. Arcs are stored as: T source arcs, then N sink
// arcs, then one arc per allowed cell in column-major order.
class FlowNetwork {
 public:
  FlowNetwork(int num_cols, int num_rows) : cols_(num_cols), rows_(num_rows) {}

  int num_cols() const { return cols_; }
  int num_rows() const { return rows_; }
  int num_nodes() const { return cols_ + rows_ + 2; }
  int source() const { return 0; }
  int sink() const { return cols_ + rows_ + 1; }
  int SupplyNode(int j) const { return 1 + j; }
  int DemandNode(int n) const { return 1 + cols_ + n; }
  bool IsSupplyNode(int v) const { return v >= 1 && v <= cols_; }
  bool IsDemandNode(int v) const { return v > cols_ && v <= cols_ + rows_; }

  const std::vector<FlowArc>& arcs() const { return arcs_; }
  int AddArc(int from, int to, std::int64_t capacity);

  // DIMACS max-flow text with 1-based node ids.
  std::string ToDimacs() const;

 private:
  int cols_;
  int rows_;
  std::vector<FlowArc> arcs_;
};

// Source arcs carry h_j, sink arcs r_n and the middle arc of an allowed
// cell carries the row ceiling (one in the (0,1) case).
FlowNetwork BuildNetwork(const Instance& instance);

struct MaxFlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // parallel to FlowNetwork::arcs()
};

// Dinic's algorithm: BFS layering plus blocking flows. Integral.
MaxFlowResult MaxFlow(const FlowNetwork& net);

// A(n, j) = flow on the arc from column j to row n.
IntMatrix ExtractMatrix(const FlowNetwork& net, const MaxFlowResult& flow);

// An s-t cut given by the columns M on the source side and the rows L on
// the sink side.
struct CutCertificate {
  std::vector<int> columns;  // M, 0-based ascending
  std::vector<int> rows;     // L, 0-based ascending
  std::int64_t capacity = 0;
};

// Capacity of the cut with source side {s} ∪ M ∪ (rows \ L):
//   (|h| - h(M)) + (|r| - r(L)) + Σ_{n in L, j in M} c(j, n).
std::int64_t CutCapacity(const FlowNetwork& net,
                         const std::vector<bool>& in_m,
                         const std::vector<bool>& in_l);

// Minimum cut read off the residual graph of a maximum flow.
CutCertificate MinCut(const FlowNetwork& net, const MaxFlowResult& flow);
CutCertificate MinCut(const FlowNetwork& net);

}  // namespace structensor

#endif  // STRUCTENSOR_FLOW_H_
