#include "structensor/completion.h"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

#include "structensor/errors.h"
#include "structensor/flow.h"
#include "structensor/majorization.h"
#include "structensor/services.h"

namespace structensor {

bool GaleRyserCheck(std::span<const std::int64_t> h,
                    std::span<const std::int64_t> r) {
  return IsMajorized(h, Conjugate(r, h.size()));
}

FeasibilityResult ClassNonempty(const Instance& instance, std::uint64_t cap) {
  instance.Validate();
  FeasibilityResult result;
  const std::int64_t supply = Sum(instance.h);
  const std::int64_t demand = Sum(instance.r);
  if (supply != demand) {
    Certificate c;
    c.kind = Certificate::Kind::kSumMismatch;
    c.supply_total = supply;
    c.demand_total = demand;
    result.certificate = std::move(c);
    return result;
  }
  const PatternDescription description = Describe(instance.pattern);
  const TensorEvaluator eval(instance, description, cap);
  TensorMinimum min = eval.Minimum();
  if (min.value >= 0) {
    result.feasible = true;
    return result;
  }
  Certificate c;
  c.kind = Certificate::Kind::kNegativeElement;
  c.tails = eval.TailsAt(min.index);
  c.index = std::move(min.index);
  c.value = min.value;
  c.description = description;
  c.supply_total = supply;
  c.demand_total = demand;
  result.certificate = std::move(c);
  return result;
}

namespace {

// Column-by-column fill of a normalized (0,1) instance known to have a
// nonempty class. While column c is open the working instance has the
// blocks
//   0: {c}                      (only rows not yet decided in c)
//   1: rest of c's block        (if any)
//   2..: the untouched blocks after it
// Completed columns have h = 0 and no rows, so they are dropped. Rows are
// grouped by (block set, remaining demand); each placement moves one row
// between groups and re-checks the tensor of the reduced instance.
class TensorFill {
 public:
  TensorFill(const Instance& instance, const PatternDescription& description)
      : f_(instance.pattern),
        description_(description),
        h_(instance.h),
        r_(instance.r) {}

  IntMatrix Run() {
    IntMatrix a(static_cast<int>(r_.size()), static_cast<int>(h_.size()));
    for (int i = 0; i < description_.lambda(); ++i) {
      for (int c = description_.block_begin(i); c < description_.block_end(i);
           ++c) {
        FillColumn(i, c, a);
      }
    }
    return a;
  }

 private:
  using Mask = std::vector<int>;
  using GroupKey = std::pair<Mask, std::int64_t>;

  void FillColumn(int block, int c, IntMatrix& a) {
    const int end = description_.block_end(block);
    const bool has_rest = c + 1 < end;
    supply_.clear();
    supply_.push_back({h_[c]});
    if (has_rest) supply_.emplace_back(h_.begin() + c + 1, h_.begin() + end);
    for (int i = block + 1; i < description_.lambda(); ++i) {
      supply_.emplace_back(h_.begin() + description_.block_begin(i),
                           h_.begin() + description_.block_end(i));
    }
    const int later_offset = has_rest ? 2 : 1;

    groups_.clear();
    std::vector<int> candidates;
    std::vector<Mask> masks(r_.size());
    for (int n = 0; n < static_cast<int>(r_.size()); ++n) {
      if (r_[n] == 0) continue;
      Mask& m = masks[n];
      if (f_(n, c)) {
        m.push_back(0);
        candidates.push_back(n);
      }
      if (has_rest && f_(n, end - 1)) m.push_back(1);
      for (int i = block + 1; i < description_.lambda(); ++i) {
        if (f_(n, description_.block_end(i) - 1)) {
          m.push_back(later_offset + i - block - 1);
        }
      }
      ++groups_[GroupKey{m, r_[n]}];
    }

    std::int64_t undecided = static_cast<std::int64_t>(candidates.size());
    for (int n : candidates) {
      if (h_[c] == 0) break;
      Mask without_c(masks[n].begin() + 1, masks[n].end());
      bool place = undecided == h_[c];  // every remaining row must take one
      Move(GroupKey{masks[n], r_[n]}, GroupKey{without_c, r_[n] - 1});
      if (!place) {
        supply_[0][0] = h_[c] - 1;
        place = Feasible();
        supply_[0][0] = h_[c];
        if (!place) Move(GroupKey{without_c, r_[n] - 1}, GroupKey{without_c, r_[n]});
      }
      if (place) {
        a(n, c) = 1;
        --r_[n];
        --h_[c];
        supply_[0][0] = h_[c];
      }
      masks[n] = std::move(without_c);
      --undecided;
    }
    if (h_[c] != 0) {
      throw std::logic_error("tensor fill left column " + std::to_string(c + 1) +
                             " short; the class was not feasible");
    }
  }

  void Move(const GroupKey& from, const GroupKey& to) {
    auto it = groups_.find(from);
    if (--it->second == 0) groups_.erase(it);
    if (to.second > 0) ++groups_[to];
  }

  bool Feasible() const {
    BlockForm form;
    form.supply = supply_;
    form.demand.reserve(groups_.size());
    for (const auto& [key, count] : groups_) {
      form.demand.push_back(DemandGroup{key.first, key.second, 1, count});
    }
    return TensorEvaluator(form, kNoTensorCap).IsNonnegative();
  }

  const PatternMatrix& f_;
  const PatternDescription& description_;
  IntVector h_;
  IntVector r_;
  std::vector<IntVector> supply_;
  std::map<GroupKey, std::int64_t> groups_;
};

Certificate FlowCertificate(const Instance& instance, std::int64_t flow_value) {
  try {
    auto check = ClassNonempty(instance);
    if (check.certificate) return *check.certificate;
  } catch (const TensorTooLarge&) {
  }
  Certificate c;
  c.kind = Certificate::Kind::kNegativeElement;
  c.value = flow_value - Sum(instance.r);
  c.supply_total = Sum(instance.h);
  c.demand_total = Sum(instance.r);
  return c;
}

}  // namespace

CompletionResult CompleteByFlow(const Instance& instance) {
  instance.Validate();
  CompletionResult result;
  const std::int64_t supply = Sum(instance.h);
  const std::int64_t demand = Sum(instance.r);
  if (supply != demand) {
    Certificate c;
    c.kind = Certificate::Kind::kSumMismatch;
    c.supply_total = supply;
    c.demand_total = demand;
    result.certificate = std::move(c);
    return result;
  }
  const FlowNetwork net = BuildNetwork(instance);
  const MaxFlowResult flow = MaxFlow(net);
  if (flow.value != demand) {
    result.certificate = FlowCertificate(instance, flow.value);
    return result;
  }
  result.feasible = true;
  result.matrix = ExtractMatrix(net, flow);
  return result;
}

CompletionResult Complete(const Instance& instance, std::uint64_t cap) {
  instance.Validate();
  CompletionResult result;
  FeasibilityResult check;
  try {
    check = ClassNonempty(instance, cap);
    // The open column splits one block in two: at most twice the elements.
    if (check.feasible &&
        TensorEvaluator(instance, kNoTensorCap).element_count() > cap / 2) {
      return CompleteByFlow(instance);
    }
  } catch (const TensorTooLarge&) {
    return CompleteByFlow(instance);
  }
  if (!check.feasible) {
    result.certificate = std::move(check.certificate);
    return result;
  }

  if (instance.rate_constrained()) {
    const DecomposedInstance unit = DecomposeInstance(instance);
    CompletionResult sub = Complete(unit.instance, cap);
    if (!sub.feasible) {
      throw std::logic_error("decomposed instance lost feasibility");
    }
    IntMatrix a(instance.num_rows(), instance.num_cols());
    for (int m = 0; m < sub.matrix->rows(); ++m) {
      for (int j = 0; j < a.cols(); ++j) a(unit.origin[m], j) += (*sub.matrix)(m, j);
    }
    result.feasible = true;
    result.matrix = std::move(a);
    return result;
  }

  const NormalizedInstance norm = NormalizeBlocks(instance);
  TensorFill fill(norm.instance, norm.description);
  result.feasible = true;
  result.matrix = norm.RestoreColumns(fill.Run());
  return result;
}

namespace {

// Memoized row-by-row enumeration. The state after placing rows 0..n-1
// is the vector of remaining column budgets, packed in mixed radix.
class Enumerator {
 public:
  Enumerator(const Instance& instance, ColumnMode mode)
      : instance_(instance), mode_(mode), memo_(instance.num_rows() + 1) {
    radix_.resize(instance.h.size());
    std::uint64_t weight = 1;
    for (std::size_t j = 0; j < instance.h.size(); ++j) {
      radix_[j] = weight;
      weight *= static_cast<std::uint64_t>(instance.h[j] + 1);
    }
  }

  std::uint64_t Count() {
    IntVector budget = instance_.h;
    return CountFrom(0, budget);
  }

  std::optional<IntMatrix> First() {
    IntVector budget = instance_.h;
    if (CountFrom(0, budget) == 0) return std::nullopt;
    IntMatrix a(instance_.num_rows(), instance_.num_cols());
    for (int n = 0; n < instance_.num_rows(); ++n) {
      IntVector row(instance_.h.size(), 0);
      bool found = false;
      ForEachRow(n, budget, row, 0, instance_.r[n], [&](const IntVector& v) {
        for (std::size_t j = 0; j < v.size(); ++j) budget[j] -= v[j];
        const bool ok = CountFrom(n + 1, budget) > 0;
        if (ok) {
          for (std::size_t j = 0; j < v.size(); ++j) a(n, static_cast<int>(j)) = v[j];
          found = true;
        } else {
          for (std::size_t j = 0; j < v.size(); ++j) budget[j] += v[j];
        }
        return !ok;
      });
      if (!found) throw std::logic_error("enumeration lost its witness");
    }
    return a;
  }

 private:
  static std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
  }

  std::uint64_t Key(const IntVector& budget) const {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < budget.size(); ++j) {
      key += radix_[j] * static_cast<std::uint64_t>(budget[j]);
    }
    return key;
  }

  std::uint64_t CountFrom(int n, IntVector& budget) {
    if (n == instance_.num_rows()) {
      if (mode_ == ColumnMode::kUpper) return 1;
      return std::all_of(budget.begin(), budget.end(),
                         [](std::int64_t b) { return b == 0; })
                 ? 1
                 : 0;
    }
    const std::uint64_t key = Key(budget);
    if (auto it = memo_[n].find(key); it != memo_[n].end()) return it->second;
    std::uint64_t total = 0;
    IntVector row(budget.size(), 0);
    ForEachRow(n, budget, row, 0, instance_.r[n], [&](const IntVector& v) {
      for (std::size_t j = 0; j < v.size(); ++j) budget[j] -= v[j];
      total = SaturatingAdd(total, CountFrom(n + 1, budget));
      for (std::size_t j = 0; j < v.size(); ++j) budget[j] += v[j];
      return true;
    });
    memo_[n][key] = total;
    return total;
  }

  std::int64_t Bound(int n, std::size_t j, const IntVector& budget) const {
    if (!instance_.pattern(n, static_cast<int>(j))) return 0;
    return std::min(instance_.ceiling(n), budget[j]);
  }

  // Rows with entries in [0, Bound] summing to `left`, in lexicographic
  // order. The visitor returns false to stop.
  template <typename Visit>
  bool ForEachRow(int n, const IntVector& budget, IntVector& row,
                  std::size_t j, std::int64_t left, Visit&& visit) {
    if (j == row.size()) return left == 0 ? visit(row) : true;
    std::int64_t room = 0;
    for (std::size_t m = j + 1; m < row.size(); ++m) room += Bound(n, m, budget);
    const std::int64_t hi = std::min(Bound(n, j, budget), left);
    for (std::int64_t v = std::max<std::int64_t>(0, left - room); v <= hi; ++v) {
      row[j] = v;
      if (!ForEachRow(n, budget, row, j + 1, left - v, visit)) {
        row[j] = 0;
        return false;
      }
    }
    row[j] = 0;
    return true;
  }

  const Instance& instance_;
  ColumnMode mode_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> memo_;
};

}  // namespace

EnumerationResult BruteForceEnumerate(const Instance& instance, ColumnMode mode,
                                      const EnumerationLimits& limits) {
  instance.Validate();
  if (instance.num_rows() > limits.max_dim || instance.num_cols() > limits.max_dim) {
    throw GuardExceeded("brute force limited to " + std::to_string(limits.max_dim) +
                        "x" + std::to_string(limits.max_dim) + " instances");
  }
  std::uint64_t states = 1;
  for (std::int64_t hj : instance.h) {
    const auto radix = static_cast<std::uint64_t>(hj) + 1;
    if (states > limits.max_states / radix) {
      throw GuardExceeded("brute force state space exceeds " +
                          std::to_string(limits.max_states));
    }
    states *= radix;
  }
  Enumerator e(instance, mode);
  EnumerationResult result;
  result.count = e.Count();
  result.first = e.First();
  return result;
}

}  // namespace structensor
