#include "structensor/services.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "structensor/errors.h"
#include "structensor/majorization.h"

namespace structensor {

bool IsAdequate(const Instance& instance, std::uint64_t cap) {
  instance.Validate();
  return TensorEvaluator(instance, cap).IsNonnegative();
}

std::int64_t AdequacyGap(const Instance& instance, std::uint64_t cap) {
  instance.Validate();
  return TensorEvaluator(instance, cap).Gap();
}

void CheckLoadsSatisfiable(const Instance& instance) {
  instance.Validate();
  for (int n = 0; n < instance.num_rows(); ++n) {
    const std::int64_t reach = instance.ceiling(n) * instance.pattern.RowCount(n);
    if (instance.r[n] > reach) {
      throw InstanceUnsatisfiable("row " + std::to_string(n + 1) + " asks for " +
                                  std::to_string(instance.r[n]) +
                                  " units but can receive at most " +
                                  std::to_string(reach));
    }
  }
}

namespace {

IntVector BlockValues(const IntVector& h, const PatternDescription& description,
                      int block) {
  return IntVector(h.begin() + description.block_begin(block),
                   h.begin() + description.block_end(block));
}

// Columns (block-relative) eligible for a +-1 adjustment, in the order
// they should be used: highest index first, or shuffled by the seed.
std::vector<int> PickOrder(const std::vector<int>& eligible,
                           std::optional<std::mt19937_64>& rng) {
  std::vector<int> order(eligible.rbegin(), eligible.rend());
  if (rng) std::shuffle(order.begin(), order.end(), *rng);
  return order;
}

}  // namespace

PurchaseProfile MinPurchaseColumnSweep(const Instance& instance,
                                       std::uint64_t cap) {
  CheckLoadsSatisfiable(instance);
  const PatternDescription description = Describe(instance.pattern);
  TensorEvaluator eval(instance, description, cap);
  IntVector h = instance.h;
  PurchaseProfile result{IntVector(h.size(), 0)};
  std::int64_t v_u = eval.Gap();
  for (int j = 0; j < instance.num_cols() && v_u > 0; ++j) {
    const std::int64_t v_o = v_u;
    const int block = description.BlockOf(j);
    const std::int64_t committed = h[j];
    h[j] = std::max(committed, std::min(committed + v_o, instance.ColumnCapacity(j)));
    eval.SetBlockSupply(block, BlockValues(h, description, block));
    v_u = eval.Gap();
    h[j] = committed + v_o - v_u;
    eval.SetBlockSupply(block, BlockValues(h, description, block));
  }
  if (v_u > 0) throw std::logic_error("column sweep ended with a positive gap");
  for (std::size_t j = 0; j < h.size(); ++j) result.p[j] = h[j] - instance.h[j];
  return result;
}

PurchaseProfile MinPurchaseValleyFill(const Instance& instance,
                                      TieBreak tie_break, std::uint64_t cap) {
  CheckLoadsSatisfiable(instance);
  const PatternDescription description = Describe(instance.pattern);
  TensorEvaluator eval(instance, description, cap);
  std::optional<std::mt19937_64> rng;
  if (tie_break.seed) rng.emplace(*tie_break.seed);

  IntVector h = instance.h;
  std::int64_t v_n = eval.Gap();
  for (int i = 0; i < description.lambda() && v_n > 0; ++i) {
    const std::int64_t v_o = v_n;
    const IntVector before = BlockValues(h, description, i);
    const int width = static_cast<int>(before.size());

    std::int64_t level = FillLevelAtLeast(before, v_o);
    IntVector raised(before);
    for (auto& x : raised) x = std::max(x, level);
    eval.SetBlockSupply(i, raised);
    v_n = eval.Gap();

    if (v_n <= 0) {
      const std::int64_t surplus = FillVolume(before, level) - v_o;
      std::vector<int> lifted;
      for (int j = 0; j < width; ++j) {
        if (raised[j] > before[j]) lifted.push_back(j);
      }
      const std::vector<int> order = PickOrder(lifted, rng);
      for (std::int64_t u = 0; u < surplus; ++u) --raised[order[u]];
    } else {
      const std::int64_t absorbed = v_o - v_n;
      level = FillLevelAtMost(before, absorbed);
      raised = before;
      for (auto& x : raised) x = std::max(x, level);
      std::int64_t remaining = absorbed - FillVolume(before, level);
      std::vector<int> at_level;
      for (int j = 0; j < width; ++j) {
        if (raised[j] == level) at_level.push_back(j);
      }
      for (int j : PickOrder(at_level, rng)) {
        if (remaining == 0) break;
        ++raised[j];
        --remaining;
      }
      // Not reachable when the level is maximal; kept as a continuation.
      for (int j = 0; remaining > 0; j = (j + 1) % width) {
        if (raised[j] > level) {
          ++raised[j];
          --remaining;
        }
      }
    }
    std::copy(raised.begin(), raised.end(), h.begin() + description.block_begin(i));
    eval.SetBlockSupply(i, raised);
  }
  if (v_n > 0) throw std::logic_error("valley fill ended with a positive gap");
  PurchaseProfile result{IntVector(h.size(), 0)};
  for (std::size_t j = 0; j < h.size(); ++j) result.p[j] = h[j] - instance.h[j];
  return result;
}

std::vector<SubLoad> DecomposeLoads(std::span<const ServiceSpec> specs) {
  std::vector<SubLoad> out;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const ServiceSpec& spec = specs[s];
    if (spec.duration < 0 || spec.ceiling < 1) {
      throw InvalidInstance("load " + std::to_string(s + 1) +
                            " needs duration >= 0 and ceiling >= 1");
    }
    const std::int64_t q = spec.duration / spec.ceiling;
    const std::int64_t p = spec.duration % spec.ceiling;
    const int origin = static_cast<int>(s);
    if (p > 0) out.push_back({q + 1, spec.arrival, spec.deadline, p, origin});
    if (q > 0) {
      out.push_back({q, spec.arrival, spec.deadline, spec.ceiling - p, origin});
    }
  }
  return out;
}

DecomposedInstance DecomposeInstance(const Instance& instance) {
  instance.Validate();
  DecomposedInstance out;
  std::vector<std::int64_t> durations;
  for (int n = 0; n < instance.num_rows(); ++n) {
    const std::int64_t c = instance.ceiling(n);
    const std::int64_t q = instance.r[n] / c;
    const std::int64_t p = instance.r[n] % c;
    for (std::int64_t m = 0; m < c; ++m) {
      const std::int64_t d = m < p ? q + 1 : q;
      if (d == 0) continue;
      durations.push_back(d);
      out.origin.push_back(n);
    }
  }
  out.instance.h = instance.h;
  out.instance.r = durations;
  out.instance.pattern = PatternMatrix(static_cast<int>(durations.size()),
                                       instance.num_cols(), 0);
  for (std::size_t m = 0; m < durations.size(); ++m) {
    for (int j = 0; j < instance.num_cols(); ++j) {
      if (instance.pattern(out.origin[m], j)) {
        out.instance.pattern.Set(static_cast<int>(m), j, 1);
      }
    }
  }
  return out;
}

}  // namespace structensor
