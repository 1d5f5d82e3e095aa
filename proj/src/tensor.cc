#include "structensor/tensor.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "structensor/errors.h"

namespace structensor {

namespace {

IntVector TailSums(std::span<const std::int64_t> values) {
  IntVector sorted = SortedDescending(values);
  IntVector suffix(sorted.size() + 1, 0);
  for (std::size_t k = sorted.size(); k-- > 0;) {
    suffix[k] = suffix[k + 1] + sorted[k];
  }
  return suffix;
}

}  // namespace

BlockForm ToBlockForm(const Instance& instance,
                      const PatternDescription& description) {
  instance.Validate();
  if (!description.Describes(instance.pattern)) {
    throw InvalidInstance("description does not match the pattern");
  }
  BlockForm form;
  const int lambda = description.lambda();
  form.supply.reserve(lambda);
  for (int i = 0; i < lambda; ++i) {
    form.supply.emplace_back(instance.h.begin() + description.block_begin(i),
                             instance.h.begin() + description.block_end(i));
  }
  using Key = std::tuple<std::vector<int>, std::int64_t, std::int64_t>;
  std::map<Key, std::int64_t> groups;
  for (int n = 0; n < instance.num_rows(); ++n) {
    std::vector<int> blocks;
    for (int i = 0; i < lambda; ++i) {
      // F(n, T_i) in 1-based terms: the last column of block i.
      if (instance.pattern(n, description.block_end(i) - 1)) {
        blocks.push_back(i);
      }
    }
    ++groups[Key{std::move(blocks), instance.r[n], instance.ceiling(n)}];
  }
  form.demand.reserve(groups.size());
  for (auto& [key, count] : groups) {
    form.demand.push_back(DemandGroup{std::get<0>(key), std::get<1>(key),
                                      std::get<2>(key), count});
  }
  return form;
}

TensorEvaluator::TensorEvaluator(const Instance& instance, std::uint64_t cap)
    : TensorEvaluator(instance, Describe(instance.pattern), cap) {}

TensorEvaluator::TensorEvaluator(const Instance& instance,
                                 const PatternDescription& description,
                                 std::uint64_t cap) {
  Init(ToBlockForm(instance, description), cap);
}

TensorEvaluator::TensorEvaluator(const BlockForm& form, std::uint64_t cap) {
  Init(form, cap);
}

void TensorEvaluator::Init(const BlockForm& form, std::uint64_t cap) {
  const int lambda = static_cast<int>(form.supply.size());
  dims_.resize(lambda);
  element_count_ = 1;
  bool saturated = false;
  for (int i = 0; i < lambda; ++i) {
    dims_[i] = static_cast<std::int64_t>(form.supply[i].size()) + 1;
    const auto d = static_cast<std::uint64_t>(dims_[i]);
    if (element_count_ > kNoTensorCap / d) {
      saturated = true;
      element_count_ = kNoTensorCap;
    } else if (!saturated) {
      element_count_ *= d;
    }
  }
  if (element_count_ > cap) {
    throw TensorTooLarge("structure tensor has " +
                         (saturated ? std::string("more than 2^64")
                                    : std::to_string(element_count_)) +
                         " elements, cap is " + std::to_string(cap));
  }

  supply_suffix_.clear();
  supply_suffix_.reserve(lambda);
  for (const auto& block : form.supply) supply_suffix_.push_back(TailSums(block));

  std::map<std::vector<int>, std::size_t> table_of;
  tables_.clear();
  for (const DemandGroup& g : form.demand) {
    if (g.demand <= 0 || g.count <= 0) continue;
    auto [it, inserted] = table_of.try_emplace(g.blocks, tables_.size());
    if (inserted) {
      std::int64_t reach = 0;
      for (int b : g.blocks) {
        if (b < 0 || b >= lambda) {
          throw InvalidInstance("demand group refers to a missing block");
        }
        reach += dims_[b] - 1;
      }
      tables_.push_back(
          DemandTable{g.blocks, IntVector(static_cast<std::size_t>(reach) + 1, 0)});
    }
    IntVector& residual = tables_[it->second].residual;
    for (std::size_t s = 0; s < residual.size(); ++s) {
      const std::int64_t left =
          g.demand - g.ceiling * static_cast<std::int64_t>(s);
      if (left <= 0) break;
      residual[s] += g.count * left;
    }
  }
  block_tables_.assign(lambda, {});
  for (std::size_t t = 0; t < tables_.size(); ++t) {
    for (int b : tables_[t].blocks) block_tables_[b].push_back(static_cast<int>(t));
  }
}

void TensorEvaluator::CheckIndex(std::span<const std::int64_t> k) const {
  if (static_cast<int>(k.size()) != lambda()) {
    throw std::out_of_range("tensor index has " + std::to_string(k.size()) +
                            " entries, order is " + std::to_string(lambda()));
  }
  for (int i = 0; i < lambda(); ++i) {
    if (k[i] < 0 || k[i] >= dims_[i]) {
      throw std::out_of_range("k_" + std::to_string(i + 1) + " = " +
                              std::to_string(k[i]) + " outside 0.." +
                              std::to_string(dims_[i] - 1));
    }
  }
}

std::int64_t TensorEvaluator::SupplyTail(std::span<const std::int64_t> k) const {
  std::int64_t s = 0;
  for (int i = 0; i < lambda(); ++i) s += supply_suffix_[i][k[i]];
  return s;
}

std::int64_t TensorEvaluator::DemandTail(std::span<const std::int64_t> k) const {
  std::int64_t d = 0;
  for (const DemandTable& t : tables_) {
    std::int64_t reach = 0;
    for (int b : t.blocks) reach += k[b];
    d += t.residual[static_cast<std::size_t>(reach)];
  }
  return d;
}

Tails TensorEvaluator::TailsAt(std::span<const std::int64_t> k) const {
  CheckIndex(k);
  return Tails{SupplyTail(k), DemandTail(k)};
}

std::int64_t TensorEvaluator::ElementAt(std::span<const std::int64_t> k) const {
  const Tails t = TailsAt(k);
  return t.supply - t.demand;
}

TensorMinimum TensorEvaluator::Minimum() const {
  TensorMinimum best;
  bool first = true;
  ForEach([&](std::span<const std::int64_t> k, std::int64_t value) {
    if (first || value < best.value) {
      best.value = value;
      best.index.assign(k.begin(), k.end());
      first = false;
    }
    return true;
  });
  return best;
}

bool TensorEvaluator::IsNonnegative() const {
  bool ok = true;
  ForEach([&](std::span<const std::int64_t>, std::int64_t value) {
    ok = value >= 0;
    return ok;
  });
  return ok;
}

void TensorEvaluator::SetBlockSupply(int block,
                                     std::span<const std::int64_t> values) {
  if (block < 0 || block >= lambda() ||
      static_cast<std::int64_t>(values.size()) != dims_[block] - 1) {
    throw std::out_of_range("block supply does not match block " +
                            std::to_string(block));
  }
  supply_suffix_[block] = TailSums(values);
}

std::int64_t StructureTensor::At(std::span<const std::int64_t> k) const {
  if (k.size() != dims.size()) throw std::out_of_range("tensor index order");
  std::size_t offset = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (k[i] < 0 || k[i] >= dims[i]) throw std::out_of_range("tensor index");
    offset = offset * static_cast<std::size_t>(dims[i]) +
             static_cast<std::size_t>(k[i]);
  }
  return values[offset];
}

std::int64_t TensorElement(const Instance& instance,
                           std::span<const std::int64_t> k) {
  return TensorEvaluator(instance, kNoTensorCap).ElementAt(k);
}

Tails TensorTails(const Instance& instance, std::span<const std::int64_t> k) {
  return TensorEvaluator(instance, kNoTensorCap).TailsAt(k);
}

StructureTensor BuildTensor(const Instance& instance, std::uint64_t cap) {
  const TensorEvaluator eval(instance, cap);
  StructureTensor w;
  w.dims = eval.dims();
  w.values.reserve(eval.element_count());
  bool first = true;
  eval.ForEach([&](std::span<const std::int64_t> k, std::int64_t value) {
    w.values.push_back(value);
    if (first || value < w.min_value) {
      w.min_value = value;
      w.min_index.assign(k.begin(), k.end());
      first = false;
    }
    return true;
  });
  return w;
}

TensorMinimum MinimumElement(const Instance& instance, std::uint64_t cap) {
  return TensorEvaluator(instance, cap).Minimum();
}

}  // namespace structensor
