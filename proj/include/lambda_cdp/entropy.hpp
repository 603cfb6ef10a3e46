#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cdp.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace lambda_cdp {

enum class LogBase { two, e, ten };

inline double log_in(LogBase base, double x) {
  switch (base) {
    case LogBase::two: return std::log2(x);
    case LogBase::ten: return std::log10(x);
    case LogBase::e: break;
  }
  return std::log(x);
}

inline std::string to_string(LogBase base) {
  switch (base) {
    case LogBase::two: return "2";
    case LogBase::ten: return "10";
    case LogBase::e: break;
  }
  return "e";
}

inline LogBase parse_log_base(const std::string& s) {
  if (s == "2") return LogBase::two;
  if (s == "e") return LogBase::e;
  if (s == "10") return LogBase::ten;
  throw PreconditionError("log base must be one of 2, e, 10");
}

// -sum (s/n) log(s/n) over block sizes s; zero-size blocks contribute 0.
inline double entropy_of_sizes(std::span<const std::size_t> sizes, std::size_t n, LogBase base) {
  double h = 0.0;
  for (std::size_t s : sizes) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / static_cast<double>(n);
    h -= p * log_in(base, p);
  }
  return h;
}

inline std::vector<std::size_t> block_sizes(std::span<const VertexSet> blocks) {
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks) sizes.push_back(b.size());
  return sizes;
}

inline double partition_entropy(std::span<const VertexSet> blocks, int n, LogBase base = LogBase::e) {
  if (!is_partition(blocks, n)) throw PreconditionError("blocks do not partition the vertex set");
  return entropy_of_sizes(block_sizes(blocks), static_cast<std::size_t>(n), base);
}

inline double cdp_entropy(const CoreDistancePartition& p, LogBase base = LogBase::e) {
  std::size_t n = 0;
  for (const auto& b : p.blocks) n += b.size();
  return partition_entropy(p.blocks, static_cast<int>(n), base);
}

// Block-size weighted mean of one value per block.
inline double weighted_mean(const CoreDistancePartition& p, std::span<const double> values) {
  if (values.size() != p.blocks.size())
    throw PreconditionError("expected " + std::to_string(p.blocks.size()) + " values, got " +
                            std::to_string(values.size()));
  std::size_t n = 0;
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    n += p.blocks[i].size();
    acc += static_cast<double>(p.blocks[i].size()) * values[i];
  }
  return acc / static_cast<double>(n);
}

struct EntropyBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Range of the partition entropy for n vertices of which k are core: the lower end
// has every non-core vertex in one block, the upper end has them all in singletons.
inline EntropyBounds entropy_bounds(int n, int k, LogBase base = LogBase::e) {
  if (n < 1 || k < 1 || k > n)
    throw PreconditionError("need 1 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  if (k == n) return {0.0, 0.0};
  const double p = static_cast<double>(k) / n;
  const double q = static_cast<double>(n - k) / n;
  const double core_term = -p * log_in(base, p);
  return {core_term - q * log_in(base, q), core_term - q * log_in(base, 1.0 / n)};
}

struct EntropyReport {
  double value = 0.0;
  LogBase base = LogBase::e;
  std::vector<std::size_t> block_sizes;  // probabilities are block_sizes[i] / n
  int n = 0;
  int k = 0;  // core count, 0 when not applicable
  EntropyBounds bounds;
};

inline EntropyReport cdp_entropy_report(const CoreDistancePartition& p, LogBase base = LogBase::e) {
  EntropyReport r;
  r.base = base;
  r.block_sizes = block_sizes(p.blocks);
  r.n = static_cast<int>(std::accumulate(r.block_sizes.begin(), r.block_sizes.end(), std::size_t{0}));
  r.k = static_cast<int>(p.core().size());
  r.value = entropy_of_sizes(r.block_sizes, static_cast<std::size_t>(r.n), base);
  r.bounds = entropy_bounds(r.n, r.k, base);
  return r;
}

// sum x log(x/y) with the conventions 0 log(0/y) = 0.
inline double log_sum_lhs(std::span<const double> x, std::span<const double> y, LogBase base = LogBase::e) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) s += x[i] * log_in(base, x[i] / y[i]);
  return s;
}

inline double log_sum_rhs(std::span<const double> x, std::span<const double> y, LogBase base = LogBase::e) {
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  return sx > 0 ? sx * log_in(base, sx / sy) : 0.0;
}

struct RefinementInequality {
  double lhs = 0.0;  // entropy of the finer partition
  double rhs = 0.0;  // I + W({log k_i})
  std::vector<std::size_t> k_values;
  bool holds = false;
};

inline RefinementInequality refinement_inequality(const CoreDistancePartition& p,
                                                  std::span<const VertexSet> finer, LogBase base = LogBase::e) {
  std::size_t n = 0;
  for (const auto& b : p.blocks) n += b.size();
  if (!is_partition(finer, static_cast<int>(n))) throw PreconditionError("finer blocks do not partition the vertex set");

  RefinementInequality out;
  out.k_values.assign(p.blocks.size(), 0);
  for (const auto& f : finer) {
    std::size_t hit = p.blocks.size();
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
      if (f.is_subset_of(p.blocks[i])) hit = i;
    if (hit == p.blocks.size()) throw PreconditionError("finer partition does not refine the core distance partition");
    ++out.k_values[hit];
  }
  std::vector<double> logs;
  for (std::size_t k : out.k_values) logs.push_back(log_in(base, static_cast<double>(k)));
  out.lhs = partition_entropy(finer, static_cast<int>(n), base);
  out.rhs = cdp_entropy(p, base) + weighted_mean(p, logs);
  out.holds = out.lhs <= out.rhs + 1e-12;
  return out;
}

}  // namespace lambda_cdp
