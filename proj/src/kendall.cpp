#include <algorithm>
#include <cmath>
#include <numeric>

#include "vital/error.hpp"
#include "vital/eval.hpp"

namespace vital {

namespace {

std::int64_t tied_pairs(std::int64_t run) { return run * (run - 1) / 2; }

// Sorts `values` ascending, returning the number of strictly inverted pairs.
std::int64_t sort_counting_inversions(std::vector<double>& values, std::vector<double>& scratch) {
  const std::size_t n = values.size();
  std::int64_t swaps = 0;
  scratch.resize(n);
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (values[b] < values[a]) {
          swaps += static_cast<std::int64_t>(mid - a);
          scratch[out++] = values[b++];
        } else {
          scratch[out++] = values[a++];
        }
      }
      while (a < mid) scratch[out++] = values[a++];
      while (b < hi) scratch[out++] = values[b++];
    }
    values.swap(scratch);
  }
  return swaps;
}

}  // namespace

double kendall_tau(std::span<const double> x, std::span<const double> y, TauVariant variant) {
  if (x.size() != y.size()) throw ComputeError("kendall tau: length mismatch");
  if (x.size() < 2) throw ComputeError("kendall tau needs at least 2 values");
  const auto has_nan = [](std::span<const double> v) { return std::any_of(v.begin(), v.end(), [](double a) { return std::isnan(a); }); };
  if (has_nan(x) || has_nan(y)) throw ComputeError("kendall tau: NaN input");

  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
  });

  // Knight's method: C - D = n0 - n1 - n2 + n3 - 2 * swaps.
  std::int64_t x_ties = 0, joint_ties = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && x[order[j]] == x[order[i]]) ++j;
    x_ties += tied_pairs(static_cast<std::int64_t>(j - i));
    for (std::size_t a = i; a < j;) {
      std::size_t b = a;
      while (b < j && y[order[b]] == y[order[a]]) ++b;
      joint_ties += tied_pairs(static_cast<std::int64_t>(b - a));
      a = b;
    }
    i = j;
  }

  std::vector<double> ys(n), scratch;
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  const std::int64_t swaps = sort_counting_inversions(ys, scratch);

  std::int64_t y_ties = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && ys[j] == ys[i]) ++j;
    y_ties += tied_pairs(static_cast<std::int64_t>(j - i));
    i = j;
  }

  const std::int64_t all_pairs = tied_pairs(static_cast<std::int64_t>(n));
  const std::int64_t difference = all_pairs - x_ties - y_ties + joint_ties - 2 * swaps;

  if (variant == TauVariant::A)
    return 2.0 * static_cast<double>(difference) / (static_cast<double>(n) * static_cast<double>(n - 1));

  const double denominator = std::sqrt(static_cast<double>(all_pairs - x_ties) * static_cast<double>(all_pairs - y_ties));
  return denominator == 0.0 ? 0.0 : static_cast<double>(difference) / denominator;
}

Eigen::VectorXd order_preserving_scores(const CentralityScores& scores) {
  Eigen::VectorXd out = scores.scores;
  double top = 0.0;
  bool any_finite = false;
  std::vector<Eigen::Index> infinite;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (std::isinf(out[i]) && out[i] > 0) {
      infinite.push_back(i);
    } else if (!any_finite || out[i] > top) {
      top = out[i];
      any_finite = true;
    }
  }
  if (infinite.empty()) return out;

  const bool keyed = scores.tie_break.size() == out.size();
  std::vector<double> keys;
  for (Eigen::Index i : infinite) keys.push_back(keyed ? scores.tie_break[i] : 0.0);
  std::vector<double> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const double step = std::max(1.0, std::abs(top));
  for (std::size_t k = 0; k < infinite.size(); ++k) {
    const auto level = std::lower_bound(distinct.begin(), distinct.end(), keys[k]) - distinct.begin();
    out[infinite[k]] = top + step * (1.0 + static_cast<double>(level));
  }
  return out;
}

}  // namespace vital
