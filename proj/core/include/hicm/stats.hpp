#pragma once

#include <span>
#include <string>
#include <vector>

#include "hicm/grid.hpp"

namespace hicm {

/// 100 * (reference - observed) / reference. Throws if reference <= 0.
double relative_decrease(double reference, double observed);

/// 100 * (observed - reference) / reference. Throws if reference <= 0.
double relative_increase(double reference, double observed);

/// Zero-difference handling for the signed-rank test. Discard is the classic
/// Wilcoxon treatment; Pratt ranks zeros and then drops them.
enum class ZeroPolicy { Discard, Pratt };

struct PairedStats {
  int n_pairs = 0;            // non-zero differences used
  double w_statistic = 0.0;   // W+ (sum of ranks of positive differences)
  double p_value = 1.0;       // two-sided
  double p_one_sided = 1.0;   // P(W+ >= observed), shift > 0 alternative
  double pseudomedian = 0.0;  // Hodges-Lehmann: median of Walsh averages
  double mean_relative_change = 0.0;  // percent; filled by compare_setups
};

/// Wilcoxon signed-rank test with average ranks for ties. Exact p by
/// enumeration of sign assignments for n <= 25, normal approximation with
/// continuity and tie correction above. All-zero input degenerates to
/// p = 1, pseudomedian = 0.
PairedStats wilcoxon_signed_rank(std::span<const double> differences,
                                 ZeroPolicy zeros = ZeroPolicy::Discard);

/// Median of the n(n+1)/2 Walsh averages (d_i + d_j)/2, i <= j.
/// Exact; refuses n > 10000.
double pseudomedian(std::span<const double> values);

/// Paired comparison of two setups over per-run values: runs the signed-rank
/// test on observed - reference and reports the mean relative change in
/// percent (pairs with reference <= 0 are skipped there).
PairedStats compare_setups(std::span<const double> reference, std::span<const double> observed,
                           ZeroPolicy zeros = ZeroPolicy::Discard);

/// Aggregates a grid result table per group: mean coverage for each of the
/// four setups, mean habituation decrease per seeding, mean sequential gain
/// per habituation flag, and the sequential/single duration ratio.
struct SummaryRow {
  std::string group;  // "axis=value[,axis=value]"
  double cov_single_plain = 0.0;
  double cov_single_hab = 0.0;
  double cov_sequential_plain = 0.0;
  double cov_sequential_hab = 0.0;
  double decrease_single_pct = 0.0;      // habituated vs plain, single-stage
  double decrease_sequential_pct = 0.0;  // habituated vs plain, sequential
  double increase_plain_pct = 0.0;       // sequential vs single, no habituation
  double increase_hab_pct = 0.0;         // sequential vs single, habituated
  double duration_ratio_plain = 0.0;     // sequential / single
  double duration_ratio_hab = 0.0;
  int configurations = 0;
};

/// Valid axis names: network, ranking, pp, seed_fraction, tau.
/// Rows must come from one execute_grid call (4 rows per configuration).
/// Group order follows first appearance. Throws on an unknown axis.
std::vector<SummaryRow> summarize(std::span<const ResultRow> rows,
                                  std::span<const std::string> group_by);

}  // namespace hicm
