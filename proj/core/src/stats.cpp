#include "hicm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hicm {

double relative_decrease(double reference, double observed) {
  if (reference <= 0.0) throw std::invalid_argument("relative_decrease: reference must be > 0");
  return 100.0 * (reference - observed) / reference;
}

double relative_increase(double reference, double observed) {
  if (reference <= 0.0) throw std::invalid_argument("relative_increase: reference must be > 0");
  return 100.0 * (observed - reference) / reference;
}

double pseudomedian(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("pseudomedian: empty sample");
  if (n > 10000) throw std::invalid_argument("pseudomedian: refusing n > 10000");
  std::vector<double> walsh;
  walsh.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) walsh.push_back(0.5 * (values[i] + values[j]));
  std::size_t m = walsh.size() / 2;
  std::nth_element(walsh.begin(), walsh.begin() + m, walsh.end());
  double upper = walsh[m];
  if (walsh.size() % 2 == 1) return upper;
  std::nth_element(walsh.begin(), walsh.begin() + (m - 1), walsh.begin() + m);
  return 0.5 * (walsh[m - 1] + upper);
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Exact null distribution of 2*W+ by polynomial convolution over the doubled
// ranks (doubling keeps tied average ranks integral).
std::vector<double> exact_distribution(const std::vector<int>& doubled_ranks) {
  int total = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0);
  std::vector<double> dist(total + 1, 0.0);
  dist[0] = 1.0;
  for (int r : doubled_ranks)
    for (int s = total; s >= r; --s) dist[s] += dist[s - r];
  double norm = std::ldexp(1.0, -static_cast<int>(doubled_ranks.size()));
  for (double& d : dist) d *= norm;
  return dist;
}

}  // namespace

PairedStats wilcoxon_signed_rank(std::span<const double> differences, ZeroPolicy zeros) {
  PairedStats out;
  std::vector<double> diffs(differences.begin(), differences.end());

  // Rank |d|, averaging ties. Under Pratt zeros take part in the ranking and
  // are dropped afterwards; under Discard they are removed first.
  if (zeros == ZeroPolicy::Discard)
    std::erase_if(diffs, [](double d) { return d == 0.0; });
  if (diffs.empty() || std::all_of(diffs.begin(), diffs.end(), [](double d) { return d == 0.0; })) {
    out.pseudomedian = differences.empty() ? 0.0 : pseudomedian(differences);
    return out;
  }
  std::vector<std::size_t> order(diffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(diffs[a]) < std::abs(diffs[b]); });
  std::vector<double> rank(diffs.size());
  std::vector<double> tie_sizes;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && std::abs(diffs[order[j]]) == std::abs(diffs[order[i]])) ++j;
    double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k) rank[order[k]] = avg;
    tie_sizes.push_back(static_cast<double>(j - i));
    i = j;
  }

  double w_plus = 0.0;
  std::vector<int> doubled_ranks;  // non-zero differences only
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] == 0.0) continue;  // Pratt drop
    doubled_ranks.push_back(static_cast<int>(std::lround(2.0 * rank[i])));
    if (diffs[i] > 0.0) w_plus += rank[i];
  }
  const int n = static_cast<int>(doubled_ranks.size());
  out.n_pairs = n;
  out.w_statistic = w_plus;
  out.pseudomedian = pseudomedian(differences);
  if (n == 0) return out;

  const int w2 = static_cast<int>(std::lround(2.0 * w_plus));
  if (n <= 25) {
    std::vector<double> dist = exact_distribution(doubled_ranks);
    double upper = 0.0, lower = 0.0;
    for (int s = 0; s < static_cast<int>(dist.size()); ++s) {
      if (s >= w2) upper += dist[s];
      if (s <= w2) lower += dist[s];
    }
    out.p_one_sided = upper;
    out.p_value = std::min(1.0, 2.0 * std::min(upper, lower));
  } else {
    double mean = 0.0;
    for (int r : doubled_ranks) mean += r;
    mean /= 4.0;  // halve the doubling, then /2
    double nn = n;
    double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0;
    for (double t : tie_sizes) var -= (t * t * t - t) / 48.0;
    double sd = std::sqrt(var);
    double upper = 1.0 - normal_cdf((w_plus - mean - 0.5) / sd);
    double lower = normal_cdf((w_plus - mean + 0.5) / sd);
    out.p_one_sided = upper;
    out.p_value = std::min(1.0, 2.0 * std::min(upper, lower));
  }
  return out;
}

PairedStats compare_setups(std::span<const double> reference, std::span<const double> observed,
                           ZeroPolicy zeros) {
  if (reference.size() != observed.size())
    throw std::invalid_argument("compare_setups: length mismatch");
  std::vector<double> diffs(reference.size());
  double change_sum = 0.0;
  int change_n = 0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    diffs[i] = observed[i] - reference[i];
    if (reference[i] > 0.0) {
      change_sum += relative_increase(reference[i], observed[i]);
      ++change_n;
    }
  }
  PairedStats out = wilcoxon_signed_rank(diffs, zeros);
  out.mean_relative_change = change_n ? change_sum / change_n : 0.0;
  return out;
}

namespace {

std::string axis_value(const ResultRow& row, const std::string& axis) {
  std::ostringstream os;
  if (axis == "network") {
    os << row.network;
  } else if (axis == "ranking") {
    os << to_string(row.ranking);
  } else if (axis == "pp") {
    os << row.pp;
  } else if (axis == "seed_fraction") {
    os << row.seed_fraction;
  } else if (axis == "tau") {
    os << row.tau;
  } else {
    throw std::invalid_argument("summarize: unknown axis '" + axis + "'");
  }
  return os.str();
}

struct Accum {
  double cov[4] = {0, 0, 0, 0};  // single_plain, single_hab, seq_plain, seq_hab
  double dur[4] = {0, 0, 0, 0};
  double dec_single = 0, dec_seq = 0, inc_plain = 0, inc_hab = 0;
  int n = 0;
  int dec_n = 0, inc_n = 0;
  std::size_t first_seen = 0;
};

}  // namespace

std::vector<SummaryRow> summarize(std::span<const ResultRow> rows,
                                  std::span<const std::string> group_by) {
  if (rows.size() % 4 != 0)
    throw std::invalid_argument("summarize: row count is not a multiple of 4");
  for (const std::string& axis : group_by) {
    if (axis != "network" && axis != "ranking" && axis != "pp" && axis != "seed_fraction" &&
        axis != "tau")
      throw std::invalid_argument("summarize: unknown axis '" + axis + "'");
  }
  std::map<std::string, Accum> acc;
  for (std::size_t i = 0; i < rows.size(); i += 4) {
    // Quartet layout per configuration as emitted by execute_grid.
    const ResultRow& sp = rows[i];
    const ResultRow& sh = rows[i + 1];
    const ResultRow& qp = rows[i + 2];
    const ResultRow& qh = rows[i + 3];
    std::string key;
    for (const std::string& axis : group_by) {
      if (!key.empty()) key += ',';
      key += axis + "=" + axis_value(sp, axis);
    }
    Accum& a = acc.try_emplace(key).first->second;
    if (a.n == 0) a.first_seen = i;
    double c[4] = {sp.mean_coverage, sh.mean_coverage, qp.mean_coverage, qh.mean_coverage};
    double d[4] = {sp.mean_duration, sh.mean_duration, qp.mean_duration, qh.mean_duration};
    for (int k = 0; k < 4; ++k) {
      a.cov[k] += c[k];
      a.dur[k] += d[k];
    }
    if (c[0] > 0.0 && c[2] > 0.0) {
      a.dec_single += relative_decrease(c[0], c[1]);
      a.dec_seq += relative_decrease(c[2], c[3]);
      ++a.dec_n;
    }
    if (c[0] > 0.0 && c[1] > 0.0) {
      a.inc_plain += relative_increase(c[0], c[2]);
      a.inc_hab += relative_increase(c[1], c[3]);
      ++a.inc_n;
    }
    ++a.n;
  }
  std::vector<const std::pair<const std::string, Accum>*> ordered;
  for (const auto& kv : acc) ordered.push_back(&kv);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return a->second.first_seen < b->second.first_seen; });
  std::vector<SummaryRow> out;
  for (const auto* kv : ordered) {
    const Accum& a = kv->second;
    SummaryRow r;
    r.group = kv->first;
    r.cov_single_plain = a.cov[0] / a.n;
    r.cov_single_hab = a.cov[1] / a.n;
    r.cov_sequential_plain = a.cov[2] / a.n;
    r.cov_sequential_hab = a.cov[3] / a.n;
    if (a.dec_n) {
      r.decrease_single_pct = a.dec_single / a.dec_n;
      r.decrease_sequential_pct = a.dec_seq / a.dec_n;
    }
    if (a.inc_n) {
      r.increase_plain_pct = a.inc_plain / a.inc_n;
      r.increase_hab_pct = a.inc_hab / a.inc_n;
    }
    r.duration_ratio_plain = a.dur[0] > 0.0 ? a.dur[2] / a.dur[0] : 0.0;
    r.duration_ratio_hab = a.dur[1] > 0.0 ? a.dur[3] / a.dur[1] : 0.0;
    r.configurations = a.n;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hicm
