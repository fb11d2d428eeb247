#include "hicm/report.hpp"

#include <ostream>
#include <sstream>

namespace hicm {

std::string format_number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(9);
  os << v;
  return os.str();
}

void write_run_record_header(std::ostream& out) {
  out << "network,ranking,pp,seed_fraction,seeding,habituation,tau,alpha,"
         "run_index,coverage,duration,seeds_used,truncated\n";
}

namespace {

void write_record_line(std::ostream& out, const std::string& network, Ranking ranking, double pp,
                       double sf, Seeding seeding, bool hab, double tau, double alpha,
                       int run_index, double coverage, double duration, std::uint32_t seeds,
                       bool truncated) {
  out << network << ',' << to_string(ranking) << ',' << format_number(pp) << ','
      << format_number(sf) << ',' << to_string(seeding) << ',' << (hab ? "on" : "off") << ','
      << format_number(tau) << ',' << format_number(alpha) << ',' << run_index << ','
      << format_number(coverage) << ',' << format_number(duration) << ',' << seeds << ','
      << (truncated ? 1 : 0) << '\n';
}

}  // namespace

void write_run_records(std::ostream& out, std::span<const ResultRow> rows) {
  write_run_record_header(out);
  for (const ResultRow& row : rows)
    for (std::size_t r = 0; r < row.coverages.size(); ++r)
      write_record_line(out, row.network, row.ranking, row.pp, row.seed_fraction, row.seeding,
                        row.habituation, row.tau, row.alpha, static_cast<int>(r),
                        row.coverages[r], row.durations[r], row.seeds_used[r],
                        row.truncated[r] != 0);
}

void write_run_record(std::ostream& out, const std::string& network, Ranking ranking, double pp,
                      double sf, Seeding seeding, bool habituation, double tau, double alpha,
                      int run_index, const RunOutcome& outcome) {
  write_record_line(out, network, ranking, pp, sf, seeding, habituation, tau, alpha, run_index,
                    outcome.coverage, outcome.duration, outcome.seeds_used, outcome.truncated);
}

void write_summary(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "group,configurations,cov_single_plain,cov_single_hab,cov_sequential_plain,"
         "cov_sequential_hab,decrease_single_pct,decrease_sequential_pct,increase_plain_pct,"
         "increase_hab_pct,duration_ratio_plain,duration_ratio_hab\n";
  for (const SummaryRow& r : rows) {
    out << '"' << r.group << "\"," << r.configurations << ',' << format_number(r.cov_single_plain)
        << ',' << format_number(r.cov_single_hab) << ',' << format_number(r.cov_sequential_plain)
        << ',' << format_number(r.cov_sequential_hab) << ','
        << format_number(r.decrease_single_pct) << ',' << format_number(r.decrease_sequential_pct)
        << ',' << format_number(r.increase_plain_pct) << ',' << format_number(r.increase_hab_pct)
        << ',' << format_number(r.duration_ratio_plain) << ','
        << format_number(r.duration_ratio_hab) << '\n';
  }
}

}  // namespace hicm
