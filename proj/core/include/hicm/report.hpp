#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "hicm/grid.hpp"
#include "hicm/stats.hpp"

namespace hicm {

/// Formats a double with 9 significant digits, '.' decimal separator.
std::string format_number(double v);

/// Run-record CSV schema (RFC-4180 style, header always present):
///   network,ranking,pp,seed_fraction,seeding,habituation,tau,alpha,
///   run_index,coverage,duration,seeds_used,truncated
/// One row per (configuration, run, setup).
void write_run_record_header(std::ostream& out);
void write_run_records(std::ostream& out, std::span<const ResultRow> rows);

/// Same schema for a single outcome (used by the run command).
void write_run_record(std::ostream& out, const std::string& network, Ranking ranking, double pp,
                      double sf, Seeding seeding, bool habituation, double tau, double alpha,
                      int run_index, const RunOutcome& outcome);

void write_summary(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace hicm
