#pragma once

// Range scanner: runs one number-theoretic check over every n in
// [range_lo, range_hi] on a pool of workers and merges results by n, so the
// output is identical for any worker count.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nearcf/exactnum.hpp"
#include "nearcf/report.hpp"
#include "nearcf/surdexp.hpp"

namespace nearcf {

enum class ScanMode { mordell, factor, pell, sum2sq };
enum class OutputFormat { text, json_lines };

std::string_view to_string(ScanMode mode);
std::optional<ScanMode> parse_scan_mode(std::string_view text);

struct ScanConfig {
  Integer range_lo = 2;
  Integer range_hi = 2;
  ScanMode mode = ScanMode::mordell;
  unsigned workers = 1;
  std::size_t period_cap = kDefaultPeriodCap;
  OutputFormat output_format = OutputFormat::text;

  // Throws DomainError when an invariant of the configuration is broken.
  void validate() const;
};

enum class ItemStatus { pass, inapplicable, error };

struct ScanItem {
  Integer n;
  ItemStatus status = ItemStatus::pass;
  bool counterexample = false;
  std::size_t period_length = 0;
  Json record;
  std::string text;
};

struct ScanFailure {
  Integer n;
  std::string message;
};

struct ScanSummary {
  std::size_t items = 0;
  std::size_t applicable = 0;
  std::size_t inapplicable = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t errors = 0;
  std::size_t counterexamples = 0;
  std::size_t max_period = 0;
  double wall_seconds = 0;
};

struct ScanResult {
  std::vector<ScanItem> items;  // ascending by n
  ScanSummary summary;
  // Set when an invariant violation aborted the scan; items then hold every
  // record below the failing n.
  std::optional<ScanFailure> failure;
};

// Items below 2 are skipped; mordell mode keeps only primes = 3 (mod 4).
ScanResult scan(const ScanConfig& config);

// Writes records and the summary line to `out`. Wall time goes to `log`
// so that `out` stays byte-identical across worker counts. Returns the
// process exit code (0, or 3 after an invariant violation).
int write_scan(const ScanConfig& config, const ScanResult& result, std::ostream& out,
               std::ostream& log);

}  // namespace nearcf
