#include "nearcf/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "nearcf/errors.hpp"
#include "nearcf/numth.hpp"

namespace nearcf {

namespace {

constexpr std::size_t kMaxRangeSize = 10'000'000;
constexpr std::size_t kChunk = 32;

ScanItem make_item(const Integer& n, ItemStatus status, std::size_t period, Json record,
                   std::string text) {
  ScanItem item;
  item.n = n;
  item.status = status;
  item.period_length = period;
  item.record = std::move(record);
  item.text = std::move(text);
  return item;
}

ScanItem square_item(const Integer& n, std::string_view op) {
  Json result;
  result["status"] = "perfect square";
  return make_item(n, ItemStatus::inapplicable, 0,
                   make_record(op, {{"n", to_string(n)}}, std::move(result)),
                   to_string(n) + ": inapplicable (perfect square)");
}

// Throws InvariantViolation; every other error becomes an `error` item.
std::optional<ScanItem> evaluate(const Integer& n, const ScanConfig& config) {
  const std::size_t cap = config.period_cap;
  try {
    switch (config.mode) {
      case ScanMode::mordell: {
        if (n % 4 != 3 || !is_prime(n)) return std::nullopt;
        MordellReport r = mordell_check(n, cap);
        ScanItem item = make_item(n, ItemStatus::pass, r.l, to_json(r), to_text(r));
        item.counterexample = r.counterexample;
        return item;
      }
      case ScanMode::factor: {
        const FactorOutcome o = cf_factor(n, cap);
        return make_item(n, o.applicable() ? ItemStatus::pass : ItemStatus::inapplicable,
                         o.period_length, to_json(o), to_text(o));
      }
      case ScanMode::pell: {
        if (is_perfect_square(n)) return square_item(n, "pell");
        const PellSolution sol = pell_fundamental(n, cap);
        return make_item(n, ItemStatus::pass, sol.period_length, to_json(sol, "pell"),
                         to_text(sol));
      }
      case ScanMode::sum2sq: {
        if (is_perfect_square(n)) return square_item(n, "sum2sq");
        const SumOfSquares sos = sum_two_squares(n, cap);
        return make_item(n, sos.applicable ? ItemStatus::pass : ItemStatus::inapplicable,
                         sos.period_length, to_json(sos), to_text(sos));
      }
    }
  } catch (const InvariantViolation&) {
    throw;
  } catch (const std::exception& e) {
    Json result;
    result["error"] = e.what();
    return make_item(n, ItemStatus::error, 0,
                     make_record(to_string(config.mode), {{"n", to_string(n)}}, std::move(result)),
                     to_string(n) + ": error (" + e.what() + ")");
  }
  return std::nullopt;
}

struct Slot {
  std::optional<ScanItem> item;
  std::optional<std::string> failure;
};

}  // namespace

std::string_view to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::mordell: return "mordell";
    case ScanMode::factor: return "factor";
    case ScanMode::pell: return "pell";
    case ScanMode::sum2sq: return "sum2sq";
  }
  return "?";
}

std::optional<ScanMode> parse_scan_mode(std::string_view text) {
  for (ScanMode mode : {ScanMode::mordell, ScanMode::factor, ScanMode::pell, ScanMode::sum2sq}) {
    if (text == to_string(mode)) return mode;
  }
  return std::nullopt;
}

void ScanConfig::validate() const {
  if (range_lo > range_hi) throw DomainError("scan: range_lo exceeds range_hi");
  if (range_hi - range_lo >= kMaxRangeSize) {
    throw DomainError("scan: range holds more than " + std::to_string(kMaxRangeSize) + " values");
  }
  if (workers < 1) throw DomainError("scan: workers must be at least 1");
  if (period_cap < 1) throw DomainError("scan: period cap must be at least 1");
}

ScanResult scan(const ScanConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const Integer lo = std::max(config.range_lo, Integer(2));
  const std::size_t count =
      config.range_hi < lo ? 0 : static_cast<std::size_t>(config.range_hi - lo) + 1;

  std::vector<Slot> slots(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  // Chunks are claimed in increasing order and always finished, so once a
  // failure stops the pool every index below it has been evaluated.
  const auto work = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        const Integer n = lo + i;
        try {
          slots[i].item = evaluate(n, config);
        } catch (const std::exception& e) {
          slots[i].failure = e.what();
          stop.store(true, std::memory_order_relaxed);
        }
      }
    }
  };
  {
    const unsigned pool_size = std::max(1u, config.workers);
    std::vector<std::jthread> pool;
    pool.reserve(pool_size);
    for (unsigned w = 0; w < pool_size; ++w) pool.emplace_back(work);
  }

  ScanResult result;
  for (std::size_t i = 0; i < count; ++i) {
    Slot& slot = slots[i];
    if (slot.failure) {
      result.failure = ScanFailure{lo + i, *slot.failure};
      result.summary.fail = 1;
      break;
    }
    if (!slot.item) continue;
    ScanItem& item = *slot.item;
    ScanSummary& s = result.summary;
    ++s.items;
    switch (item.status) {
      case ItemStatus::pass:
        ++s.applicable;
        ++s.pass;
        break;
      case ItemStatus::inapplicable: ++s.inapplicable; break;
      case ItemStatus::error: ++s.errors; break;
    }
    if (item.counterexample) ++s.counterexamples;
    s.max_period = std::max(s.max_period, item.period_length);
    result.items.push_back(std::move(item));
  }
  result.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

int write_scan(const ScanConfig& config, const ScanResult& result, std::ostream& out,
               std::ostream& log) {
  const bool json = config.output_format == OutputFormat::json_lines;
  for (const ScanItem& item : result.items) {
    out << (json ? item.record.dump() : item.text) << '\n';
  }
  if (result.failure) {
    if (json) {
      Json failure = make_record("scan-failure", {{"n", to_string(result.failure->n)}},
                                 {{"message", result.failure->message}});
      out << failure.dump() << '\n';
    } else {
      out << "FAILURE n=" << to_string(result.failure->n) << ": " << result.failure->message
          << '\n';
    }
  }
  const ScanSummary& s = result.summary;
  if (json) {
    Json counts;
    counts["items"] = std::to_string(s.items);
    counts["applicable"] = std::to_string(s.applicable);
    counts["inapplicable"] = std::to_string(s.inapplicable);
    counts["pass"] = std::to_string(s.pass);
    counts["fail"] = std::to_string(s.fail);
    counts["errors"] = std::to_string(s.errors);
    counts["counterexamples"] = std::to_string(s.counterexamples);
    counts["max_period"] = std::to_string(s.max_period);
    Json checks;
    checks["no_failures"] = s.fail == 0;
    checks["no_counterexamples"] = s.counterexamples == 0;
    out << make_record("scan-summary",
                       {{"mode", to_string(config.mode)},
                        {"range_lo", to_string(config.range_lo)},
                        {"range_hi", to_string(config.range_hi)}},
                       std::move(counts), std::move(checks))
               .dump()
        << '\n';
  } else {
    out << "summary: mode=" << to_string(config.mode) << " range=[" << to_string(config.range_lo)
        << "," << to_string(config.range_hi) << "] items=" << s.items
        << " applicable=" << s.applicable << " inapplicable=" << s.inapplicable
        << " pass=" << s.pass << " fail=" << s.fail << " errors=" << s.errors
        << " counterexamples=" << s.counterexamples << " max_period=" << s.max_period << '\n';
  }
  log << "scan wall time: " << s.wall_seconds << " s (" << config.workers << " workers)\n";
  return result.failure ? 3 : 0;
}

}  // namespace nearcf
