#include "nearcf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nearcf/cfcore.hpp"
#include "nearcf/continuant.hpp"
#include "nearcf/errors.hpp"
#include "nearcf/numth.hpp"
#include "nearcf/report.hpp"
#include "nearcf/scan.hpp"
#include "nearcf/surdexp.hpp"

namespace nearcf {

namespace {

struct GlobalOptions {
  std::string format = "text";
  int digits = 12;
  std::size_t period_cap = kDefaultPeriodCap;
  unsigned workers = 1;
  int tolerance_digits = 30;
  int precision_digits = 60;

  bool json() const { return format == "json-lines"; }
};

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_rational(t));
  return out;
}

Integer parse_natural(const std::string& text) { return parse_integer(text); }

void emit(std::ostream& out, const GlobalOptions& opts, const Json& record,
          const std::string& text) {
  out << (opts.json() ? record.dump() : text) << '\n';
}

Json checks_json(const VerificationReport& report) {
  Json checks = Json::object();
  for (const MeanCheck& c : report.checks) checks[c.name] = c.passed;
  return checks;
}

std::string verify_line(const VerificationReport& report) {
  std::string out = std::string("verify: ") + (report.passed() ? "pass" : "FAIL");
  for (const MeanCheck& c : report.checks) {
    out += " " + c.name + "=" + (c.passed ? "true" : "false");
  }
  return out;
}

int run_mean(const GlobalOptions& opts, const std::string& kind_text,
             const std::string& variant_text, bool verify,
             const std::vector<std::string>& entry_texts, std::ostream& out) {
  const MeanKind kind = *parse_mean_kind(kind_text);
  const Variant variant = *parse_variant(variant_text);
  const std::vector<Rational> entries = parse_rationals(entry_texts);
  const VerificationReport report =
      verify_mean(entries, kind, variant, {opts.precision_digits, opts.tolerance_digits});

  Json input;
  input["entries"] = strings(entries);
  input["kind"] = to_string(kind);
  input["variant"] = to_string(variant);
  Json result;
  std::string text;
  if (kind == MeanKind::arithmetic || kind == MeanKind::harmonic) {
    const CFWord word = mean_word(entries, kind, variant);
    const Rational value = word.value();
    const std::string decimal = rational_decimal(value, opts.digits);
    result["word"] = strings(word.entries);
    result["value"] = to_string(value);
    result["decimal"] = decimal;
    text = "word=" + format_entries(word.entries) + " value=" + to_string(value) + " ≈ " + decimal;
  } else {
    const PeriodicCF pcf = mean_periodic(entries, kind, variant);
    const QuadraticSurd value = periodic_value(pcf);
    const std::string decimal = surd_decimal(value, opts.digits);
    result["preperiod"] = strings(pcf.preperiod);
    result["period"] = strings(pcf.period);
    result["value"] = to_string(value);
    result["decimal"] = decimal;
    text = "pre=" + format_entries(pcf.preperiod) + " period=" + format_entries(pcf.period) +
           " value=" + to_string(value) + " ≈ " + decimal;
  }
  if (verify) text += "\n" + verify_line(report);
  emit(out, opts, make_record("mean", std::move(input), std::move(result), checks_json(report)),
       text);
  return report.passed() ? kExitOk : kExitInvariant;
}

int run_eval(const GlobalOptions& opts, const std::vector<std::string>& entry_texts,
             std::ostream& out) {
  EntrySeq entries;
  for (const std::string& t : entry_texts) entries.push_back(parse_gaussian(t));
  const GaussianRational value = cf_eval(entries);
  Json input;
  input["entries"] = Json::array();
  for (const auto& e : entries) input["entries"].push_back(to_string(e));
  Json result;
  result["value"] = to_string(value);
  result["re"] = to_string(value.re());
  result["im"] = to_string(value.im());
  if (value.is_real()) result["decimal"] = rational_decimal(value.re(), opts.digits);
  Json checks;
  checks["positive_entries"] = all_positive(std::span<const GaussianRational>(entries));
  emit(out, opts, make_record("eval", std::move(input), std::move(result), std::move(checks)),
       to_string(value));
  return kExitOk;
}

int run_continuant(const GlobalOptions& opts, const std::vector<std::string>& entry_texts,
                   std::ostream& out) {
  const std::vector<Rational> entries = parse_rationals(entry_texts);
  const Rational value = continuant(entries);
  Json result;
  result["value"] = to_string(value);
  emit(out, opts,
       make_record("continuant", {{"entries", strings(entries)}}, std::move(result)),
       to_string(value));
  return kExitOk;
}

int run_expansion(const GlobalOptions& opts, const std::string& op, const std::string& radicand,
                  std::ostream& out) {
  const Rational r = parse_rational(radicand);
  const PalindromicExpansion e = op == "sqrt-cf" ? sqrt_cf(numer(r), denom(r), opts.period_cap)
                                                 : half_sqrt_cf(numer(r), denom(r), opts.period_cap);
  emit(out, opts, to_json(e, op, r), to_text(e, op));
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact continued fractions: means of near continued fractions, quadratic-surd "
               "expansion, Pell equations, factorization and the Mordell scan.",
               "nearcf"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--digits", opts.digits, "Fractional digits of decimal approximations")
      ->check(CLI::Range(0, 100000));
  app.add_option("--period-cap", opts.period_cap, "Maximum number of expansion terms")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", opts.workers, "Scanner worker threads")->check(CLI::PositiveNumber);
  app.add_option("--tolerance-digits", opts.tolerance_digits,
                 "Cotangent check tolerance 10^-N")
      ->check(CLI::Range(1, 189));
  app.add_option("--precision-digits", opts.precision_digits,
                 "Decimal digits used by the cotangent check")
      ->check(CLI::Range(2, 190));

  std::vector<std::string> entries;
  std::string single;
  std::function<int()> action;

  auto* cmd_continuant = app.add_subcommand("continuant", "Continuant K[a0, ..., an]");
  cmd_continuant->add_option("entries", entries, "Rational entries");
  cmd_continuant->callback([&] { action = [&] { return run_continuant(opts, entries, out); }; });

  auto* cmd_eval = app.add_subcommand("eval", "Value of the finite continued fraction");
  cmd_eval->add_option("entries", entries, "Rational or Gaussian entries (e.g. 3/2, 1-i)")
      ->required();
  cmd_eval->callback([&] { action = [&] { return run_eval(opts, entries, out); }; });

  std::string kind;
  std::string variant = "real";
  bool verify = false;
  auto* cmd_mean = app.add_subcommand("mean", "Mean of the near pair [a0..ak], [a0..a(k+1)]");
  cmd_mean->add_option("--kind", kind, "arithmetic, geometric, harmonic or cotangent")
      ->required()
      ->check(CLI::IsMember({"arithmetic", "geometric", "harmonic", "cotangent"}));
  cmd_mean->add_option("--variant", variant, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}));
  cmd_mean->add_flag("--verify", verify, "Print the verification checks");
  cmd_mean->add_option("entries", entries, "Positive rational entries a0..a(k+1)")->required();
  cmd_mean->callback([&] {
    action = [&] { return run_mean(opts, kind, variant, verify, entries, out); };
  });

  for (const std::string op : {"sqrt-cf", "half-sqrt-cf"}) {
    auto* cmd = app.add_subcommand(op, op == "sqrt-cf" ? "Expansion of sqrt(p/q)"
                                                       : "Expansion of (1 + sqrt(p/q))/2");
    cmd->add_option("radicand", single, "p or p/q")->required();
    cmd->callback([&, op] { action = [&, op] { return run_expansion(opts, op, single, out); }; });
  }

  using NumberCommand = std::function<void(const Integer&)>;
  const auto add_number_command = [&](const std::string& name, const std::string& help,
                                      NumberCommand body) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("n", single, "Integer argument")->required();
    cmd->callback([&, body] {
      action = [&, body] {
        body(parse_natural(single));
        return static_cast<int>(kExitOk);
      };
    });
  };
  add_number_command("pell", "Fundamental solution of x^2 - n y^2 = +-1", [&](const Integer& n) {
    const PellSolution sol = pell_fundamental(n, opts.period_cap);
    emit(out, opts, to_json(sol, "pell"), to_text(sol));
  });
  add_number_command("pell4", "Solution of x^2 - n y^2 = +-4 from (1 + sqrt n)/2",
                     [&](const Integer& n) {
                       const PellSolution sol = pell4_fundamental(n, opts.period_cap);
                       emit(out, opts, to_json(sol, "pell4"), to_text(sol));
                     });
  add_number_command("factor", "Near-continued-fraction factorization of n",
                     [&](const Integer& n) {
                       const FactorOutcome o = cf_factor(n, opts.period_cap);
                       emit(out, opts, to_json(o), to_text(o));
                     });
  add_number_command("sum2sq", "Primitive sum of two squares for odd sqrt periods",
                     [&](const Integer& n) {
                       const SumOfSquares s = sum_two_squares(n, opts.period_cap);
                       emit(out, opts, to_json(s), to_text(s));
                     });
  add_number_command("mordell", "Mordell structural checks for a prime p = 3 mod 4",
                     [&](const Integer& p) {
                       const MordellReport r = mordell_check(p, opts.period_cap);
                       emit(out, opts, to_json(r), to_text(r));
                     });

  std::string mode = "mordell";
  std::string lo_text;
  std::string hi_text;
  auto* cmd_scan = app.add_subcommand("scan", "Scan a range of n in parallel");
  cmd_scan->add_option("--mode", mode, "mordell, factor, pell or sum2sq")
      ->check(CLI::IsMember({"mordell", "factor", "pell", "sum2sq"}));
  cmd_scan->add_option("lo", lo_text, "Range start")->required();
  cmd_scan->add_option("hi", hi_text, "Range end (inclusive)")->required();
  cmd_scan->callback([&] {
    action = [&] {
      ScanConfig config;
      config.range_lo = parse_integer(lo_text);
      config.range_hi = parse_integer(hi_text);
      config.mode = *parse_scan_mode(mode);
      config.workers = opts.workers;
      config.period_cap = opts.period_cap;
      config.output_format = opts.json() ? OutputFormat::json_lines : OutputFormat::text;
      return write_scan(config, scan(config), out, err);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error[usage]: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : static_cast<int>(kExitUsage);
  } catch (const InvariantViolation& e) {
    err << "error[invariant-violation]: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const DomainError& e) {
    err << "error[domain]: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "error[resource]: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error[usage]: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace nearcf
