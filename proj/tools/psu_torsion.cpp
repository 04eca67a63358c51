#include <chrono>
#include <ctime>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "psu/report.hpp"
#include "psu/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  bool json = false;
  bool csv = false;
  bool meta = false;
};

std::string iso_utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const psu::ReportRecord& record, const OutputOptions& out) {
  if (out.json) {
    nlohmann::json j = psu::to_json(record);
    if (out.meta)
      j["meta"] = {{"tool", psu::kToolName},
                   {"version", psu::kToolVersion},
                   {"time", iso_utc_now()}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (out.meta) {
    std::cout << "# " << psu::kToolName << " " << psu::kToolVersion << "\n"
              << "# time: " << iso_utc_now() << "\n";
  }
  std::cout << (out.csv ? psu::render_csv(record) : psu::render_text(record));
}

void add_output_flags(CLI::App* cmd, OutputOptions& out, bool with_csv) {
  cmd->add_flag("--json", out.json, "emit one JSON object");
  if (with_csv) cmd->add_flag("--csv", out.csv, "emit CSV rows (k,b,a,block)");
  cmd->add_flag("--meta", out.meta, "add run metadata to the output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic of the binomial-gcd spectrum, covering multipliers,"
               " and the torsion subring, with cross-oracle verification"};
  app.require_subcommand(1);

  std::uint64_t n = 0;
  OutputOptions out;

  auto* factor = app.add_subcommand("factor", "prime factorization of n");
  factor->add_option("n", n, "integer >= 2")->required();
  add_output_flags(factor, out, false);

  std::string oracle_spec = "brute";
  auto* tables = app.add_subcommand(
      "tables", "b/a tables and the prime-power partition for n");
  tables->add_option("n", n, "integer >= 2")->required();
  tables->add_option("--oracle", oracle_spec,
                     "b-table route: brute|closed|schubert|spectral");
  add_output_flags(tables, out, true);

  auto* chow = app.add_subcommand(
      "chow", "primary decomposition of the torsion ideal for n");
  chow->add_option("n", n, "integer >= 2")->required();
  add_output_flags(chow, out, false);

  std::string set_spec;
  auto* cstar = app.add_subcommand(
      "cstar", "image multiplier of the square-free monomial zeta_I");
  cstar->add_option("n", n, "integer >= 2")->required();
  cstar->add_option("--set", set_spec,
                    "index set, e.g. \"2,3\" or \"2..12\" (default empty)");
  add_output_flags(cstar, out, false);

  psu::VerifyOptions vopts{.from = 2, .to = 3000};
  std::uint64_t fault_n = 0;
  auto* verify = app.add_subcommand(
      "verify", "cross-oracle verification sweep over a range of n");
  verify->add_option("from", vopts.from, "first n (>= 2, default 2)");
  verify->add_option("to", vopts.to, "last n (default 3000)");
  verify->add_option("--workers", vopts.workers,
                     "worker threads (0 = all cores)");
  verify->add_option("--ineq-bound", vopts.ineq_bound,
                     "run the factorial-order inequality sweep for n <= this");
  verify->add_option("--inject-fault", fault_n)->group("");  // test hook
  add_output_flags(verify, out, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (factor->parsed()) {
      emit(psu::make_factor_record(n), out);
      return kExitOk;
    }
    if (tables->parsed()) {
      const auto oracle = psu::oracle_from_name(oracle_spec);
      if (!oracle) {
        std::cerr << "error: unknown oracle '" << oracle_spec
                  << "' (expected brute|closed|schubert|spectral)\n";
        return kExitUsage;
      }
      emit(psu::make_tables_record(n, *oracle), out);
      return kExitOk;
    }
    if (chow->parsed()) {
      emit(psu::make_chow_record(n), out);
      return kExitOk;
    }
    if (cstar->parsed()) {
      emit(psu::make_cstar_record(n, psu::parse_index_set(set_spec)), out);
      return kExitOk;
    }
    if (verify->parsed()) {
      if (verify->count("--inject-fault") > 0) vopts.inject_fault_at = fault_n;
      const psu::VerifySummary summary = psu::verify_range(vopts);
      emit(psu::make_verify_record(summary, vopts), out);
      return summary.failures == 0 ? kExitOk : kExitCounterexample;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // A broken cross-check: report as a verification counterexample.
    std::cerr << "consistency error: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
