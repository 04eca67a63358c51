#include "psu/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "psu/covering_map.hpp"
#include "psu/gcd_spectrum.hpp"
#include "psu/torsion_ring.hpp"
#include "psu/valuation.hpp"

namespace psu {

using nlohmann::json;

namespace {

json factorization_to_json(const Factorization& f) {
  json out = json::array();
  for (const auto& pp : f.entries())
    out.push_back({{"p", pp.prime.to_u64()}, {"r", pp.exponent}});
  return out;
}

// "2^2 · 3" for the header lines.
std::string factor_string(const json& factors) {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << " · ";
    first = false;
    os << f.at("p").get<std::uint64_t>();
    if (f.at("r").get<std::uint64_t>() != 1)
      os << "^" << f.at("r").get<std::uint64_t>();
  }
  return os.str();
}

json partition_to_json(const PrimePowerPartition& part) {
  json blocks = json::array();
  for (const auto& b : part.blocks())
    blocks.push_back({{"p", b.prime.to_u64()}, {"members", b.members}});
  return {{"q0", part.q0()}, {"blocks", blocks}};
}

// Block label for index k: "Q<p>", "Q0", or "" for k = 1.
std::string block_label(const json& partition, std::uint64_t k) {
  if (k < 2) return "";
  for (const auto& b : partition.at("blocks")) {
    const auto& members = b.at("members");
    if (std::find(members.begin(), members.end(), json(k)) != members.end())
      return "Q" + std::to_string(b.at("p").get<std::uint64_t>());
  }
  return "Q0";
}

std::string index_set_string(const json& indices) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& r : indices) {
    if (!first) os << ", ";
    first = false;
    os << r.get<std::uint64_t>();
  }
  os << "}";
  return os.str();
}

std::string relation_string(std::uint64_t coeff, std::uint64_t power) {
  std::ostringstream os;
  if (coeff != 1) os << coeff << " ";
  os << "w";
  if (power != 1) os << "^" << power;
  return os.str();
}

std::string render_factor(const ReportRecord& r) {
  std::ostringstream os;
  os << r.payload.at("n").get<std::uint64_t>() << " = "
     << factor_string(r.payload.at("factors")) << "\n";
  return os.str();
}

std::string render_tables(const ReportRecord& r) {
  const auto& p = r.payload;
  const std::uint64_t n = p.at("n").get<std::uint64_t>();
  const auto& b = p.at("b");
  const auto& a = p.at("a");
  const auto& part = p.at("partition");

  std::ostringstream os;
  os << "n = " << n << " = " << factor_string(p.at("factor")) << "  (oracle: "
     << p.at("oracle").get<std::string>() << ")\n";
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"k", "b", "a", "block"});
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::string label = block_label(part, k);
    rows.push_back(
        {std::to_string(k), std::to_string(b.at(k - 1).get<std::uint64_t>()),
         k >= 2 ? std::to_string(a.at(k - 2).get<std::uint64_t>()) : "-",
         label.empty() ? "-" : label});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c)
      width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c)
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    os << "\n";
  }
  for (const auto& blk : part.at("blocks")) {
    os << "Q" << blk.at("p").get<std::uint64_t>() << " = "
       << index_set_string(blk.at("members")) << "\n";
  }
  os << "Q0 = " << index_set_string(part.at("q0")) << "\n";
  return os.str();
}

std::string render_chow(const ReportRecord& r) {
  const auto& p = r.payload;
  std::ostringstream os;
  os << "n = " << p.at("n").get<std::uint64_t>() << " = "
     << factor_string(p.at("factor")) << "\n";
  os << "primary torsion summands:\n";
  for (const auto& s : p.at("summands")) {
    os << "  p = " << s.at("p").get<std::uint64_t>() << ": <";
    bool first = true;
    for (const auto& rel : s.at("relations")) {
      if (!first) os << ", ";
      first = false;
      os << relation_string(rel.at("c").get<std::uint64_t>(),
                            rel.at("e").get<std::uint64_t>());
    }
    os << ">\n";
  }
  if (p.at("extension_below_3").get<bool>())
    os << "note: the decomposition is stated for n > 2; n = 2 uses the same "
          "construction\n";
  os << "degreewise CRT vs gcd table: OK\n";
  return os.str();
}

std::string render_cstar(const ReportRecord& r) {
  const auto& p = r.payload;
  std::ostringstream os;
  os << "n = " << p.at("n").get<std::uint64_t>()
     << ", I = " << index_set_string(p.at("indices")) << "\n";
  os << "degree(zeta_I) = " << p.at("degree").get<std::uint64_t>() << "\n";
  os << "c*(zeta_I) = " << p.at("coefficient").get<std::uint64_t>()
     << " · xi_I\n";
  return os.str();
}

std::string witness_string(const std::map<std::string, std::int64_t>& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : w) {
    if (!first) os << ", ";
    first = false;
    os << key << "=" << value;
  }
  return os.str();
}

std::string render_verify(const ReportRecord& r) {
  const auto& p = r.payload;
  const std::uint64_t verified = p.at("verified").get<std::uint64_t>();
  const std::uint64_t failures = p.at("failures").get<std::uint64_t>();
  std::ostringstream os;
  os << "verify " << p.at("from").get<std::uint64_t>() << ".."
     << p.at("to").get<std::uint64_t>() << ": " << verified
     << (verified == 1 ? " value verified, " : " values verified, ")
     << failures << (failures == 1 ? " failure" : " failures") << "\n";
  for (const auto& c : r.checks) {
    if (!c.pass)
      os << "FAIL " << c.name << ": " << witness_string(c.witness) << "\n";
  }
  for (const auto& c : r.checks) {
    const auto& counts = p.at("check_counts").at(c.name);
    const std::uint64_t passed = counts.at("pass").get<std::uint64_t>();
    const std::uint64_t ran = passed + counts.at("fail").get<std::uint64_t>();
    os << "  " << std::left << std::setw(18) << c.name << std::right << " "
       << passed << "/" << ran << "\n";
  }
  return os.str();
}

}  // namespace

json to_json(const ReportRecord& r) {
  json j;
  j["command"] = r.command;
  if (r.n) j["n"] = *r.n;
  if (r.range) j["range"] = json::array({r.range->first, r.range->second});
  j["payload"] = r.payload;
  json checks = json::array();
  for (const auto& c : r.checks) {
    if (!c.pass && c.witness.empty())
      throw std::logic_error("ReportRecord: failed check '" + c.name +
                             "' has no witness");
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

ReportRecord record_from_json(const json& j) {
  ReportRecord r;
  r.command = j.at("command").get<std::string>();
  if (j.contains("n")) r.n = j.at("n").get<std::uint64_t>();
  if (j.contains("range")) {
    const auto& a = j.at("range");
    r.range = {a.at(0).get<std::uint64_t>(), a.at(1).get<std::uint64_t>()};
  }
  r.payload = j.at("payload");
  for (const auto& cj : j.at("checks")) {
    CheckResult c;
    c.name = cj.at("name").get<std::string>();
    c.pass = cj.at("pass").get<bool>();
    if (cj.contains("witness"))
      c.witness =
          cj.at("witness").get<std::map<std::string, std::int64_t>>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::optional<Oracle> oracle_from_name(const std::string& name) {
  if (name == "brute") return Oracle::Brute;
  if (name == "closed") return Oracle::Closed;
  if (name == "schubert") return Oracle::Schubert;
  if (name == "spectral") return Oracle::Spectral;
  return std::nullopt;
}

const char* oracle_name(Oracle o) {
  switch (o) {
    case Oracle::Brute: return "brute";
    case Oracle::Closed: return "closed";
    case Oracle::Schubert: return "schubert";
    case Oracle::Spectral: return "spectral";
  }
  return "?";
}

ReportRecord make_factor_record(std::uint64_t n) {
  const Factorization f = factorize(Natural(n));
  ReportRecord r;
  r.command = "factor";
  r.n = n;
  r.payload = {{"n", n}, {"factors", factorization_to_json(f)}};
  CheckResult check{"reconstructs_input", f.reconstruct() == Natural(n), {}};
  if (!check.pass)
    check.witness = {{"n", static_cast<std::int64_t>(n)}};
  r.checks.push_back(std::move(check));
  return r;
}

ReportRecord make_tables_record(std::uint64_t n, Oracle oracle) {
  BnkTable b = [&] {
    switch (oracle) {
      case Oracle::Brute: return bnk_bruteforce(n);
      case Oracle::Closed: return bnk_closed_form(n);
      case Oracle::Schubert: return schubert_quotient_oracle(n);
      case Oracle::Spectral: return baum_browder_orders(n);
    }
    throw std::domain_error("tables: unknown oracle");
  }();
  const AnkTable a = ank_from_bnk(b);
  const PrimePowerPartition part = partition(n);
  const Factorization fact = factorize(Natural(n));

  json bj = json::array(), aj = json::array();
  for (const auto& v : b.values()) bj.push_back(v.to_u64());
  for (const auto& v : a.values()) aj.push_back(v.to_u64());

  ReportRecord r;
  r.command = "tables";
  r.n = n;
  r.payload = {{"n", n},
               {"oracle", oracle_name(oracle)},
               {"factor", factorization_to_json(fact)},
               {"b", std::move(bj)},
               {"a", std::move(aj)},
               {"partition", partition_to_json(part)}};
  r.checks.push_back({"table_invariants", true, {}});
  return r;
}

ReportRecord make_chow_record(std::uint64_t n) {
  const PrimaryDecomposition dec = chow_primary_decomposition(n);
  const Factorization fact = factorize(Natural(n));
  json summands = json::array();
  for (const auto& s : dec.summands) {
    json rels = json::array();
    for (const auto& [c, e] : s.relations)
      rels.push_back({{"c", c.to_u64()}, {"e", e.to_u64()}});
    summands.push_back({{"p", s.prime.to_u64()},
                        {"r", s.exponent},
                        {"relations", std::move(rels)}});
  }
  ReportRecord r;
  r.command = "chow";
  r.n = n;
  r.payload = {{"n", n},
               {"factor", factorization_to_json(fact)},
               {"extension_below_3", dec.extension_below_3},
               {"summands", std::move(summands)}};
  r.checks.push_back({"crt_degreewise", true, {}});
  return r;
}

ReportRecord make_cstar_record(std::uint64_t n,
                               const std::vector<std::uint64_t>& indices) {
  const ExteriorMonomial mono(n, indices);
  const ScaledMonomial image = cstar_monomial(CstarMap::for_n(n), mono);
  ReportRecord r;
  r.command = "cstar";
  r.n = n;
  r.payload = {{"n", n},
               {"indices", indices},
               {"degree", mono.degree()},
               {"coefficient", image.coefficient.to_u64()}};
  return r;
}

ReportRecord make_verify_record(const VerifySummary& summary,
                                const VerifyOptions& opts) {
  ReportRecord r;
  r.command = "verify";
  r.range = {opts.from, opts.to};
  json counts = json::object();
  for (const auto& name : verify_check_names()) {
    counts[name] = {{"pass", summary.check_passes.at(name)},
                    {"fail", summary.check_failures.at(name)}};
  }
  r.payload = {{"from", opts.from},
               {"to", opts.to},
               {"ineq_bound", opts.ineq_bound},
               {"verified", summary.values_checked},
               {"failures", summary.failures},
               {"check_counts", std::move(counts)}};
  for (const auto& name : verify_check_names()) {
    CheckResult c{name, summary.check_failures.at(name) == 0, {}};
    if (!c.pass) c.witness = summary.first_failure_by_check.at(name).witness;
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string render_text(const ReportRecord& r) {
  if (r.command == "factor") return render_factor(r);
  if (r.command == "tables") return render_tables(r);
  if (r.command == "chow") return render_chow(r);
  if (r.command == "cstar") return render_cstar(r);
  if (r.command == "verify") return render_verify(r);
  throw std::domain_error("render_text: unknown command " + r.command);
}

std::string render_csv(const ReportRecord& r) {
  if (r.command != "tables")
    throw std::domain_error("csv output is defined for tables only");
  const auto& p = r.payload;
  const std::uint64_t n = p.at("n").get<std::uint64_t>();
  const auto& b = p.at("b");
  const auto& a = p.at("a");
  const auto& part = p.at("partition");
  std::ostringstream os;
  os << "k,b,a,block\n";
  for (std::uint64_t k = 1; k <= n; ++k) {
    os << k << "," << b.at(k - 1).get<std::uint64_t>() << ",";
    if (k >= 2) os << a.at(k - 2).get<std::uint64_t>();
    os << "," << block_label(part, k) << "\n";
  }
  return os.str();
}

std::vector<std::uint64_t> parse_index_set(const std::string& spec) {
  std::vector<std::uint64_t> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string token;
  auto parse_u64 = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::domain_error("index set: bad number '" + s + "'");
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  while (std::getline(ss, token, ',')) {
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_u64(token));
    } else {
      const std::uint64_t lo = parse_u64(token.substr(0, dots));
      const std::uint64_t hi = parse_u64(token.substr(dots + 2));
      if (lo > hi) throw std::domain_error("index set: empty range " + token);
      for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::domain_error("index set: duplicate index");
  return out;
}

}  // namespace psu
