#include "prym/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "prym/galoiscert.hpp"
#include "prym/intpoly.hpp"
#include "prym/primes.hpp"
#include "prym/prymcalc.hpp"

namespace prym {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Text:
      return "text";
  }
  return "text";
}

void check_pr(int p, int r) {
  if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime (got " + std::to_string(p) + ")");
  if (r < 2) throw UsageError("r must be >= 2 (got " + std::to_string(r) + ")");
}

CertOptions options_of(const RunConfig& cfg) {
  if (cfg.samples < 10) throw UsageError("--samples must be at least 10");
  if (cfg.prime_budget < 1) throw UsageError("--prime-budget must be positive");
  CertOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.prime_budget = cfg.prime_budget;
  return options;
}

nlohmann::json tool_json() { return {{"name", "prymcert"}, {"version", kToolVersion}}; }

void emit(const nlohmann::json& doc, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.output_path.empty()) {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + cfg.output_path + " for writing");
    file << doc.dump(2) << '\n';
  }
  if (cfg.format == OutputFormat::Json) {
    out << doc.dump(2) << '\n';
  } else {
    out << render_text(doc);
  }
}

nlohmann::json certificate_doc(const Certificate& cert, const RunConfig& cfg) {
  nlohmann::json doc = cert.to_json();
  doc["run_config"] = cfg.to_json();
  return doc;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_pr(cfg.p, cfg.r);
  const Certificate cert = certify_prym(cfg.p, cfg.r, options_of(cfg));
  emit(certificate_doc(cert, cfg), cfg, out);
  return exit_code(cert.verdict);
}

nlohmann::json scan_row(int p, int r) {
  const int m = p * r - 1;
  const ConditionPR cond = condition_p_r(p, r);
  return {{"p", p},
          {"r", r},
          {"m", m},
          {"cond1", cond.shortcut_congruence},
          {"cond2", cond.shortcut_small_r},
          {"cond3", cond.pass},
          {"det_eligible", m >= 9},
          {"dim_prym", dim_prym(p, m)}};
}

int cmd_scan(const RunConfig& cfg, int p_max, int r_max, std::ostream& out) {
  if (p_max < 2 || r_max < 2) throw UsageError("--p-max and --r-max must be >= 2");
  std::vector<std::pair<int, int>> cells;
  for (std::uint32_t p : PrimeRange(3, static_cast<std::uint32_t>(p_max) + 1)) {
    for (int r = 2; r <= r_max; r += 2) cells.emplace_back(static_cast<int>(p), r);
  }
  std::vector<nlohmann::json> rows(cells.size());
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, cells.size()); ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cells.size(); i += workers) rows[i] = scan_row(cells[i].first, cells[i].second);
    });
  }
  for (auto& t : pool) t.join();

  nlohmann::json doc{{"kind", "scan"}, {"tool", tool_json()}, {"p_max", p_max}, {"r_max", r_max}};
  doc["rows"] = rows;
  if (cfg.format == OutputFormat::Csv) {
    std::ostringstream csv;
    csv << "p,r,m,cond1,cond2,cond3,det_eligible,dim_prym\n";
    for (const auto& row : rows) {
      csv << row["p"] << ',' << row["r"] << ',' << row["m"] << ',' << row["cond1"] << ',' << row["cond2"] << ','
          << row["cond3"] << ',' << row["det_eligible"] << ',' << row["dim_prym"] << '\n';
    }
    if (!cfg.output_path.empty()) {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot open " + cfg.output_path + " for writing");
      file << csv.str();
    }
    out << csv.str();
    return 0;
  }
  emit(doc, cfg, out);
  return 0;
}

int cmd_galois(const RunConfig& cfg, const std::string& poly_text, const std::string& mode, std::ostream& out) {
  IntPoly h;
  int m = cfg.m;
  long c = cfg.c;
  if (!poly_text.empty()) {
    try {
      h = IntPoly::parse(poly_text);
    } catch (const std::exception& e) {
      throw UsageError(std::string("cannot parse polynomial: ") + e.what());
    }
    if (h.degree() < 2 || h.degree() % 2 != 0) throw UsageError("polynomial must have even degree 2m >= 2");
    m = h.degree() / 2;
  } else {
    if (m < 1) throw UsageError("give --poly or --m");
    h = compose_x2(selmer_trinomial(m, c));
  }
  const CertOptions options = options_of(cfg);

  if (mode == "certify") {
    if (!poly_text.empty()) {
      c = -h.coeff(0).get_si();
      if (!h.coeff(0).fits_slong_p() || h != compose_x2(selmer_trinomial(m, c))) {
        throw UsageError("certify mode needs a polynomial of the form x^(2m) - x^2 - c");
      }
    }
    const Certificate cert = certify_wdm_over_Q(m, c, options);
    RunConfig recorded = cfg;
    recorded.m = m;
    recorded.c = c;
    emit(certificate_doc(cert, recorded), cfg, out);
    return exit_code(cert.verdict);
  }

  const GroupDescriptor target = GroupDescriptor::weyl_d(m);
  ChebotarevReport report;
  try {
    report = chebotarev_verdict(h, target, options.samples, options.seed, options.threads);
  } catch (const BudgetExceeded&) {
    throw UsageError("W(D_" + std::to_string(m) + ") is too large to census for sampling");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  nlohmann::json doc{{"kind", "galois-sample"},
                     {"tool", tool_json()},
                     {"polynomial", h.to_string()},
                     {"target", target.name()},
                     {"verdict", report.refuted ? "Refuted" : "ConsistentWith"},
                     {"report", report.to_json()},
                     {"run_config", cfg.to_json()}};
  emit(doc, cfg, out);
  return report.refuted ? 1 : 2;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  check_pr(cfg.p, cfg.r);
  const int p = cfg.p;
  const int r = cfg.r;
  const int m = p * r - 1;
  const int n = 2 * m + 1;
  const auto table = multiplicity_table(p, r);
  const auto bound = non_jacobian_bound(p, r);
  nlohmann::json doc{{"kind", "invariants"},
                     {"tool", tool_json()},
                     {"p", p},
                     {"r", r},
                     {"m", m},
                     {"n", n},
                     {"genus", genus_curve(n, p)},
                     {"dim_prym", dim_prym(p, m)},
                     {"multiplicities", table_to_json(table)},
                     {"gcd", multiplicity_gcd(table)},
                     {"coprime", multiplicities_coprime(p, r)},
                     {"distinct", multiplicities_distinct(p, r)},
                     {"non_jacobian",
                      {{"lhs", bound.lhs.get_str()},
                       {"rhs", bound.rhs.get_str()},
                       {"rhs_r_form", bound.rhs_simplified.get_str()},
                       {"holds", bound.holds}}}};
  nlohmann::json notes = nlohmann::json::array();
  if (r % 2 != 0) notes.push_back("r odd: coprimality fails");
  doc["notes"] = notes;
  emit(doc, cfg, out);
  return 0;
}

int cmd_replay(const std::string& path, std::ostream& out) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  ReplayReport report;
  try {
    report = replay_certificate(doc);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
  out << (report.reproduced ? "reproduced" : "mismatch") << '\n';
  for (const auto& m : report.mismatches) out << "  " << m << '\n';
  return report.reproduced ? 0 : 1;
}

void render_value(std::ostringstream& os, const std::string& key, const nlohmann::json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && !v.empty() && indent < 4) {
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) render_value(os, k, sub, indent + 2);
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << '\n';
  } else {
    os << pad << key << ": " << v.dump() << '\n';
  }
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  return {{"command", command}, {"p", p},         {"r", r},
          {"m", m},             {"c", c},         {"samples", samples},
          {"seed", seed},       {"prime_budget", prime_budget},
          {"output", output_path}, {"format", format_name(format)}};
}

std::string render_text(const nlohmann::json& doc) {
  std::ostringstream os;
  if (doc.contains("steps")) {
    os << "claim:   " << doc.value("claim", "") << '\n';
    os << "verdict: " << doc.value("verdict", "") << '\n';
    if (!doc["failed_premise"].is_null()) os << "failed:  " << doc["failed_premise"].get<std::string>() << '\n';
    os << "steps:\n";
    for (const auto& step : doc["steps"]) {
      os << "  [" << (step["established"].get<bool>() ? "ok" : "--") << "] " << step["rule"].get<std::string>() << ": "
         << step["conclusion"].get<std::string>() << '\n';
      for (const auto& premise : step["premises"]) {
        os << "      " << (premise["holds"].get<bool>() ? "+ " : "x ") << premise["fact"].get<std::string>();
        if (!premise["value"].is_null()) {
          os << " = " << (premise["value"].is_string() ? premise["value"].get<std::string>() : premise["value"].dump());
        }
        os << '\n';
      }
    }
    if (!doc["claims"].empty()) {
      os << "claims:\n";
      for (const auto& claim : doc["claims"]) {
        os << "  (" << claim["status"].get<std::string>() << ") " << claim["statement"].get<std::string>();
        if (claim.contains("authority")) os << "  [" << claim["authority"].get<std::string>() << "]";
        os << '\n';
      }
    }
    return os.str();
  }
  if (doc.contains("rows")) {
    os << "   p   r    m  cond1  cond2  cond3  det  dim_prym\n";
    for (const auto& row : doc["rows"]) {
      char line[96];
      std::snprintf(line, sizeof line, "%4d %3d %4d  %-5s  %-5s  %-5s  %-4s %8d\n", row["p"].get<int>(), row["r"].get<int>(),
                    row["m"].get<int>(), row["cond1"].get<bool>() ? "yes" : "no", row["cond2"].get<bool>() ? "yes" : "no",
                    row["cond3"].get<bool>() ? "pass" : "fail", row["det_eligible"].get<bool>() ? "yes" : "no",
                    row["dim_prym"].get<int>());
      os << line;
    }
    return os.str();
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "tool" || key == "run_config") continue;
    render_value(os, key, value, 0);
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for Prym varieties of y^p = x u(x^2)", "prymcert"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};
  int p_max = 0;
  int r_max = 0;
  std::string poly_text;
  std::string mode = "certify";
  std::string replay_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Frobenius samples")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for prime subsampling (0: first primes)")->capture_default_str();
    sub->add_option("--prime-budget", cfg.prime_budget, "primes tried for irreducibility witnesses")->capture_default_str();
    sub->add_option("--out", cfg.output_path, "write the JSON document to this file");
    sub->add_option("--format", cfg.format, "json, csv or text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  CLI::App* verify = app.add_subcommand("verify", "certify End(Prym) for given p and r");
  verify->add_option("--p", cfg.p, "odd prime p")->required();
  verify->add_option("--r", cfg.r, "r >= 2")->required();
  common(verify);

  CLI::App* scan = app.add_subcommand("scan", "table of (p, r) conditions");
  scan->add_option("--p-max", p_max)->required();
  scan->add_option("--r-max", r_max)->required();
  scan->add_option("--out", cfg.output_path);
  scan->add_option("--format", cfg.format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  CLI::App* galois = app.add_subcommand("galois", "certify or sample Gal(u(x^2)) against W(D_m)");
  galois->add_option("--poly", poly_text, "polynomial such as \"x^6 - x^2 - 1\"");
  galois->add_option("--m", cfg.m);
  galois->add_option("--c", cfg.c)->capture_default_str();
  galois->add_option("--mode", mode)->check(CLI::IsMember({"certify", "sample"}))->capture_default_str();
  common(galois);

  CLI::App* invariants = app.add_subcommand("invariants", "genus, dimension and multiplicity table");
  invariants->add_option("--p", cfg.p)->required();
  invariants->add_option("--r", cfg.r)->required();
  invariants->add_option("--out", cfg.output_path);
  invariants->add_option("--format", cfg.format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  CLI::App* replay = app.add_subcommand("replay", "recompute a certificate and compare");
  replay->add_option("certificate", replay_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      cfg.command = "verify";
      return cmd_verify(cfg, out);
    }
    if (*scan) {
      cfg.command = "scan";
      if (scan->count("--format") == 0) cfg.format = OutputFormat::Csv;
      return cmd_scan(cfg, p_max, r_max, out);
    }
    if (*galois) {
      cfg.command = "galois";
      return cmd_galois(cfg, poly_text, mode, out);
    }
    if (*invariants) {
      cfg.command = "invariants";
      return cmd_invariants(cfg, out);
    }
    if (*replay) return cmd_replay(replay_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace prym
