#include "lacunary/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lacunary/errors.hpp"
#include "lacunary/identities.hpp"
#include "lacunary/report.hpp"

namespace lacunary {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string modes_text(const IdentityCase& c) {
  std::string s;
  for (CheckMode m : c.modes) s += (s.empty() ? "" : ",") + std::string(mode_name(m));
  return s;
}

int run_list(std::ostream& out) {
  for (const auto& c : registry()) out << c.id << " — " << c.paper_ref << " — " << modes_text(c) << "\n";
  return kOk;
}

std::string render(const std::vector<VerificationReport>& reports, const RunConfig& cfg) {
  std::ostringstream os;
  if (cfg.format == ReportFormat::Json) {
    write_json(os, reports, cfg, cfg.timestamp ? utc_now() : std::string());
  } else {
    write_csv(os, reports);
  }
  return os.str();
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  try {
    reports = run_verification(cfg);
  } catch (const NotFound& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (reports.empty()) {
    err << "error: no checks match the selected ids and mode\n";
    return kUsage;
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  const std::string text = render(reports, cfg);

  if (cfg.report_path) {
    std::ofstream f(*cfg.report_path, std::ios::binary);
    if (f) f << text;
    if (!f) {
      err << "error: cannot write report to " << *cfg.report_path << "\n" << text;
      return kFail;
    }
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << mode_name(r.mode) << " max_rel_err "
          << format_number(r.max_rel_err) << "\n";
    }
  } else {
    out << text;
  }
  return all_pass ? kOk : kFail;
}

int run_derive(const std::string& family, int m, std::ostream& out, std::ostream& err) {
  AuxFamily f;
  if (family == "p") {
    f = AuxFamily::P;
    if (m < 1 || m > 2) {
      err << "error: family p supports m in {1, 2}\n";
      return kUsage;
    }
  } else if (family == "q") {
    f = AuxFamily::Q;
    if (m != 1) {
      err << "error: family q supports m = 1\n";
      return kUsage;
    }
  } else {
    err << "error: family must be p or q\n";
    return kUsage;
  }
  try {
    const DerivedAuxPolynomial d = derive_aux_polynomial(f, m);
    const AuxComparison cmp = compare_with_printed(d);
    nlohmann::ordered_json j;
    j["family"] = family;
    j["m"] = m;
    j["degree"] = d.degree();
    j["lacunarity"] = d.lacunarity;
    j["factorial_offset"] = d.factorial_offset;
    j["template"] = d.template_used;
    j["fit_orders"] = d.fit_orders;
    j["verified_orders"] = d.verified_orders;
    j["polynomial"] = d.str();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    const std::vector<std::string> names{"t", "x", "y"};
    for (int k = d.degree(); k >= 0; --k) {
      coeffs.push_back({{"r_power", k}, {"coefficient", d.coefficients[static_cast<std::size_t>(k)].str(names)}});
    }
    j["coefficients"] = coeffs;
    j["matches_paper"] = cmp.matches_paper;
    j["printed"] = cmp.printed;
    j["deviations"] = cmp.deviations;
    std::vector<std::string> notes = d.notes;
    notes.insert(notes.end(), cmp.notes.begin(), cmp.notes.end());
    j["notes"] = notes;
    out << j.dump(2) << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Umbral verification of Laguerre lacunary generating functions", "lacunary"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List registered identities");

  auto* verify = app.add_subcommand("verify", "Verify identities and write a report");
  std::vector<std::string> ids;
  bool all = false, no_timestamp = false;
  std::string mode, format, config_path;
  std::optional<int> nmax, max_points;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> report, mutate;
  verify->add_option("--id", ids, "Identity ids, e.g. EQ2.7");
  verify->add_flag("--all", all, "Verify every registered identity");
  verify->add_option("--mode", mode, "exact, numeric or all")->check(CLI::IsMember({"exact", "numeric", "all"}));
  verify->add_option("--nmax", nmax, "Coefficient order or fixed series length");
  verify->add_option("--tol", tol, "Tolerance; may only tighten the registered one");
  verify->add_option("--seed", seed, "Seed for sampled rational tuples");
  verify->add_option("--report", report, "Report path; stdout when omitted");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--no-timestamp", no_timestamp, "Write a null timestamp");
  verify->add_option("--config", config_path, "JSON run configuration; flags take precedence");
  verify->add_option("--max-points", max_points, "Limit grid points and tuples per variant");
  verify->add_option("--mutate", mutate, "Negate the right-hand side of one identity");

  auto* derive = app.add_subcommand("derive-aux", "Derive an auxiliary polynomial and compare with the printed one");
  std::string family = "p";
  int m = 1;
  derive->add_option("--family", family, "p or q")->check(CLI::IsMember({"p", "q"}));
  derive->add_option("--m", m, "Order parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return kUsage;
  }

  try {
    if (app.got_subcommand("list")) return run_list(out);
    if (app.got_subcommand("derive-aux")) return run_derive(family, m, out, err);

    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) {
        err << "error: cannot read config " << config_path << "\n";
        return kUsage;
      }
      std::stringstream buf;
      buf << f.rdbuf();
      cfg = parse_run_config(buf.str());
    }
    if (!ids.empty() && all) {
      err << "error: use either --id or --all\n";
      return kUsage;
    }
    if (!ids.empty()) {
      cfg.ids = ids;
      cfg.all = false;
    }
    if (all) {
      cfg.all = true;
      cfg.ids.clear();
    }
    if (!mode.empty()) cfg.mode = mode == "exact" ? ModeFilter::Exact : mode == "numeric" ? ModeFilter::Numeric : ModeFilter::All;
    if (nmax) cfg.nmax = nmax;
    if (tol) cfg.tolerance = tol;
    if (seed) cfg.seed = *seed;
    if (report) cfg.report_path = report;
    if (!format.empty()) cfg.format = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    if (no_timestamp) cfg.timestamp = false;
    if (max_points) cfg.max_points = max_points;
    if (mutate) cfg.mutate = mutate;
    return run_verify(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace lacunary
