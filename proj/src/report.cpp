#include "lacunary/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>

#include <json.hpp>

#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return json(s).dump(); }

ModeFilter parse_mode(const std::string& s) {
  if (s == "exact") return ModeFilter::Exact;
  if (s == "numeric") return ModeFilter::Numeric;
  if (s == "all") return ModeFilter::All;
  throw ConfigError("mode must be exact, numeric or all (got '" + s + "')");
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw ConfigError("format must be json or csv (got '" + s + "')");
}

bool selected(ModeFilter f, CheckMode m) {
  switch (f) {
    case ModeFilter::Exact: return m == CheckMode::ExactCoeff;
    case ModeFilter::Numeric: return m != CheckMode::ExactCoeff;
    case ModeFilter::All: return true;
  }
  return false;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

VerificationReport failed(const std::string& id, const std::string& ref, CheckMode mode, const std::string& why) {
  VerificationReport r;
  r.id = id;
  r.paper_ref = ref;
  r.mode = mode;
  r.pass = false;
  r.notes.push_back(why);
  return r;
}

}  // namespace

std::string_view mode_filter_name(ModeFilter m) {
  switch (m) {
    case ModeFilter::Exact: return "exact";
    case ModeFilter::Numeric: return "numeric";
    case ModeFilter::All: return "all";
  }
  return "?";
}

std::string_view format_name(ReportFormat f) { return f == ReportFormat::Json ? "json" : "csv"; }

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunConfig parse_run_config(const std::string& json_text, RunConfig cfg) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known{"ids",    "all",    "mode",      "nmax",  "tol",   "seed",
                                              "max_points", "report", "format", "timestamp", "mutate"};
  try {
    for (const auto& [key, value] : j.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
      if (key == "ids") cfg.ids = value.get<std::vector<std::string>>();
      else if (key == "all") cfg.all = value.get<bool>();
      else if (key == "mode") cfg.mode = parse_mode(value.get<std::string>());
      else if (key == "nmax") cfg.nmax = value.get<int>();
      else if (key == "tol") cfg.tolerance = value.get<double>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "max_points") cfg.max_points = value.get<int>();
      else if (key == "report") cfg.report_path = value.get<std::string>();
      else if (key == "format") cfg.format = parse_format(value.get<std::string>());
      else if (key == "timestamp") cfg.timestamp = value.get<bool>();
      else if (key == "mutate") cfg.mutate = value.get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

std::vector<VerificationReport> run_verification(const RunConfig& cfg) {
  std::vector<const IdentityCase*> cases;
  if (cfg.all) {
    for (const auto& c : registry()) cases.push_back(&c);
  } else {
    if (cfg.ids.empty()) throw ConfigError("select identities with --id or --all");
    for (const auto& id : cfg.ids) cases.push_back(&lookup(id));
  }
  if (cfg.mutate) lookup(*cfg.mutate);
  if (cfg.nmax && *cfg.nmax < 1) throw ConfigError("nmax must be positive");
  if (cfg.max_points && *cfg.max_points < 1) throw ConfigError("max_points must be positive");
  if (cfg.tolerance) {
    for (const auto* c : cases) {
      if (!(*cfg.tolerance > 0.0) || *cfg.tolerance > c->tolerance) {
        throw ConfigError("tolerance override " + format_number(*cfg.tolerance) + " would loosen " + c->id +
                          " (registered " + format_number(c->tolerance) + ")");
      }
    }
  }

  std::map<const IdentityCase*, std::size_t> position;
  for (std::size_t i = 0; i < registry().size(); ++i) position[&registry()[i]] = i;
  std::sort(cases.begin(), cases.end(), [&](auto* a, auto* b) { return position[a] < position[b]; });
  cases.erase(std::unique(cases.begin(), cases.end()), cases.end());

  struct Job {
    const IdentityCase* c;
    CheckMode mode;
  };
  std::vector<Job> jobs;
  for (const auto* c : cases) {
    for (CheckMode m : {CheckMode::ExactCoeff, CheckMode::NumericPointwise, CheckMode::Quadrature}) {
      if (c->supports(m) && selected(cfg.mode, m)) jobs.push_back({c, m});
    }
  }

  std::vector<std::future<VerificationReport>> pending;
  for (const auto& job : jobs) {
    pending.push_back(std::async(std::launch::async, [job, &cfg] {
      CheckOptions opts;
      opts.nmax = cfg.nmax;
      opts.tolerance = cfg.tolerance;
      opts.seed = cfg.seed;
      opts.max_points = cfg.max_points;
      opts.flip_rhs_sign = cfg.mutate && *cfg.mutate == job.c->id;
      try {
        return verify(*job.c, job.mode, opts);
      } catch (const Error& e) {
        return failed(job.c->id, job.c->paper_ref, job.mode, e.what());
      }
    }));
  }
  std::vector<VerificationReport> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

void write_json(std::ostream& os, const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                const std::string& timestamp) {
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("null"); };
  os << "{\n  \"run\": {\n";
  os << "    \"seed\": " << cfg.seed << ",\n";
  os << "    \"timestamp\": " << (timestamp.empty() ? "null" : quoted(timestamp)) << ",\n";
  os << "    \"config\": {\n";
  os << "      \"ids\": [";
  for (std::size_t i = 0; i < cfg.ids.size(); ++i) os << (i ? ", " : "") << quoted(cfg.ids[i]);
  os << "],\n";
  os << "      \"all\": " << (cfg.all ? "true" : "false") << ",\n";
  os << "      \"mode\": " << quoted(std::string(mode_filter_name(cfg.mode))) << ",\n";
  os << "      \"nmax\": " << opt_int(cfg.nmax) << ",\n";
  os << "      \"tol\": " << (cfg.tolerance ? format_number(*cfg.tolerance) : "null") << ",\n";
  os << "      \"max_points\": " << opt_int(cfg.max_points) << ",\n";
  os << "      \"format\": " << quoted(std::string(format_name(cfg.format))) << ",\n";
  os << "      \"mutate\": " << (cfg.mutate ? quoted(*cfg.mutate) : "null") << "\n";
  os << "    }\n  },\n  \"results\": [";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << (i ? ",\n" : "\n") << "    {\n";
    os << "      \"id\": " << quoted(r.id) << ",\n";
    os << "      \"paper_ref\": " << quoted(r.paper_ref) << ",\n";
    os << "      \"mode\": " << quoted(std::string(mode_name(r.mode))) << ",\n";
    os << "      \"grid_size\": " << r.grid_size << ",\n";
    os << "      \"truncation\": " << r.truncation << ",\n";
    os << "      \"max_abs_err\": " << format_number(r.max_abs_err) << ",\n";
    os << "      \"max_rel_err\": " << format_number(r.max_rel_err) << ",\n";
    os << "      \"pass\": " << (r.pass ? "true" : "false") << ",\n";
    os << "      \"notes\": [";
    for (std::size_t k = 0; k < r.notes.size(); ++k) os << (k ? ",\n" : "\n") << "        " << quoted(r.notes[k]);
    os << (r.notes.empty() ? "]\n" : "\n      ]\n") << "    }";
  }
  os << (reports.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "id,paper_ref,mode,grid_size,truncation,max_abs_err,max_rel_err,pass,notes\n";
  auto num = [](double v) { return std::isfinite(v) ? format_number(v) : std::string(); };
  for (const auto& r : reports) {
    std::string notes;
    for (const auto& n : r.notes) notes += (notes.empty() ? "" : " | ") + n;
    os << csv_field(r.id) << ',' << csv_field(r.paper_ref) << ',' << mode_name(r.mode) << ',' << r.grid_size << ','
       << r.truncation << ',' << num(r.max_abs_err) << ',' << num(r.max_rel_err) << ',' << (r.pass ? "true" : "false")
       << ',' << csv_field(notes) << '\n';
  }
}

}  // namespace lacunary
