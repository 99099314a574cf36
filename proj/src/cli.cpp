#include "betadic/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "betadic/beta_adic.hpp"
#include "betadic/errors.hpp"
#include "betadic/local.hpp"
#include "betadic/prime_ideals.hpp"
#include "betadic/rational_erdos.hpp"
#include "betadic/report.hpp"

namespace betadic::cli {

namespace {

using report::json;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error("field '" + field + "': " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Key {
  const char* name;
  const char* flag;
  const char* help;
};

constexpr Key kKeys[] = {
    {"min_poly", "--min-poly", "minimal polynomial, constant term first (e.g. 1,0,1)"},
    {"x", "--x", "element to expand, power-basis coordinates"},
    {"alpha", "--alpha", "alpha, power-basis coordinates"},
    {"beta", "--beta", "base beta, power-basis coordinates"},
    {"digits", "--digits", "digit set: elements separated by ';', coordinates by ','"},
    {"p", "--p", "rational prime"},
    {"q", "--q", "rational prime base (dw)"},
    {"prime_index", "--prime-index", "which prime above p (default 0)"},
    {"m", "--m", "truncation length / largest m"},
    {"k", "--k", "precision: work modulo p^k"},
    {"r_max", "--rmax", "largest r for kernel sizes"},
    {"N", "--N", "scan bound for erdos"},
    {"budget", "--budget", "work budget m*h_m for orbit walks"},
    {"threads", "--threads", "worker threads for erdos"},
    {"format", "--format", "json or csv"},
    {"out", "--out", "output file (default stdout)"},
    {"seed", "--seed", "seed for equal-degree splitting"},
};

bool known_key(const std::string& name) {
  for (const auto& k : kKeys) {
    if (name == k.name) return true;
  }
  return false;
}

std::string canonical(const json& value, const std::string& field) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer() || value.is_number_unsigned()) return value.dump();
  if (value.is_array()) {
    std::string s;
    const bool nested = !value.empty() && value[0].is_array();
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) s += nested ? ";" : ",";
      s += canonical(value[i], field);
    }
    return s;
  }
  throw ConfigError(field, "unsupported JSON value " + value.dump());
}

class JobConfig {
 public:
  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config", "top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() == "config" || it.key() == "command") continue;
      if (!known_key(it.key())) throw ConfigError(it.key(), "unknown field");
      values_[it.key()] = canonical(it.value(), it.key());
    }
  }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw ConfigError(key, "required");
    return *v;
  }

  Int integer(const std::string& key) const {
    try {
      return parse_int(require(key));
    } catch (const Error& e) {
      throw ConfigError(key, e.what());
    }
  }

  std::uint64_t count(const std::string& key, std::optional<std::uint64_t> fallback = std::nullopt) const {
    if (!get(key)) {
      if (fallback) return *fallback;
      throw ConfigError(key, "required");
    }
    Int v = integer(key);
    if (v < 0 || !v.fits_ulong_p()) throw ConfigError(key, "must be a non-negative 64-bit integer");
    return v.get_ui();
  }

  std::vector<Int> integers(const std::string& key, const std::string& text) const {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    try {
      while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    } catch (const Error& e) {
      throw ConfigError(key, e.what());
    }
    if (out.empty()) throw ConfigError(key, "empty coordinate list");
    return out;
  }

  std::vector<Int> integers(const std::string& key) const { return integers(key, require(key)); }

  json to_json() const {
    json j = json::object();
    for (const auto& [k, v] : values_) {
      if (k != "out") j[k] = v;
    }
    return j;
  }

 private:
  std::map<std::string, std::string> values_;
};

NumberRing make_ring(const JobConfig& cfg) {
  return NumberRing(cfg.integers("min_poly", cfg.get("min_poly").value_or("0,1")));
}

RingElement make_element(const NumberRing& ring, const JobConfig& cfg, const std::string& key) {
  auto coords = cfg.integers(key);
  if (coords.size() > ring.degree()) {
    throw ConfigError(key, "has " + std::to_string(coords.size()) + " coordinates; ring degree is " +
                               std::to_string(ring.degree()));
  }
  return ring.element(std::move(coords));
}

std::uint64_t seed_of(const JobConfig& cfg) { return cfg.count("seed", kDefaultSeed); }

LocalContext make_local(const NumberRing& ring, const JobConfig& cfg) {
  const Int p = cfg.integer("p");
  auto decomposition = factor_rational_prime(ring, p, seed_of(cfg));
  const std::uint64_t index = cfg.count("prime_index", 0);
  if (index >= decomposition.factors.size()) {
    throw ConfigError("prime_index", "only " + std::to_string(decomposition.factors.size()) + " primes lie above " +
                                         to_string(p));
  }
  return LocalContext(ring, decomposition.factors[index]);
}

DigitSystem make_digit_system(const NumberRing& ring, const JobConfig& cfg) {
  RingElement beta = make_element(ring, cfg, "beta");
  auto spec = cfg.get("digits");
  if (!spec) return DigitSystem(ring, beta);
  std::vector<RingElement> digits;
  std::stringstream ss(*spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto coords = cfg.integers("digits", item);
    if (coords.size() > ring.degree()) throw ConfigError("digits", "digit has too many coordinates");
    digits.push_back(ring.element(std::move(coords)));
  }
  return DigitSystem(ring, beta, std::move(digits));
}

struct Output {
  json report;
  std::string text;  // CSV output replaces the JSON report when set
};

using Command = std::function<Output(const JobConfig&, std::ostream& err)>;

Output cmd_expand(const JobConfig& cfg, std::ostream&) {
  const NumberRing ring = make_ring(cfg);
  const DigitSystem ds = make_digit_system(ring, cfg);
  const RingElement x = make_element(ring, cfg, "x");
  const auto expansion = expand(ds, x, cfg.count("m"));
  json values = json::array();
  for (auto idx : expansion.digit_indices) values.push_back(report::to_json(ds.digits()[idx]));
  return {json{{"digits", expansion.digit_indices}, {"digit_values", values}}, {}};
}

Output cmd_factor(const JobConfig& cfg, std::ostream&) {
  const NumberRing ring = make_ring(cfg);
  if (cfg.get("beta")) {
    const RingElement beta = make_element(ring, cfg, "beta");
    return {report::factorization_to_json(factor_beta(ring, beta, seed_of(cfg))), {}};
  }
  if (cfg.get("p")) return {report::decomposition_to_json(factor_rational_prime(ring, cfg.integer("p"), seed_of(cfg))), {}};
  throw ConfigError("beta", "factor needs either beta or p");
}

Output cmd_order(const JobConfig& cfg, std::ostream&) {
  const NumberRing ring = make_ring(cfg);
  const LocalContext ctx = make_local(ring, cfg);
  const RingElement alpha = make_element(ring, cfg, "alpha");
  const std::uint64_t k = cfg.count("k");
  if (k == 0) throw ConfigError("k", "must be >= 1");
  return {json{{"prime", report::factor_to_json(ctx.factor())},
               {"alpha", report::to_json(alpha)},
               {"k", k},
               {"order", report::to_json(mult_order(ctx, alpha, k))},
               {"unit_group_size", report::to_json(unit_group_size(ctx, k))}},
          {}};
}

Output cmd_kernel(const JobConfig& cfg, std::ostream&) {
  const NumberRing ring = make_ring(cfg);
  const LocalContext ctx = make_local(ring, cfg);
  const RingElement alpha = make_element(ring, cfg, "alpha");
  const auto kernels = kernel_sequence(ctx, alpha, cfg.count("r_max"));
  return {report::kernel_report(ctx, alpha, kernels, match_pattern(kernels, ctx.p(), ctx.e()), std::nullopt), {}};
}

Output cmd_pattern(const JobConfig& cfg, std::ostream&) {
  const NumberRing ring = make_ring(cfg);
  const LocalContext ctx = make_local(ring, cfg);
  const RingElement alpha = make_element(ring, cfg, "alpha");
  const auto pattern = detect_pattern(ctx, alpha, cfg.count("r_max"));
  json j = report::kernel_report(ctx, alpha, pattern.kernels, pattern.v, pattern.lifting_threshold);
  j["verified_up_to"] = pattern.verified_up_to;
  return {j, {}};
}

Output cmd_freq(const JobConfig& cfg, std::ostream& err) {
  const NumberRing ring = make_ring(cfg);
  const DigitSystem ds = make_digit_system(ring, cfg);
  const OrbitContext orbit(ds, make_element(ring, cfg, "alpha"), seed_of(cfg));
  const std::uint64_t m = cfg.count("m");
  if (m == 0) throw ConfigError("m", "must be >= 1");
  auto progress = [&err](std::uint64_t steps, const Int& total) {
    err << "freq: " << steps << " / " << to_string(total) << " orbit steps\n";
  };
  const auto stats = orbit.digit_stats(m, cfg.count("budget", kDefaultWorkBudget), progress);
  return {report::freq_report(ds, stats), {}};
}

Output cmd_complexity(const JobConfig& cfg, std::ostream&) {
  const NumberRing ring = make_ring(cfg);
  const OrbitContext orbit(make_digit_system(ring, cfg), make_element(ring, cfg, "alpha"), seed_of(cfg));
  json j = report::complexity_report(orbit.block_complexity(cfg.count("m")));
  j["factorization"] = report::factorization_to_json(orbit.factorization());
  return {j, {}};
}

bool wants_csv(const JobConfig& cfg) {
  const auto format = cfg.get("format").value_or("json");
  if (format != "json" && format != "csv") throw ConfigError("format", "must be 'json' or 'csv'");
  return format == "csv";
}

Output cmd_erdos(const JobConfig& cfg, std::ostream&) {
  const std::uint64_t n = cfg.count("N");
  if (n == 0) throw ConfigError("N", "must be >= 1");
  const auto threads = static_cast<unsigned>(cfg.count("threads", 1));
  const auto count = erdos_count(n, ErdosMethod::Incremental, threads);
  if (wants_csv(cfg)) {
    std::ostringstream os;
    report::write_erdos_csv(os, count);
    return {{}, os.str()};
  }
  return {json{{"N", count.N},
               {"M", count.M_N},
               {"hits", count.hits},
               {"bound", report::format_fixed(count.bound, 6)},
               {"sigma", report::format_fixed(narkiewicz_sigma())}},
          {}};
}

Output cmd_dw(const JobConfig& cfg, std::ostream&) {
  const Int p = cfg.integer("p");
  const Int q = cfg.integer("q");
  if (!p.fits_uint_p() || !q.fits_uint_p()) throw ConfigError("p", "p and q must be small primes");
  const std::uint64_t m_max = cfg.count("m");
  if (m_max == 0) throw ConfigError("m", "must be >= 1");
  const std::uint64_t budget = cfg.count("budget", kDefaultWorkBudget);
  std::vector<DupuyWeirichAverage> rows;
  for (std::uint64_t m = 1; m <= m_max; ++m) rows.push_back(dupuy_weirich_avg(p.get_ui(), q.get_ui(), m, budget));
  if (wants_csv(cfg)) {
    std::ostringstream os;
    report::write_dw_csv(os, rows);
    return {{}, os.str()};
  }
  json averages = json::array();
  for (const auto& row : rows) {
    json freq = json::array();
    for (const auto& f : row.freq) freq.push_back(to_string(f));
    averages.push_back({{"m", row.m}, {"l_m", report::to_json(row.l_m)}, {"freq", freq}, {"counts", report::to_json(row.counts)}});
  }
  return {json{{"averages", averages}, {"target", "1/" + to_string(q)}}, {}};
}

struct CommandSpec {
  const char* name;
  const char* description;
  Command run;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> table{
      {"expand", "m-truncated beta-adic expansion of x", cmd_expand},
      {"factor", "prime factorization of (beta) or of a rational prime", cmd_factor},
      {"order", "multiplicative order of alpha modulo p^k", cmd_order},
      {"kernel", "kernel sizes #ker(G_r -> G_{r-1}) for r <= rmax", cmd_kernel},
      {"pattern", "detect the kernel-size pattern and its threshold v", cmd_pattern},
      {"freq", "digit frequencies over the orbit of alpha mod beta^m", cmd_freq},
      {"complexity", "block complexity C_m(alpha) and slopes for m <= m", cmd_complexity},
      {"erdos", "count n <= N with (2^n)_3 free of the digit 2", cmd_erdos},
      {"dw", "averages f_{p,m}(b) of q-ary digits of p^n", cmd_dw},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"beta-adic digit expansions, Wieferich kernel patterns and digit statistics"};
  app.name("betadic");
  app.require_subcommand(1, 1);
  std::map<std::string, std::map<std::string, std::string>> storage;
  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, std::string> config_paths;
  for (const auto& spec : commands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    for (const auto& key : kKeys) {
      options[spec.name][key.name] = sub->add_option(key.flag, storage[spec.name][key.name], key.help);
    }
    sub->add_option("--config", config_paths[spec.name], "JSON config file; flags override it");
    sub->add_option("--ring", config_paths[std::string(spec.name) + ":ring"], "JSON ring specification file");
  }

  std::vector<const char*> argv{"betadic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const CommandSpec* spec = nullptr;
  for (const auto& c : commands()) {
    if (name == c.name) spec = &c;
  }

  JobConfig cfg;
  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  try {
    if (!config_paths[name + ":ring"].empty()) cfg.load_file(config_paths[name + ":ring"]);
    if (!config_paths[name].empty()) cfg.load_file(config_paths[name]);
    for (const auto& key : kKeys) {
      if (options[name][key.name]->count() > 0) cfg.set(key.name, storage[name][key.name]);
    }
    if (auto path = cfg.get("out")) {
      file = std::make_unique<std::ofstream>(*path);
      if (!*file) throw ConfigError("out", "cannot open '" + *path + "' for writing");
      sink = file.get();
    }
    Output result = spec->run(cfg, err);
    if (!result.text.empty()) {
      *sink << result.text;
    } else {
      json doc{{"command", name}, {"config", cfg.to_json()}, {"result", result.report}};
      *sink << doc.dump(2) << '\n';
    }
    sink->flush();
    if (!*sink) {
      err << "error: failed to write report\n";
      return kExitConfig;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    json diag{{"command", name}, {"config", cfg.to_json()}, {"error", std::string(e.name())}, {"message", e.what()}};
    if (!e.payload().empty()) diag["payload"] = e.payload();
    *sink << diag.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
}

}  // namespace betadic::cli
