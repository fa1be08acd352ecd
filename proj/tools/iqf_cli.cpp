// iqf-cli: verification sweeps and moment experiments.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "iqf/moment.hpp"
#include "iqf/symbols.hpp"
#include "iqf/verify.hpp"

using namespace iqf;

namespace {

struct Options {
  std::string field = "-1";
  int j = 2;
  double alpha = 0.25, alpha_im = 0;
  std::vector<double> x;
  int64_t S = 0;
  double eps = 1e-14;
  int threads = 0;
  std::string output;
  std::string format = "csv";
  uint64_t seed = 1;
  int64_t max_norm = 0;
  double s = 2, s_im = 0;
  bool s_given = false;
  int count = 0;
  bool unit_factor = false;
  bool timing = false;
  std::string input;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string now_iso() {
  auto t = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(t);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[40];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[64];
  std::snprintf(out, sizeof out, "%s.%03lldZ", buf, static_cast<long long>(ms));
  return out;
}

void log(const std::string& msg) { std::cerr << now_iso() << " " << msg << "\n"; }

std::string g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<int> parse_fields(const std::string& f, bool allow_all) {
  if (f == "all") {
    if (!allow_all) throw UsageError("--field=all is only accepted by verify commands");
    return std::vector<int>(kFields.begin(), kFields.end());
  }
  int d = 0;
  try {
    size_t pos = 0;
    d = std::stoi(f, &pos);
    if (pos != f.size()) throw std::invalid_argument(f);
  } catch (const std::exception&) {
    throw UsageError("--field must be one of -1 -2 -3 -7 -11 -19 -43 -67 -163 (or all)");
  }
  if (!is_valid_field(d)) throw UsageError("field " + f + " is not one of the nine class number one fields");
  return {d};
}

void need_order(int d, int j) {
  if (!order_supported(d, j)) throw IncompatibleOrder(d, j);
}

// The resolved configuration, without the thread count (outputs do not depend on it).
std::vector<std::pair<std::string, std::string>> resolved(const std::string& cmd, const Options& o) {
  std::vector<std::pair<std::string, std::string>> v{{"command", cmd}, {"field", o.field}, {"j", std::to_string(o.j)}};
  auto add = [&](const std::string& k, const std::string& val) { v.emplace_back(k, val); };
  if (cmd == "moment") {
    add("alpha", g15(o.alpha) + (o.alpha_im ? "," + g15(o.alpha_im) : ""));
    std::string xs;
    for (double x : o.x) xs += (xs.empty() ? "" : ",") + g15(x);
    add("x", xs);
    add("S", std::to_string(o.j > 2 && !o.S ? int64_t(o.j) * o.j : o.S));
    add("eps", g15(o.eps));
    add("timing", o.timing ? "true" : "false");
  }
  if (cmd.rfind("verify", 0) == 0 || cmd == "zeta") {
    add("max_norm", std::to_string(o.max_norm));
    add("seed", std::to_string(o.seed));
  }
  if (cmd == "verify-fe" || cmd == "verify-theta" || cmd == "verify-dual") add("count", std::to_string(o.count));
  if (cmd == "zeta" || (cmd == "verify-dual" && o.s_given) || (cmd == "verify-fe" && o.s_given))
    add("s", g15(o.s) + (o.s_im ? "," + g15(o.s_im) : ""));
  if (cmd == "verify-gauss") add("unit_factor", o.unit_factor ? "true" : "false");
  if (cmd == "report") add("input", o.input);
  add("format", o.format);
  return v;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write_csv_config(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& cfg) {
  for (const auto& [k, v] : cfg) os << "# " << k << "=" << v << "\n";
}

nlohmann::json config_json(const std::vector<std::pair<std::string, std::string>>& cfg) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : cfg) j[k] = v;
  return j;
}

int emit_sweeps(const std::string& cmd, const Options& o, const std::vector<SweepResult>& rs) {
  auto cfg = resolved(cmd, o);
  Sink sink(o.output);
  bool ok = true;
  if (o.format == "json") {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["checks"] = nlohmann::json::array();
    for (const SweepResult& r : rs)
      j["checks"].push_back({{"check", r.name}, {"checks", r.checks}, {"violations", r.violations},
                             {"max_err", r.max_err}, {"first_failure", r.first_failure}, {"pass", r.ok()}});
    sink.out() << j.dump(2) << "\n";
  } else {
    write_csv_config(sink.out(), cfg);
    sink.out() << "check,checks,violations,max_err,pass,first_failure\n";
    for (const SweepResult& r : rs)
      sink.out() << '"' << r.name << "\"," << r.checks << ',' << r.violations << ',' << g15(r.max_err) << ','
                 << (r.ok() ? "true" : "false") << ",\"" << r.first_failure << "\"\n";
  }
  for (const SweepResult& r : rs) {
    log(r.name + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.violations) + " violations");
    if (!r.ok()) {
      ok = false;
      std::cerr << "counterexample (" << r.name << "): "
                << (r.first_failure.empty() ? std::string("no cases checked") : r.first_failure) << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_verify_symbols(const Options& o) {
  std::vector<SweepResult> rs;
  const int64_t R = o.max_norm ? o.max_norm : 500;
  for (int d : parse_fields(o.field, true)) {
    if (o.field == "all") {
      for (int j : {2, 3, 4, 6})
        if (order_supported(d, j)) rs.push_back(reciprocity_sweep(d, j, R));
    } else {
      need_order(d, o.j);
      rs.push_back(reciprocity_sweep(d, o.j, R));
    }
    if (d == -1 || d == -3) rs.push_back(supplementary_sweep(d, o.max_norm ? o.max_norm : 2000));
  }
  return emit_sweeps("verify-symbols", o, rs);
}

int cmd_verify_gauss(const Options& o) {
  std::vector<SweepResult> rs;
  for (int d : parse_fields(o.field, true)) {
    rs.push_back(gauss_prime_sweep(d, o.max_norm ? o.max_norm : 500, o.unit_factor));
    rs.push_back(gauss_multiplicative_sweep(d, o.max_norm ? o.max_norm : 3000));
    rs.push_back(gauss_twist_sweep(d, o.max_norm ? o.max_norm : 300, 40, o.seed));
    rs.push_back(gauss_primepower_sweep(d, o.max_norm ? o.max_norm : 2000));
  }
  return emit_sweeps("verify-gauss", o, rs);
}

int cmd_verify_fe(const Options& o) {
  std::vector<cplx> grid{0.3, 0.5, cplx(0.5, 0.7), 1.2};
  if (o.s_given) grid = {cplx(o.s, o.s_im)};
  std::vector<SweepResult> rs;
  for (int d : parse_fields(o.field, true)) rs.push_back(fe_sweep(d, size_t(o.count ? o.count : 20), grid));
  return emit_sweeps("verify-fe", o, rs);
}

int cmd_verify_theta(const Options& o) {
  std::vector<SweepResult> rs;
  for (int d : parse_fields(o.field, true)) rs.push_back(theta_sweep(d, size_t(o.count ? o.count : 10), {0.5, 1.0, 2.0}));
  return emit_sweeps("verify-theta", o, rs);
}

int cmd_verify_dual(const Options& o) {
  cplx s = o.s_given ? cplx(o.s, o.s_im) : cplx(-1.0);
  if (!(s.real() < -0.5)) throw UsageError("verify-dual needs Re(s) < -1/2");
  std::vector<SweepResult> rs;
  for (int d : parse_fields(o.field, true)) rs.push_back(dual_sweep(d, size_t(o.count ? o.count : 5), s));
  return emit_sweeps("verify-dual", o, rs);
}

int cmd_zeta(const Options& o) {
  auto fields = parse_fields(o.field, true);
  auto cfg = resolved("zeta", o);
  Sink sink(o.output);
  cplx s(o.s, o.s_im);
  std::vector<SweepResult> rs;
  nlohmann::json rows = nlohmann::json::array();
  if (o.format == "csv") {
    write_csv_config(sink.out(), cfg);
    sink.out() << "field,d,s_re,s_im,zeta_re,zeta_im,r_K\n";
  }
  for (int d : fields) {
    cplx z = zeta_K(d, s);
    if (o.format == "csv")
      sink.out() << field_name(d) << ',' << d << ',' << g15(s.real()) << ',' << g15(s.imag()) << ',' << g15(z.real())
                 << ',' << g15(z.imag()) << ',' << g15(field_data(d).r_K) << "\n";
    else
      rows.push_back({{"field", field_name(d)}, {"d", d}, {"s", {s.real(), s.imag()}}, {"zeta", {z.real(), z.imag()}},
                      {"r_K", field_data(d).r_K}});
    if (o.max_norm && s.imag() == 0 && s.real() > 1) rs.push_back(zeta_sweep(d, s.real(), o.max_norm));
  }
  if (o.format == "json") sink.out() << nlohmann::json{{"config", config_json(cfg)}, {"values", rows}}.dump(2) << "\n";
  for (const SweepResult& r : rs) {
    log(r.name + ": max err " + g15(r.max_err));
    if (!r.ok()) {
      std::cerr << "counterexample (" << r.name << "): " << r.first_failure << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_moment(const Options& o) {
  int d = parse_fields(o.field, false)[0];
  need_order(d, o.j);
  if (o.x.empty()) throw UsageError("moment needs --x");
  MomentConfig cfg;
  cfg.d = d;
  cfg.j = o.j;
  cfg.alpha = cplx(o.alpha, o.alpha_im);
  cfg.X_list = o.x;
  cfg.S = o.S;
  cfg.eps = o.eps;
  if (!(cfg.alpha.real() > 0 && cfg.alpha.real() < 0.5)) throw UsageError("--alpha needs 0 < Re(alpha) < 1/2");
  if (o.j > 2) {
    int64_t S = o.S ? o.S : int64_t(o.j) * o.j;
    if (S % (int64_t(o.j) * o.j)) throw UsageError("--S must be divisible by j^2");
  } else if (o.S) {
    throw UsageError("--S applies to j > 2 only");
  }
  MomentReport r = run_experiment(cfg);
  for (const MomentRow& w : r.rows)
    log("X=" + g15(w.X) + " n=" + std::to_string(w.n_count) + " ratio=" + g15(w.ratio.real()) + "," +
        g15(w.ratio.imag()) + " seconds=" + g15(w.seconds));
  Sink sink(o.output);
  auto rc = resolved("moment", o);
  if (o.format == "json") {
    auto j = nlohmann::json::parse(report_json(r, o.timing));
    j["run"] = config_json(rc);
    sink.out() << j.dump(2) << "\n";
  } else {
    write_csv_config(sink.out(), rc);
    sink.out() << report_csv(r, o.timing);
  }
  return 0;
}

// Convergence summary of a moment CSV written by the moment command.
int cmd_report(const Options& o) {
  if (o.input.empty()) throw UsageError("report needs --input <moment csv>");
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read " + o.input);
  std::string line;
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    if (header.empty()) {
      header = cells;
      continue;
    }
    if (cells.size() != header.size()) throw UsageError("malformed row in " + o.input);
    std::map<std::string, std::string> m;
    for (size_t i = 0; i < cells.size(); ++i) m[header[i]] = cells[i];
    rows.push_back(std::move(m));
  }
  if (rows.empty() || !rows[0].count("ratio_re")) throw UsageError(o.input + " is not a moment CSV");
  auto num = [](const std::map<std::string, std::string>& m, const char* k) { return std::stod(m.at(k)); };
  std::vector<double> err, err_alt;
  for (const auto& m : rows) {
    err.push_back(std::abs(cplx(num(m, "ratio_re"), num(m, "ratio_im")) - 1.0));
    cplx ra(num(m, "ratio_alt_re"), num(m, "ratio_alt_im"));
    err_alt.push_back(ra == cplx(0) ? NAN : std::abs(ra - 1.0));
  }
  bool mono = true;
  for (size_t i = 1; i < err.size(); ++i) mono = mono && err[i] <= 1.2 * err[i - 1];
  Sink sink(o.output);
  auto cfg = resolved("report", o);
  if (o.format == "json") {
    nlohmann::json j{{"config", config_json(cfg)}, {"non_increasing", mono}, {"rows", nlohmann::json::array()}};
    for (size_t i = 0; i < rows.size(); ++i)
      j["rows"].push_back({{"X", num(rows[i], "X")}, {"abs_err", err[i]},
                           {"abs_err_alt", std::isnan(err_alt[i]) ? nlohmann::json() : nlohmann::json(err_alt[i])}});
    sink.out() << j.dump(2) << "\n";
  } else {
    write_csv_config(sink.out(), cfg);
    sink.out() << "X,abs_err,abs_err_alt\n";
    for (size_t i = 0; i < rows.size(); ++i)
      sink.out() << g15(num(rows[i], "X")) << ',' << g15(err[i]) << ',' << (std::isnan(err_alt[i]) ? "" : g15(err_alt[i]))
                 << "\n";
    sink.out() << "# non_increasing=" << (mono ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residue symbols, Gauss sums, Hecke L-functions and first moments over the nine imaginary quadratic fields of class number one"};
  app.set_config("--config", "", "flat key=value file; command line flags override it");
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "d in {-1,-2,-3,-7,-11,-19,-43,-67,-163}, or all for verify commands");
  app.add_option("--j", o.j, "symbol order (2; 4 for d=-1; 3, 6 for d=-3)");
  app.add_option("--alpha", o.alpha, "shift, 0 < alpha < 1/2");
  app.add_option("--alpha-im", o.alpha_im, "imaginary part of alpha");
  app.add_option("--x", o.x, "X values")->delimiter(',');
  app.add_option("--S", o.S, "ray modulus for j > 2 (default j^2)");
  app.add_option("--eps", o.eps, "L-value truncation");
  app.add_option("--threads", o.threads, "OpenMP threads (0 keeps the runtime default)");
  app.add_option("--output", o.output, "output path (default stdout)");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", o.seed, "seed for sampled sweeps");
  app.add_option("--max-norm", o.max_norm, "norm bound for sweeps (0 uses the per-check defaults)");
  app.add_option("--s", o.s, "real part of s");
  app.add_option("--s-im", o.s_im, "imaginary part of s");
  app.add_option("--count", o.count, "number of characters for verify-fe/theta/dual");
  app.add_flag("--unit-factor", o.unit_factor, "verify-gauss: include (i/pi)_2 in the d=-1 prime closed form");
  app.add_flag("--timing", o.timing, "moment: write wall-clock seconds (otherwise 0, keeping files reproducible)");
  app.add_option("--input", o.input, "report: moment CSV to summarise");

  std::map<std::string, std::function<int(const Options&)>> cmds{
      {"verify-symbols", cmd_verify_symbols}, {"verify-gauss", cmd_verify_gauss}, {"verify-fe", cmd_verify_fe},
      {"verify-theta", cmd_verify_theta},     {"verify-dual", cmd_verify_dual},   {"moment", cmd_moment},
      {"zeta", cmd_zeta},                     {"report", cmd_report}};
  const std::map<std::string, std::string> help{
      {"verify-symbols", "reciprocity and supplementary laws"},
      {"verify-gauss", "Gauss sum closed forms against direct sums"},
      {"verify-fe", "functional equation and root numbers"},
      {"verify-theta", "theta transformation identity"},
      {"verify-dual", "dual series for imprimitive characters at Re s < -1/2"},
      {"moment", "first moment against the main terms"},
      {"zeta", "Dedekind zeta value"},
      {"report", "convergence summary of a moment CSV"}};
  for (const auto& [name, text] : help) app.add_subcommand(name, text)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.s_given = app.count("--s") > 0;
  if (o.threads < 0) {
    std::cerr << "--threads must be >= 0\n";
    return 2;
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
  const std::string cmd = app.get_subcommands().front()->get_name();
  for (const auto& [k, v] : resolved(cmd, o)) log("config " + k + "=" + v);
  log("config threads=" + std::to_string(o.threads ? o.threads : omp_get_max_threads()));
  try {
    int rc = cmds.at(cmd)(o);
    log(std::string("done, exit ") + std::to_string(rc));
    return rc;
  } catch (const IncompatibleOrder& e) {
    std::cerr << e.what() << "\n" << compatibility_table();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
