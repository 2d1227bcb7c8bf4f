#include "cli.hpp"

#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wk/calibration.hpp"
#include "wk/oracle.hpp"

namespace wk::cli {

using json = nlohmann::ordered_json;

namespace {

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw io::ParseError("cannot write " + path);
      os = &file;
    }
  }
};

json meta_json(const MetaGroup& g, int d) {
  return {{"members", g.members}, {"weight", io::format_decimal(g.sum.weight, d)},
          {"profit", io::format_decimal(g.sum.profit, d)}};
}

json audit_json(const WeakAudit& a, int d) {
  const auto& p = a.preprocess;
  json cheap = json::array(), small = json::array(), groups = json::array();
  for (const auto& g : p.cheap_groups) cheap.push_back(meta_json(g, d));
  for (const auto& g : p.small_groups) small.push_back(meta_json(g, d));
  for (const auto& g : a.groups)
    groups.push_back({{"a", g.a}, {"b", g.b}, {"alpha", g.alpha}, {"items", g.items},
                      {"rp_points", g.rp_points}, {"kept_points", g.kept_points}});
  return {
      {"budget",
       {{"total", a.budget.total}, {"profit", a.budget.profit()}, {"weight", a.budget.weight()},
        {"rp", a.budget.rp()}, {"merge", a.budget.merge()}}},
      {"preprocess",
       {{"y", io::format_decimal(p.y, d)},
        {"profit_unit", io::format_decimal(p.profit_unit, d)},
        {"weight_unit", io::format_decimal(p.weight_unit, d)},
        {"removed_heavy", p.removed_heavy},
        {"removed_heavy_meta", p.removed_heavy_meta},
        {"cheap_groups", cheap},
        {"discarded_cheap", meta_json(p.discarded_cheap, d)},
        {"small_groups", small},
        {"forced_small", meta_json(p.forced_small, d)}}},
      {"groups", groups},
      {"merged_points", a.merged_points},
      {"discarded_profit", io::format_decimal(a.discarded_profit, d)},
      {"forced_weight", io::format_decimal(a.forced_weight, d)},
      {"weight_ratio", a.weight_ratio},
  };
}

const std::set<std::string> kTopKeys{"format", "version", "digits", "eps", "eps_clamped", "seed",
                                     "strategy", "wall_ms", "capacity", "relaxed_capacity",
                                     "answer", "set", "audit", "oracle"};
const std::set<std::string> kAuditKeys{"budget", "preprocess", "groups", "merged_points",
                                       "discarded_profit", "forced_weight", "weight_ratio"};

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw io::ParseError(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw io::ParseError("unknown field '" + it.key() + "' in " + where);
}

Point point_json(const json& j, int d, const std::string& where) {
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return {io::parse_decimal(j[0].get<std::string>(), d), io::parse_decimal(j[1].get<std::string>(), d)};
  if (j.is_object()) {
    only_keys(j, {"weight", "profit"}, where);
    if (j.contains("weight") && j.contains("profit") && j["weight"].is_string() && j["profit"].is_string())
      return {io::parse_decimal(j["weight"].get<std::string>(), d),
              io::parse_decimal(j["profit"].get<std::string>(), d)};
  }
  throw io::ParseError("bad point in " + where);
}

ResultFile read_result_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw io::ParseError(std::string("result json: ") + e.what());
  }
  only_keys(j, kTopKeys, "result");
  for (const char* k : {"format", "version", "digits", "eps", "answer", "set"})
    if (!j.contains(k)) throw io::ParseError(std::string("result misses '") + k + "'");
  if (j["format"] != "wk-result" || j["version"] != 1) throw io::ParseError("not a wk-result v1 file");
  if (j.contains("audit")) only_keys(j["audit"], kAuditKeys, "audit");
  ResultFile r;
  if (!j["digits"].is_number_integer() || !j["eps"].is_number() || !j["set"].is_array())
    throw io::ParseError("result has mistyped fields");
  r.digits = j["digits"].get<int>();
  r.eps = j["eps"].get<double>();
  r.answer = point_json(j["answer"], r.digits, "answer");
  for (const auto& p : j["set"]) r.set.push_back(point_json(p, r.digits, "set"));
  return r;
}

ResultFile read_result_csv(std::istream& in) {
  ResultFile r;
  std::string line;
  bool fields = false, answer = false, eps = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      for (std::string kv; ss >> kv;) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        auto k = kv.substr(0, eq), v = kv.substr(eq + 1);
        try {
          if (k == "digits") r.digits = std::stoi(v);
          if (k == "eps") r.eps = std::stod(v), eps = true;
        } catch (const std::exception&) {
          throw io::ParseError("bad value in result csv comment: " + kv);
        }
      }
      continue;
    }
    if (!fields) {
      if (line != "kind,weight,profit") throw io::ParseError("result csv: expected header kind,weight,profit");
      fields = true;
      continue;
    }
    std::istringstream ss(line);
    std::string kind, w, p, extra;
    if (!std::getline(ss, kind, ',') || !std::getline(ss, w, ',') || !std::getline(ss, p, ',') ||
        std::getline(ss, extra, ','))
      throw io::ParseError("result csv: bad row '" + line + "'");
    Point pt{io::parse_decimal(w, r.digits), io::parse_decimal(p, r.digits)};
    if (kind == "answer")
      r.answer = pt, answer = true;
    else if (kind == "point")
      r.set.push_back(pt);
    else
      throw io::ParseError("result csv: unknown row kind '" + kind + "'");
  }
  if (!fields || !answer || !eps) throw io::ParseError("result csv: missing header, eps or answer row");
  return r;
}

// Parse errors exit 1, out-of-range eps exit 2.
int load_instance(const RunSpec& spec, io::InstanceFile& f, std::ostream& err, bool* clamped = nullptr) {
  try {
    f = spec.input_path.empty() ? io::read_instance(std::cin) : io::read_instance_file(spec.input_path);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (spec.eps) f.inst.eps = *spec.eps;
  if (!(f.inst.eps > 0) || !std::isfinite(f.inst.eps)) {
    err << "error: eps must be in (0,1], got " << f.inst.eps << "\n";
    return kInvalidSpec;
  }
  try {
    const bool c = normalize_instance(f.inst);
    if (c) err << "warning: eps above 1 clamped to 1\n";
    if (clamped) *clamped = c;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidSpec;
  }
  return kOk;
}

}  // namespace

ResultFile read_result(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return read_result_json(text);
  std::istringstream ss(text);
  return read_result_csv(ss);
}

int cmd_solve(const RunSpec& spec, std::ostream& err) {
  io::InstanceFile f;
  bool clamped = false;
  if (int rc = load_instance(spec, f, err, &clamped)) return rc;
  const int d = f.digits;
  const auto t0 = std::chrono::steady_clock::now();
  WeakResult res;
  try {
    res = solve_weak(f.inst, make_rp_solver(spec.strategy), spec.seed);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidSpec;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  res.audit.eps_clamped = clamped;

  std::optional<i64> opt;
  if (spec.oracle) {
    try {
      opt = exact_opt(f.inst, spec.limits);
    } catch (const OracleLimitError& e) {
      err << "error: " << e.what() << "\n";
      return kOracleLimit;
    }
  }
  try {
    Output out(spec.output_path);
    if (spec.format == Format::Json) {
      json set = json::array();
      for (const auto& p : res.set) set.push_back({io::format_decimal(p.weight, d), io::format_decimal(p.profit, d)});
      json j{{"format", "wk-result"},
             {"version", 1},
             {"digits", d},
             {"eps", f.inst.eps},
             {"eps_clamped", res.audit.eps_clamped},
             {"seed", spec.seed},
             {"strategy", to_string(spec.strategy)},
             {"wall_ms", ms},
             {"capacity", io::format_decimal(f.inst.capacity, d)},
             {"relaxed_capacity", io::format_decimal(res.audit.relaxed_capacity, d)},
             {"answer", {{"weight", io::format_decimal(res.answer.weight, d)},
                         {"profit", io::format_decimal(res.answer.profit, d)}}},
             {"set", set},
             {"audit", audit_json(res.audit, d)}};
      if (opt) j["oracle"] = {{"opt", io::format_decimal(*opt, d)}};
      *out.os << j.dump(2) << "\n";
    } else {
      *out.os << "# wk-result digits=" << d << " eps=" << f.inst.eps << " seed=" << spec.seed
              << " strategy=" << to_string(spec.strategy) << " wall_ms=" << ms << "\n";
      if (opt) *out.os << "# opt=" << io::format_decimal(*opt, d) << "\n";
      *out.os << "kind,weight,profit\n";
      *out.os << "answer," << io::format_decimal(res.answer.weight, d) << "," << io::format_decimal(res.answer.profit, d) << "\n";
      for (const auto& p : res.set)
        *out.os << "point," << io::format_decimal(p.weight, d) << "," << io::format_decimal(p.profit, d) << "\n";
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  io::InstanceFile f;
  if (int rc = load_instance(spec, f, err)) return rc;
  ResultFile r;
  try {
    std::ifstream in(spec.result_path);
    if (!in) throw io::ParseError("cannot open result " + spec.result_path);
    r = read_result(in);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (r.digits != f.digits) {
    err << "error: result precision differs from the instance\n";
    return kParseError;
  }
  if (!(r.eps > 0 && r.eps <= 1)) {
    err << "error: result eps out of range\n";
    return kInvalidSpec;
  }
  const auto& items = f.inst.items;
  i64 heaviest = r.answer.weight;
  for (const auto& p : r.set) heaviest = std::max(heaviest, p.weight);
  heaviest = std::min(heaviest, total(items).weight);
  ParetoSet front;
  const char* path = "bruteforce";
  try {
    if (items.size() <= spec.limits.max_items_bruteforce) {
      front = bruteforce_pareto(items, std::nullopt, spec.limits);
    } else {
      path = "dp";
      front = exact_pareto_dp(items, std::max<i64>(heaviest, f.inst.capacity), spec.limits);
    }
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kOracleLimit;
  }
  const double c = kWeakC, eps = r.eps;
  auto in_cap = window(front, f.inst.capacity, std::numeric_limits<i64>::max());
  const i64 opt = in_cap.empty() ? 0 : in_cap.back().profit;

  PointSet claimed = r.set;
  claimed.push_back(r.answer);
  auto dom = check_dominated_by(claimed, front);
  PointSet ans{r.answer};
  PointSet goal{{f.inst.capacity, opt}};
  auto fac = check_factor(ans, goal, c * eps);
  const double add = realized_additive_error(r.set, front, f.inst.capacity, eps);
  const bool add_ok = add <= c;

  out << "oracle: " << path << " (" << items.size() << " items, opt " << io::format_decimal(opt, f.digits) << ")\n";
  out << "dominated_by: " << (dom.ok ? "PASS" : "FAIL") << " " << dom.summary() << "\n";
  out << "factor (c=" << c << "): " << (fac.ok ? "PASS" : "FAIL") << " " << fac.summary() << "\n";
  out << "additive (c=" << c << "): " << (add_ok ? "PASS" : "FAIL") << " realized=" << add << "\n";
  return dom.ok && fac.ok && add_ok ? kOk : kCheckFailed;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& output_path, std::ostream& err) {
  try {
    auto f = generate(spec);
    Output out(output_path);
    io::write_instance(*out.os, f);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidSpec;
  }
  return kOk;
}

int cmd_bench(const BenchSpec& spec, const std::string& output_path, std::ostream& err,
              const std::atomic<bool>* stop) {
  for (double e : spec.eps)
    if (!(e > 0 && e <= 1)) {
      err << "error: bench eps must be in (0,1]\n";
      return kInvalidSpec;
    }
  try {
    Output out(output_path);
    *out.os << bench_csv_header() << "\n" << std::flush;
    run_bench(spec, [&](const BenchRow& row) { *out.os << to_csv(row) << "\n" << std::flush; }, stop);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return stop && stop->load() ? kInterrupted : kOk;
}

namespace {

std::atomic<bool> g_stop{false};
extern "C" void on_sigint(int) { g_stop = true; }

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Weak approximation for 0-1 knapsack"};
  app.require_subcommand(1);
  const std::map<std::string, Strategy> strategies{{"auto", Strategy::Auto}, {"exp116", Strategy::Exp116},
                                                   {"exp74", Strategy::Exp74}, {"colorcode", Strategy::ColorCodingOnly}};
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

  RunSpec rs;
  double eps = -1;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  auto* verify = app.add_subcommand("verify", "check a solve output against an exact oracle");
  for (auto* sc : {solve, verify}) {
    sc->add_option("--input", rs.input_path, "instance file (default stdin)");
    sc->add_option("--eps", eps, "override the header eps");
  }
  solve->add_option("--output", rs.output_path, "result file (default stdout)");
  solve->add_option("--seed", rs.seed);
  solve->add_option("--strategy", rs.strategy)->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  solve->add_flag("--oracle", rs.oracle, "also compute the exact optimum");
  solve->add_option("--format", rs.format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  verify->add_option("--result", rs.result_path, "solve output to check")->required();
  for (auto* sc : {solve, verify}) {
    sc->add_option("--max-bruteforce", rs.limits.max_items_bruteforce, "oracle: largest n for enumeration");
    sc->add_option("--max-dp-grid", rs.limits.max_grid_dp, "oracle: largest DP table");
  }

  GeneratorSpec gs;
  std::string gen_out, family = "uniform";
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", family)->check(CLI::IsMember({"uniform", "correlated", "banded", "cliff", "proximity_stress"}));
  gen->add_option("--n", gs.n);
  gen->add_option("--seed", gs.seed);
  gen->add_option("--output", gen_out);
  gen->add_option("--eps", gs.eps);
  gen->add_option("--lo", gs.lo, "smallest weight, scaled by 10^digits");
  gen->add_option("--hi", gs.hi, "largest weight, scaled by 10^digits");
  gen->add_option("--t-frac", gs.capacity_fraction, "capacity as a share of the total weight");
  gen->add_option("--delta", gs.delta, "banded efficiency spread");
  gen->add_option("--tau", gs.tau, "cliff plateau length");
  gen->add_option("--gap", gs.gap, "proximity_stress efficiency gap");

  BenchSpec bs;
  std::string bench_out;
  std::vector<std::string> bench_strats{"auto"}, bench_fams{"uniform"};
  auto* bench = app.add_subcommand("bench", "sweep eps x strategy x family, CSV out");
  bench->add_option("--eps", bs.eps)->delimiter(',');
  bench->add_option("--strategy", bench_strats)->delimiter(',')->check(CLI::IsMember({"auto", "exp116", "exp74", "colorcode"}));
  bench->add_option("--family", bench_fams)->delimiter(',')->check(CLI::IsMember({"uniform", "correlated", "banded", "cliff", "proximity_stress"}));
  bench->add_option("--n", bs.n);
  bench->add_option("--reps", bs.reps);
  bench->add_option("--seed", bs.seed);
  bench->add_option("--workers", bs.workers);
  bench->add_option("--output", bench_out);
  bench->add_option("--max-bruteforce", bs.limits.max_items_bruteforce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }
  if (eps != -1) rs.eps = eps;
  if (*solve) return cmd_solve(rs, std::cerr);
  if (*verify) return cmd_verify(rs, std::cout, std::cerr);
  if (*gen) {
    gs.family = parse_family(family);
    return cmd_gen(gs, gen_out, std::cerr);
  }
  bs.strategies.clear();
  for (const auto& s : bench_strats) bs.strategies.push_back(parse_strategy(s));
  bs.families.clear();
  for (const auto& f : bench_fams) bs.families.push_back(parse_family(f));
  std::signal(SIGINT, on_sigint);
  return cmd_bench(bs, bench_out, std::cerr, &g_stop);
}

}  // namespace wk::cli
