// Command-line front end: hecke <subcommand> --n N [options].
// Exit codes: 0 success, 1 a proved statement failed, 2 only an open
// conjecture has counterexamples, 3 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hecke/cells.hpp"
#include "hecke/hecke.hpp"
#include "hecke/kahrstrom.hpp"
#include "hecke/parallel.hpp"
#include "hecke/submod.hpp"
#include "hecke/verify.hpp"

using namespace hecke;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 3;

struct Config {
  int n = 0;
  int jobs = 1;
  bool allow_large = false;
  std::string cache_dir;
  std::string format = "json";
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string cache_dir(const Config& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("HECKE_CACHE_DIR")) return env;
  return {};
}

HeckeAlgebraPtr load_algebra(const Config& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.n > 6 && !cfg.allow_large) throw UsageError("n > 6 needs --allow-large");
  const std::string dir = cache_dir(cfg);
  if (!dir.empty()) std::filesystem::create_directories(dir);
  return std::make_shared<HeckeAlgebra>(KLCache::load_or_build(cfg.n, dir));
}

int parse_perm(const HeckeAlgebra& H, const std::string& text) {
  try {
    return H.index(Perm::parse(text, H.group().rank()));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

json versioned(json body) {
  json j;
  j["version"] = 1;
  for (auto& [k, v] : body.items())
    if (k != "version") j[k] = v;
  return j;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit_json(const Config& cfg, const json& j) { emit(cfg, versioned(j).dump(2)); }

std::string name(const WeylGroup& W, int x) { return W.elem(x).to_string(); }

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' is not available for this command");
}

int exit_for(const std::vector<PropertyCheck>& checks) {
  for (const auto& c : checks)
    if (c.asserted && !c.passed) return 1;
  return 0;
}

// ------------------------------------------------------------- klbasis

int cmd_klbasis(const Config& cfg, const std::string& w_text, const std::string& basis) {
  require_format(cfg, {"json", "table"});
  const auto H = load_algebra(cfg);
  const WeylGroup& W = H->group();
  std::vector<int> ws;
  if (w_text.empty())
    for (int x = 0; x < W.size(); ++x) ws.push_back(x);
  else
    ws.push_back(parse_perm(*H, w_text));
  const bool kl = basis == "kl" || basis == "all";
  const bool dual = basis == "dual" || basis == "all";
  const bool tilt = basis == "tilting" || basis == "all";
  json elems = json::array();
  std::ostringstream table;
  for (int x : ws) {
    json e;
    e["w"] = name(W, x);
    if (kl) {
      e["kl"] = coords_to_json(W, H->kl_element(x).coords());
      table << "KL_{" << name(W, x) << "} = " << H->kl_element(x).to_string() << '\n';
    }
    if (dual) {
      e["dual"] = coords_to_json(W, H->dual_kl_element(x).coords());
      table << "dual_{" << name(W, x) << "} = " << H->dual_kl_element(x).to_string() << '\n';
    }
    if (tilt) {
      e["tilting"] = coords_to_json(W, H->tilting_element(x).coords());
      table << "T_{" << name(W, x) << "} = " << H->tilting_element(x).to_string() << '\n';
    }
    elems.push_back(std::move(e));
  }
  if (cfg.format == "table") {
    emit(cfg, table.str());
  } else {
    json j;
    j["n"] = cfg.n;
    j["basis"] = basis;
    j["elements"] = std::move(elems);
    emit_json(cfg, j);
  }
  return 0;
}

// ------------------------------------------------------------- mult

HeckeElt element_of(const HeckeAlgebra& H, const std::string& basis, int x) {
  if (basis == "standard") return H.standard(x);
  if (basis == "kl") return H.kl_element(x);
  return H.dual_kl_element(x);
}

Coords coords_in(const HeckeAlgebra& H, const std::string& basis, const HeckeElt& a) {
  if (basis == "standard") return a.coords();
  if (basis == "kl") return H.to_kl_coords(a);
  return H.to_dual_kl_coords(a);
}

std::string symbol_of(const std::string& basis) {
  if (basis == "standard") return "H";
  if (basis == "kl") return "KL";
  return "dual";
}

int cmd_mult(const Config& cfg, const std::string& basis, const std::string& xs, const std::string& ys) {
  require_format(cfg, {"json", "table"});
  const auto H = load_algebra(cfg);
  const WeylGroup& W = H->group();
  const int x = parse_perm(*H, xs), y = parse_perm(*H, ys);
  const Coords c = coords_in(*H, basis, H->mul(element_of(*H, basis, x), element_of(*H, basis, y)));
  const std::string sym = symbol_of(basis);
  if (cfg.format == "table") {
    emit(cfg, sym + "_{" + name(W, x) + "} * " + sym + "_{" + name(W, y) + "} = " +
                  coords_to_string(W, c, sym));
    return 0;
  }
  json j;
  j["n"] = cfg.n;
  j["basis"] = basis;
  j["x"] = name(W, x);
  j["y"] = name(W, y);
  j["product"] = coords_to_json(W, c);
  emit_json(cfg, j);
  return 0;
}

// ------------------------------------------------------------- structconsts

int cmd_structconsts(const Config& cfg, const std::string& basis) {
  require_format(cfg, {"json", "table"});
  const auto H = load_algebra(cfg);
  const WeylGroup& W = H->group();
  const int N = W.size();
  // P[x][y] = product of basis elements x and y in the same basis.
  std::vector<std::vector<Coords>> P(N);
  for (int x = 0; x < N; ++x) {
    if (basis == "kl") {
      P[x] = H->kl_right_products(unit_coords(N, x));
    } else {
      P[x].resize(N);
      for (int y = 0; y < N; ++y)
        P[x][y] = H->to_dual_kl_coords(H->mul(H->dual_kl_element(x), H->dual_kl_element(y)));
    }
  }
  if (cfg.format == "table") {
    std::ostringstream os;
    const std::string g = basis == "kl" ? "gamma" : "dual gamma";
    for (int w = 0; w < N; ++w) {
      os << g << " at " << name(W, w) << "\n";
      os << "x\\y";
      for (int y = 0; y < N; ++y) os << " | " << name(W, y);
      os << '\n';
      for (int x = 0; x < N; ++x) {
        os << name(W, x);
        for (int y = 0; y < N; ++y) os << " | " << P[x][y][w].to_string();
        os << '\n';
      }
      os << '\n';
    }
    emit(cfg, os.str());
    return 0;
  }
  json entries = json::array();
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int w = 0; w < N; ++w)
        if (!P[x][y][w].is_zero())
          entries.push_back({{"x", name(W, x)}, {"y", name(W, y)}, {"w", name(W, w)}, {"value", to_json(P[x][y][w])}});
  json j;
  j["n"] = cfg.n;
  j["basis"] = basis;
  j["nonzero"] = std::move(entries);
  emit_json(cfg, j);
  return 0;
}

// ------------------------------------------------------------- cells, hasse, afunc

int cmd_cells(const Config& cfg, const std::string& order) {
  require_format(cfg, {"json"});
  const auto H = load_algebra(cfg);
  const CellData C(H->kl_ptr());
  Order o;
  try {
    o = order_from_string(order);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit_json(cfg, cells_to_json(H->group(), C.get(o)));
  return 0;
}

int cmd_hasse(const Config& cfg) {
  require_format(cfg, {"dot", "json"});
  const auto H = load_algebra(cfg);
  const WeylGroup& W = H->group();
  const CellData C(H->kl_ptr());
  if (cfg.format == "dot") {
    emit(cfg, involution_hasse_dot(W, C.left()));
    return 0;
  }
  json edges = json::array();
  for (const auto& [a, b] : involution_hasse_edges(W, C.left())) edges.push_back({name(W, a), name(W, b)});
  json j;
  j["n"] = cfg.n;
  j["edges"] = std::move(edges);
  emit_json(cfg, j);
  return 0;
}

int cmd_afunc(const Config& cfg) {
  require_format(cfg, {"json"});
  const auto H = load_algebra(cfg);
  const WeylGroup& W = H->group();
  const CellData C(H->kl_ptr());
  const auto a = a_function(*H);
  const auto report = afunction_property_report(*H, C, a);
  json values;
  for (int x = 0; x < W.size(); ++x) values[name(W, x)] = a[x];
  json props = json::array();
  for (const auto& c : report) props.push_back(to_json(c));
  json j;
  j["n"] = cfg.n;
  j["a"] = std::move(values);
  j["properties"] = std::move(props);
  emit_json(cfg, j);
  return exit_for(report);
}

// ------------------------------------------------------------- cyclic

int cmd_cyclic(const Config& cfg, const std::string& gen, const std::string& basis_name,
               const std::string& target, const std::string& what) {
  require_format(cfg, {"json"});
  const auto H = load_algebra(cfg);
  const WeylGroup& W = H->group();
  const CellData C(H->kl_ptr());
  if (basis_name != "kl" && basis_name != "dualkl") throw UsageError("--basis must be kl or dualkl");
  const bool kl = basis_name == "kl";
  json j;
  j["n"] = cfg.n;
  j["check"] = what;
  if (what == "cor3345-survey") {
    j["survey"] = to_json(W, corollary_3345_survey(W, C));
    emit_json(cfg, j);
    return 0;
  }
  if (gen.empty()) throw UsageError("--gen is required for --check " + what);
  const int g = parse_perm(*H, gen);
  j["gen"] = name(W, g);
  j["basis"] = basis_name;
  if (what == "rank") {
    const auto B = kl ? cyclic_submodule_kl(*H, g) : cyclic_submodule_dual(*H, g);
    j["rank"] = B.rank_over_fraction_field();
    j["coideal_size"] = kl ? C.lm_set(g).size() : C.ln_set(g).size();
  } else if (what == "membership") {
    if (target.empty()) throw UsageError("--target is required for --check membership");
    const int t = parse_perm(*H, target);
    const auto B = kl ? cyclic_submodule_kl(*H, g) : cyclic_submodule_dual(*H, g);
    j["target"] = name(W, t);
    j["verdict"] = to_json(W, B.membership(unit_coords(H->size(), t)));
  } else if (what == "equals-lm") {
    if (!kl) throw UsageError("equals-lm needs --basis kl");
    j["result"] = to_json(W, equals_lm(*H, C, g));
  } else if (what == "equals-ln") {
    if (kl) throw UsageError("equals-ln needs --basis dualkl");
    j["result"] = to_json(W, equals_ln_dual(*H, C, g));
  } else if (what == "quasi-idempotent") {
    const auto a = quasi_idempotent_check(*H, g);
    j["value"] = a ? to_json(*a) : json(nullptr);
  } else {
    throw UsageError("unknown --check " + what);
  }
  emit_json(cfg, j);
  return 0;
}

// ------------------------------------------------------------- kahrstrom

std::vector<int> parse_simples(const std::string& text) {
  std::vector<int> J;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    try {
      J.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad simple reflection list: " + text);
    }
  }
  return J;
}

int cmd_kahrstrom(const Config& cfg, const std::string& w_text, bool all, const std::string& mode_name,
                  const std::string& scan, long long samples, const std::string& parabolic,
                  double time_budget) {
  require_format(cfg, {"json"});
  KhMode mode;
  try {
    mode = kh_mode_from_string(mode_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto H = load_algebra(cfg);
  const WeylGroup& W = H->group();
  const KhContext ctx(H, nullptr);
  json j;
  j["n"] = cfg.n;
  j["mode"] = to_string(mode);
  if (!scan.empty()) {
    std::vector<ScanReport> reports;
    if (scan == "invariance") {
      reports.push_back(scan_left_cell_invariance(ctx, mode, cfg.jobs));
    } else if (scan == "variation") {
      reports.push_back(scan_witness_variation(ctx, mode, cfg.jobs));
    } else if (scan == "necessary") {
      reports.push_back(check_necessary_conditions(ctx, samples));
    } else if (scan == "parabolic") {
      std::vector<Parabolic> Js;
      try {
        if (parabolic.empty()) Js = Parabolic::all(cfg.n);
        else Js.emplace_back(cfg.n, parse_simples(parabolic));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      for (const Parabolic& J : Js) reports.push_back(parabolic_induction_check(ctx, J, mode));
    } else {
      throw UsageError("unknown --scan " + scan);
    }
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(to_json(r));
    j["scan"] = scan;
    j["reports"] = std::move(rs);
    const int code = exit_code(reports);
    j["exit_code"] = code;
    emit_json(cfg, j);
    return code;
  }
  if (all == !w_text.empty()) throw UsageError("give exactly one of --w and --all");
  std::vector<int> ws;
  if (all)
    for (int x = 0; x < W.size(); ++x) ws.push_back(x);
  else
    ws.push_back(parse_perm(*H, w_text));
  // Verdicts are computed in blocks so that the budget is checked often.
  const auto start = std::chrono::steady_clock::now();
  json verdicts = json::array();
  bool complete = true;
  const int block = std::max(1, cfg.jobs) * 4;
  for (std::size_t i = 0; i < ws.size(); i += block) {
    if (time_budget > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > time_budget) {
      complete = false;
      break;
    }
    const std::size_t end = std::min(ws.size(), i + block);
    std::vector<KhVerdict> part(end - i);
    parallel_for(static_cast<int>(part.size()), cfg.jobs,
                 [&](int k) { part[k] = kahrstrom_verdict(ctx, ws[i + k]); });
    for (const auto& v : part) {
      json jv = to_json(W, v);
      if (mode == KhMode::kGraded) jv.erase("ungraded"), jv.erase("ungraded_witnesses");
      if (mode == KhMode::kUngraded) jv.erase("graded"), jv.erase("graded_witnesses");
      verdicts.push_back(std::move(jv));
    }
  }
  j["complete"] = complete;
  j["verdicts"] = std::move(verdicts);
  emit_json(cfg, j);
  return 0;
}

// ------------------------------------------------------------- verify, cache

int cmd_verify(const Config& cfg, const std::string& suite) {
  require_format(cfg, {"json"});
  bool known = false;
  for (const auto& s : verify_suites()) known = known || s == suite;
  if (!known) throw UsageError("unknown verify suite: " + suite);
  const auto H = load_algebra(cfg);
  const VerifyReport r = run_verify(suite, H, cfg.jobs);
  emit_json(cfg, to_json(r));
  return r.passed() ? 0 : 1;
}

int cmd_cache(const Config& cfg, bool rebuild) {
  require_format(cfg, {"json"});
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.n > 6 && !cfg.allow_large) throw UsageError("n > 6 needs --allow-large");
  const std::string dir = cache_dir(cfg);
  if (dir.empty()) throw UsageError("set HECKE_CACHE_DIR or --cache-dir");
  std::filesystem::create_directories(dir);
  const auto file = std::filesystem::path(dir) / KLCache::file_name(cfg.n);
  const bool existed = std::filesystem::exists(file);
  if (rebuild && existed) std::filesystem::remove(file);
  const auto start = std::chrono::steady_clock::now();
  const auto kl = KLCache::load_or_build(cfg.n, dir);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  kl->validate();
  const auto stats = kl->degree_stats();
  json j;
  j["n"] = cfg.n;
  j["file"] = file.string();
  j["loaded"] = existed && !rebuild;
  j["seconds"] = seconds;
  j["nonzero_offdiagonal"] = stats.nonzero_offdiagonal;
  j["degree_equals_length_gap"] = stats.degree_equals_length_gap;
  j["degree_below_length_gap"] = stats.degree_below_length_gap;
  emit_json(cfg, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Hecke algebra of the symmetric group."};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", cfg.allow_large, "Permit n > 6");
  app.add_option("--cache-dir", cfg.cache_dir, "KL cache directory (default: $HECKE_CACHE_DIR)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
  app.add_option("--out,-o", cfg.out, "Write output to this file");

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n,-n", cfg.n, "Rank of S_n")->required(); };

  std::string w_text, basis = "all", x_text, y_text, order = "left", gen, target, check = "rank";
  std::string mode = "both", scan, suite, parabolic;
  bool all = false, rebuild = false;
  long long samples = 0;
  double budget = 0;

  auto* klbasis = app.add_subcommand("klbasis", "KL, dual KL and tilting elements in the standard basis");
  add_n(klbasis);
  klbasis->add_option("--w", w_text, "Only this element");
  klbasis->add_option("--basis", basis)->check(CLI::IsMember({"kl", "dual", "tilting", "all"}));

  std::string mult_basis = "kl";
  auto* mult = app.add_subcommand("mult", "Product of two basis elements");
  add_n(mult);
  mult->add_option("--basis", mult_basis)->check(CLI::IsMember({"standard", "kl", "dual"}));
  mult->add_option("--x", x_text)->required();
  mult->add_option("--y", y_text)->required();

  std::string sc_basis = "kl";
  auto* sc = app.add_subcommand("structconsts", "All structure constants in the KL or dual KL basis");
  add_n(sc);
  sc->add_option("--basis", sc_basis)->check(CLI::IsMember({"kl", "dual"}));

  auto* cells = app.add_subcommand("cells", "Cells and their order");
  add_n(cells);
  cells->add_option("--order", order, "left, right or two-sided");

  auto* hasse = app.add_subcommand("hasse", "Left order on involutions (DOT by default)");
  add_n(hasse);

  auto* afunc = app.add_subcommand("afunc", "a-function values and property report");
  add_n(afunc);

  std::string cyc_basis = "kl";
  auto* cyclic = app.add_subcommand("cyclic", "Cyclic submodules H * g");
  add_n(cyclic);
  cyclic->add_option("--gen", gen, "Generator element");
  cyclic->add_option("--basis", cyc_basis)->check(CLI::IsMember({"kl", "dualkl"}));
  cyclic->add_option("--target", target, "Element to test for membership");
  cyclic->add_option("--check", check)
      ->check(CLI::IsMember({"rank", "membership", "equals-lm", "equals-ln", "quasi-idempotent", "cor3345-survey"}));

  auto* kh = app.add_subcommand("kahrstrom", "Kahrstrom conditions and scans");
  add_n(kh);
  kh->add_option("--w", w_text, "Single element");
  kh->add_flag("--all", all, "Every element");
  kh->add_option("--mode", mode, "graded, ungraded or both");
  kh->add_option("--scan", scan)->check(CLI::IsMember({"invariance", "variation", "necessary", "parabolic"}));
  kh->add_option("--samples", samples, "Random triples for --scan necessary (0: exhaustive)");
  kh->add_option("--parabolic", parabolic, "Simple reflections of W', e.g. 1,2 (default: all)");
  kh->add_option("--time-budget", budget, "Seconds before --all stops early (0: none)");
  std::string json_out;
  kh->add_option("--json", json_out, "Write the JSON report to this file");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_n(verify);
  verify->add_option("--suite", suite, "Suite name: paper-tables or identities")->required();

  auto* cache = app.add_subcommand("cache", "Build or load the KL cache file");
  add_n(cache);
  cache->add_flag("--rebuild", rebuild, "Recompute even if the file exists");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*hasse && cfg.format == "json" && !app.get_option("--format")->count()) cfg.format = "dot";
    if (*klbasis) return cmd_klbasis(cfg, w_text, basis);
    if (*mult) return cmd_mult(cfg, mult_basis, x_text, y_text);
    if (*sc) return cmd_structconsts(cfg, sc_basis);
    if (*cells) return cmd_cells(cfg, order);
    if (*hasse) return cmd_hasse(cfg);
    if (*afunc) return cmd_afunc(cfg);
    if (*cyclic) return cmd_cyclic(cfg, gen, cyc_basis, target, check);
    if (*kh) {
      if (!json_out.empty()) cfg.out = json_out;
      return cmd_kahrstrom(cfg, w_text, all, mode, scan, samples, parabolic, budget);
    }
    if (*verify) return cmd_verify(cfg, suite);
    if (*cache) return cmd_cache(cfg, rebuild);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
