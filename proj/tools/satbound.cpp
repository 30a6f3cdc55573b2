#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "satbound/corpus.hpp"
#include "satbound/ideal_file.hpp"
#include "satbound/resolution.hpp"
#include "satbound/schur.hpp"

using namespace satbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTheoremFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct Common {
  std::string file;
  std::string example;
  int r = 0;
  int d = 0;
  std::vector<int> degs;
  std::uint64_t seed = 1;
  std::string field_name;
  bool json = false;
  int tmax = -1;
  std::uint64_t budget = 0;
};

Field select_field(const std::string& name) {
  std::string n = name;
  if (n.empty()) {
    const char* env = std::getenv("SATBOUND_FIELD");
    if (env) n = env;
  }
  if (n.empty() || n == "prime") return Field::prime();
  if (n == "rat" || n == "rationals") return Field::rationals();
  throw CLI::ValidationError("--field", "expected 'prime' or 'rat'");
}

GroebnerOptions select_opts(const Common& c) {
  GroebnerOptions o;
  if (c.budget > 0) o.step_budget = c.budget;
  return o;
}

Ideal load_ideal(const Common& c, const Field& field) {
  if (!c.example.empty()) {
    ExampleSpec spec{c.example, c.r, c.d, c.degs, c.seed};
    return build_example(spec, field).ideal;
  }
  if (c.file.empty())
    throw IdealFileError("need an ideal file or --example", 0, 0);
  std::ifstream in(c.file);
  if (!in) throw IdealFileError("cannot open " + c.file, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str(), field);
}

void add_common(CLI::App* cmd, Common& c, bool with_file) {
  if (with_file) cmd->add_option("file", c.file, "ideal file");
  cmd->add_option("--example", c.example, "corpus example family");
  cmd->add_option("--r", c.r, "ambient dimension");
  cmd->add_option("--d", c.d, "degree parameter");
  cmd->add_option("--degs", c.degs, "degree sequence")->delimiter(',');
  cmd->add_option("--seed", c.seed, "PRNG seed");
  cmd->add_option("--field", c.field_name, "coefficient field: prime|rat");
  cmd->add_option("--tmax", c.tmax, "degree cutoff for tables");
  cmd->add_option("--budget", c.budget, "computation step budget");
  cmd->add_flag("--json", c.json, "JSON output");
}

int cmd_satdeg(const Common& c, int power) {
  Field f = select_field(c.field_name);
  auto opts = select_opts(c);
  Ideal I = load_ideal(c, f);
  auto sd = sat_degree(ideal_power(I, power), opts);
  if (c.json) {
    nlohmann::json j;
    j["sat_degree"] = sd.sat_degree;
    j["witness_degrees"] = sd.witness_degrees;
    nlohmann::json gaps = nlohmann::json::object();
    for (auto [t, g] : sd.gap_dims) gaps[std::to_string(t)] = g;
    j["gap_dims"] = gaps;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "sat_degree = " << sd.sat_degree << "\n";
    for (int t : sd.witness_degrees)
      std::cout << "  gap at t=" << t << ": " << sd.gap_dims.at(t) << "\n";
  }
  return kExitOk;
}

int cmd_betti(const Common& c, int power) {
  Field f = select_field(c.field_name);
  Ideal I = load_ideal(c, f);
  auto B = minimal_betti(ideal_power(I, power), select_opts(c));
  if (c.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, b] : B.entries())
      arr.push_back({{"i", key.first}, {"j", key.second}, {"beta", b}});
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << B.to_staircase();
    std::cout << "regularity = " << B.regularity() << "\n";
  }
  return kExitOk;
}

int cmd_reg(const Common& c, int power) {
  Field f = select_field(c.field_name);
  auto opts = select_opts(c);
  Ideal I = ideal_power(load_ideal(c, f), power);
  int areg = arith_reg(I, opts);
  auto sd = sat_degree(I, opts);
  if (c.json) {
    nlohmann::json j;
    j["arith_reg"] = areg;
    j["sat_degree"] = sd.sat_degree;
    j["geom_reg"] = arith_reg(saturate(I, opts), opts);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "arith_reg = " << areg << "\n";
    std::cout << "geom_reg  = " << arith_reg(saturate(I, opts), opts) << "\n";
    std::cout << "sat_degree = " << sd.sat_degree << "\n";
  }
  return kExitOk;
}

int cmd_sympow(const Common& c, int a, bool force) {
  Field f = select_field(c.field_name);
  auto opts = select_opts(c);
  Ideal I = load_ideal(c, f);
  bool checked = false;
  if (!force) {
    auto cert = is_smooth(I, opts);
    if (!cert.smooth) {
      std::cerr << "input is singular (singular locus dim "
                << cert.singular_locus_dim
                << "); sat(I^a) is not the symbolic power; use --force\n";
      return kExitInputError;
    }
    checked = true;
  }
  Ideal S = symbolic_power(I, a, checked, force, opts);
  std::cout << write_ideal_file(S);
  return kExitOk;
}

int cmd_schur(const Common& c, const std::string& hook) {
  int a = 0, k = 0;
  if (std::sscanf(hook.c_str(), "a=%d,k=%d", &a, &k) != 2 || a < 1 || k < 1)
    throw CLI::ValidationError("--hook", "expected a=<int>,k=<int>");
  if (c.degs.empty())
    throw CLI::ValidationError("--degs", "need a degree list");
  GradedMultiset V{c.degs};
  auto h = hook_graded(a, k, V);
  if (c.json) {
    nlohmann::json j;
    j["a"] = a;
    j["k"] = k;
    j["rank"] = h.rank();
    nlohmann::json degs = nlohmann::json::object();
    for (const auto& [deg, m] : h.entries()) degs[std::to_string(deg)] = m;
    j["degrees"] = degs;
    j["max_degree"] = h.empty() ? 0 : h.max_degree();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "rank = " << h.rank() << "\n";
    std::cout << "degrees = " << h.to_string() << "\n";
    if (!h.empty()) std::cout << "max_degree = " << h.max_degree() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& which, int a, int jobs) {
  (void)jobs;  // cases are cheap; scheduled sequentially in input order
  Field f = select_field(c.field_name);
  auto opts = select_opts(c);
  std::vector<VerificationReport> reports;
  if (which == "suite") {
    std::vector<std::string> names;
    if (!c.example.empty()) names.push_back(c.example);
    reports = run_suite(names, a, f, opts);
  } else if (which == "macaulay") {
    if (c.degs.empty() || c.r <= 0)
      throw CLI::ValidationError("--degs/--r", "macaulay needs --degs and --r");
    reports.push_back(
        verify_macaulay(DegreeSequence(c.degs, c.r), a, c.seed, f, opts));
  } else {
    if (c.example.empty())
      throw CLI::ValidationError("--example", "required for " + which);
    auto ex = build_example({c.example, c.r, c.d, c.degs, c.seed}, f);
    if (which == "thmB") {
      reports.push_back(verify_thmB(ex, a, opts));
    } else if (which == "thmA" || which == "corollaryC") {
      if (!ex.meta.D)
        throw CLI::ValidationError("--example", "no degree data for family");
      reports.push_back(which == "thmA"
                            ? verify_thmA(ex, *ex.meta.D, a, opts)
                            : verify_corollaryC(ex, *ex.meta.D, a, opts));
    } else {
      throw CLI::ValidationError(
          "verify", "expected suite|thmA|thmB|macaulay|corollaryC");
    }
  }
  if (c.json) {
    std::cout << "[";
    for (std::size_t i = 0; i < reports.size(); ++i)
      std::cout << (i ? "," : "") << reports[i].to_json();
    std::cout << "]\n";
  } else {
    for (const auto& r : reports) std::cout << r.to_line() << "\n";
  }
  return suite_passed(reports) ? kExitOk : kExitTheoremFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saturation bounds for homogeneous ideals"};
  app.require_subcommand(1);

  Common c;
  int power = 1, a = 2, jobs = 1;
  bool force = false;
  std::string hook, which;

  auto* satdeg = app.add_subcommand("satdeg", "saturation degree of I^a");
  add_common(satdeg, c, true);
  satdeg->add_option("--power,--a", power, "power a");

  auto* betti = app.add_subcommand("betti", "Betti table of I^a");
  add_common(betti, c, true);
  betti->add_option("--power,--a", power, "power a");

  auto* reg = app.add_subcommand("reg", "regularity of I^a");
  add_common(reg, c, true);
  reg->add_option("--power,--a", power, "power a");

  auto* sympow = app.add_subcommand("sympow", "symbolic power I^(a)");
  add_common(sympow, c, true);
  sympow->add_option("--a,--power", a, "power a");
  sympow->add_flag("--force", force, "skip the smoothness gate");

  auto* schur = app.add_subcommand("schur", "hook Schur functor data");
  add_common(schur, c, false);
  schur->add_option("--hook", hook, "hook shape, e.g. a=2,k=2")->required();

  auto* verify =
      app.add_subcommand("verify", "verify suite|thmA|thmB|macaulay|corollaryC");
  add_common(verify, c, false);
  verify->add_option("which", which, "what to verify")->required();
  verify->add_option("--a", a, "power / max power");
  verify->add_option("--jobs", jobs, "parallel cases");

  try {
    app.parse(argc, argv);
    if (satdeg->parsed()) return cmd_satdeg(c, power);
    if (betti->parsed()) return cmd_betti(c, power);
    if (reg->parsed()) return cmd_reg(c, power);
    if (sympow->parsed()) return cmd_sympow(c, a, force);
    if (schur->parsed()) return cmd_schur(c, hook);
    if (verify->parsed()) return cmd_verify(c, which, a, jobs);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const IdealFileError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
