// hofix: exact, finite verification of group actions on rings, modules,
// and categories. Every number printed is the result of a completed
// enumeration; anything out of reach is refused loudly, never truncated.
//
// Exit codes: 0 all requested checks pass, 1 a check ran and failed,
// 2 bad usage, bad config, or an enumeration over budget.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hofix/config.hpp"
#include "hofix/h1.hpp"
#include "hofix/suite.hpp"

using json = nlohmann::ordered_json;
using namespace hofix;

namespace {

struct InstanceOpts {
  std::string preset, config_path;
  long long budget_objects = -1, budget_ops = -1;

  void add_flags(CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset,
                              "named instance (list them with `hofix presets`)");
    auto* c = cmd->add_option("--config", config_path, "instance config file");
    p->excludes(c);
    cmd->add_option("--budget-objects", budget_objects,
                    "largest category the run may materialize");
    cmd->add_option("--budget-ops", budget_ops,
                    "largest operation count one enumeration may spend");
  }

  InstanceSpec load() const {
    InstanceSpec spec;
    if (!preset.empty()) {
      spec = make_preset(preset);
    } else if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in)
        throw ConfigError("cannot open config file '" + config_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      spec = resolve_config(parse_config_text(ss.str()), config_path);
    } else {
      throw ConfigError("an instance is required: --preset NAME or --config FILE");
    }
    if (budget_objects >= 0) spec.budget.max_objects = budget_objects;
    if (budget_ops >= 0) spec.budget.max_ops = budget_ops;
    return spec;
  }

  Budget bare_budget() const {
    Budget b;
    if (budget_objects >= 0) b.max_objects = budget_objects;
    if (budget_ops >= 0) b.max_ops = budget_ops;
    return b;
  }
};

json check_to_json(const CheckResult& r) {
  json j;
  j["name"] = r.name;
  j["ok"] = r.ok;
  if (r.skipped) j["skipped"] = true;
  j["detail"] = r.detail;
  if (!r.numbers.empty()) {
    json nums = json::object();
    for (const auto& [k, v] : r.numbers) nums[k] = v;
    j["numbers"] = nums;
  }
  if (!r.texts.empty()) {
    json texts = json::object();
    for (const auto& [k, v] : r.texts) texts[k] = v;
    j["texts"] = texts;
  }
  return j;
}

void print_check_line(const CheckResult& r) {
  const char* tag = r.skipped ? "skip" : (r.ok ? " ok " : "FAIL");
  std::printf("[%s] %-24s %s\n", tag, r.name.c_str(), r.detail.c_str());
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- suite ----

struct SuiteCmd {
  InstanceOpts inst;
  int max_rank = 2;
  unsigned seed = 0;
  int samples = 12;
  bool as_json = false, timings = false;

  int run() const {
    InstanceSpec spec = inst.load();
    std::vector<double> secs;
    auto t0 = std::chrono::steady_clock::now();
    auto results =
        run_suite(spec, max_rank, seed, samples, timings ? &secs : nullptr);
    double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.ok;
    if (as_json) {
      json j;
      j["command"] = "suite";
      j["instance"] = spec.name;
      j["max_rank"] = max_rank;
      j["seed"] = seed;
      j["samples"] = samples;
      j["ok"] = all_ok;
      j["checks"] = json::array();
      for (size_t i = 0; i < results.size(); ++i) {
        json c = check_to_json(results[i]);
        if (timings) c["seconds"] = secs[i];
        j["checks"].push_back(std::move(c));
      }
      if (timings) j["seconds"] = total;
      emit(j);
    } else {
      std::printf("instance %s, max rank %d, seed %u\n", spec.name.c_str(),
                  max_rank, seed);
      for (size_t i = 0; i < results.size(); ++i) {
        print_check_line(results[i]);
        if (timings) std::printf("       %.3fs\n", secs[i]);
      }
      int failed = 0;
      for (const auto& r : results)
        if (!r.ok) ++failed;
      if (timings) std::printf("total %.3fs\n", total);
      std::printf("suite: %s\n",
                  all_ok ? "PASS" : ("FAIL (" + std::to_string(failed) +
                                     " of " + std::to_string(results.size()) +
                                     " checks)")
                                        .c_str());
    }
    return all_ok ? 0 : 1;
  }
};

// ---- h1 ----

struct H1Cmd {
  int p = 0, d_total = 0, d_sub = 1, n = 1;
  InstanceOpts inst;  // only the budget flags are added

  int run() const {
    Hilbert90Report rep = verify_hilbert90(p, d_total, d_sub, n, inst.bare_budget());
    json j;
    j["command"] = "h1";
    j["p"] = rep.p;
    j["d_total"] = rep.d_total;
    j["d_sub"] = rep.d_sub;
    j["n"] = rep.n;
    j["gl_order"] = rep.gl_order;
    j["cocycle_count"] = rep.cocycle_count;
    j["class_count"] = rep.class_count;
    j["trivial"] = rep.trivial();
    emit(j);
    return rep.trivial() ? 0 : 1;
  }
};

// ---- galois-check ----

struct GaloisCmd {
  InstanceOpts inst;
  bool as_json = false;

  int run() const {
    InstanceSpec spec = inst.load();
    GaloisCheckReport ga = check_galois(spec.gr, spec.budget);
    if (as_json) {
      json j;
      j["command"] = "galois-check";
      j["instance"] = spec.name;
      j["is_galois"] = ga.is_galois;
      j["degree"] = ga.degree;
      j["tensor_size"] = ga.tensor_size;
      j["image_size"] = ga.image_size;
      j["target_size"] = ga.target_size;
      emit(j);
    } else {
      std::printf("%s: %s (%s)\n", spec.name.c_str(),
                  ga.is_galois ? "galois" : "not galois", ga.detail.c_str());
    }
    return ga.is_galois ? 0 : 1;
  }
};

// ---- k0 ----

struct K0Cmd {
  InstanceOpts inst;
  int max_rank = 2;
  bool as_json = false;

  int run() const {
    InstanceSpec spec = inst.load();
    MackeyK0Report rep = mackey_k0_report(spec.gr, max_rank, spec.budget);
    bool ok = rep.mackey_ok && rep.transfer_is_descent_datum &&
              rep.coset_order_independent && (!rep.oracle_checked || rep.oracle_ok);
    if (as_json) {
      json j;
      j["command"] = "k0";
      j["instance"] = spec.name;
      j["truncation"] = rep.N;
      j["k0_full_group"] = rep.top.k0;
      j["k0_trivial_subgroup"] = rep.bottom.k0;
      j["res"] = rep.res;
      j["tr"] = rep.tr;
      j["res_tr"] = rep.res_tr;
      j["mackey_identity"] = rep.mackey_ok;
      j["transfer_is_descent_datum"] = rep.transfer_is_descent_datum;
      j["coset_order_independent"] = rep.coset_order_independent;
      if (rep.oracle_checked) j["hom_oracle_agrees"] = rep.oracle_ok;
      if (!rep.top.annotation.empty()) j["note"] = rep.top.annotation;
      j["ok"] = ok;
      emit(j);
    } else {
      std::printf("instance %s, truncation %d\n", spec.name.c_str(), rep.N);
      std::printf("K0 at the full group      %s\n", rep.top.k0.c_str());
      std::printf("K0 at the trivial subgroup %s\n", rep.bottom.k0.c_str());
      std::printf("restriction %s\n", detail::int_mat_text(rep.res).c_str());
      std::printf("transfer    %s\n", detail::int_mat_text(rep.tr).c_str());
      std::printf("res . tr    %s\n", detail::int_mat_text(rep.res_tr).c_str());
      std::printf("double coset identity: %s\n", rep.mackey_ok ? "holds" : "FAILS");
      if (rep.oracle_checked)
        std::printf("independent hom-conjugacy oracle: %s\n",
                    rep.oracle_ok ? "agrees" : "DISAGREES");
      if (!rep.top.annotation.empty())
        std::printf("note: %s\n", rep.top.annotation.c_str());
    }
    return ok ? 0 : 1;
  }
};

// ---- assembly ----

struct AssemblyCmd {
  InstanceOpts inst;
  int max_rank = 2;
  bool as_json = false;

  int run() const {
    InstanceSpec spec = inst.load();
    AssemblyReport rep = assembly_map_k0(spec.gr, max_rank, spec.budget);
    bool ok = rep.witness_ok && rep.hofix_image_consistent;
    if (as_json) {
      json j;
      j["command"] = "assembly";
      j["instance"] = spec.name;
      j["truncation"] = max_rank;
      j["source_k0"] = rep.source.k0;
      j["target_k0"] = rep.target.k0;
      j["matrix"] = rep.matrix;
      j["categorical_witness_ok"] = rep.witness_ok;
      j["hofix_image_consistent"] = rep.hofix_image_consistent;
      j["ok"] = ok;
      emit(j);
    } else {
      std::printf("instance %s, truncation %d\n", spec.name.c_str(), max_rank);
      std::printf("assembly on K0: %s -> %s by %s\n", rep.source.k0.c_str(),
                  rep.target.k0.c_str(), detail::int_mat_text(rep.matrix).c_str());
      std::printf("categorical witness: %s\n", rep.witness_ok ? "valid" : "INVALID");
      std::printf("fixed point image matches class embedding: %s\n",
                  rep.hofix_image_consistent ? "yes" : "NO");
    }
    return ok ? 0 : 1;
  }
};

// ---- strictify-test ----

struct StrictifyCmd {
  int count = 100;
  unsigned seed = 0;
  bool as_json = false;
  InstanceOpts inst;  // budget flags only

  int run() const {
    Budget b = inst.bare_budget();
    if (inst.budget_ops < 0) b.max_ops = 4'000'000'000LL;
    if (inst.budget_objects < 0) b.max_objects = 10'000'000LL;
    CheckResult r = check_strictification_sample(count, seed, b);
    if (as_json) {
      json j;
      j["command"] = "strictify-test";
      j["ok"] = r.ok;
      j["detail"] = r.detail;
      json nums = json::object();
      for (const auto& [k, v] : r.numbers) nums[k] = v;
      j["numbers"] = nums;
      emit(j);
    } else {
      print_check_line(r);
    }
    return r.ok ? 0 : 1;
  }
};

// ---- skeleton-test ----

struct SkeletonCmd {
  bool as_json = false;
  InstanceOpts inst;  // budget flags only

  struct Row {
    std::string name;
    int ambient_objects = 0, skeleton_objects = 0;
    bool ok = false;
  };

  static Row run_one(const std::string& name, const GCategory& C,
                     const Budget& budget, int expected_objects) {
    Row row;
    row.name = name;
    row.ambient_objects = C.cat.nobj;
    EquivariantSkeleton S = equivariant_skeleton(C, budget);
    validate_gcategory(S.sk, budget);
    row.skeleton_objects = S.sk.cat.nobj;
    Functor ri = compose_functors(S.retraction, S.inclusion);
    Functor ir = compose_functors(S.inclusion, S.retraction);
    Functor idsk = identity_functor(S.sk.cat);
    row.ok = row.skeleton_objects == expected_objects &&
             num_iso_classes(S.sk.cat) == S.sk.cat.nobj &&
             !equivariance_violation(C, S.sk, S.retraction).has_value() &&
             ri.ob == idsk.ob && ri.mor == idsk.mor &&
             is_natural(C.cat, C.cat, identity_functor(C.cat), ir, S.gamma) &&
             naturally_isomorphic(C.cat, C.cat, ir, identity_functor(C.cat));
    return row;
  }

  int run() const {
    Budget b = inst.bare_budget();
    FiniteGroup C2 = make_cyclic_group(2);
    FiniteGroup C3 = make_cyclic_group(3);
    std::vector<Row> rows;
    rows.push_back(run_one("chaotic-c2", make_chaotic(C2), b, 1));
    rows.push_back(run_one("chaotic-c3", make_chaotic(C3), b, 1));
    rows.push_back(
        run_one("exponential-of-chaotic-c2", cat_tilde_g(make_chaotic(C2), b).out, b, 1));
    rows.push_back(run_one("chaotic-4-swapped-pairs",
                           chaotic_gcategory(4, C2, {{0, 1, 2, 3}, {1, 0, 3, 2}}), b, 1));
    rows.push_back(run_one("discrete-3-with-swap",
                           discrete_gcategory(3, C2, {{0, 1, 2}, {1, 0, 2}}), b, 3));
    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.ok;
    if (as_json) {
      json j;
      j["command"] = "skeleton-test";
      j["ok"] = all_ok;
      j["cases"] = json::array();
      for (const auto& r : rows) {
        json c;
        c["name"] = r.name;
        c["ambient_objects"] = r.ambient_objects;
        c["skeleton_objects"] = r.skeleton_objects;
        c["ok"] = r.ok;
        j["cases"].push_back(std::move(c));
      }
      emit(j);
    } else {
      for (const auto& r : rows)
        std::printf("[%s] %-28s %d objects -> %d\n", r.ok ? " ok " : "FAIL",
                    r.name.c_str(), r.ambient_objects, r.skeleton_objects);
    }
    return all_ok ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hofix: exact checks for finite group actions on rings, modules, and "
      "categories"};
  app.require_subcommand(1);

  auto* presets_cmd = app.add_subcommand("presets", "list the named instances");

  SuiteCmd suite;
  auto* suite_cmd = app.add_subcommand(
      "suite", "run every applicable check on one instance");
  suite.inst.add_flags(suite_cmd);
  suite_cmd->add_option("--max-rank", suite.max_rank, "rank truncation")
      ->check(CLI::Range(1, 6));
  suite_cmd->add_option("--seed", suite.seed, "seed for the randomized sample");
  suite_cmd->add_option("--samples", suite.samples,
                        "number of random pseudo functors")
      ->check(CLI::Range(1, 1000));
  suite_cmd->add_flag("--json", suite.as_json, "machine readable report");
  suite_cmd->add_flag("--timings", suite.timings,
                      "include wall times (breaks byte-for-byte determinism)");

  H1Cmd h1;
  auto* h1_cmd = app.add_subcommand(
      "h1", "cocycles of a field extension in GL_n, up to twisted conjugacy");
  h1_cmd->add_option("--p", h1.p, "characteristic")->required();
  h1_cmd->add_option("--dtotal", h1.d_total, "degree of the big field")->required();
  h1_cmd->add_option("--dsub", h1.d_sub, "degree of the fixed field");
  h1_cmd->add_option("--n", h1.n, "matrix size");
  h1_cmd->add_option("--budget-ops", h1.inst.budget_ops, "operation budget");
  h1_cmd->add_option("--budget-objects", h1.inst.budget_objects, "object budget");

  GaloisCmd galois;
  auto* galois_cmd = app.add_subcommand(
      "galois-check", "is the instance a galois extension of its fixed ring");
  galois.inst.add_flags(galois_cmd);
  galois_cmd->add_flag("--json", galois.as_json, "machine readable report");

  K0Cmd k0;
  auto* k0_cmd = app.add_subcommand(
      "k0", "K0 with restriction, transfer, and the double coset identity");
  k0.inst.add_flags(k0_cmd);
  k0_cmd->add_option("--max-rank", k0.max_rank, "rank truncation")
      ->check(CLI::Range(1, 6));
  k0_cmd->add_flag("--json", k0.as_json, "machine readable report");

  AssemblyCmd assembly;
  auto* assembly_cmd = app.add_subcommand(
      "assembly", "the assembly map on K0 with its categorical witness");
  assembly.inst.add_flags(assembly_cmd);
  assembly_cmd->add_option("--max-rank", assembly.max_rank, "rank truncation")
      ->check(CLI::Range(1, 6));
  assembly_cmd->add_flag("--json", assembly.as_json, "machine readable report");

  StrictifyCmd strictify;
  auto* strictify_cmd = app.add_subcommand(
      "strictify-test",
      "random pseudo equivariant functors become strictly equivariant");
  strictify_cmd->add_option("--count", strictify.count, "sample size")
      ->check(CLI::Range(1, 5000));
  strictify_cmd->add_option("--seed", strictify.seed, "sample seed");
  strictify_cmd->add_flag("--json", strictify.as_json, "machine readable report");
  strictify_cmd->add_option("--budget-ops", strictify.inst.budget_ops,
                            "operation budget");
  strictify_cmd->add_option("--budget-objects", strictify.inst.budget_objects,
                            "object budget");

  SkeletonCmd skeleton;
  auto* skeleton_cmd = app.add_subcommand(
      "skeleton-test", "coherent contraction isos onto equivariant skeleta");
  skeleton_cmd->add_flag("--json", skeleton.as_json, "machine readable report");
  skeleton_cmd->add_option("--budget-ops", skeleton.inst.budget_ops,
                           "operation budget");
  skeleton_cmd->add_option("--budget-objects", skeleton.inst.budget_objects,
                           "object budget");

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

  try {
    if (presets_cmd->parsed()) {
      for (const auto& n : preset_names()) std::printf("%s\n", n.c_str());
      return 0;
    }
    if (suite_cmd->parsed()) return suite.run();
    if (h1_cmd->parsed()) return h1.run();
    if (galois_cmd->parsed()) return galois.run();
    if (k0_cmd->parsed()) return k0.run();
    if (assembly_cmd->parsed()) return assembly.run();
    if (strictify_cmd->parsed()) return strictify.run();
    if (skeleton_cmd->parsed()) return skeleton.run();
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
