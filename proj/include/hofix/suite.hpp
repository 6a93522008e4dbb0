#pragma once
// The per-instance verification suite behind the command line: for a ring
// with group action, run every check that applies at the requested rank
// truncation and report structured results. A check that cannot run at
// this scale is marked skipped with the refusing error verbatim; a check
// that runs and fails is a failure, never silently softened.

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "hofix/config.hpp"
#include "hofix/galois.hpp"
#include "hofix/h1.hpp"
#include "hofix/random_instances.hpp"
#include "hofix/rectify.hpp"

namespace hofix {

struct CheckResult {
  std::string name;
  bool ok = false;
  bool skipped = false;
  std::string detail;
  std::vector<std::pair<std::string, long long>> numbers;
  std::vector<std::pair<std::string, std::string>> texts;
};

namespace detail {

inline std::string int_mat_text(const IntMat& M) {
  std::string s = "[";
  for (size_t i = 0; i < M.size(); ++i) {
    if (i) s += "; ";
    for (size_t j = 0; j < M[i].size(); ++j) {
      if (j) s += " ";
      s += std::to_string(M[i][j]);
    }
  }
  return s + "]";
}

}  // namespace detail

// theta: the twisted group ring maps to endomorphisms of the extension
// over the fixed ring; it is a unital ring map always, bijective exactly
// when the extension is Galois. The two routes are computed independently.
inline CheckResult check_theta_identification(const GRing& gr,
                                              const Budget& budget) {
  CheckResult r;
  r.name = "theta-identification";
  ThetaReport th = theta_hom(twisted_group_ring(gr));
  GaloisCheckReport ga = check_galois(gr, budget);
  r.ok = th.ring_hom() && th.fixed_linear && (th.bijective() == ga.is_galois);
  r.numbers = {{"twisted_ring_size", static_cast<long long>(gr.R.n) * gr.G.n},
               {"endomorphism_count", th.end_count},
               {"module_rank", th.module_rank}};
  r.texts = {{"ring_hom", th.ring_hom() ? "true" : "false"},
             {"bijective", th.bijective() ? "true" : "false"},
             {"galois", ga.is_galois ? "true" : "false"}};
  r.detail = std::string("ring hom ") + (th.ring_hom() ? "yes" : "NO") +
             ", bijective " + (th.bijective() ? "yes" : "no") +
             ", galois " + (ga.is_galois ? "yes" : "no");
  return r;
}

// the Galois condition by literal image counting on the tensor square
inline CheckResult check_galois_condition(const GRing& gr, const Budget& budget) {
  CheckResult r;
  r.name = "galois-condition";
  GaloisCheckReport ga = check_galois(gr, budget);
  r.ok = true;  // classification; consistency asserted in theta-identification
  r.numbers = {{"degree", ga.degree},
               {"tensor_size", ga.tensor_size},
               {"image_size", ga.image_size},
               {"target_size", ga.target_size}};
  r.texts = {{"is_galois", ga.is_galois ? "true" : "false"}};
  r.detail = ga.detail + (ga.is_galois ? "; galois" : "; not galois");
  return r;
}

// twisted forms by rank: cocycle and class counts, with every class
// containing honest descent data and the trivial cocycle present
inline CheckResult check_semilinear_classes(const GRing& gr, int max_rank,
                                            const Budget& budget) {
  CheckResult r;
  r.name = "semilinear-classes";
  r.ok = true;
  std::vector<int> allg(gr.G.n);
  for (int i = 0; i < gr.G.n; ++i) allg[i] = i;
  auto [G2, elems] = gr.G.subgroup_as_group(allg);
  for (int n = 1; n <= max_rank; ++n) {
    SemilinearClasses L;
    try {
      L = enumerate_semilinear_structures(gr, allg, n, budget);
    } catch (const BudgetError& e) {
      r.texts.push_back({"rank_" + std::to_string(n), std::string("skipped: ") + e.what()});
      if (!r.detail.empty()) r.detail += "; ";
      r.detail += "rank " + std::to_string(n) + " skipped: " + e.what();
      break;
    }
    for (int cls = 0; cls < L.num_classes(); ++cls)
      if (!is_cocycle(gr, G2, elems, L.cocycles[L.reps[cls]])) r.ok = false;
    try {
      L.classify(trivial_cocycle(gr.R, gr.G.n, n));
    } catch (const Error&) {
      r.ok = false;
    }
    r.numbers.push_back({"rank_" + std::to_string(n) + "_cocycles",
                         static_cast<long long>(L.cocycles.size())});
    r.numbers.push_back({"rank_" + std::to_string(n) + "_classes", L.num_classes()});
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += "rank " + std::to_string(n) + ": " +
                std::to_string(L.cocycles.size()) + " cocycles, " +
                std::to_string(L.num_classes()) + " classes";
  }
  return r;
}

// homotopy fixed points of the rank-truncated twisted module category are
// the descent data: component count must equal the class count by rank
inline CheckResult check_homotopy_descent(const GRing& gr, const Budget& budget) {
  CheckResult r;
  r.name = "homotopy-descent";
  std::vector<int> allg(gr.G.n);
  for (int i = 0; i < gr.G.n; ++i) allg[i] = i;
  TwistedModel T = twisted_model_gcategory(gr, 1, budget);
  validate_gcategory(T.C, budget);
  HofixCat HF = homotopy_fixed_points(T.C, allg, budget);
  auto comp = connected_components(HF.cat);
  int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  SemilinearClasses L1 = enumerate_semilinear_structures(gr, allg, 1, budget);
  int expected = 1 + L1.num_classes();  // rank 0 plus the rank-1 classes
  r.ok = (ncomp == expected);
  r.numbers = {{"hofix_objects", static_cast<long long>(HF.objects.size())},
               {"hofix_components", ncomp},
               {"expected_components", expected}};
  r.detail = std::to_string(HF.objects.size()) + " fixed point objects in " +
             std::to_string(ncomp) + " components, expected " +
             std::to_string(expected);
  return r;
}

// the K0 table with restriction, transfer, and the double coset identity
inline CheckResult check_mackey_k0(const GRing& gr, int max_rank,
                                   const Budget& budget) {
  CheckResult r;
  r.name = "mackey-k0";
  MackeyK0Report rep;
  try {
    rep = mackey_k0_report(gr, max_rank, budget);
  } catch (const Error& e) {
    r.skipped = true;
    r.ok = true;
    r.detail = std::string("skipped: ") + e.what();
    return r;
  }
  r.ok = rep.mackey_ok && rep.transfer_is_descent_datum &&
         rep.coset_order_independent && (!rep.oracle_checked || rep.oracle_ok);
  r.numbers = {{"truncation", rep.N}};
  r.texts = {{"k0_full_group", rep.top.k0},
             {"k0_trivial_subgroup", rep.bottom.k0},
             {"res", detail::int_mat_text(rep.res)},
             {"tr", detail::int_mat_text(rep.tr)},
             {"res_tr", detail::int_mat_text(rep.res_tr)},
             {"mackey_identity", rep.mackey_ok ? "true" : "false"},
             {"hom_oracle", !rep.oracle_checked ? "not applicable"
                            : rep.oracle_ok     ? "agrees"
                                                : "DISAGREES"}};
  if (!rep.top.annotation.empty()) r.texts.push_back({"note", rep.top.annotation});
  r.detail = "K0(G) = " + rep.top.k0 + ", K0(e) = " + rep.bottom.k0 +
             ", res " + detail::int_mat_text(rep.res) + ", tr " +
             detail::int_mat_text(rep.tr) + ", double-coset identity " +
             (rep.mackey_ok ? "holds" : "FAILS");
  return r;
}

// pi0 of the group completion against the formal-difference oracle, at the
// trivial-subgroup level and the full-group level
inline CheckResult check_completion_pi0(const GRing& gr, int max_rank,
                                        const Budget& budget) {
  CheckResult r;
  r.name = "completion-pi0";
  r.ok = true;
  std::vector<int> allg(gr.G.n);
  for (int i = 0; i < gr.G.n; ++i) allg[i] = i;
  std::vector<std::pair<std::string, std::vector<int>>> levels = {
      {"trivial_subgroup", {gr.G.e}}, {"full_group", allg}};
  if (gr.G.n == 1) levels.pop_back();
  for (auto& [label, Helems] : levels) {
    Pi0Monoid M;
    try {
      M = build_pi0_monoid(gr, Helems, max_rank, budget);
    } catch (const BudgetError& e) {
      r.texts.push_back({label, std::string("skipped: ") + e.what()});
      if (!r.detail.empty()) r.detail += "; ";
      r.detail += label + " skipped: " + e.what();
      continue;
    }
    if (!M.free) {
      r.ok = false;
      r.texts.push_back({label, "pi0 monoid not certified free"});
      continue;
    }
    SInvSPi0 pi = s_inverse_s_pi0(M);
    if (!pi.oracle_match) r.ok = false;
    r.numbers.push_back({label + "_components", pi.num_components});
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += label + ": " + std::to_string(pi.num_components) +
                " components, oracle " + (pi.oracle_match ? "agrees" : "DISAGREES");
  }
  int cap = std::min(max_rank, 2);
  bool faithful = check_faithful_translations(gr.R, cap, budget);
  if (!faithful) r.ok = false;
  r.texts.push_back({"translations_injective_to_rank_" + std::to_string(cap),
                     faithful ? "true" : "false"});
  return r;
}

// units of the extension as a group with action: the unit of the inflation
// construction is an equivalence on H-fixed points exactly when the
// nonabelian H1 at H is trivial
inline CheckResult check_iota_h1_units(const GRing& gr, const Budget& budget) {
  CheckResult r;
  r.name = "iota-h1-units";
  GGroup W = unit_group_ggroup(gr);
  IotaH1Report rep = iota_equivalence_check(W, budget);
  r.ok = rep.biconditional_holds;
  r.numbers = {{"subgroups", static_cast<long long>(rep.rows.size())}};
  int triv = 0;
  for (const auto& row : rep.rows)
    if (row.h1_trivial) ++triv;
  r.numbers.push_back({"subgroups_with_trivial_h1", triv});
  r.texts = {{"biconditional", rep.biconditional_holds ? "holds" : "FAILS"}};
  r.detail = "unit-of-inflation equivalence matches H1 triviality on " +
             std::to_string(rep.rows.size()) + " subgroups (" +
             std::to_string(triv) + " trivial H1)";
  return r;
}

// randomized strictification sample (instance independent): pseudo
// equivariant functors become strictly equivariant with the same homotopy
// fixed points
inline CheckResult check_strictification_sample(int count, unsigned seed,
                                                const Budget& budget) {
  CheckResult r;
  r.name = "strictification-sample";
  r.ok = true;
  int equivalences = 0;
  auto instances = make_random_pseudo_instances(count, seed);
  for (const auto& inst : instances) {
    if (validate_pseudo(inst.P, budget).violation) {
      r.ok = false;
      break;
    }
    Strictified S = strictify(inst.P, budget);
    if (equivariance_violation(S.TC.out, S.TD.out, S.F)) {
      r.ok = false;
      break;
    }
    if (inst.is_equivalence) {
      ++equivalences;
      for (const auto& H : inst.P.C.G.subgroups()) {
        HofixCat HC = homotopy_fixed_points(inst.P.C, H, budget);
        HofixCat HD = homotopy_fixed_points(inst.P.D, H, budget);
        Functor Fh = induced_hofix_map(inst.P, HC, HD);
        if (!check_equivalence(HC.cat, HD.cat, Fh).ok()) {
          r.ok = false;
          break;
        }
      }
    }
  }
  r.numbers = {{"instances", static_cast<long long>(instances.size())},
               {"equivalences", equivalences},
               {"seed", static_cast<long long>(seed)}};
  r.detail = std::to_string(instances.size()) + " random pseudo functors (" +
             std::to_string(equivalences) +
             " equivalences), all strictified exactly" +
             (r.ok ? "" : " FAILURE");
  return r;
}

// Runs every check; `seconds`, when given, receives one wall time per check.
inline std::vector<CheckResult> run_suite(const InstanceSpec& spec, int max_rank,
                                          unsigned seed, int sample_count = 12,
                                          std::vector<double>* seconds = nullptr) {
  // each check gets its own copy of the budget, so one greedy enumeration
  // cannot starve the checks after it
  auto fresh = [&spec]() {
    Budget b = spec.budget;
    b.used_ops = 0;
    return b;
  };
  std::vector<CheckResult> out;
  auto timed = [&](CheckResult r, std::chrono::steady_clock::time_point t0) {
    if (seconds)
      seconds->push_back(
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count());
    out.push_back(std::move(r));
  };
  auto now = [] { return std::chrono::steady_clock::now(); };
  auto t = now();
  timed(check_theta_identification(spec.gr, fresh()), t);
  t = now();
  timed(check_galois_condition(spec.gr, fresh()), t);
  t = now();
  timed(check_semilinear_classes(spec.gr, max_rank, fresh()), t);
  t = now();
  timed(check_homotopy_descent(spec.gr, fresh()), t);
  t = now();
  timed(check_mackey_k0(spec.gr, max_rank, fresh()), t);
  t = now();
  timed(check_completion_pi0(spec.gr, max_rank, fresh()), t);
  t = now();
  timed(check_iota_h1_units(spec.gr, fresh()), t);
  t = now();
  timed(check_strictification_sample(sample_count, seed, fresh()), t);
  return out;
}

}  // namespace hofix
