// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Time bounds are pinned here in code next to the criterion they govern.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hofix/galois.hpp"
#include "hofix/h1.hpp"
#include "hofix/random_instances.hpp"
#include "hofix/rectify.hpp"
#include "hofix/sinvs.hpp"

using namespace hofix;

namespace {

int g_failures = 0;

Budget big_budget() {
  Budget b;
  b.max_ops = 4'000'000'000LL;
  b.max_objects = 10'000'000;
  return b;
}

// Runs one criterion body; the body returns a detail string and signals
// failure by throwing or by flipping its `ok` flag.
void criterion(int idx, const std::string& name, double bound_seconds,
               const std::function<std::string(bool&)>& body) {
  bool ok = true;
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (ok && bound_seconds > 0 && secs >= bound_seconds) {
    ok = false;
    detail += " [time bound " + std::to_string(bound_seconds) + "s exceeded]";
  }
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d  %-34s  %6.2fs  %s\n", ok ? "PASS" : "FAIL",
              idx, name.c_str(), secs, detail.c_str());
  std::fflush(stdout);
}

bool expect(bool cond, bool& ok, std::string& detail, const std::string& what) {
  if (!cond) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "FAILED: " + what;
  }
  return cond;
}

GCategory c3_inversion_gcat() {
  FiniteGroup C3 = make_cyclic_group(3);
  FiniteGroup C2 = make_cyclic_group(2);
  std::vector<std::vector<int>> act(2, std::vector<int>(3));
  for (int x = 0; x < 3; ++x) {
    act[0][x] = x;
    act[1][x] = C3.inv(x);
  }
  return group_as_gcategory(C3, C2, act);
}

GCategory c2_trivial_gcat() {
  FiniteGroup P = make_cyclic_group(2);
  FiniteGroup C2 = make_cyclic_group(2);
  std::vector<std::vector<int>> act(2, std::vector<int>(2));
  for (int x = 0; x < 2; ++x) act[0][x] = act[1][x] = x;
  return group_as_gcategory(P, C2, act);
}

}  // namespace

int main() {
  // 1. Unit cocycles over field extensions trivialize, with exact counts.
  criterion(1, "h1-units-field-extensions", 10.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    auto r1 = verify_hilbert90(2, 2, 1, 1, b);
    expect(r1.cocycle_count == 3 && r1.class_count == 1, ok, detail,
           "F4/F2 rank 1 expected 3 cocycles / 1 class");
    auto r2 = verify_hilbert90(2, 2, 1, 2, b);
    expect(r2.cocycle_count == 30 && r2.class_count == 1, ok, detail,
           "F4/F2 rank 2 expected 30 cocycles / 1 class");
    auto r3 = verify_hilbert90(3, 2, 1, 1, b);
    expect(r3.cocycle_count == 4 && r3.class_count == 1, ok, detail,
           "F9/F3 rank 1 expected 4 cocycles / 1 class");
    auto r4 = verify_hilbert90(2, 3, 1, 1, b);
    expect(r4.cocycle_count == 7 && r4.class_count == 1, ok, detail,
           "F8/F2 rank 1 expected 7 cocycles / 1 class");
    if (ok)
      detail = "classes 1/1/1/1 from 3/30/4/7 cocycles";
    return detail;
  });

  // 2. The twisted group ring maps isomorphically onto the endomorphisms
  //    of the extension as a module over the fixed ring.
  criterion(2, "twisted-ring-endomorphism-match", 5.0, [](bool& ok) {
    std::string detail;
    auto probe = [&](const GRing& gr, int size, const char* label) {
      TwistedGroupRing T = twisted_group_ring(gr);
      ThetaReport th = theta_hom(T);
      expect(T.ring.n == size, ok, detail,
             std::string(label) + " twisted ring size");
      expect(th.bijective() && th.end_count == size, ok, detail,
             std::string(label) + " bijectivity onto " +
                 std::to_string(size) + " endomorphisms");
    };
    probe(make_galois_gring(2, 2, 1), 16, "F4/F2");
    probe(make_galois_gring(3, 2, 1), 81, "F9/F3");
    probe(make_swap_gring(make_prime_field(2)), 16, "F2xF2/F2");
    if (ok) detail = "bijective: 16<->16, 81<->81, 16<->16";
    return detail;
  });

  // 3. Mackey table for the quadratic extension of F2 at truncation 3.
  criterion(3, "mackey-table-f4", 0.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    MackeyK0Report rep = mackey_k0_report(make_galois_gring(2, 2, 1), 3, b);
    expect(rep.top.k0 == "Z^1", ok, detail, "full-group K0 is Z");
    expect(rep.bottom.k0 == "Z^1", ok, detail, "trivial-subgroup K0 is Z");
    expect(rep.res == IntMat{{1}}, ok, detail, "restriction is the identity");
    expect(rep.tr == IntMat{{2}}, ok, detail, "transfer is doubling");
    expect(rep.mackey_ok, ok, detail, "double-coset identity");
    if (ok) detail = "K0 = Z at both levels, res = [1], tr = [2]";
    return detail;
  });

  // 4. Mackey table for F3 with the trivial involution at truncation 2,
  //    cross-checked against the independent hom-conjugacy enumeration.
  criterion(4, "mackey-table-f3-trivial", 0.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    MackeyK0Report rep = mackey_k0_report(
        make_trivial_gring(make_prime_field(3), make_cyclic_group(2)), 2, b);
    expect(rep.top.k0 == "Z^2", ok, detail, "full-group K0 is Z^2");
    expect(rep.bottom.k0 == "Z^1", ok, detail, "trivial-subgroup K0 is Z");
    expect(rep.res == IntMat{{1, 1}}, ok, detail, "res(a,b) = a+b");
    expect(rep.tr == IntMat{{1}, {1}}, ok, detail, "tr(1) = (1,1)");
    expect(rep.res_tr == IntMat{{2}}, ok, detail, "res.tr = 2");
    expect(rep.mackey_ok, ok, detail, "double-coset identity");
    expect(rep.oracle_checked && rep.oracle_ok, ok, detail,
           "hom-conjugacy oracle agreement");
    if (ok) detail = "K0 = Z^2 -> Z, res [1 1], tr (1,1), oracle agrees";
    return detail;
  });

  // 5. Randomized strictification: >=100 pseudo equivariant functors with
  //    |G| in {2,3} and at most 4 objects.
  criterion(5, "strictification-sample-100", 60.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    auto instances = make_random_pseudo_instances(100, 20240817u);
    int n_equiv = 0;
    for (const auto& inst : instances) {
      if (!expect(validate_pseudo(inst.P, b).ok(), ok, detail,
                  "pseudo data valid (" + inst.family + ")"))
        break;
      Strictified S = strictify(inst.P, b);
      if (!expect(!equivariance_violation(S.TC.out, S.TD.out, S.F).has_value(),
                  ok, detail, "strictified functor equivariant"))
        break;
      if (!inst.is_equivalence) continue;
      ++n_equiv;
      for (const auto& H : inst.P.C.G.subgroups()) {
        HofixCat HC = homotopy_fixed_points(inst.P.C, H, b);
        HofixCat HD = homotopy_fixed_points(inst.P.D, H, b);
        Functor Fh = induced_hofix_map(inst.P, HC, HD);
        if (!expect(check_equivalence(HC.cat, HD.cat, Fh).ok(), ok, detail,
                    "induced fixed-point map an equivalence"))
          break;
      }
      if (!ok) break;
    }
    expect(instances.size() >= 100, ok, detail, ">=100 instances");
    expect(n_equiv >= 1, ok, detail, "equivalence inputs present");
    if (ok)
      detail = "100/100 strictly equivariant, " + std::to_string(n_equiv) +
               " equivalences induce fixed-point equivalences";
    return detail;
  });

  // 6. Group completion of the module tower over F2 truncated at 4.
  criterion(6, "group-completion-pi0", 0.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    GRing gr = make_trivial_gring(make_prime_field(2), make_cyclic_group(1));
    Pi0Monoid M = build_pi0_monoid(gr, {0}, 4, b);
    SInvSPi0 pi = s_inverse_s_pi0(M);
    expect(pi.num_components == 9, ok, detail, "exactly 2N+1 = 9 components");
    expect(pi.oracle_match, ok, detail, "formal-difference oracle agreement");
    bool by_rank = true;
    for (int a = 0; a <= 4 && by_rank; ++a)
      for (int bb = 0; bb <= 4 && by_rank; ++bb)
        for (int c = 0; c <= 4 && by_rank; ++c)
          for (int d = 0; d <= 4 && by_rank; ++d)
            by_rank = (pi.comp_of[a * 5 + bb] == pi.comp_of[c * 5 + d]) ==
                      (a - bb == c - d);
    expect(by_rank, ok, detail, "components classified by rank difference");
    if (ok) detail = "9 components, classified by rank difference";
    return detail;
  });

  // 7. The extension checker separates genuine extensions from trivial
  //    actions.
  criterion(7, "extension-checker-verdicts", 0.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    expect(check_galois(make_galois_gring(2, 2, 1), b).is_galois, ok, detail,
           "F4/F2 accepted");
    expect(check_galois(make_swap_gring(make_prime_field(2)), b).is_galois, ok,
           detail, "F2xF2 swap accepted");
    expect(!check_galois(make_trivial_gring(make_prime_field(2),
                                            make_cyclic_group(2)),
                         b)
                .is_galois,
           ok, detail, "trivial action on F2 rejected");
    GRing f4 = make_galois_gring(2, 2, 1);
    expect(!check_galois(make_trivial_gring(f4.R, make_cyclic_group(2)), b)
                .is_galois,
           ok, detail, "trivial action on F4 rejected");
    if (ok) detail = "true/true/false/false as required";
    return detail;
  });

  // 8. Semilinear descent: one class per rank, extension of scalars
  //    essentially surjective, for both quadratic extensions.
  criterion(8, "semilinear-descent-ranks-1-3", 0.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    auto d4 = descent_report(make_galois_gring(2, 2, 1), 3, b);
    expect(d4.cocycle_counts == std::vector<long long>{3, 30, 1080}, ok,
           detail, "F4/F2 cocycle counts 3/30/1080");
    expect(d4.one_class_per_rank && d4.extension_essentially_surjective, ok,
           detail, "F4/F2 one class per rank + essential surjectivity");
    auto d9 = descent_report(make_galois_gring(3, 2, 1), 3, b);
    expect(d9.cocycle_counts == std::vector<long long>{4, 120, 30240}, ok,
           detail, "F9/F3 cocycle counts 4/120/30240");
    expect(d9.one_class_per_rank && d9.extension_essentially_surjective, ok,
           detail, "F9/F3 one class per rank + essential surjectivity");
    if (ok) detail = "one class per rank at 3/30/1080 and 4/120/30240";
    return detail;
  });

  // 9. The assembly comparison at K0 for F9/F3.
  criterion(9, "assembly-map-k0", 0.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    AssemblyReport a = assembly_map_k0(make_galois_gring(3, 2, 1), 2, b);
    expect(a.source.k0 == "Z^2", ok, detail, "source K0 is Z^2");
    expect(a.target.k0 == "Z^1", ok, detail, "target K0 is Z");
    expect(a.matrix == IntMat{{1, 1}}, ok, detail, "matrix [1 1]");
    expect(a.witness_ok, ok, detail, "categorical witness");
    expect(a.hofix_image_consistent, ok, detail,
           "fixed-point image consistency");
    if (ok) detail = "matrix [1 1] on Z^2 -> Z with categorical witness";
    return detail;
  });

  // 10. Idempotence of the exponential at tiny scale: the unit at an
  //     exponential is an equivalence at every subgroup.
  criterion(10, "exponential-idempotence", 30.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    struct Inst {
      const char* name;
      GCategory C;
    };
    std::vector<Inst> insts;
    insts.push_back({"one-object C2, trivial action", c2_trivial_gcat()});
    insts.push_back({"one-object C3, inversion", c3_inversion_gcat()});
    insts.push_back({"chaotic C2", make_chaotic(make_cyclic_group(2))});
    for (auto& inst : insts) {
      TildeCat T1 = cat_tilde_g(inst.C, b);
      TildeCat T2 = cat_tilde_g(T1.out, b);
      Functor io = iota_functor(T1.out, T2);
      expect(check_weak_g_equivalence_surrogate(T1.out, T2.out, io).ok(), ok,
             detail,
             std::string("unit at the exponential of \"") + inst.name +
                 "\" is an equivalence at every subgroup");
    }
    if (ok) detail = "3 instances, every subgroup row an equivalence";
    return detail;
  });

  // 11. The biconditional between triviality of the twisted classes and
  //     the unit being an equivalence, across the instance battery.
  criterion(11, "unit-equivalence-biconditional", 0.0, [](bool& ok) {
    Budget b = big_budget();
    std::string detail;
    auto battery = h1_battery_instances();
    expect(battery.size() >= 10, ok, detail, "battery of >=10 instances");
    int nontrivial = 0, trivial = 0;
    for (const auto& ni : battery) {
      IotaH1Report rep = iota_equivalence_check(ni.W, b);
      if (!expect(rep.biconditional_holds, ok, detail,
                  "biconditional at " + ni.name))
        break;
      (rep.any_nontrivial_h1 ? nontrivial : trivial) += 1;
    }
    expect(nontrivial >= 1, ok, detail, "nontrivial classes represented");
    expect(trivial >= 1, ok, detail, "trivial classes represented");
    if (ok)
      detail = std::to_string(battery.size()) + " instances, " +
               std::to_string(nontrivial) + " with nontrivial classes";
    return detail;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
