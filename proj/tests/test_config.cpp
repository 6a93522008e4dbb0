#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "hofix/config.hpp"
#include "hofix/suite.hpp"

using namespace hofix;

namespace {

std::string err_of(const std::string& text) {
  try {
    resolve_config(parse_config_text(text));
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "(no error)";
}

const CheckResult& by_name(const std::vector<CheckResult>& rs,
                           const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  FAIL("missing check " << name);
  static CheckResult none;
  return none;
}

long long num_of(const CheckResult& r, const std::string& key) {
  for (const auto& [k, v] : r.numbers)
    if (k == key) return v;
  return -999;
}

std::string text_of(const CheckResult& r, const std::string& key) {
  for (const auto& [k, v] : r.texts)
    if (k == key) return v;
  return "(missing)";
}

}  // namespace

TEST_CASE("presets resolve to the advertised instances", "[config]") {
  CHECK(preset_names().size() == 7u);

  InstanceSpec f4 = make_preset("f4-c2");
  CHECK(f4.gr.R.n == 4);
  CHECK(f4.gr.G.n == 2);
  CHECK(f4.budget.max_ops == 4'000'000'000LL);
  CHECK(f4.budget.max_objects == 10'000'000LL);

  CHECK(make_preset("f8-c3").gr.R.n == 8);
  CHECK(make_preset("f8-c3").gr.G.n == 3);
  CHECK(make_preset("f9-c2").gr.R.n == 9);
  CHECK(make_preset("f2-c1").gr.G.n == 1);
  CHECK(make_preset("f2-c2-trivial").gr.R.n == 2);

  // the swap preset genuinely moves ring elements
  InstanceSpec sw = make_preset("f2x2-c2-swap");
  CHECK(sw.gr.R.n == 4);
  bool moved = false;
  for (int r = 0; r < sw.gr.R.n; ++r)
    if (sw.gr.act(1, r) != r) moved = true;
  CHECK(moved);

  // the trivial preset moves nothing
  InstanceSpec tr = make_preset("f3-c2-trivial");
  for (int r = 0; r < 3; ++r) CHECK(tr.gr.act(1, r) == r);

  CHECK_THROWS_MATCHES(make_preset("nope"), ConfigError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring(
                               "unknown preset 'nope'") &&
                           Catch::Matchers::ContainsSubstring("f4-c2")));
}

TEST_CASE("config errors carry one-based line and column positions",
          "[config]") {
  using Catch::Matchers::ContainsSubstring;
  auto has = [](const std::string& s, const std::string& sub) {
    return s.find(sub) != std::string::npos;
  };

  CHECK(has(err_of("[group\nkind = cyclic\n"),
            "line 1, column 6: section header is missing the closing bracket"));
  CHECK(has(err_of("kind = cyclic\n"),
            "line 1, column 1: key outside of any section"));
  CHECK(has(err_of("[group]\nkind = cyclic\nkind = cyclic\n"),
            "line 3, column 1: duplicate key 'kind'"));
  CHECK(has(err_of("[group]\n[group]\n"), "line 2, column 1: duplicate section"));
  CHECK(has(err_of("[group]\nkind\n"), "line 2, column 1: expected key = value"));
  CHECK(has(err_of("[group]\nkind =\n"), "empty value for key 'kind'"));
  CHECK(has(err_of("[]\n"), "line 1, column 1: empty section name"));
  CHECK(has(err_of("[group]\nkind = dihedral\n"),
            "line 2, column 8: unknown group kind 'dihedral'"));
  CHECK(has(err_of("[group]\nkind = cyclic\norder = x\n"),
            "line 3, column 9: value of 'order' must be a nonnegative integer"));
  CHECK(has(err_of("[group]\nkind = cyclic\norder = 2\nextra = 1\n"
                   "[ring]\nkind = field\np = 2\n[action]\nkind = trivial\n"),
            "line 4, column 1: unknown key 'extra' in section [group]"));
  CHECK(has(err_of("[group]\nkind = cyclic\norder = 2\n"),
            "missing required section [ring]"));
  CHECK(has(err_of("[group]\nkind = cyclic\norder = 2\n[ring]\nkind = field\n"
                   "p = 2\n[action]\nkind = galois\nsubfield_degree = 1\n"),
            "galois action needs a cyclic group of order 1"));
  // p = 4 is rejected by the field builder, at the position of the value
  CHECK(has(err_of("[group]\nkind = cyclic\norder = 2\n[ring]\nkind = field\n"
                   "p = 4\n[action]\nkind = trivial\n"),
            "line 6, column 5:"));
  CHECK(has(err_of("[weird]\nx = 1\n"), "line 1, column 1: unknown section [weird]"));
  CHECK(has(err_of("  # comment only\n"), "missing required section [group]"));
}

TEST_CASE("comments, whitespace, and budget overrides parse", "[config]") {
  ConfigFile cf = parse_config_text(
      "# instance\n[group]\n  kind = cyclic   # the group\n  order = 2\n"
      "[ring]\nkind = field\np = 2\ndegree = 2\n"
      "[action]\nkind = galois\nsubfield_degree = 1\n"
      "[budgets]\nmax_ops = 123456\n");
  InstanceSpec s = resolve_config(cf, "inline");
  CHECK(s.name == "inline");
  CHECK(s.gr.R.n == 4);
  CHECK(s.budget.max_ops == 123456);
  CHECK(s.budget.max_objects == 1'000'000);  // untouched default
}

TEST_CASE("the full suite passes on the quadratic extension of F2 at rank 3",
          "[config][suite]") {
  InstanceSpec s = make_preset("f4-c2");
  auto rs = run_suite(s, 3, 1234);
  REQUIRE(rs.size() == 8u);
  for (const auto& r : rs) {
    CAPTURE(r.name, r.detail);
    CHECK(r.ok);
    CHECK_FALSE(r.skipped);
  }

  const auto& th = by_name(rs, "theta-identification");
  CHECK(num_of(th, "twisted_ring_size") == 8);
  CHECK(num_of(th, "endomorphism_count") == 16);
  CHECK(text_of(th, "bijective") == "true");
  CHECK(text_of(th, "galois") == "true");

  const auto& ga = by_name(rs, "galois-condition");
  CHECK(num_of(ga, "degree") == 2);
  CHECK(num_of(ga, "tensor_size") == 16);
  CHECK(num_of(ga, "image_size") == 16);

  const auto& sl = by_name(rs, "semilinear-classes");
  CHECK(num_of(sl, "rank_1_cocycles") == 3);
  CHECK(num_of(sl, "rank_1_classes") == 1);
  CHECK(num_of(sl, "rank_2_cocycles") == 30);
  CHECK(num_of(sl, "rank_2_classes") == 1);
  CHECK(num_of(sl, "rank_3_cocycles") == 1080);
  CHECK(num_of(sl, "rank_3_classes") == 1);

  const auto& hd = by_name(rs, "homotopy-descent");
  CHECK(num_of(hd, "hofix_components") == 2);  // rank 0 plus one rank-1 class

  const auto& mk = by_name(rs, "mackey-k0");
  CHECK(text_of(mk, "k0_full_group") == "Z^1");
  CHECK(text_of(mk, "k0_trivial_subgroup") == "Z^1");
  CHECK(text_of(mk, "res") == "[1]");
  CHECK(text_of(mk, "tr") == "[2]");
  CHECK(text_of(mk, "mackey_identity") == "true");

  const auto& cp = by_name(rs, "completion-pi0");
  CHECK(num_of(cp, "trivial_subgroup_components") == 7);  // 2N+1 at N=3
  CHECK(num_of(cp, "full_group_components") == 7);

  const auto& io = by_name(rs, "iota-h1-units");
  CHECK(num_of(io, "subgroups") == 2);
  CHECK(text_of(io, "biconditional") == "holds");

  const auto& st = by_name(rs, "strictification-sample");
  CHECK(num_of(st, "instances") == 12);
}

TEST_CASE("the suite separates the trivial involution on F3 from an extension",
          "[config][suite]") {
  InstanceSpec s = make_preset("f3-c2-trivial");
  auto rs = run_suite(s, 2, 7);
  for (const auto& r : rs) {
    CAPTURE(r.name, r.detail);
    CHECK(r.ok);
  }

  const auto& th = by_name(rs, "theta-identification");
  CHECK(text_of(th, "bijective") == "false");
  CHECK(text_of(th, "galois") == "false");

  const auto& sl = by_name(rs, "semilinear-classes");
  CHECK(num_of(sl, "rank_1_cocycles") == 2);
  CHECK(num_of(sl, "rank_1_classes") == 2);
  CHECK(num_of(sl, "rank_2_cocycles") == 14);
  CHECK(num_of(sl, "rank_2_classes") == 3);

  const auto& hd = by_name(rs, "homotopy-descent");
  CHECK(num_of(hd, "hofix_components") == 3);

  const auto& mk = by_name(rs, "mackey-k0");
  CHECK(text_of(mk, "k0_full_group") == "Z^2");
  CHECK(text_of(mk, "hom_oracle") == "agrees");
  CHECK(text_of(mk, "res") == "[1 1]");
  CHECK(text_of(mk, "tr") == "[1; 1]");

  const auto& cp = by_name(rs, "completion-pi0");
  CHECK(num_of(cp, "trivial_subgroup_components") == 5);
  CHECK(num_of(cp, "full_group_components") == 19);
}

TEST_CASE("the degenerate one-element group stays coherent", "[config][suite]") {
  InstanceSpec s = make_preset("f2-c1");
  auto rs = run_suite(s, 2, 7);
  for (const auto& r : rs) {
    CAPTURE(r.name, r.detail);
    CHECK(r.ok);
  }
  const auto& th = by_name(rs, "theta-identification");
  CHECK(text_of(th, "bijective") == "true");
  CHECK(text_of(th, "galois") == "true");
}

TEST_CASE("the cubic extension skips out-of-reach ranks loudly and exactly",
          "[config][suite]") {
  InstanceSpec s = make_preset("f8-c3");
  Budget b = s.budget;

  CheckResult sl = check_semilinear_classes(s.gr, 3, b);
  CHECK(sl.ok);
  CHECK(num_of(sl, "rank_1_cocycles") == 7);
  CHECK(num_of(sl, "rank_1_classes") == 1);
  CHECK(num_of(sl, "rank_2_cocycles") == 588);
  CHECK(num_of(sl, "rank_2_classes") == 1);
  // rank 3 entries are absent, replaced by an explicit skip notice
  CHECK(num_of(sl, "rank_3_cocycles") == -999);
  CHECK(text_of(sl, "rank_3").find(
            "skipped: semilinear enumeration out of reach") !=
        std::string::npos);

  CheckResult hd = check_homotopy_descent(s.gr, b);
  CHECK(hd.ok);
  CHECK(num_of(hd, "hofix_components") == 2);
}
