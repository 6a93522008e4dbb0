#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "hofix/config.hpp"
#include "hofix/galois.hpp"
#include "hofix/twisted.hpp"

using namespace hofix;

namespace {

Budget big_budget() {
  Budget b;
  b.max_ops = 4'000'000'000LL;
  b.max_objects = 10'000'000;
  return b;
}

}  // namespace

TEST_CASE("the bijectivity checker certifies genuine extensions", "[galois]") {
  Budget b = big_budget();

  auto r4 = check_galois(make_galois_gring(2, 2, 1), b);
  CHECK(r4.is_galois);
  CHECK(r4.degree == 2);
  CHECK(r4.tensor_size == 16);
  CHECK(r4.image_size == 16);
  CHECK(r4.target_size == 16);

  auto r9 = check_galois(make_galois_gring(3, 2, 1), b);
  CHECK(r9.is_galois);
  CHECK(r9.degree == 2);
  CHECK(r9.tensor_size == 81);
  CHECK(r9.target_size == 81);

  auto r8 = check_galois(make_galois_gring(2, 3, 1), b);
  CHECK(r8.is_galois);
  CHECK(r8.degree == 3);
  CHECK(r8.tensor_size == 512);
  CHECK(r8.target_size == 512);

  // the split quadratic algebra with the factor swap is also an extension
  auto rs = check_galois(make_swap_gring(make_prime_field(2)), b);
  CHECK(rs.is_galois);
  CHECK(rs.degree == 2);
  CHECK(rs.tensor_size == 16);
  CHECK(rs.target_size == 16);
}

TEST_CASE("trivial actions fail the bijectivity check by counting", "[galois]") {
  Budget b = big_budget();

  auto r2 = check_galois(
      make_trivial_gring(make_prime_field(2), make_cyclic_group(2)), b);
  CHECK_FALSE(r2.is_galois);
  CHECK(r2.tensor_size == 2);
  CHECK(r2.target_size == 4);

  GRing f4 = make_galois_gring(2, 2, 1);
  auto r4 = check_galois(make_trivial_gring(f4.R, make_cyclic_group(2)), b);
  CHECK_FALSE(r4.is_galois);
  CHECK(r4.tensor_size == 4);
  CHECK(r4.target_size == 16);
}

TEST_CASE("module descent over field extensions has one class per rank",
          "[galois]") {
  Budget b = big_budget();

  auto d4 = descent_report(make_galois_gring(2, 2, 1), 3, b);
  CHECK(d4.cocycle_counts == std::vector<long long>{3, 30, 1080});
  CHECK(d4.classes_per_rank == std::vector<int>{1, 1, 1});
  CHECK(d4.one_class_per_rank);
  CHECK(d4.extension_essentially_surjective);

  auto d9 = descent_report(make_galois_gring(3, 2, 1), 3, b);
  CHECK(d9.cocycle_counts == std::vector<long long>{4, 120, 30240});
  CHECK(d9.classes_per_rank == std::vector<int>{1, 1, 1});
  CHECK(d9.one_class_per_rank);
  CHECK(d9.extension_essentially_surjective);
}

TEST_CASE("descent fails loudly when the extension condition does not hold",
          "[galois]") {
  Budget b = big_budget();
  auto d = descent_report(
      make_trivial_gring(make_prime_field(3), make_cyclic_group(2)), 2, b);
  CHECK_FALSE(d.one_class_per_rank);
  CHECK_FALSE(d.extension_essentially_surjective);
  CHECK(d.classes_per_rank == std::vector<int>{2, 3});
}

TEST_CASE("module classes over the extension mirror the fixed ring",
          "[galois]") {
  Budget b = big_budget();
  auto r = k0_galois_report(make_galois_gring(2, 2, 1), 2, b);
  CHECK(r.galois.is_galois);
  CHECK(r.descent.one_class_per_rank);
  CHECK(r.k0_matches);
  CHECK(r.semilinear_row.indec_ranks == std::vector<int>{1});
  CHECK(r.base_row.indec_ranks == std::vector<int>{1});
}

TEST_CASE("assembly comparison with invertible group order", "[galois]") {
  Budget b = big_budget();
  AssemblyReport a = assembly_map_k0(make_galois_gring(3, 2, 1), 2, b);
  CHECK(a.source.k0 == "Z^2");
  CHECK(a.target.k0 == "Z^1");
  CHECK(a.matrix == IntMat{{1, 1}});
  CHECK(a.witness_ok);
  CHECK(a.hofix_image_consistent);
}

TEST_CASE("assembly refuses a non-invertible group order as a configuration "
          "matter",
          "[galois]") {
  Budget b = big_budget();
  CHECK_THROWS_MATCHES(
      assembly_map_k0(make_galois_gring(2, 2, 1), 2, b), ConfigError,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("not invertible")));
}

TEST_CASE("endomorphism identification and the bijectivity checker agree on "
          "every preset",
          "[galois]") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    Budget b = big_budget();
    InstanceSpec spec = make_preset(name);
    ThetaReport th = theta_hom(twisted_group_ring(spec.gr));
    GaloisCheckReport ga = check_galois(spec.gr, b);
    CHECK(th.bijective() == ga.is_galois);
  }
}
