#include <catch2/catch_amalgamated.hpp>

#include "hofix/twisted.hpp"

using namespace hofix;

TEST_CASE("twisted group rings satisfy the ring axioms", "[twisted]") {
  // F4 with frobenius C2: 16 elements, checked exhaustively
  TwistedGroupRing T = twisted_group_ring(make_galois_gring(2, 2, 1));
  REQUIRE(T.ring.n == 16);
  T.ring.validate();
  CHECK_FALSE(T.ring.commutative);  // the twist is visible in the ring
}

TEST_CASE("twisted multiplication follows (rg)(sh) = r s^g (gh)", "[twisted]") {
  GRing gr = make_galois_gring(3, 2, 1);
  TwistedGroupRing T = twisted_group_ring(gr);
  for (int r = 0; r < gr.R.n; ++r)
    for (int s = 0; s < gr.R.n; ++s)
      for (int g = 0; g < gr.G.n; ++g)
        for (int h = 0; h < gr.G.n; ++h) {
          int lhs = T.ring.mul(T.basis_elem(r, g), T.basis_elem(s, h));
          int rhs = T.basis_elem(gr.R.mul(r, gr.act(g, s)), gr.G.mul(g, h));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("theta is a bijective ring map for field extensions", "[twisted]") {
  struct Case {
    int p, dt;
    long long size;
  };
  for (auto [p, dt, size] : {Case{2, 2, 16}, Case{3, 2, 81}, Case{2, 3, 512}}) {
    GRing gr = make_galois_gring(p, dt, 1);
    TwistedGroupRing T = twisted_group_ring(gr);
    ThetaReport th = theta_hom(T);
    CHECK(th.ring_hom());
    CHECK(th.fixed_linear);
    CHECK(th.bijective());
    // the ring is the free R-module on G, so it has |R|^|G| elements
    long long free_module_size = 1;
    for (int g = 0; g < gr.G.n; ++g) free_module_size *= gr.R.n;
    CHECK(free_module_size == size);
    CHECK(static_cast<long long>(T.ring.n) == size);
    CHECK(th.end_count == size);
    CHECK(th.module_rank == dt);
  }
}

TEST_CASE("theta is bijective for the coordinate swap", "[twisted]") {
  GRing gr = make_swap_gring(make_prime_field(2));
  ThetaReport th = theta_hom(twisted_group_ring(gr));
  CHECK(th.ring_hom());
  CHECK(th.bijective());
  CHECK(th.end_count == 16);
}

TEST_CASE("theta fails to be bijective for a trivial action", "[twisted]") {
  GRing gr = make_trivial_gring(make_prime_field(2), make_cyclic_group(2));
  ThetaReport th = theta_hom(twisted_group_ring(gr));
  CHECK(th.ring_hom());
  CHECK(th.fixed_linear);
  // source has 4 elements, target End_{F2}(F2) = {0, id} only 2: the two
  // basis elements over the group collapse onto id, so theta is onto but
  // far from injective
  CHECK_FALSE(th.injective);
  CHECK(th.surjective);
  CHECK_FALSE(th.bijective());
  CHECK(th.end_count == 2);
}

TEST_CASE("fixed module rank counts the extension degree", "[twisted]") {
  CHECK(theta_hom(twisted_group_ring(make_galois_gring(2, 2, 1))).module_rank == 2);
  CHECK(theta_hom(twisted_group_ring(make_galois_gring(2, 3, 1))).module_rank == 3);
  // trivial action: R is rank 1 over itself
  GRing tr = make_trivial_gring(make_prime_field(3), make_cyclic_group(2));
  CHECK(theta_hom(twisted_group_ring(tr)).module_rank == 1);
}
