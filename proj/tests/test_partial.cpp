#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loclab/group_io.hpp"
#include "loclab/partial_group.hpp"

using namespace loclab;

static PermGroup load(const std::string& name) {
  return load_group_file(std::string(LOCLAB_DATA_DIR) + "/groups/" + name + ".grp");
}

TEST_CASE("a whole group is a partial group") {
  PermGroup s4 = load("s4");
  auto G = std::make_shared<const FiniteGroup>(s4.table());
  PartialGroup L = partial_group_from_group(G);

  CHECK(L.product({}) == G->identity());
  CHECK(L.product({3, 5}) == G->mul(3, 5));
  AxiomReport rep = check_partial_group_axioms(L, 3);
  CHECK(rep.all_pass());

  // conjugation agrees with the group's
  for (int x = 0; x < 8; ++x)
    for (int g = 0; g < 8; ++g) CHECK(L.conjugate(x, g) == G->conj(x, g));
  CHECK(L.d_of(5) == G->all_elements());
}

TEST_CASE("corrupted product fails the axiom check with a witness") {
  PermGroup d8 = load("d8");
  auto G = std::make_shared<const FiniteGroup>(d8.table());
  PartialGroup good = partial_group_from_group(G);
  // break one binary product
  auto eval = [G](const Word& w) -> std::optional<Elem> {
    if (w.size() == 2 && w[0] == 1 && w[1] == 2) return G->identity();
    return G->mul_word(w);
  };
  PartialGroup bad(G->all_elements(), G->identity(),
                   [G](Elem f) { return G->inv(f); }, eval);
  AxiomReport rep = check_partial_group_axioms(bad, 3);
  CHECK_FALSE(rep.all_pass());
  bool has_witness = false;
  for (const auto& c : rep.checks)
    if (!c.pass && !c.witness.empty()) has_witness = true;
  CHECK(has_witness);
}

TEST_CASE("partial subgroups and normality in the group case") {
  PermGroup s4 = load("s4");
  auto G = std::make_shared<const FiniteGroup>(s4.table());
  PartialGroup L = partial_group_from_group(G);
  auto ns = G->normal_subgroups();

  CHECK(is_partial_subgroup(L, ns[2]));
  CHECK(is_partial_normal(L, ns[2]));  // A4
  CHECK(is_partial_normal(L, {G->identity()}));
  CHECK(is_partial_normal(L, G->all_elements()));

  ElemList d8 = G->sylow(2);
  CHECK(is_partial_subgroup(L, d8));
  CHECK_FALSE(is_partial_normal(L, d8));

  CHECK_THROWS_AS(is_partial_normal(L, ElemList{3}), Error);
}

TEST_CASE("closure in the group case equals group closure") {
  PermGroup s4 = load("s4");
  auto G = std::make_shared<const FiniteGroup>(s4.table());
  PartialGroup L = partial_group_from_group(G);
  CHECK(partial_subgroup_closure(L, {}) == ElemList{G->identity()});
  for (int g = 0; g < G->order(); g += 5)
    CHECK(partial_subgroup_closure(L, {g}) == G->closure({g}));
  CHECK(partial_subgroup_closure(L, G->all_elements()) == G->all_elements());
}

TEST_CASE("s_sub_g and restriction") {
  PermGroup s4 = load("s4");
  auto G = std::make_shared<const FiniteGroup>(s4.table());
  PartialGroup L = partial_group_from_group(G);
  ElemList S = G->sylow(2);
  CHECK(L.s_sub_g(S, G->identity()) == S);
  for (int g = 0; g < G->order(); ++g) {
    // in the full group, S_g = S ∩ S^{g^-1}
    ElemList expect =
        set_intersect(S, G->conjugate_subgroup(S, G->inv(g)));
    CHECK(L.s_sub_g(S, g) == expect);
  }

  ElemList a4 = G->normal_subgroups()[2];
  PartialGroup A = L.restrict_to(a4);
  CHECK(A.size() == 12);
  CHECK(check_partial_group_axioms(A, 3).all_pass());
  ElemList outside = set_difference(S, a4);
  REQUIRE_FALSE(outside.empty());
  CHECK_FALSE(A.in_domain({outside[0]}));
}
