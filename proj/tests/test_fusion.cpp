#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loclab/fusion.hpp"
#include "loclab/group_io.hpp"

using namespace loclab;

static PermGroup load(const std::string& name) {
  return load_group_file(std::string(LOCLAB_DATA_DIR) + "/groups/" + name + ".grp");
}

// Independent description of F_S(G): every morphism P -> S is the restriction
// of a conjugation map c_g with P^g <= S.
static std::set<Morphism> group_fusion_oracle(const FiniteGroup& G, int p) {
  ElemList S = G.sylow(p);
  FiniteGroup ST = G.subgroup_table(S);
  std::set<Morphism> key;
  for (const ElemList& P : ST.subgroups()) {
    ElemList Pg;  // in G ids
    for (Elem i : P) Pg.push_back(ST.label(i));
    std::sort(Pg.begin(), Pg.end());
    for (int g = 0; g < G.order(); ++g) {
      std::vector<std::pair<Elem, Elem>> pairs;
      bool inside = true;
      for (Elem x : Pg) {
        Elem y = G.conj(x, g);
        if (!contains(S, y)) {
          inside = false;
          break;
        }
        pairs.emplace_back(x, y);
      }
      if (!inside) continue;
      std::sort(pairs.begin(), pairs.end());
      Morphism m;
      for (auto& [d, v] : pairs) {
        m.dom.push_back(d);
        m.img.push_back(v);
      }
      key.insert(std::move(m));
    }
  }
  return key;
}

// E = F_{T}(N) for a subgroup N of the ambient group underlying F, with
// T = N ∩ S; built directly from conjugation maps, in F-local coordinates.
static SubsystemTag subsystem_from_subgroup(const FusionSystem& F,
                                            const FiniteGroup& G,
                                            const ElemList& N_in_G) {
  const FiniteGroup& ST = F.group();
  ElemList T;  // F-local
  for (int i = 0; i < ST.order(); ++i)
    if (contains(N_in_G, ST.label(i))) T.push_back(i);
  FiniteGroup TT = ST.subgroup_table(T);
  std::vector<Morphism> seeds;
  for (Elem n : N_in_G) {
    // c_n on T ∩ T^{n^-1}
    std::vector<std::pair<Elem, Elem>> pairs;
    for (size_t k = 0; k < T.size(); ++k) {
      Elem y = G.conj(ST.label(T[k]), n);
      for (size_t j = 0; j < T.size(); ++j)
        if (ST.label(T[j]) == y) {
          pairs.emplace_back(static_cast<Elem>(k), static_cast<Elem>(j));
          break;
        }
    }
    std::sort(pairs.begin(), pairs.end());
    Morphism m;
    for (auto& [d, v] : pairs) {
      m.dom.push_back(d);
      m.img.push_back(v);
    }
    seeds.push_back(std::move(m));
  }
  return SubsystemTag{T, FusionSystem::generate(std::move(TT), F.p(), seeds)};
}

TEST_CASE("closure engine matches the direct description of F_S(G)") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{
           {"s4", 2}, {"a4", 2}, {"sl23", 2}, {"d8", 2}, {"q8", 2},
           {"gd18", 3}, {"c2xs3", 2}}) {
    PermGroup G = load(name);
    FusionSystem F = fusion_of_group(G.table(), p);
    CHECK(F.label_key() == group_fusion_oracle(G.table(), p));
  }
}

TEST_CASE("generation is idempotent") {
  PermGroup s4 = load("s4");
  FusionSystem F = fusion_of_group(s4.table(), 2);
  std::vector<Morphism> all;
  for (const ElemList& P : F.subgroups())
    for (const ElemList& img : F.hom_images(P)) all.push_back({P, img});
  FusionSystem F2 = FusionSystem::generate(F.group(), 2, all);
  CHECK(F.same_system(F2));
}

TEST_CASE("saturation") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{
           {"s4", 2}, {"a4", 2}, {"sl23", 2}, {"d8", 2}, {"q8", 2},
           {"gd18", 3}, {"c2xs3", 2}}) {
    PermGroup G = load(name);
    CHECK(is_saturated(fusion_of_group(G.table(), p)));
  }
  // V4 with a single transposition-like outer automorphism is not saturated:
  // Aut_F(S) has order 2 but Aut_S(S) is trivial
  PermGroup v4 = PermGroup(4, {Perm::from_cycles("(1 2)(3 4)", 4),
                               Perm::from_cycles("(1 3)(2 4)", 4)});
  FiniteGroup T = v4.table();
  ElemList S = T.all_elements();
  Elem a = S[1], b = S[2], c = S[3];
  Morphism swap{{0, a, b, c}, {0, b, a, c}};
  if (T.mul(a, b) != c) swap = Morphism{{0, a, b, c}, {0, a, c, b}};
  FusionSystem bad = FusionSystem::generate(T, 2, {swap});
  CHECK_FALSE(is_saturated(bad));
  CHECK_FALSE(saturation_report(bad).witness.empty());
}

TEST_CASE("subgroup classes of F_{D8}(S4)") {
  PermGroup s4 = load("s4");
  FusionSystem F = fusion_of_group(s4.table(), 2);
  const FiniteGroup& ST = F.group();
  ElemList S_full;
  for (int i = 0; i < ST.order(); ++i) S_full.push_back(i);
  // the normal V4 of S4 inside S, in F-local ids
  ElemList v4g = normal_subgroups(s4)[1];
  ElemList v4;
  for (int i = 0; i < ST.order(); ++i)
    if (contains(v4g, ST.label(i))) v4.push_back(i);

  SubgroupClasses cls = subgroup_classes(F);
  auto has = [](const std::vector<ElemList>& v, const ElemList& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  CHECK(has(cls.centric, S_full));
  CHECK(has(cls.centric_radical, v4));
  // chain F^cr ⊆ F^c ⊆ F^q ⊆ F^s
  for (const ElemList& P : cls.centric_radical) CHECK(has(cls.centric, P));
  for (const ElemList& P : cls.centric) CHECK(has(cls.quasicentric, P));
  for (const ElemList& P : cls.quasicentric) CHECK(has(cls.subcentric, P));
  // S4 has characteristic 2, so every subgroup of S is subcentric, while the
  // trivial subgroup is not quasicentric (F has non-inner fusion)
  CHECK(cls.subcentric.size() == F.subgroups().size());
  CHECK_FALSE(has(cls.quasicentric, ElemList{ST.identity()}));
}

TEST_CASE("chain holds across the battery") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{
           {"a4", 2}, {"sl23", 2}, {"q8", 2}, {"gd18", 3}, {"c2xs3", 2}}) {
    PermGroup G = load(name);
    FusionSystem F = fusion_of_group(G.table(), p);
    SubgroupClasses cls = subgroup_classes(F);
    auto has = [](const std::vector<ElemList>& v, const ElemList& x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    };
    for (const ElemList& P : cls.centric_radical) CHECK(has(cls.centric, P));
    for (const ElemList& P : cls.centric) CHECK(has(cls.quasicentric, P));
    for (const ElemList& P : cls.quasicentric) CHECK(has(cls.subcentric, P));
  }
}

TEST_CASE("strong closure") {
  PermGroup s4 = load("s4");
  FusionSystem F = fusion_of_group(s4.table(), 2);
  const FiniteGroup& ST = F.group();
  ElemList S_full;
  for (int i = 0; i < ST.order(); ++i) S_full.push_back(i);
  CHECK(is_strongly_closed(F, S_full));
  ElemList v4g = normal_subgroups(s4)[1];
  ElemList v4;
  for (int i = 0; i < ST.order(); ++i)
    if (contains(v4g, ST.label(i))) v4.push_back(i);
  CHECK(is_strongly_closed(F, v4));
  // a subgroup generated by a transposition is moved off itself
  bool found_unclosed = false;
  for (const ElemList& P : F.subgroups())
    if (P.size() == 2 && !is_subset(P, v4) && !is_strongly_closed(F, P))
      found_unclosed = true;
  CHECK(found_unclosed);
}

TEST_CASE("O_p of a fusion system") {
  PermGroup s4 = load("s4");
  FusionSystem F = fusion_of_group(s4.table(), 2);
  CHECK(o_p_of(F).size() == 4);
  PermGroup d8 = load("d8");
  FusionSystem FD = fusion_of_group(d8.table(), 2);
  CHECK(o_p_of(FD).size() == 8);
}

TEST_CASE("normal subsystems in F_{D8}(S4)") {
  PermGroup s4 = load("s4");
  FusionSystem F = fusion_of_group(s4.table(), 2);
  auto ns = normal_subgroups(s4);  // 1, V4, A4, S4

  // E = F over T = S
  SubsystemTag whole = subsystem_from_subgroup(F, s4.table(), ns[3]);
  CHECK(whole.sys.same_system(F));
  CHECK(is_normal_subsystem(F, whole));

  // E = F_{V4}(A4)
  SubsystemTag e_a4 = subsystem_from_subgroup(F, s4.table(), ns[2]);
  CHECK(e_a4.support.size() == 4);
  CHECK(is_normal_subsystem(F, e_a4));

  // E = F_{V4}(V4): inner fusion of abelian V4 is trivially invariant
  SubsystemTag e_v4 = subsystem_from_subgroup(F, s4.table(), ns[1]);
  CHECK(e_v4.sys.morphism_count() == 5);  // identities only
  CHECK(is_normal_subsystem(F, e_v4));

  // E = trivial system over 1
  SubsystemTag e_1 = subsystem_from_subgroup(F, s4.table(), ns[0]);
  CHECK(is_normal_subsystem(F, e_1));
}

TEST_CASE("centers and centralizers of subsystems") {
  PermGroup s4 = load("s4");
  FusionSystem F = fusion_of_group(s4.table(), 2);
  auto ns = normal_subgroups(s4);

  PermGroup d8 = load("d8");
  FusionSystem FD = fusion_of_group(d8.table(), 2);
  CHECK(center_of(FD) == d8.table().center());

  SubsystemTag e_a4 = subsystem_from_subgroup(F, s4.table(), ns[2]);
  CHECK(center_of(e_a4.sys).size() == 1);
  // Z(F_{D8}(S4)) = 1: the S4-fusion moves every involution of Z(D8)
  SubsystemTag whole = subsystem_from_subgroup(F, s4.table(), ns[3]);
  CHECK(center_of(whole.sys).size() == 1);

  // C_S(E) ∩ T = Z(E) spot checks
  for (const ElemList& N : ns) {
    SubsystemTag E = subsystem_from_subgroup(F, s4.table(), N);
    ElemList cs = cs_of_subsystem(F, E);
    ElemList z = lift_subgroup(F, E.sys, center_of(E.sys));
    CHECK(set_intersect(cs, E.support) == z);
  }
}

TEST_CASE("local subsystem N_F(P)") {
  PermGroup s4 = load("s4");
  FusionSystem F = fusion_of_group(s4.table(), 2);
  const FiniteGroup& ST = F.group();
  ElemList v4g = normal_subgroups(s4)[1];
  ElemList v4;
  for (int i = 0; i < ST.order(); ++i)
    if (contains(v4g, ST.label(i))) v4.push_back(i);
  // V4 is normal in S4, so N_F(V4) = F
  CHECK(local_subsystem(F, v4).same_system(F));
  ElemList S_full;
  for (int i = 0; i < ST.order(); ++i) S_full.push_back(i);
  FusionSystem NS = local_subsystem(F, S_full);
  CHECK(NS.group().order() == 8);
}
