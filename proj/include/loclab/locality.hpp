#pragma once

#include <string>
#include <vector>

#include "loclab/fusion.hpp"
#include "loclab/partial_group.hpp"

namespace loclab {

/// A locality (L, Δ, S): a finite partial group with a distinguished maximal
/// p-subgroup S and object set Δ (subgroups of S, closed under fusion and
/// overgroups) such that D is exactly the set of words conjugating through Δ.
struct Locality {
  PartialGroup pg;
  std::vector<ElemList> delta;  // all members, canonically ordered
  ElemList S;
  int p = 0;
};

/// Canonical ordering for object sets: by order, then lexicographically.
void sort_objects(std::vector<ElemList>& objs);

/// L_Γ(M) = {g ∈ M : S ∩ S^g ∈ Γ} with the product restricted to words that
/// conjugate through Γ. Γ must be a nonempty F_S(M)-closed set of subgroups
/// of S = Syl_p(M); throws gamma-not-closed otherwise.
Locality build_locality_from_group(const FiniteGroup& M, int p,
                                   std::vector<ElemList> gamma);

/// The locality axioms, checked over all words up to `word_len` letters for
/// the D = D_Δ axiom.
AxiomReport check_locality_axioms(const Locality& L, int word_len = 3);

/// L|_{Δ'}: element set {g : S_g ∈ Δ'}, domain D_{Δ'}. Δ' must be a
/// nonempty subset of Δ (throws not-a-subobjectset).
Locality restrict_locality(const Locality& L, std::vector<ElemList> delta_sub);

/// The group table of S inside L, labels = L's element ids.
FiniteGroup sylow_table(const Locality& L);

/// N_L(P) as an honest finite group (throws object-not-in-delta when P ∉ Δ,
/// and fails loudly if the normalizer is not closed under the product).
FiniteGroup normalizer_subgroup(const Locality& L, const ElemList& P);

/// C_L(R) = {f : R ⊆ S_f and r^f = r for all r ∈ R}.
ElemList centralizer_partial(const Locality& L, const ElemList& R);

/// F_S(L), generated by the conjugation maps c_f : S_f → S.
FusionSystem fusion_system_of(const Locality& L);

/// F_{H∩S}(H) for a partial subgroup H, expressed as a subsystem of the
/// given F = fusion_system_of(L) (support in F-local ids).
SubsystemTag fusion_of_partial_subgroup(const Locality& L,
                                        const FusionSystem& F,
                                        const ElemList& H);

/// Translate Δ members (element ids) to F-local subgroups and back.
std::vector<ElemList> delta_in_fusion(const Locality& L, const FusionSystem& F);
ElemList subgroup_to_fusion(const Locality& L, const ElemList& P);
ElemList subgroup_from_fusion(const Locality& L, const ElemList& P_local);

/// F^{cr} ⊆ Δ ⊆ F^s and every N_L(P) of characteristic p.
bool is_proper(const Locality& L);

/// Resolve a named object-set selector over F_S(M): one of "cr-closure",
/// "centric", "quasicentric", "subcentric". Returns Δ members in M's ids.
std::vector<ElemList> delta_from_selector(const FiniteGroup& M, int p,
                                          const std::string& selector);

struct AlperinStep {
  ElemList object;  // Q ∈ Δ normalized by n
  Elem n;
};

/// A word (n_1,…,n_k) ∈ D with Π = f, S_w = S_f, each n_i ∈ N_L(Q_i).
/// Throws decomposition-not-found-within-bound.
std::vector<AlperinStep> alperin_decompose(const Locality& L, Elem f,
                                           int bound = 6);

/// Precomputed lookup tables over local element indices 0..|L|-1.
struct LocalityTables {
  explicit LocalityTables(const Locality& L);
  const Locality& loc;
  ElemList elems;                       // universe ids, sorted
  std::vector<std::vector<int>> conj;   // conj[x][g] local idx or -1
  std::vector<std::vector<int>> prod2;  // prod2[a][b] local idx or -1
  std::vector<std::vector<int>> trans;  // trans[g][obj] obj idx or -1
  std::vector<ElemList> nl;             // N_L(P) per object, local idxs
  int index(Elem universe_id) const;    // -1 if absent
  Elem id(int local) const { return elems[local]; }
  int obj_index(const ElemList& P) const;  // -1 if absent
};

/// The "important properties of localities" suite: parts (b), (c), (d),
/// (f), (g), each checked exhaustively (words up to length 3 where words
/// are quantified).
AxiomReport locality_property_suite(const Locality& L);

/// For each P ∈ Δ there is n ∈ N with P ≤ S_n and N_{T}(P^n) a Sylow
/// p-subgroup of N_N(P^n), where T = N ∩ S.
bool partial_normal_sylow_conj(const Locality& L, const ElemList& N,
                               std::string* witness = nullptr);

/// (N, Γ, T) with Γ = {P ∩ T : P ∈ Δ}, T = N ∩ S: the locality structure a
/// partial normal subgroup inherits.
Locality gamma_delta_locality(const Locality& L, const ElemList& N);

}  // namespace loclab
