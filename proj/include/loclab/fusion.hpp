#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "loclab/finite_group.hpp"

namespace loclab {

/// An injective group homomorphism between subgroups of S, as an image table:
/// dom is a sorted element list, img[i] is the image of dom[i].
struct Morphism {
  ElemList dom;
  ElemList img;
  bool operator<(const Morphism& o) const {
    return std::tie(dom, img) < std::tie(o.dom, o.img);
  }
  bool operator==(const Morphism& o) const = default;
};

/// A fusion system over the p-group S: for each subgroup P of S the set of
/// injective homomorphisms P -> S in the system, closed under composition,
/// restriction, inversion of isomorphisms, and containing all inner maps.
/// Element ids are local to S (0..|S|-1); S carries labels into whatever
/// ambient universe it came from, which is what cross-system comparison uses.
class FusionSystem {
 public:
  FusionSystem() = default;

  /// Least closure of the seeds plus inner fusion.
  static FusionSystem generate(FiniteGroup S, int p,
                               const std::vector<Morphism>& seeds);

  const FiniteGroup& group() const { return S_; }
  int p() const { return p_; }
  const std::vector<ElemList>& subgroups() const { return subs_; }
  int sub_index(const ElemList& P) const;  // throws not-a-subgroup

  /// Image tables of Hom(P, S), each aligned with the sorted P.
  const std::set<ElemList>& hom_images(const ElemList& P) const;
  /// Homs P -> S with image inside Q.
  std::vector<ElemList> homs_into(const ElemList& P, const ElemList& Q) const;
  /// Automorphism image tables of P.
  std::vector<ElemList> auts(const ElemList& P) const;
  /// Aut_F(P) as a finite group; labels index into the list returned by
  /// auts(P).
  FiniteGroup aut_group(const ElemList& P) const;
  /// Indices (into auts(P)) of the inner automorphisms c_x, x in P.
  ElemList inner_aut_ids(const ElemList& P) const;
  /// Indices of the automorphisms c_s, s in N_S(P).
  ElemList s_aut_ids(const ElemList& P) const;

  std::vector<ElemList> conjugacy_class(const ElemList& P) const;
  bool is_conjugate(const ElemList& P, const ElemList& Q) const;
  bool fully_normalized(const ElemList& P) const;
  bool fully_centralized(const ElemList& P) const;
  /// Canonical fully normalized representative of P's class: maximal
  /// normalizer order, ties broken by canonical subgroup order.
  ElemList fully_normalized_rep(const ElemList& P) const;

  /// All morphisms of the system, translated to label space: (sorted dom
  /// labels, aligned img labels). Extensional identity of the system.
  std::set<Morphism> label_key() const;
  bool same_system(const FusionSystem& other) const;

  /// Number of morphisms in the system (over all domains).
  long morphism_count() const;

 private:
  FiniteGroup S_;
  int p_ = 0;
  std::vector<ElemList> subs_;
  std::vector<std::set<ElemList>> homs_;
};

/// F_S(G): S = G.sylow(p) as a subgroup table, seeds = all conjugation maps.
FusionSystem fusion_of_group(const FiniteGroup& G, int p);
/// Inner-only system F_T(T) over an arbitrary p-group table.
FusionSystem inner_fusion(FiniteGroup T, int p);

struct SaturationReport {
  bool saturated = true;
  std::string witness;
};
SaturationReport saturation_report(const FusionSystem& F);
bool is_saturated(const FusionSystem& F);

struct SubgroupClasses {
  std::vector<ElemList> centric, radical, centric_radical, quasicentric,
      subcentric;
};
/// The class chain data; throws not-saturated.
SubgroupClasses subgroup_classes(const FusionSystem& F);

bool is_strongly_closed(const FusionSystem& F, const ElemList& T);
bool is_F_closed(const FusionSystem& F, const std::vector<ElemList>& delta);
/// Closure of `members` under F-conjugacy and overgroups in S.
std::vector<ElemList> f_closure(const FusionSystem& F,
                                const std::vector<ElemList>& members);

/// C_F(X): system over C_S(X) generated by restrictions of F-morphisms that
/// fix X pointwise.
FusionSystem centralizer_system(const FusionSystem& F, const ElemList& X);
/// N_F(P): system over N_S(P) generated by restrictions of F-morphisms whose
/// domain contains P and which map P onto P. Throws not-fully-normalized.
FusionSystem local_subsystem(const FusionSystem& F, const ElemList& P);

/// O_p(F): largest subgroup U with N_F(U) = F.
ElemList o_p_of(const FusionSystem& F);

/// A subsystem of F: a fusion system over the subgroup table of its support
/// T <= S; the sub-table inherits S's ambient labels, which is what ties the
/// two systems together.
struct SubsystemTag {
  ElemList support;   // in F-local ids
  FusionSystem sys;   // over the subgroup table of support
};

/// Translate an E-subgroup (E-local ids) to F-local ids via labels.
ElemList lift_subgroup(const FusionSystem& F, const FusionSystem& E,
                       const ElemList& P);

bool is_normal_subsystem(const FusionSystem& F, const SubsystemTag& E);

/// Z(E): largest X <= T with every E-morphism extending within E to one
/// fixing X pointwise. Returned in E-local ids.
ElemList center_of(const FusionSystem& E);
/// C_S(E): largest X <= C_S(T) with E <= C_F(X). In F-local ids.
ElemList cs_of_subsystem(const FusionSystem& F, const SubsystemTag& E);

}  // namespace loclab
