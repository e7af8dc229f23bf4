#include "loclab/fusion.hpp"

#include <deque>

namespace loclab {

namespace {

int pos_in(const ElemList& s, Elem x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) throw Error("internal", "element not in sorted list");
  return static_cast<int>(it - s.begin());
}

ElemList image_set(const ElemList& img) {
  ElemList s = img;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

int FusionSystem::sub_index(const ElemList& P) const {
  for (size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i] == P) return static_cast<int>(i);
  throw Error("not-a-subgroup", "subgroup " + list_to_string(P) +
                                    " is not in the lattice of S");
}

FusionSystem FusionSystem::generate(FiniteGroup S, int p,
                                    const std::vector<Morphism>& seeds) {
  FusionSystem F;
  F.S_ = std::move(S);
  F.p_ = p;
  F.subs_ = F.S_.subgroups();
  F.homs_.assign(F.subs_.size(), {});

  // morphisms grouped by their image subgroup, for composition closure
  std::vector<std::vector<std::pair<int, ElemList>>> by_image(F.subs_.size());
  std::deque<std::pair<int, ElemList>> pending;
  auto add = [&](int idx, const ElemList& img) {
    if (F.homs_[idx].insert(img).second) pending.emplace_back(idx, img);
  };

  for (size_t i = 0; i < F.subs_.size(); ++i) {
    const ElemList& P = F.subs_[i];
    for (int s = 0; s < F.S_.order(); ++s) {
      ElemList img(P.size());
      for (size_t k = 0; k < P.size(); ++k) img[k] = F.S_.conj(P[k], s);
      add(static_cast<int>(i), img);
    }
  }
  for (const Morphism& m : seeds) {
    int idx = F.sub_index(m.dom);
    const ElemList& P = F.subs_[idx];
    if (m.img.size() != P.size())
      throw Error("non-injective-seed", "seed image has wrong size");
    if (image_set(m.img).size() != m.img.size())
      throw Error("non-injective-seed", "seed is not injective");
    for (size_t a = 0; a < P.size(); ++a)
      for (size_t b = 0; b < P.size(); ++b) {
        int prod = F.S_.mul(P[a], P[b]);
        if (m.img[pos_in(P, prod)] != F.S_.mul(m.img[a], m.img[b]))
          throw Error("non-injective-seed", "seed is not a homomorphism");
      }
    add(idx, m.img);
  }

  while (!pending.empty()) {
    auto [idx, img] = pending.front();
    pending.pop_front();
    const ElemList& P = F.subs_[idx];
    ElemList I = image_set(img);
    int idxI = F.sub_index(I);

    // restrictions
    for (size_t j = 0; j < F.subs_.size(); ++j) {
      const ElemList& Q = F.subs_[j];
      if (Q.size() >= P.size() || !is_subset(Q, P)) continue;
      ElemList r(Q.size());
      for (size_t k = 0; k < Q.size(); ++k) r[k] = img[pos_in(P, Q[k])];
      add(static_cast<int>(j), r);
    }
    // inversion of the isomorphism P -> I
    ElemList inv_img(I.size());
    for (size_t k = 0; k < P.size(); ++k) inv_img[pos_in(I, img[k])] = P[k];
    add(idxI, inv_img);
    // compose with morphisms out of I
    for (const ElemList& img2 : F.homs_[idxI]) {
      ElemList c(P.size());
      for (size_t k = 0; k < P.size(); ++k) c[k] = img2[pos_in(I, img[k])];
      add(idx, c);
    }
    // compose with morphisms into P
    for (const auto& [idx0, img0] : by_image[idx]) {
      ElemList c(img0.size());
      for (size_t k = 0; k < img0.size(); ++k) c[k] = img[pos_in(P, img0[k])];
      add(idx0, c);
    }
    by_image[idxI].emplace_back(idx, img);
  }
  return F;
}

const std::set<ElemList>& FusionSystem::hom_images(const ElemList& P) const {
  return homs_[sub_index(P)];
}

std::vector<ElemList> FusionSystem::homs_into(const ElemList& P,
                                              const ElemList& Q) const {
  std::vector<ElemList> out;
  for (const ElemList& img : hom_images(P))
    if (is_subset(image_set(img), Q)) out.push_back(img);
  return out;
}

std::vector<ElemList> FusionSystem::auts(const ElemList& P) const {
  std::vector<ElemList> out;
  for (const ElemList& img : hom_images(P))
    if (image_set(img) == P) out.push_back(img);
  return out;
}

FiniteGroup FusionSystem::aut_group(const ElemList& P) const {
  std::vector<ElemList> a = auts(P);
  std::map<ElemList, int> index;
  for (size_t i = 0; i < a.size(); ++i) index[a[i]] = static_cast<int>(i);
  int n = static_cast<int>(a.size());
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // apply a[i], then a[j]
      ElemList c(P.size());
      for (size_t k = 0; k < P.size(); ++k) c[k] = a[j][pos_in(P, a[i][k])];
      table[i * n + j] = index.at(c);
    }
  ElemList id_img = P;
  return FiniteGroup(n, index.at(id_img), std::move(table));
}

ElemList FusionSystem::inner_aut_ids(const ElemList& P) const {
  std::vector<ElemList> a = auts(P);
  std::map<ElemList, int> index;
  for (size_t i = 0; i < a.size(); ++i) index[a[i]] = static_cast<int>(i);
  std::vector<Elem> out;
  for (Elem x : P) {
    ElemList img(P.size());
    for (size_t k = 0; k < P.size(); ++k) img[k] = S_.conj(P[k], x);
    out.push_back(index.at(img));
  }
  return make_set(std::move(out));
}

ElemList FusionSystem::s_aut_ids(const ElemList& P) const {
  std::vector<ElemList> a = auts(P);
  std::map<ElemList, int> index;
  for (size_t i = 0; i < a.size(); ++i) index[a[i]] = static_cast<int>(i);
  std::vector<Elem> out;
  for (Elem s : S_.normalizer(P)) {
    ElemList img(P.size());
    for (size_t k = 0; k < P.size(); ++k) img[k] = S_.conj(P[k], s);
    out.push_back(index.at(img));
  }
  return make_set(std::move(out));
}

std::vector<ElemList> FusionSystem::conjugacy_class(const ElemList& P) const {
  std::set<ElemList> cls;
  for (const ElemList& img : hom_images(P)) cls.insert(image_set(img));
  return {cls.begin(), cls.end()};
}

bool FusionSystem::is_conjugate(const ElemList& P, const ElemList& Q) const {
  for (const ElemList& img : hom_images(P))
    if (image_set(img) == Q) return true;
  return false;
}

bool FusionSystem::fully_normalized(const ElemList& P) const {
  size_t n = S_.normalizer(P).size();
  for (const ElemList& Q : conjugacy_class(P))
    if (S_.normalizer(Q).size() > n) return false;
  return true;
}

bool FusionSystem::fully_centralized(const ElemList& P) const {
  size_t n = S_.centralizer(P).size();
  for (const ElemList& Q : conjugacy_class(P))
    if (S_.centralizer(Q).size() > n) return false;
  return true;
}

ElemList FusionSystem::fully_normalized_rep(const ElemList& P) const {
  ElemList best;
  size_t best_n = 0;
  for (const ElemList& Q : conjugacy_class(P)) {
    size_t n = S_.normalizer(Q).size();
    if (n > best_n || (n == best_n && (best.empty() || Q < best))) {
      best = Q;
      best_n = n;
    }
  }
  return best;
}

std::set<Morphism> FusionSystem::label_key() const {
  std::set<Morphism> key;
  for (size_t i = 0; i < subs_.size(); ++i) {
    const ElemList& P = subs_[i];
    for (const ElemList& img : homs_[i]) {
      // re-sort the domain by label so keys are comparable across systems
      std::vector<std::pair<Elem, Elem>> pairs;
      for (size_t k = 0; k < P.size(); ++k)
        pairs.emplace_back(S_.label(P[k]), S_.label(img[k]));
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

bool FusionSystem::same_system(const FusionSystem& other) const {
  return label_key() == other.label_key();
}

long FusionSystem::morphism_count() const {
  long n = 0;
  for (const auto& h : homs_) n += static_cast<long>(h.size());
  return n;
}

FusionSystem fusion_of_group(const FiniteGroup& G, int p) {
  ElemList S = G.sylow(p);
  FiniteGroup ST = G.subgroup_table(S);
  std::vector<Morphism> seeds;
  for (int g = 0; g < G.order(); ++g) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (size_t k = 0; k < S.size(); ++k) {
      int y = G.conj(S[k], g);
      if (contains(S, y))
        pairs.emplace_back(static_cast<Elem>(k), static_cast<Elem>(pos_in(S, y)));
    }
    Morphism m;
    // dom indices in ST-local ids happen to be positions in the sorted S
    for (auto& [d, v] : pairs) {
      m.dom.push_back(d);
      m.img.push_back(v);
    }
    seeds.push_back(std::move(m));
  }
  return FusionSystem::generate(std::move(ST), p, seeds);
}

FusionSystem inner_fusion(FiniteGroup T, int p) {
  return FusionSystem::generate(std::move(T), p, {});
}

SaturationReport saturation_report(const FusionSystem& F) {
  SaturationReport rep;
  const FiniteGroup& S = F.group();
  int p = F.p();
  for (const ElemList& Q : F.subgroups()) {
    if (!F.fully_normalized(Q)) continue;
    // fully automized
    long aut_n = static_cast<long>(F.auts(Q).size());
    if (static_cast<long>(F.s_aut_ids(Q).size()) != p_part(aut_n, p)) {
      rep.saturated = false;
      rep.witness = "subgroup " + list_to_string(Q) + " not fully automized";
      return rep;
    }
    // receptive: every iso onto Q extends over its N_phi
    for (const ElemList& P : F.conjugacy_class(Q)) {
      for (const ElemList& img : F.hom_images(P)) {
        if (image_set(img) != Q) continue;
        ElemList NP = S.normalizer(P), NQ = S.normalizer(Q);
        ElemList nphi;
        for (Elem g : NP) {
          bool ok = false;
          for (Elem h : NQ) {
            bool match = true;
            for (size_t k = 0; k < P.size() && match; ++k)
              match = img[pos_in(P, S.conj(P[k], g))] == S.conj(img[k], h);
            if (match) {
              ok = true;
              break;
            }
          }
          if (ok) nphi.push_back(g);
        }
        bool extended = false;
        for (const ElemList& ext : F.hom_images(nphi)) {
          bool agrees = true;
          for (size_t k = 0; k < P.size() && agrees; ++k)
            agrees = ext[pos_in(nphi, P[k])] == img[k];
          if (agrees) {
            extended = true;
            break;
          }
        }
        if (!extended) {
          rep.saturated = false;
          rep.witness = "iso " + list_to_string(P) + " -> " + list_to_string(Q) +
                        " has no extension over N_phi = " + list_to_string(nphi);
          return rep;
        }
      }
    }
  }
  return rep;
}

bool is_saturated(const FusionSystem& F) { return saturation_report(F).saturated; }

ElemList o_p_of(const FusionSystem& F) {
  const auto& subs = F.subgroups();
  ElemList best = {F.group().identity()};
  for (const ElemList& U : subs) {
    if (U.size() <= best.size()) continue;
    if (F.conjugacy_class(U).size() != 1) continue;
    if (F.group().normalizer(U).size() != static_cast<size_t>(F.group().order()))
      continue;
    if (local_subsystem(F, U).same_system(F)) best = U;
  }
  return best;
}

FusionSystem centralizer_system(const FusionSystem& F, const ElemList& X) {
  const FiniteGroup& S = F.group();
  ElemList T = S.centralizer(X);
  FiniteGroup TT = S.subgroup_table(T);
  std::vector<Morphism> seeds;
  for (const ElemList& D : F.subgroups()) {
    if (!is_subset(X, D)) continue;
    for (const ElemList& img : F.hom_images(D)) {
      bool fixes = true;
      for (Elem x : X)
        if (img[pos_in(D, x)] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      ElemList A = set_intersect(D, T);
      Morphism m;
      for (Elem a : A) {
        m.dom.push_back(pos_in(T, a));
        m.img.push_back(pos_in(T, img[pos_in(D, a)]));
      }
      seeds.push_back(std::move(m));
    }
  }
  return FusionSystem::generate(std::move(TT), F.p(), seeds);
}

FusionSystem local_subsystem(const FusionSystem& F, const ElemList& P) {
  if (!F.fully_normalized(P))
    throw Error("not-fully-normalized",
                "N_F asked at a non-fully-normalized subgroup");
  const FiniteGroup& S = F.group();
  ElemList T = S.normalizer(P);
  FiniteGroup TT = S.subgroup_table(T);
  std::vector<Morphism> seeds;
  for (const ElemList& D : F.subgroups()) {
    if (!is_subset(P, D)) continue;
    for (const ElemList& img : F.hom_images(D)) {
      ElemList pimg;
      for (Elem x : P) pimg.push_back(img[pos_in(D, x)]);
      if (image_set(pimg) != P) continue;
      ElemList A = set_intersect(D, T);
      Morphism m;
      for (Elem a : A) {
        m.dom.push_back(pos_in(T, a));
        m.img.push_back(pos_in(T, img[pos_in(D, a)]));
      }
      seeds.push_back(std::move(m));
    }
  }
  return FusionSystem::generate(std::move(TT), F.p(), seeds);
}

SubgroupClasses subgroup_classes(const FusionSystem& F) {
  auto sat = saturation_report(F);
  if (!sat.saturated) throw Error("not-saturated", sat.witness);
  const FiniteGroup& S = F.group();
  SubgroupClasses out;
  for (const ElemList& P : F.subgroups()) {
    auto cls = F.conjugacy_class(P);
    bool centric = true;
    for (const ElemList& Q : cls)
      if (!is_subset(S.centralizer(Q), Q)) {
        centric = false;
        break;
      }
    ElemList rep = F.fully_normalized_rep(P);
    FiniteGroup A = F.aut_group(rep);
    bool radical = A.big_o_p(F.p()) == F.inner_aut_ids(rep);
    if (centric) out.centric.push_back(P);
    if (radical) out.radical.push_back(P);
    if (centric && radical) out.centric_radical.push_back(P);

    bool quasi = true;
    for (const ElemList& Q : cls) {
      if (!F.fully_centralized(Q)) continue;
      FusionSystem CF = centralizer_system(F, Q);
      FiniteGroup CT = S.subgroup_table(S.centralizer(Q));
      if (!CF.same_system(inner_fusion(std::move(CT), F.p()))) {
        quasi = false;
        break;
      }
    }
    if (quasi) out.quasicentric.push_back(P);

    bool sub = true;
    for (const ElemList& Q : cls) {
      if (!F.fully_normalized(Q)) continue;
      FusionSystem NF = local_subsystem(F, Q);
      ElemList U = o_p_of(NF);
      for (const ElemList& V : NF.conjugacy_class(U))
        if (!is_subset(NF.group().centralizer(V), V)) {
          sub = false;
          break;
        }
      if (!sub) break;
    }
    if (sub) out.subcentric.push_back(P);
  }
  return out;
}

bool is_strongly_closed(const FusionSystem& F, const ElemList& T) {
  for (const ElemList& P : F.subgroups()) {
    if (!is_subset(P, T)) continue;
    for (const ElemList& img : F.hom_images(P))
      for (Elem y : img)
        if (!contains(T, y)) return false;
  }
  return true;
}

bool is_F_closed(const FusionSystem& F, const std::vector<ElemList>& delta) {
  auto has = [&](const ElemList& Q) {
    return std::find(delta.begin(), delta.end(), Q) != delta.end();
  };
  for (const ElemList& P : delta) {
    for (const ElemList& Q : F.conjugacy_class(P))
      if (!has(Q)) return false;
    for (const ElemList& Q : F.subgroups())
      if (is_subset(P, Q) && !has(Q)) return false;
  }
  return true;
}

std::vector<ElemList> f_closure(const FusionSystem& F,
                                const std::vector<ElemList>& members) {
  std::set<ElemList> out;
  std::vector<ElemList> work(members.begin(), members.end());
  while (!work.empty()) {
    ElemList P = work.back();
    work.pop_back();
    if (!out.insert(P).second) continue;
    for (const ElemList& Q : F.conjugacy_class(P)) work.push_back(Q);
    for (const ElemList& Q : F.subgroups())
      if (is_subset(P, Q)) work.push_back(Q);
  }
  return {out.begin(), out.end()};
}

ElemList lift_subgroup(const FusionSystem& F, const FusionSystem& E,
                       const ElemList& P) {
  ElemList out;
  for (Elem x : P) {
    auto idx = F.group().index_of_label(E.group().label(x));
    if (!idx) throw Error("internal", "subsystem element missing from ambient S");
    out.push_back(*idx);
  }
  return make_set(std::move(out));
}

namespace {

/// E's morphisms, with both sides translated into F-local ids.
std::vector<Morphism> subsystem_morphisms_in(const FusionSystem& F,
                                             const FusionSystem& E) {
  std::vector<Morphism> out;
  for (const ElemList& P : E.subgroups()) {
    for (const ElemList& img : E.hom_images(P)) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (size_t k = 0; k < P.size(); ++k) {
        Elem d = *F.group().index_of_label(E.group().label(P[k]));
        Elem v = *F.group().index_of_label(E.group().label(img[k]));
        pairs.emplace_back(d, v);
      }
      std::sort(pairs.begin(), pairs.end());
      Morphism m;
      for (auto& [d, v] : pairs) {
        m.dom.push_back(d);
        m.img.push_back(v);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

bool is_normal_subsystem(const FusionSystem& F, const SubsystemTag& E) {
  const FiniteGroup& S = F.group();
  const ElemList& T = E.support;
  if (!is_strongly_closed(F, T))
    throw Error("support-not-strongly-closed",
                "support " + list_to_string(T) + " is not strongly closed");
  if (!is_saturated(E.sys))
    throw Error("subsystem-not-saturated", "candidate subsystem is not saturated");

  std::vector<Morphism> emorphs = subsystem_morphisms_in(F, E.sys);
  std::set<Morphism> ekey(emorphs.begin(), emorphs.end());
  auto in_E = [&](const std::vector<std::pair<Elem, Elem>>& pairs) {
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    Morphism m;
    for (auto& [d, v] : sorted) {
      m.dom.push_back(d);
      m.img.push_back(v);
    }
    return ekey.count(m) > 0;
  };

  std::vector<ElemList> autT = F.auts(T);

  // invariance: phi^alpha lies in E for alpha in Aut_F(T)
  for (const ElemList& alpha : autT) {
    for (const Morphism& m : emorphs) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (size_t k = 0; k < m.dom.size(); ++k)
        pairs.emplace_back(alpha[pos_in(T, m.dom[k])], alpha[pos_in(T, m.img[k])]);
      if (!in_E(pairs)) return false;
    }
  }

  // Frattini: every F-morphism into T factors as (E-morphism) after (Aut_F(T))
  for (const ElemList& P : F.subgroups()) {
    if (!is_subset(P, T)) continue;
    for (const ElemList& img : F.homs_into(P, T)) {
      bool factored = false;
      for (const ElemList& alpha : autT) {
        // phi0 = phi o alpha^{-1} on P*alpha, then membership in E
        std::vector<std::pair<Elem, Elem>> pairs;
        for (size_t k = 0; k < P.size(); ++k)
          pairs.emplace_back(alpha[pos_in(T, P[k])], img[k]);
        if (in_E(pairs)) {
          factored = true;
          break;
        }
      }
      if (!factored) return false;
    }
  }

  // extension: Aut_E(T) extends over T*C_S(T) with [C_S(T), ext] <= Z(T)
  ElemList CT = S.centralizer(T);
  ElemList ZT = set_intersect(T, CT);
  ElemList TC = S.closure(set_union(T, CT));
  for (const Morphism& m : emorphs) {
    if (m.dom != T || image_set(m.img) != T) continue;  // Aut_E(T) only
    bool extended = false;
    for (const ElemList& ext : F.hom_images(TC)) {
      if (image_set(ext) != TC) continue;
      bool agrees = true;
      for (size_t k = 0; k < T.size() && agrees; ++k)
        agrees = ext[pos_in(TC, m.dom[k])] == m.img[k];
      if (!agrees) continue;
      bool small = true;
      for (Elem c : CT) {
        Elem comm = S.mul(S.inv(c), ext[pos_in(TC, c)]);
        if (!contains(ZT, comm)) {
          small = false;
          break;
        }
      }
      if (small) {
        extended = true;
        break;
      }
    }
    if (!extended) return false;
  }
  return true;
}

ElemList center_of(const FusionSystem& E) {
  const FiniteGroup& T = E.group();
  std::vector<ElemList> good;
  for (const ElemList& X : T.subgroups()) {
    bool ok = true;
    for (const ElemList& P : E.subgroups()) {
      if (!ok) break;
      for (const ElemList& img : E.hom_images(P)) {
        ElemList PX = T.closure(set_union(P, X));
        bool found = false;
        for (const ElemList& ext : E.hom_images(PX)) {
          bool agrees = true;
          for (size_t k = 0; k < P.size() && agrees; ++k)
            agrees = ext[pos_in(PX, P[k])] == img[k];
          for (Elem x : X)
            if (agrees) agrees = ext[pos_in(PX, x)] == x;
          if (agrees) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          break;
        }
      }
    }
    if (ok) good.push_back(X);
  }
  ElemList best;
  for (const ElemList& X : good)
    if (X.size() > best.size()) best = X;
  for (const ElemList& X : good)
    if (!is_subset(X, best))
      throw Error("internal", "central subgroups have no unique maximum");
  return best;
}

ElemList cs_of_subsystem(const FusionSystem& F, const SubsystemTag& E) {
  const FiniteGroup& S = F.group();
  ElemList CT = S.centralizer(E.support);
  std::vector<Morphism> emorphs = subsystem_morphisms_in(F, E.sys);
  std::vector<ElemList> good;
  for (const ElemList& X : F.subgroups()) {
    if (!is_subset(X, CT)) continue;
    bool ok = true;
    for (const Morphism& m : emorphs) {
      if (!ok) break;
      ElemList PX = S.closure(set_union(m.dom, X));
      bool found = false;
      for (const ElemList& ext : F.hom_images(PX)) {
        bool agrees = true;
        for (size_t k = 0; k < m.dom.size() && agrees; ++k)
          agrees = ext[pos_in(PX, m.dom[k])] == m.img[k];
        for (Elem x : X)
          if (agrees) agrees = ext[pos_in(PX, x)] == x;
        if (agrees) {
          found = true;
          break;
        }
      }
      if (!found) ok = false;
    }
    if (ok) good.push_back(X);
  }
  ElemList best;
  for (const ElemList& X : good)
    if (X.size() > best.size()) best = X;
  for (const ElemList& X : good)
    if (!is_subset(X, best))
      throw Error("internal", "centralizing subgroups have no unique maximum");
  return best;
}

}  // namespace loclab
