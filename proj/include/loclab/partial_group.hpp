#pragma once

#include <functional>
#include <optional>
#include <string>

#include "loclab/finite_group.hpp"

namespace loclab {

/// A finite partial group: an element set, an involutive inversion, and a
/// partial product given by an evaluator that returns the product of a word
/// when the word lies in the domain D, and nothing otherwise. The evaluator
/// decides domain membership for words of arbitrary length, so D need never
/// be materialized.
class PartialGroup {
 public:
  PartialGroup() = default;
  PartialGroup(ElemList elements, Elem identity,
               std::function<Elem(Elem)> inversion,
               std::function<std::optional<Elem>(const Word&)> evaluator);

  const ElemList& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  Elem identity() const { return id_; }
  Elem inv(Elem f) const { return inv_(f); }
  /// Product of `w` if w ∈ D, nothing otherwise.
  std::optional<Elem> eval(const Word& w) const { return eval_(w); }
  bool in_domain(const Word& w) const { return eval_(w).has_value(); }
  /// Product of `w`; throws word-not-in-domain if w ∉ D.
  Elem product(const Word& w) const;

  /// D(g) = {x : (g⁻¹, x, g) ∈ D}.
  ElemList d_of(Elem g) const;
  std::optional<Elem> try_conjugate(Elem x, Elem g) const;
  /// x^g = Π(g⁻¹, x, g); throws not-conjugatable if x ∉ D(g).
  Elem conjugate(Elem x, Elem g) const;
  /// S_g = {s ∈ S ∩ D(g) : s^g ∈ S}.
  ElemList s_sub_g(const ElemList& S, Elem g) const;
  /// Element-wise conjugate of a subset all of whose members lie in D(g).
  ElemList conjugate_set(const ElemList& X, Elem g) const;

  /// The partial group on a subset: domain W(H) ∩ D, same product and
  /// inversion. Meaningful when `subset` is a partial subgroup.
  PartialGroup restrict_to(ElemList subset) const;

 private:
  ElemList elems_;
  Elem id_ = 0;
  std::function<Elem(Elem)> inv_;
  std::function<std::optional<Elem>(const Word&)> eval_;
};

/// The partial group of a whole finite group: D = all words.
PartialGroup partial_group_from_group(std::shared_ptr<const FiniteGroup> G);

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when pass
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  std::string to_string() const;
};

/// Checks the five partial-group axioms over all words up to `max_len`
/// letters (products of longer words are still exercised through the
/// inversion axiom, which evaluates w⁻¹ ∘ w).
AxiomReport check_partial_group_axioms(const PartialGroup& L, int max_len = 3);

/// Is H (a subset of L's elements) a partial subgroup: contains 1, closed
/// under inversion and under Π on W(H) ∩ D.
bool is_partial_subgroup(const PartialGroup& L, const ElemList& H);

/// Is the partial subgroup N normal: n^f ∈ N for all f ∈ L, n ∈ N ∩ D(f).
/// Throws not-a-partial-subgroup if N fails the subgroup check.
bool is_partial_normal(const PartialGroup& L, const ElemList& N);

/// Smallest partial subgroup containing `seed`: fixed point of adding 1,
/// inverses, and binary products. Binary products suffice because the
/// contraction axiom reduces any defined word product to iterated pairs.
ElemList partial_subgroup_closure(const PartialGroup& L, const ElemList& seed);

}  // namespace loclab
