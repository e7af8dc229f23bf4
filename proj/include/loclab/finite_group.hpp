#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "loclab/core.hpp"

namespace loclab {

/// A finite group given by its full multiplication table. Elements are the
/// ids 0..order-1; each element optionally carries a label referring back to
/// the structure the table was built from (an ambient group's element ids,
/// for subgroup tables).
///
/// Immutable after construction apart from the write-once subgroup-lattice
/// cache.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(int order, int identity, std::vector<int> mul_table,
              std::vector<Elem> labels = {});

  /// Builds a table by closing `seed` under a multiplication oracle on opaque
  /// labels. `mul` must be associative on the closure.
  static FiniteGroup from_mul(std::vector<Elem> seed,
                              const std::function<Elem(Elem, Elem)>& mul,
                              Elem identity_label);

  int order() const { return n_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int mul_word(const Word& w) const;
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
  int power(int a, long k) const;
  int element_order(int a) const;

  Elem label(int a) const { return labels_.empty() ? a : labels_[a]; }
  const std::vector<Elem>& labels() const { return labels_; }
  std::optional<int> index_of_label(Elem lbl) const;
  ElemList labels_of(const ElemList& ids) const;

  // ---- subgroup machinery (subgroups are sorted id lists) ----

  ElemList all_elements() const;
  ElemList closure(ElemList seed) const;
  bool is_subgroup(const ElemList& h) const;

  /// The full subgroup lattice in canonical order (by order, then
  /// lexicographically on the sorted element list). Cached.
  const std::vector<ElemList>& subgroups() const;
  std::vector<ElemList> subgroups_of(const ElemList& h) const;

  ElemList sylow(int p) const;
  std::vector<ElemList> all_sylow(int p) const;
  ElemList normalizer(const ElemList& h) const;
  ElemList centralizer(const ElemList& h) const;
  ElemList conjugate_subgroup(const ElemList& h, int g) const;
  ElemList center() const { return centralizer(all_elements()); }
  std::vector<ElemList> normal_subgroups() const;
  bool is_normal(const ElemList& h) const;
  ElemList big_o_p(int p) const;
  ElemList o_super_p(int p) const;
  bool is_characteristic_p(int p) const;
  ElemList product_set(const ElemList& a, const ElemList& b) const;

  /// The table of the subgroup `h`, with labels mapping back to this group's
  /// labels.
  FiniteGroup subgroup_table(const ElemList& h) const;

 private:
  int n_ = 0;
  int id_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<Elem> labels_;
  mutable std::shared_ptr<const std::vector<ElemList>> lattice_;
};

/// Upper bound on the order of any group we fully materialize; override with
/// env LOCALITY_LAB_MAX_ORDER.
long max_group_order();

}  // namespace loclab
