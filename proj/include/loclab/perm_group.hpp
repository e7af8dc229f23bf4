#pragma once

#include <string>
#include <vector>

#include "loclab/finite_group.hpp"
#include "loclab/perm.hpp"

namespace loclab {

/// A permutation group with its element set fully materialized. Elements are
/// sorted lexicographically by image array; the multiplication table uses
/// indices into that ordering.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators, std::string name = "");

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }

  const FiniteGroup& table() const { return table_; }
  int identity_id() const { return table_.identity(); }
  const Perm& perm(int id) const { return elems_[id]; }
  /// Index of the permutation, or throws element-not-in-group.
  int id_of(const Perm& g) const;

 private:
  int degree_;
  std::string name_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  FiniteGroup table_;
};

/// Subgroups are sorted id lists into a PermGroup's element ordering; the
/// operations below delegate to the multiplication-table engine.
using Subgroup = ElemList;

Subgroup sylow_p(const PermGroup& G, int p);
Subgroup normalizer(const PermGroup& G, const Subgroup& H);
Subgroup centralizer(const PermGroup& G, const Subgroup& H);
Subgroup conjugate_subgroup(const PermGroup& G, const Subgroup& H, int g);
std::vector<Subgroup> normal_subgroups(const PermGroup& G);
Subgroup big_o_p(const PermGroup& G, int p);
Subgroup o_super_p(const PermGroup& G, int p);
bool is_characteristic_p(const PermGroup& G, int p);

}  // namespace loclab
