#include "loclab/perm_group.hpp"

#include <map>

namespace loclab {

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::string name)
    : degree_(degree), name_(std::move(name)), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw Error("degree-mismatch", "generator degree differs from group degree");
  std::map<Perm, int> seen;
  std::vector<Perm> work = {Perm::identity(degree_)};
  seen[work[0]] = 0;
  for (size_t i = 0; i < work.size(); ++i) {
    for (const Perm& g : gens_) {
      Perm h = work[i].compose(g);
      if (seen.emplace(h, 0).second) work.push_back(h);
      if (static_cast<long>(work.size()) > max_group_order())
        throw Error("size-bound-exceeded", "group order exceeds configured bound");
    }
  }
  elems_.reserve(seen.size());
  for (auto& [perm, id] : seen) {
    id = static_cast<int>(elems_.size());
    elems_.push_back(perm);
  }
  int n = static_cast<int>(elems_.size());
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = seen.at(elems_[a].compose(elems_[b]));
  table_ = FiniteGroup(n, seen.at(Perm::identity(degree_)), std::move(table));
}

int PermGroup::id_of(const Perm& g) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
  if (it == elems_.end() || *it != g)
    throw Error("element-not-in-group", "permutation " + g.to_cycles() +
                                            " is not in the group");
  return static_cast<int>(it - elems_.begin());
}

Subgroup sylow_p(const PermGroup& G, int p) { return G.table().sylow(p); }

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
  return G.table().normalizer(H);
}

Subgroup centralizer(const PermGroup& G, const Subgroup& H) {
  return G.table().centralizer(H);
}

Subgroup conjugate_subgroup(const PermGroup& G, const Subgroup& H, int g) {
  if (g < 0 || g >= G.order())
    throw Error("element-not-in-group", "conjugating element id out of range");
  return G.table().conjugate_subgroup(H, g);
}

std::vector<Subgroup> normal_subgroups(const PermGroup& G) {
  return G.table().normal_subgroups();
}

Subgroup big_o_p(const PermGroup& G, int p) { return G.table().big_o_p(p); }

Subgroup o_super_p(const PermGroup& G, int p) { return G.table().o_super_p(p); }

bool is_characteristic_p(const PermGroup& G, int p) {
  return G.table().is_characteristic_p(p);
}

}  // namespace loclab
