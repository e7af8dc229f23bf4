#include "loclab/finite_group.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace loclab {

long max_group_order() {
  if (const char* env = std::getenv("LOCALITY_LAB_MAX_ORDER")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 2000;
}

FiniteGroup::FiniteGroup(int order, int identity, std::vector<int> mul_table,
                         std::vector<Elem> labels)
    : n_(order), id_(identity), mul_(std::move(mul_table)),
      labels_(std::move(labels)) {
  if (static_cast<int>(mul_.size()) != n_ * n_)
    throw Error("invalid-group", "multiplication table has wrong size");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == id_) inv_[a] = b;
    if (inv_[a] < 0) throw Error("invalid-group", "element without inverse");
  }
}

FiniteGroup FiniteGroup::from_mul(std::vector<Elem> seed,
                                  const std::function<Elem(Elem, Elem)>& mul,
                                  Elem identity_label) {
  std::vector<Elem> elems = {identity_label};
  std::set<Elem> seen = {identity_label};
  for (Elem s : seed)
    if (seen.insert(s).second) elems.push_back(s);
  // close under products
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      Elem prod = mul(elems[i], elems[j]);
      if (seen.insert(prod).second) elems.push_back(prod);
      if (static_cast<long>(elems.size()) > max_group_order())
        throw Error("size-bound-exceeded", "group closure exceeds order bound");
    }
  }
  std::sort(elems.begin(), elems.end());
  std::map<Elem, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(mul(elems[a], elems[b]));
      if (it == index.end())
        throw Error("invalid-group", "product escaped the closed element set");
      table[a * n + b] = it->second;
    }
  return FiniteGroup(n, index.at(identity_label), std::move(table),
                     std::move(elems));
}

int FiniteGroup::mul_word(const Word& w) const {
  int acc = id_;
  for (int f : w) acc = mul(acc, f);
  return acc;
}

int FiniteGroup::power(int a, long k) const {
  if (k < 0) return power(inv_[a], -k);
  int acc = id_;
  for (long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int acc = a, k = 1;
  while (acc != id_) {
    acc = mul(acc, a);
    ++k;
  }
  return k;
}

std::optional<int> FiniteGroup::index_of_label(Elem lbl) const {
  if (labels_.empty()) {
    if (lbl >= 0 && lbl < n_) return lbl;
    return std::nullopt;
  }
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == lbl) return i;
  return std::nullopt;
}

ElemList FiniteGroup::labels_of(const ElemList& ids) const {
  ElemList out;
  out.reserve(ids.size());
  for (Elem a : ids) out.push_back(label(a));
  std::sort(out.begin(), out.end());
  return out;
}

ElemList FiniteGroup::all_elements() const {
  ElemList e(n_);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

ElemList FiniteGroup::closure(ElemList seed) const {
  std::vector<bool> in(n_, false);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  add(id_);
  for (int s : seed) add(s);
  for (size_t i = 0; i < work.size(); ++i) {
    add(inv_[work[i]]);
    for (size_t j = 0; j <= i; ++j) {
      add(mul(work[i], work[j]));
      add(mul(work[j], work[i]));
    }
  }
  ElemList out;
  for (int x = 0; x < n_; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool FiniteGroup::is_subgroup(const ElemList& h) const {
  if (!contains(h, id_)) return false;
  for (int a : h) {
    if (!contains(h, inv_[a])) return false;
    for (int b : h)
      if (!contains(h, mul(a, b))) return false;
  }
  return true;
}

const std::vector<ElemList>& FiniteGroup::subgroups() const {
  if (lattice_) return *lattice_;
  // Generate from cyclic subgroups: every subgroup is reached by repeatedly
  // adjoining a cyclic generator.
  std::set<ElemList> found;
  std::vector<ElemList> cyclic;
  for (int g = 0; g < n_; ++g) {
    ElemList c = closure({g});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<ElemList> work(found.begin(), found.end());
  for (size_t i = 0; i < work.size(); ++i) {
    for (const ElemList& c : cyclic) {
      if (is_subset(c, work[i])) continue;
      ElemList seed = set_union(work[i], c);
      ElemList h = closure(seed);
      if (found.insert(h).second) work.push_back(h);
    }
  }
  auto lat = std::make_shared<std::vector<ElemList>>(found.begin(), found.end());
  std::sort(lat->begin(), lat->end(), [](const ElemList& a, const ElemList& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  lattice_ = lat;
  return *lattice_;
}

std::vector<ElemList> FiniteGroup::subgroups_of(const ElemList& h) const {
  std::vector<ElemList> out;
  for (const ElemList& k : subgroups())
    if (is_subset(k, h)) out.push_back(k);
  return out;
}

ElemList FiniteGroup::sylow(int p) const {
  long target = p_part(n_, p);
  for (const ElemList& h : subgroups())
    if (static_cast<long>(h.size()) == target) return h;
  throw Error("internal", "no Sylow subgroup found");  // unreachable
}

std::vector<ElemList> FiniteGroup::all_sylow(int p) const {
  long target = p_part(n_, p);
  std::vector<ElemList> out;
  for (const ElemList& h : subgroups())
    if (static_cast<long>(h.size()) == target) out.push_back(h);
  return out;
}

ElemList FiniteGroup::normalizer(const ElemList& h) const {
  ElemList out;
  for (int g = 0; g < n_; ++g)
    if (conjugate_subgroup(h, g) == h) out.push_back(g);
  return out;
}

ElemList FiniteGroup::centralizer(const ElemList& h) const {
  ElemList out;
  for (int g = 0; g < n_; ++g) {
    bool central = true;
    for (int x : h)
      if (conj(x, g) != x) {
        central = false;
        break;
      }
    if (central) out.push_back(g);
  }
  return out;
}

ElemList FiniteGroup::conjugate_subgroup(const ElemList& h, int g) const {
  ElemList out;
  out.reserve(h.size());
  for (int x : h) out.push_back(conj(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_normal(const ElemList& h) const {
  for (int g = 0; g < n_; ++g)
    if (conjugate_subgroup(h, g) != h) return false;
  return true;
}

std::vector<ElemList> FiniteGroup::normal_subgroups() const {
  if (n_ > max_group_order())
    throw Error("size-bound-exceeded", "group order exceeds configured bound");
  std::vector<ElemList> out;
  for (const ElemList& h : subgroups())
    if (is_normal(h)) out.push_back(h);
  return out;
}

ElemList FiniteGroup::big_o_p(int p) const {
  ElemList result = {id_};
  for (const ElemList& h : subgroups())
    if (is_power_of(static_cast<long>(h.size()), p) && is_normal(h) &&
        h.size() > result.size())
      result = h;
  // O_p is the unique largest: every normal p-subgroup lies inside it.
  for (const ElemList& h : subgroups())
    if (is_power_of(static_cast<long>(h.size()), p) && is_normal(h) &&
        !is_subset(h, result))
      throw Error("internal", "normal p-subgroups have no unique maximum");
  return result;
}

ElemList FiniteGroup::o_super_p(int p) const {
  ElemList best = all_elements();
  for (const ElemList& h : normal_subgroups())
    if (is_power_of(static_cast<long>(n_) / static_cast<long>(h.size()), p) &&
        h.size() < best.size())
      best = h;
  return best;
}

bool FiniteGroup::is_characteristic_p(int p) const {
  ElemList op = big_o_p(p);
  return is_subset(centralizer(op), op);
}

ElemList FiniteGroup::product_set(const ElemList& a, const ElemList& b) const {
  std::vector<Elem> out;
  for (int x : a)
    for (int y : b) out.push_back(mul(x, y));
  return make_set(std::move(out));
}

FiniteGroup FiniteGroup::subgroup_table(const ElemList& h) const {
  if (!is_subgroup(h)) throw Error("not-a-subgroup", "subgroup_table on non-subgroup");
  int m = static_cast<int>(h.size());
  std::vector<int> index(n_, -1);
  for (int i = 0; i < m; ++i) index[h[i]] = i;
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i * m + j] = index[mul(h[i], h[j])];
  std::vector<Elem> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = label(h[i]);
  return FiniteGroup(m, index[id_], std::move(table), std::move(labels));
}

}  // namespace loclab
