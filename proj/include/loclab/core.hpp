#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loclab {

/// Element identifier within some universe (a group's element table, a
/// locality's element list, coset indices, ...).
using Elem = int;

/// Sorted, duplicate-free list of element ids. Used for subgroups and
/// other element sets throughout.
using ElemList = std::vector<Elem>;

/// A word over a set of elements. May be empty.
using Word = std::vector<Elem>;

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline bool contains(const ElemList& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline void insert_sorted(ElemList& s, Elem x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
}

inline ElemList make_set(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline ElemList set_union(const ElemList& a, const ElemList& b) {
  ElemList r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline ElemList set_intersect(const ElemList& a, const ElemList& b) {
  ElemList r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

inline ElemList set_difference(const ElemList& a, const ElemList& b) {
  ElemList r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r));
  return r;
}

inline bool is_subset(const ElemList& a, const ElemList& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string list_to_string(const ElemList& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

inline std::string word_to_string(const Word& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  out += ")";
  return out;
}

/// p-part of n: the largest power of p dividing n.
inline long p_part(long n, int p) {
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_power_of(long n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace loclab
