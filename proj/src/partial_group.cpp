#include "loclab/partial_group.hpp"

#include <sstream>

namespace loclab {

PartialGroup::PartialGroup(ElemList elements, Elem identity,
                           std::function<Elem(Elem)> inversion,
                           std::function<std::optional<Elem>(const Word&)> evaluator)
    : elems_(std::move(elements)), id_(identity), inv_(std::move(inversion)),
      eval_(std::move(evaluator)) {
  if (!contains(elems_, id_))
    throw Error("invalid-partial-group", "identity not among the elements");
}

Elem PartialGroup::product(const Word& w) const {
  auto v = eval_(w);
  if (!v) throw Error("word-not-in-domain", "word " + word_to_string(w) + " is not in D");
  return *v;
}

ElemList PartialGroup::d_of(Elem g) const {
  ElemList out;
  for (Elem x : elems_)
    if (try_conjugate(x, g)) out.push_back(x);
  return out;
}

std::optional<Elem> PartialGroup::try_conjugate(Elem x, Elem g) const {
  return eval_({inv_(g), x, g});
}

Elem PartialGroup::conjugate(Elem x, Elem g) const {
  auto v = try_conjugate(x, g);
  if (!v)
    throw Error("not-conjugatable", std::to_string(x) + " is not in D(" +
                                        std::to_string(g) + ")");
  return *v;
}

ElemList PartialGroup::s_sub_g(const ElemList& S, Elem g) const {
  ElemList out;
  for (Elem s : S) {
    auto v = try_conjugate(s, g);
    if (v && contains(S, *v)) out.push_back(s);
  }
  return out;
}

ElemList PartialGroup::conjugate_set(const ElemList& X, Elem g) const {
  std::vector<Elem> out;
  out.reserve(X.size());
  for (Elem x : X) out.push_back(conjugate(x, g));
  return make_set(std::move(out));
}

PartialGroup PartialGroup::restrict_to(ElemList subset) const {
  for (Elem x : subset)
    if (!contains(elems_, x))
      throw Error("not-a-subset", "restriction set leaves the partial group");
  auto parent_eval = eval_;
  ElemList sub = subset;
  auto sub_eval = [parent_eval, sub](const Word& w) -> std::optional<Elem> {
    for (Elem f : w)
      if (!contains(sub, f)) return std::nullopt;
    return parent_eval(w);
  };
  return PartialGroup(std::move(subset), id_, inv_, std::move(sub_eval));
}

PartialGroup partial_group_from_group(std::shared_ptr<const FiniteGroup> G) {
  ElemList elems = G->all_elements();
  Elem id = G->identity();
  auto inv = [G](Elem f) { return G->inv(f); };
  auto eval = [G](const Word& w) -> std::optional<Elem> { return G->mul_word(w); };
  return PartialGroup(std::move(elems), id, std::move(inv), std::move(eval));
}

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass) out << "  [" << c.witness << "]";
    out << "\n";
  }
  return out.str();
}

namespace {

/// All words over `elems` of length 1..max_len that lie in D, with their
/// products.
std::vector<std::pair<Word, Elem>> domain_words(const PartialGroup& L, int max_len) {
  std::vector<std::pair<Word, Elem>> out;
  const ElemList& elems = L.elements();
  std::vector<Word> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Elem f : elems) {
        Word w2 = w;
        w2.push_back(f);
        // prefixes of domain words are in the domain, so growing only
        // domain words loses nothing
        if (auto v = L.eval(w2)) {
          out.emplace_back(w2, *v);
          next.push_back(std::move(w2));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Word inverted(const PartialGroup& L, const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Elem& f : r) f = L.inv(f);
  return r;
}

}  // namespace

AxiomReport check_partial_group_axioms(const PartialGroup& L, int max_len) {
  AxiomReport rep;
  rep.checks.resize(5);
  rep.checks[0].name = "singleton-words";
  rep.checks[1].name = "restriction-to-subwords";
  rep.checks[2].name = "contraction";
  rep.checks[3].name = "inversion-involution";
  rep.checks[4].name = "inverse-word-cancellation";
  auto fail = [&](int i, const std::string& witness) {
    if (rep.checks[i].pass) {
      rep.checks[i].pass = false;
      rep.checks[i].witness = witness;
    }
  };

  if (auto e = L.eval({}); !e || *e != L.identity())
    fail(0, "empty word does not evaluate to the identity");
  for (Elem f : L.elements()) {
    auto v = L.eval({f});
    if (!v || *v != f) fail(0, "word (" + std::to_string(f) + ")");
    if (L.inv(L.inv(f)) != f) fail(3, "element " + std::to_string(f));
    if (!contains(L.elements(), L.inv(f)))
      fail(3, "inverse of " + std::to_string(f) + " escapes the element set");
  }

  auto dom = domain_words(L, max_len);
  for (const auto& [w, prod] : dom) {
    size_t n = w.size();
    // splits w = u ∘ v
    for (size_t cut = 0; cut <= n; ++cut) {
      Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
      if (!L.in_domain(u) || !L.in_domain(v)) {
        fail(1, "word " + word_to_string(w) + " split at " + std::to_string(cut));
        break;
      }
    }
    // decompositions w = u ∘ v ∘ t with v nonempty
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j <= n; ++j) {
        Word u(w.begin(), w.begin() + i);
        Word v(w.begin() + i, w.begin() + j);
        Word t(w.begin() + j, w.end());
        auto pv = L.eval(v);
        if (!pv) continue;  // reported by the restriction axiom
        Word contracted = u;
        contracted.push_back(*pv);
        contracted.insert(contracted.end(), t.begin(), t.end());
        auto pc = L.eval(contracted);
        if (!pc || *pc != prod) {
          fail(2, "word " + word_to_string(w) + " contracting letters " +
                      std::to_string(i) + ".." + std::to_string(j - 1));
        }
      }
    }
    Word cancel = inverted(L, w);
    cancel.insert(cancel.end(), w.begin(), w.end());
    auto pc = L.eval(cancel);
    if (!pc || *pc != L.identity())
      fail(4, "word " + word_to_string(w));
  }
  return rep;
}

bool is_partial_subgroup(const PartialGroup& L, const ElemList& H) {
  if (!contains(H, L.identity())) return false;
  for (Elem h : H)
    if (!contains(H, L.inv(h))) return false;
  for (Elem a : H)
    for (Elem b : H) {
      auto v = L.eval({a, b});
      if (v && !contains(H, *v)) return false;
    }
  return true;
}

bool is_partial_normal(const PartialGroup& L, const ElemList& N) {
  if (!is_partial_subgroup(L, N))
    throw Error("not-a-partial-subgroup", "normality asked of a non-subgroup");
  for (Elem f : L.elements())
    for (Elem n : N) {
      auto v = L.try_conjugate(n, f);
      if (v && !contains(N, *v)) return false;
    }
  return true;
}

ElemList partial_subgroup_closure(const PartialGroup& L, const ElemList& seed) {
  ElemList cur = seed;
  insert_sorted(cur, L.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    ElemList add;
    for (Elem a : cur)
      if (!contains(cur, L.inv(a))) add.push_back(L.inv(a));
    for (Elem a : cur)
      for (Elem b : cur) {
        auto v = L.eval({a, b});
        if (v && !contains(cur, *v)) add.push_back(*v);
      }
    if (!add.empty()) {
      cur = set_union(cur, make_set(std::move(add)));
      grew = true;
    }
  }
  return cur;
}

}  // namespace loclab
