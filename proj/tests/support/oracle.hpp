#pragma once

// Naive reference implementations over a raw multiplication table. Nothing
// here calls into the library; sets are std::set and every quantifier is a
// plain loop, so the results can be trusted as an independent oracle.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;
using Set = std::set<int>;

inline int identity(const Table& t) {
  int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
    if (ok) return e;
  }
  return -1;
}

inline int inverse(const Table& t, int a) {
  int e = identity(t);
  for (int b = 0; b < static_cast<int>(t.size()); ++b) {
    if (t[a][b] == e) return b;
  }
  return -1;
}

inline int commutator(const Table& t, int a, int b) {
  return t[t[t[inverse(t, a)][inverse(t, b)]][a]][b];
}

inline bool is_associative(const Table& t) {
  int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

inline Set all(const Table& t) {
  Set s;
  for (int i = 0; i < static_cast<int>(t.size()); ++i) s.insert(i);
  return s;
}

// Multiply everything by everything until nothing new appears.
inline Set closure(const Table& t, const Set& seed) {
  Set s = seed;
  s.insert(identity(t));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> v(s.begin(), s.end());
    for (int a : v)
      for (int b : v)
        if (s.insert(t[a][b]).second) grew = true;
  }
  return s;
}

inline bool commute(const Table& t, int a, int b) { return t[a][b] == t[b][a]; }

inline Set centralizer(const Table& t, const Set& ambient, const Set& s) {
  Set out;
  for (int g : ambient) {
    bool ok = true;
    for (int x : s) ok = ok && commute(t, g, x);
    if (ok) out.insert(g);
  }
  return out;
}

inline Set conjugate(const Table& t, const Set& h, int g) {
  Set out;
  for (int x : h) out.insert(t[t[inverse(t, g)][x]][g]);
  return out;
}

inline Set normalizer(const Table& t, const Set& ambient, const Set& h) {
  Set out;
  for (int g : ambient)
    if (conjugate(t, h, g) == h) out.insert(g);
  return out;
}

inline Set commutator_subgroup(const Table& t, const Set& a, const Set& b) {
  Set seed;
  for (int x : a)
    for (int y : b) seed.insert(commutator(t, x, y));
  return closure(t, seed);
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool is_abelian(const Table& t, const Set& x) {
  for (int a : x)
    for (int b : x)
      if (!commute(t, a, b)) return false;
  return true;
}

inline std::vector<Set> derived_series(const Table& t, const Set& x) {
  std::vector<Set> out{x};
  for (;;) {
    auto next = commutator_subgroup(t, out.back(), out.back());
    if (next == out.back()) return out;
    out.push_back(next);
  }
}

inline bool is_solvable(const Table& t, const Set& x) { return derived_series(t, x).back().size() == 1; }

// Z_0 .. Z_n of the group x, n steps.
inline std::vector<Set> upper_central(const Table& t, const Set& x, int steps) {
  std::vector<Set> z{Set{identity(t)}};
  for (int k = 1; k <= steps; ++k) {
    Set next;
    for (int g : x) {
      bool ok = true;
      for (int y : x) ok = ok && z.back().count(commutator(t, g, y));
      if (ok) next.insert(g);
    }
    z.push_back(next);
  }
  return z;
}

// Least k with Z_k = x, or -1.
inline int nilpotency_class(const Table& t, const Set& x) {
  auto z = upper_central(t, x, static_cast<int>(x.size()));
  for (std::size_t k = 0; k < z.size(); ++k)
    if (z[k] == x) return static_cast<int>(k);
  return -1;
}

// C^0 .. C^n of h inside ambient: the domain at step a is the ambient cut
// down by the normalizers of every earlier term.
inline std::vector<Set> iterated_centralizers(const Table& t, const Set& ambient, const Set& h, int steps) {
  std::vector<Set> c{Set{identity(t)}};
  for (int a = 1; a <= steps; ++a) {
    Set domain = ambient;
    for (const auto& earlier : c) domain = intersect(domain, normalizer(t, ambient, earlier));
    Set next;
    for (int x : domain) {
      bool ok = true;
      for (int y : h) ok = ok && c.back().count(commutator(t, x, y));
      if (ok) next.insert(x);
    }
    c.push_back(next);
  }
  return c;
}

// E_0 .. E_n of h inside g.
inline std::vector<Set> envelopes(const Table& t, const Set& g, const Set& h, int steps) {
  std::vector<Set> e{g};
  for (int a = 1; a <= steps; ++a) {
    auto c = iterated_centralizers(t, e.back(), h, a);
    Set next;
    for (int x : e.back()) {
      bool ok = true;
      for (int y : c[a]) ok = ok && c[a - 1].count(commutator(t, x, y));
      if (ok) next.insert(x);
    }
    e.push_back(next);
  }
  return e;
}

// Every subgroup: start from cyclic subgroups and keep joining pairs.
inline std::vector<Set> all_subgroups(const Table& t) {
  std::set<Set> found;
  for (int x = 0; x < static_cast<int>(t.size()); ++x) found.insert(closure(t, Set{x}));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Set> v(found.begin(), found.end());
    for (const auto& a : v)
      for (const auto& b : v) {
        Set u = a;
        u.insert(b.begin(), b.end());
        if (found.insert(closure(t, u)).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

// Permutations on 0..n-1, composed left to right: (p*q)(i) = q(p(i)).
using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

// Table of the group generated by `gens`, elements in discovery order with
// the identity first.
inline Table perm_group_table(const std::vector<Perm>& gens, int degree, std::vector<Perm>* elements = nullptr) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto p = compose(elems[i], g);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  Table t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto p = compose(elems[a], elems[b]);
      t[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  if (elements) *elements = elems;
  return t;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int element_order(const Table& t, int x) {
  int e = identity(t), k = 1;
  for (int y = x; y != e; y = t[y][x]) ++k;
  return k;
}

inline std::multiset<int> order_profile(const Table& t) {
  std::multiset<int> out;
  for (int x = 0; x < static_cast<int>(t.size()); ++x) out.insert(element_order(t, x));
  return out;
}

}  // namespace oracle
