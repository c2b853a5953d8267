#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/bitset.hpp"
#include "qf/error.hpp"

namespace qf {

using Elem = int;

inline constexpr int kDefaultSizeCap = 4096;

// Finite poset over named elements. Order queries are bitset lookups.
struct FinitePoset {
  std::vector<std::string> names;
  std::vector<Bitset> up;    // up[i] = { j : i <= j }
  std::vector<Bitset> down;  // down[i] = { j : j <= i }

  int size() const { return static_cast<int>(names.size()); }
  bool leq(Elem a, Elem b) const { return up[a].test(static_cast<std::size_t>(b)); }

  Elem require(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    fail("UnknownElement", name);
  }

  // Covering relation: b covers a iff a < b with nothing strictly between.
  bool covers(Elem a, Elem b) const {
    if (a == b || !leq(a, b)) return false;
    for (int c = 0; c < size(); ++c)
      if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
    return true;
  }

  // Height = length of a longest chain from a minimal element.
  std::vector<int> heights() const {
    int n = size();
    std::vector<int> h(n, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
          if (a != b && leq(a, b) && h[b] < h[a] + 1) {
            h[b] = h[a] + 1;
            changed = true;
          }
    }
    return h;
  }
};

// Validated finite lattice: poset with total join/meet tables and bounds.
struct FiniteLattice : FinitePoset {
  std::vector<Elem> join_table;  // n*n, row-major
  std::vector<Elem> meet_table;
  Elem bottom = 0;
  Elem top = 0;

  Elem join(Elem a, Elem b) const { return join_table[static_cast<std::size_t>(a) * names.size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_table[static_cast<std::size_t>(a) * names.size() + b]; }

  template <class It>
  Elem join_all(It first, It last) const {
    Elem acc = bottom;
    for (; first != last; ++first) acc = join(acc, *first);
    return acc;
  }
  Elem join_set(const Bitset& s) const {
    Elem acc = bottom;
    s.for_each([&](std::size_t i) { acc = join(acc, static_cast<Elem>(i)); });
    return acc;
  }
  Elem meet_set(const Bitset& s) const {
    Elem acc = top;
    s.for_each([&](std::size_t i) { acc = meet(acc, static_cast<Elem>(i)); });
    return acc;
  }
};

inline FinitePoset build_poset(const std::vector<std::string>& elements,
                               const std::vector<std::pair<Elem, Elem>>& leq_pairs,
                               int size_cap = kDefaultSizeCap) {
  if (elements.empty()) fail("NotAPartialOrder", "empty element list");
  int n = static_cast<int>(elements.size());
  if (n > size_cap) fail("SizeCapExceeded", "poset has " + std::to_string(n) + " elements, cap " + std::to_string(size_cap));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (elements[i] == elements[j]) fail("NotAPartialOrder", "duplicate element name " + elements[i]);

  std::vector<Bitset> up(n, Bitset(static_cast<std::size_t>(n)));
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail("UnknownElement", "leq pair index out of range");
    up[a].set(static_cast<std::size_t>(b));
  }
  // The diagonal is implied; antisymmetry and transitivity are checked
  // strictly, with no closure taken.
  for (int i = 0; i < n; ++i) up[i].set(static_cast<std::size_t>(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && up[i].test(static_cast<std::size_t>(j)) && up[j].test(static_cast<std::size_t>(i)))
        fail("NotAPartialOrder", "antisymmetry fails on " + elements[i] + ", " + elements[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && up[i].test(static_cast<std::size_t>(j)) && !up[j].subset_of(up[i]))
        fail("NotAPartialOrder",
             "transitivity fails through " + elements[i] + " <= " + elements[j]);

  FinitePoset p;
  p.names = elements;
  p.up = std::move(up);
  p.down.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.up[i].test(static_cast<std::size_t>(j))) p.down[j].set(static_cast<std::size_t>(i));
  return p;
}

inline FiniteLattice build_lattice(const std::vector<std::string>& elements,
                                   const std::vector<std::pair<Elem, Elem>>& leq_pairs,
                                   int size_cap = kDefaultSizeCap) {
  FinitePoset p = build_poset(elements, leq_pairs, size_cap);
  int n = p.size();
  FiniteLattice L;
  static_cast<FinitePoset&>(L) = std::move(p);
  L.join_table.assign(static_cast<std::size_t>(n) * n, 0);
  L.meet_table.assign(static_cast<std::size_t>(n) * n, 0);

  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Bitset ub = L.up[a] & L.up[b];
      Elem lub = -1;
      ub.for_each([&](std::size_t c) {
        if (ub.subset_of(L.up[c])) lub = static_cast<Elem>(c);
      });
      if (lub < 0)
        fail("NotALattice", "no least upper bound for " + L.names[a] + ", " + L.names[b]);
      Bitset lb = L.down[a] & L.down[b];
      Elem glb = -1;
      lb.for_each([&](std::size_t c) {
        if (lb.subset_of(L.down[c])) glb = static_cast<Elem>(c);
      });
      if (glb < 0)
        fail("NotALattice", "no greatest lower bound for " + L.names[a] + ", " + L.names[b]);
      L.join_table[static_cast<std::size_t>(a) * n + b] = lub;
      L.join_table[static_cast<std::size_t>(b) * n + a] = lub;
      L.meet_table[static_cast<std::size_t>(a) * n + b] = glb;
      L.meet_table[static_cast<std::size_t>(b) * n + a] = glb;
    }

  L.bottom = 0;
  L.top = 0;
  for (int i = 1; i < n; ++i) {
    L.bottom = L.meet(L.bottom, i);
    L.top = L.join(L.top, i);
  }
  return L;
}

// b covering relation as explicit pair list (a, b) with b covering a.
inline std::vector<std::pair<Elem, Elem>> covering_pairs(const FinitePoset& P) {
  std::vector<std::pair<Elem, Elem>> out;
  for (int a = 0; a < P.size(); ++a)
    for (int b = 0; b < P.size(); ++b)
      if (P.covers(a, b)) out.emplace_back(a, b);
  return out;
}

inline bool modular_pair(const FiniteLattice& L, Elem x, Elem b) {
  if (x < 0 || x >= L.size() || b < 0 || b >= L.size()) fail("UnknownElement", "modular_pair");
  for (int a = 0; a < L.size(); ++a) {
    if (!L.leq(a, b)) continue;
    if (L.join(L.meet(x, b), a) != L.meet(L.join(x, a), b)) return false;
  }
  return true;
}

// Modular pair evaluated in the opposite order.
inline bool dual_modular_pair(const FiniteLattice& L, Elem x, Elem b) {
  if (x < 0 || x >= L.size() || b < 0 || b >= L.size()) fail("UnknownElement", "dual_modular_pair");
  for (int a = 0; a < L.size(); ++a) {
    if (!L.leq(b, a)) continue;
    if (L.meet(L.join(x, b), a) != L.join(L.meet(x, a), b)) return false;
  }
  return true;
}

inline bool is_left_modular(const FiniteLattice& L, Elem x) {
  for (int b = 0; b < L.size(); ++b)
    if (!modular_pair(L, x, b)) return false;
  return true;
}
inline bool is_right_modular(const FiniteLattice& L, Elem b) {
  for (int x = 0; x < L.size(); ++x)
    if (!modular_pair(L, x, b)) return false;
  return true;
}
inline bool is_left_dual_modular(const FiniteLattice& L, Elem x) {
  for (int b = 0; b < L.size(); ++b)
    if (!dual_modular_pair(L, x, b)) return false;
  return true;
}
inline bool is_right_dual_modular(const FiniteLattice& L, Elem b) {
  for (int x = 0; x < L.size(); ++x)
    if (!dual_modular_pair(L, x, b)) return false;
  return true;
}

struct LatticeClass {
  bool distributive = false;
  bool modular = false;
};

inline LatticeClass classify(const FiniteLattice& L) {
  LatticeClass c;
  c.distributive = true;
  int n = L.size();
  for (int x = 0; x < n && c.distributive; ++x)
    for (int y = 0; y < n && c.distributive; ++y)
      for (int z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
          c.distributive = false;
          break;
        }
  c.modular = true;
  for (int x = 0; x < n && c.modular; ++x)
    for (int b = 0; b < n; ++b)
      if (!modular_pair(L, x, b)) {
        c.modular = false;
        break;
      }
  return c;
}

// Join-irreducible elements: j != bottom with j = a v b implying j in {a, b}.
// In a finite lattice these are the elements with exactly one lower cover.
inline std::vector<Elem> join_irreducibles(const FiniteLattice& L) {
  std::vector<Elem> out;
  for (int j = 0; j < L.size(); ++j) {
    if (j == L.bottom) continue;
    bool irr = true;
    for (int a = 0; a < L.size() && irr; ++a)
      for (int b = 0; b < L.size(); ++b)
        if (L.join(a, b) == j && a != j && b != j) {
          irr = false;
          break;
        }
    if (irr) out.push_back(j);
  }
  // Every element must be the join of the irreducibles below it.
  for (int x = 0; x < L.size(); ++x) {
    Elem acc = L.bottom;
    for (Elem j : out)
      if (L.leq(j, x)) acc = L.join(acc, j);
    if (acc != x) fail("NotALattice", "join-irreducible decomposition failed for " + L.names[x]);
  }
  return out;
}

// Irreducibles below x, as a bitset over element indices.
inline Bitset irreducibles_below(const FiniteLattice& L, const std::vector<Elem>& irr, Elem x) {
  Bitset s(static_cast<std::size_t>(L.size()));
  for (Elem j : irr)
    if (L.leq(j, x)) s.set(static_cast<std::size_t>(j));
  return s;
}

// Order isomorphism search (backtracking on height profile). Returns the
// element map L1 -> L2 if one exists.
inline std::optional<std::vector<Elem>> find_order_isomorphism(const FiniteLattice& A,
                                                               const FiniteLattice& B) {
  if (A.size() != B.size()) return std::nullopt;
  int n = A.size();
  auto ha = A.heights(), hb = B.heights();
  std::vector<Elem> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  // Order A's elements by (height, index) for stable search.
  std::vector<Elem> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return std::make_pair(ha[a], a) < std::make_pair(ha[b], b);
  });
  std::function<bool(int)> go = [&](int k) -> bool {
    if (k == n) return true;
    Elem a = order[static_cast<std::size_t>(k)];
    for (int b = 0; b < n; ++b) {
      if (used[static_cast<std::size_t>(b)] || ha[a] != hb[b]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        Elem a2 = order[static_cast<std::size_t>(j)];
        Elem b2 = map[static_cast<std::size_t>(a2)];
        if (A.leq(a, a2) != B.leq(b, b2) || A.leq(a2, a) != B.leq(b2, b)) ok = false;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(a)] = b;
      used[static_cast<std::size_t>(b)] = true;
      if (go(k + 1)) return true;
      map[static_cast<std::size_t>(a)] = -1;
      used[static_cast<std::size_t>(b)] = false;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

}  // namespace qf
