#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qf/lattice.hpp"

namespace qf {

// Monotone map between finite lattices, given by its value table. No
// preservation property is enforced here; SupMorphism adds join preservation.
struct LatticeMap {
  const FiniteLattice* source = nullptr;
  const FiniteLattice* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[static_cast<std::size_t>(x)]; }
};

struct SupMorphism : LatticeMap {
  SupMorphism() = default;
  SupMorphism(const FiniteLattice& src, const FiniteLattice& tgt, std::vector<Elem> table) {
    source = &src;
    target = &tgt;
    map = std::move(table);
    if (map.size() != static_cast<std::size_t>(src.size()))
      fail("NotJoinPreserving", "map table size mismatch");
    if ((*this)(src.bottom) != tgt.bottom)
      fail("NotJoinPreserving", "bottom not preserved");
    for (int a = 0; a < src.size(); ++a)
      for (int b = 0; b < src.size(); ++b)
        if ((*this)(src.join(a, b)) != tgt.join((*this)(a), (*this)(b)))
          fail("NotJoinPreserving",
               "f(" + src.names[a] + " v " + src.names[b] + ") != f(" + src.names[a] + ") v f(" +
                   src.names[b] + ")");
  }
};

inline SupMorphism identity_morphism(const FiniteLattice& L) {
  std::vector<Elem> t(static_cast<std::size_t>(L.size()));
  for (int i = 0; i < L.size(); ++i) t[static_cast<std::size_t>(i)] = i;
  return SupMorphism(L, L, std::move(t));
}

inline SupMorphism compose(const SupMorphism& g, const SupMorphism& f) {
  std::vector<Elem> t(static_cast<std::size_t>(f.source->size()));
  for (int x = 0; x < f.source->size(); ++x) t[static_cast<std::size_t>(x)] = g(f(x));
  return SupMorphism(*f.source, *g.target, std::move(t));
}

// Right adjoint f_*(y) = v{ x : f(x) <= y }. Meet-preserving.
inline LatticeMap right_adjoint(const SupMorphism& f) {
  const FiniteLattice& S = *f.source;
  const FiniteLattice& T = *f.target;
  LatticeMap g;
  g.source = &T;
  g.target = &S;
  g.map.assign(static_cast<std::size_t>(T.size()), S.bottom);
  for (int y = 0; y < T.size(); ++y) {
    Elem acc = S.bottom;
    for (int x = 0; x < S.size(); ++x)
      if (T.leq(f(x), y)) acc = S.join(acc, x);
    g.map[static_cast<std::size_t>(y)] = acc;
  }
  return g;
}

// Left adjoint of a meet-preserving map g: g_!(x) = ^{ y : x <= g(y) }.
inline LatticeMap left_adjoint(const LatticeMap& g) {
  const FiniteLattice& S = *g.source;
  const FiniteLattice& T = *g.target;
  LatticeMap f;
  f.source = &T;
  f.target = &S;
  f.map.assign(static_cast<std::size_t>(T.size()), S.top);
  for (int x = 0; x < T.size(); ++x) {
    Elem acc = S.top;
    for (int y = 0; y < S.size(); ++y)
      if (T.leq(x, g.map[static_cast<std::size_t>(y)])) acc = S.meet(acc, y);
    f.map[static_cast<std::size_t>(x)] = acc;
  }
  return f;
}

inline bool adjunction_holds(const SupMorphism& f, const LatticeMap& fstar) {
  for (int x = 0; x < f.source->size(); ++x)
    for (int y = 0; y < f.target->size(); ++y)
      if (f.target->leq(f(x), y) != f.source->leq(x, fstar.map[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

struct NormalityProfile {
  bool normal_mono = false;
  bool normal_epi = false;
  bool mono_normal = false;
  bool epi_normal = false;
  bool composably_mono_normal = false;
  bool composably_epi_normal = false;
  bool strict = false;
  bool composably_strict = false;
};

inline NormalityProfile normality_profile(const SupMorphism& f) {
  const FiniteLattice& S = *f.source;
  const FiniteLattice& T = *f.target;
  LatticeMap fs = right_adjoint(f);
  auto fstar = [&](Elem y) { return fs.map[static_cast<std::size_t>(y)]; };

  Bitset image(static_cast<std::size_t>(T.size()));
  for (int x = 0; x < S.size(); ++x) image.set(static_cast<std::size_t>(f(x)));
  bool injective = image.count() == static_cast<std::size_t>(S.size());
  bool surjective = image.count() == static_cast<std::size_t>(T.size());

  bool down_closed = true;
  image.for_each([&](std::size_t y) {
    for (int z = 0; z < T.size(); ++z)
      if (T.leq(z, static_cast<Elem>(y)) && !image.test(static_cast<std::size_t>(z))) down_closed = false;
  });

  // Kernel congruence generated by (0, a) with a = f_*(0):
  // f(x) = f(y) iff x v a = y v a.
  Elem a0 = fstar(T.bottom);
  bool kernel_closed = true;
  for (int x = 0; x < S.size() && kernel_closed; ++x)
    for (int y = 0; y < S.size(); ++y)
      if ((f(x) == f(y)) != (S.join(x, a0) == S.join(y, a0))) {
        kernel_closed = false;
        break;
      }

  NormalityProfile p;
  p.mono_normal = down_closed;
  p.epi_normal = kernel_closed;
  p.normal_mono = injective && down_closed;
  p.normal_epi = surjective && kernel_closed;
  p.strict = p.mono_normal && p.epi_normal;

  // e o f epi-normal for every normal epi e out of the target, i.e.
  // x v f_*(a) >= f_*(f(x) v a) for all a in target, x in source.
  p.composably_epi_normal = true;
  for (int a = 0; a < T.size() && p.composably_epi_normal; ++a)
    for (int x = 0; x < S.size(); ++x)
      if (!S.leq(fstar(T.join(f(x), a)), S.join(x, fstar(a)))) {
        p.composably_epi_normal = false;
        break;
      }

  // f o m mono-normal for every normal mono m into the source, i.e.
  // x ^ f(b) <= f(f_*(x) ^ b) for all b in source, x in target.
  p.composably_mono_normal = true;
  for (int b = 0; b < S.size() && p.composably_mono_normal; ++b)
    for (int x = 0; x < T.size(); ++x)
      if (!T.leq(T.meet(x, f(b)), f(S.meet(fstar(x), b)))) {
        p.composably_mono_normal = false;
        break;
      }

  p.composably_strict = p.composably_mono_normal && p.composably_epi_normal;
  return p;
}

// Totally-below relation: b <<< a iff every S with vS >= a contains d >= b.
// Quantified over subsets of join-irreducibles, which is equivalent: any S
// can be replaced by the irreducibles below its members without changing the
// join, and a witness irreducible lifts to a witness member.
inline std::vector<Bitset> totally_below(const FiniteLattice& L) {
  int n = L.size();
  auto irr = join_irreducibles(L);
  int k = static_cast<int>(irr.size());
  if (k > 24) fail("SizeCapExceeded", "totally_below: too many join-irreducibles");
  std::vector<Bitset> below(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  // below[a] = { b : b <<< a }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool tb = true;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k) && tb; ++mask) {
        Elem s = L.bottom;
        for (int i = 0; i < k; ++i)
          if (mask & (std::uint64_t(1) << i)) s = L.join(s, irr[static_cast<std::size_t>(i)]);
        if (!L.leq(a, s)) continue;
        bool witness = false;
        for (int i = 0; i < k && !witness; ++i)
          if ((mask & (std::uint64_t(1) << i)) && L.leq(b, irr[static_cast<std::size_t>(i)])) witness = true;
        if (!witness) tb = false;
      }
      if (tb) below[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    }
  return below;
}

// Reference definition quantifying over all subsets; used as an oracle in
// tests for small lattices.
inline bool totally_below_full(const FiniteLattice& L, Elem b, Elem a) {
  int n = L.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Elem s = L.bottom;
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) s = L.join(s, i);
    if (!L.leq(a, s)) continue;
    bool witness = false;
    for (int i = 0; i < n && !witness; ++i)
      if ((mask & (std::uint64_t(1) << i)) && L.leq(b, i)) witness = true;
    if (!witness) return false;
  }
  return true;
}

inline bool is_supercontinuous(const FiniteLattice& L) {
  auto below = totally_below(L);
  for (int a = 0; a < L.size(); ++a)
    if (L.join_set(below[static_cast<std::size_t>(a)]) != a) return false;
  return true;
}

inline FiniteLattice omega() {
  return build_lattice({"0", "1"}, {{0, 1}});
}

// Dual basis (r_x), (sigma_x): r_x = x and sigma_x(a) = [[ x <<< a ]].
struct DualBasis {
  std::vector<Elem> r;
  FiniteLattice truth;                       // 2-chain
  std::vector<std::vector<Elem>> sigma;      // sigma[x][a] in truth
};

inline DualBasis dual_basis(const FiniteLattice& L) {
  if (!is_supercontinuous(L)) fail("NotSupercontinuous", "dual basis requires a supercontinuous lattice");
  auto below = totally_below(L);
  DualBasis d;
  d.truth = omega();
  d.r.resize(static_cast<std::size_t>(L.size()));
  d.sigma.assign(static_cast<std::size_t>(L.size()),
                 std::vector<Elem>(static_cast<std::size_t>(L.size()), 0));
  for (int x = 0; x < L.size(); ++x) {
    d.r[static_cast<std::size_t>(x)] = x;
    for (int a = 0; a < L.size(); ++a)
      d.sigma[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] =
          below[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(x)) ? 1 : 0;
  }
  // a = v{ r_x : sigma_x(a) } for all a.
  for (int a = 0; a < L.size(); ++a) {
    Elem acc = L.bottom;
    for (int x = 0; x < L.size(); ++x)
      if (d.sigma[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)]) acc = L.join(acc, x);
    if (acc != a) fail("NotSupercontinuous", "dual basis identity failed");
  }
  return d;
}

struct DownsetLattice {
  FiniteLattice lattice;
  std::vector<Bitset> downsets;  // element index -> subset of P
  // Defined when the input poset is itself a lattice: sends D to vD.
  std::vector<Elem> join_map;
};

inline std::string downset_name(const FinitePoset& P, const Bitset& d) {
  if (d.none()) return "{}";
  std::string s = "{";
  bool first = true;
  // Name by maximal members.
  d.for_each([&](std::size_t i) {
    bool maximal = true;
    d.for_each([&](std::size_t j) {
      if (i != j && P.leq(static_cast<Elem>(i), static_cast<Elem>(j))) maximal = false;
    });
    if (!maximal) return;
    if (!first) s += ",";
    s += P.names[i];
    first = false;
  });
  return s + "}";
}

inline DownsetLattice downset_lattice(const FinitePoset& P, int size_cap = kDefaultSizeCap) {
  int n = P.size();
  // Downsets = unions of principal downsets, plus the empty set.
  std::vector<Bitset> all;
  std::unordered_map<Bitset, int, BitsetHash> seen;
  auto add = [&](const Bitset& b) {
    if (seen.emplace(b, static_cast<int>(all.size())).second) all.push_back(b);
  };
  add(Bitset(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) add(P.down[static_cast<std::size_t>(i)]);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      Bitset u = all[i] | P.down[static_cast<std::size_t>(j)];
      if (static_cast<int>(all.size()) >= size_cap && !seen.count(u))
        fail("SizeCapExceeded", "downset lattice exceeds cap");
      add(u);
    }
  }
  std::sort(all.begin(), all.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  DownsetLattice D;
  D.downsets = all;
  std::vector<std::string> names;
  names.reserve(all.size());
  for (auto& d : all) names.push_back(downset_name(P, d));
  std::vector<std::pair<Elem, Elem>> leq;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (all[i].subset_of(all[j])) leq.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
  D.lattice = build_lattice(names, leq, size_cap);
  return D;
}

inline DownsetLattice downset_lattice(const FiniteLattice& L, int size_cap = kDefaultSizeCap) {
  DownsetLattice D = downset_lattice(static_cast<const FinitePoset&>(L), size_cap);
  D.join_map.resize(D.downsets.size());
  for (std::size_t i = 0; i < D.downsets.size(); ++i)
    D.join_map[i] = L.join_set(D.downsets[i]);
  return D;
}

}  // namespace qf
