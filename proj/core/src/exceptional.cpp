#include "ppart/exceptional.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppart/isomorphism.hpp"

namespace ppart {

ExceptionalClass ExceptionalClass::k2() {
  ExceptionalClass c;
  c.kind = Kind::K2;
  return c;
}

ExceptionalClass ExceptionalClass::f5() {
  ExceptionalClass c;
  c.kind = Kind::F5;
  return c;
}

ExceptionalClass ExceptionalClass::f11(bool ab1, bool ab2) {
  ExceptionalClass c;
  c.kind = Kind::F11;
  c.l_ab1 = ab1;
  c.l_ab2 = ab2;
  return c;
}

ExceptionalClass ExceptionalClass::f12(bool ab1, bool ab2, bool ac9,
                                       bool b2c9) {
  ExceptionalClass c;
  c.kind = Kind::F12;
  c.l_ab1 = ab1;
  c.l_ab2 = ab2;
  c.l_ac9 = ac9;
  c.l_b2c9 = b2c9;
  return c;
}

ExceptionalClass ExceptionalClass::h(int s, int t, bool minus) {
  ExceptionalClass c;
  c.kind = Kind::H;
  c.s = s;
  c.t = t;
  c.minus_variant = minus;
  return c;
}

std::string ExceptionalClass::name() const {
  switch (kind) {
    case Kind::K2: return "K2";
    case Kind::F5: return "F5";
    case Kind::F11:
    case Kind::F12: {
      std::string out = kind == Kind::F11 ? "F11{" : "F12{";
      const char* sep = "";
      if (l_ab1) { out += sep; out += "ab1"; sep = ","; }
      if (l_ab2) { out += sep; out += "ab2"; sep = ","; }
      if (l_ac9) { out += sep; out += "ac9"; sep = ","; }
      if (l_b2c9) { out += sep; out += "b2c9"; sep = ","; }
      return out + "}";
    }
    case Kind::H:
      return std::string("H") + (minus_variant ? "-" : "") + "(" +
             std::to_string(s) + "," + std::to_string(t) + ")";
  }
  return "?";
}

Graph generate(const ExceptionalClass& c) {
  switch (c.kind) {
    case ExceptionalClass::Kind::K2:
      return Graph::from_edges(2, {{0, 1}});

    case ExceptionalClass::Kind::F5:
      // a=0 joined to b1..b4; the two edges b1b2, b3b4
      return Graph::from_edges(
          5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});

    case ExceptionalClass::Kind::F11: {
      // a=0, b1=1, b2=2, c1..c8=3..10
      Graph g(11);
      for (int ci = 3; ci <= 10; ++ci) g.add_edge(0, ci);
      for (int ci = 3; ci <= 6; ++ci) g.add_edge(1, ci);
      for (int ci = 7; ci <= 10; ++ci) g.add_edge(2, ci);
      g.add_edge(3, 4);
      g.add_edge(5, 6);
      g.add_edge(7, 8);
      g.add_edge(9, 10);
      if (c.l_ab1) g.add_edge(0, 1);
      if (c.l_ab2) g.add_edge(0, 2);
      if (c.l_ac9 || c.l_b2c9)
        throw std::invalid_argument("F11 has no c9 edges");
      return g;
    }

    case ExceptionalClass::Kind::F12: {
      // a=0, b1=1, b2=2, c1..c9=3..11; c9 hangs on the pair c7,c8
      if (!c.l_ac9 && !c.l_b2c9)
        throw std::invalid_argument("F12 needs ac9 or b2c9 in L");
      Graph g(12);
      for (int ci = 3; ci <= 10; ++ci) g.add_edge(0, ci);
      for (int ci = 3; ci <= 6; ++ci) g.add_edge(1, ci);
      for (int ci = 7; ci <= 10; ++ci) g.add_edge(2, ci);
      g.add_edge(3, 4);
      g.add_edge(5, 6);
      g.add_edge(7, 8);
      g.add_edge(9, 11);
      g.add_edge(10, 11);
      if (c.l_ab1) g.add_edge(0, 1);
      if (c.l_ab2) g.add_edge(0, 2);
      if (c.l_ac9) g.add_edge(0, 11);
      if (c.l_b2c9) g.add_edge(2, 11);
      return g;
    }

    case ExceptionalClass::Kind::H: {
      if (c.s < 2 || c.s > c.t)
        throw std::invalid_argument("H needs 2 <= s <= t");
      // a=0, b=1, c1=2, c2=3, S1 next s-1 ids, S2 next t-1 ids
      const int n = c.s + c.t + 2;
      Graph g(n);
      const int s1_lo = 4, s1_hi = 4 + c.s - 1;      // [s1_lo, s1_hi)
      const int s2_lo = s1_hi, s2_hi = s2_lo + c.t - 1;
      for (int u = s1_lo; u < s1_hi; ++u)
        for (int v = u + 1; v < s1_hi; ++v) g.add_edge(u, v);
      for (int u = s2_lo; u < s2_hi; ++u)
        for (int v = u + 1; v < s2_hi; ++v) g.add_edge(u, v);
      for (int u = s1_lo; u < s2_hi; ++u) {
        g.add_edge(0, u);
        g.add_edge(1, u);
      }
      if (!c.minus_variant) g.add_edge(0, 1);
      g.add_edge(0, 2);
      g.add_edge(0, 3);
      g.add_edge(2, 3);
      return g;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::pair<ExceptionalClass, Graph>> enumerate_family(int n) {
  std::vector<std::pair<ExceptionalClass, Graph>> out;
  auto add = [&](const ExceptionalClass& c) {
    out.emplace_back(c, generate(c));
  };
  if (n == 2) add(ExceptionalClass::k2());
  if (n == 5) add(ExceptionalClass::f5());
  if (n == 11)
    for (int ab1 = 0; ab1 <= 1; ++ab1)
      for (int ab2 = 0; ab2 <= 1; ++ab2)
        add(ExceptionalClass::f11(ab1, ab2));
  if (n == 12)
    for (int ab1 = 0; ab1 <= 1; ++ab1)
      for (int ab2 = 0; ab2 <= 1; ++ab2)
        for (int ac9 = 0; ac9 <= 1; ++ac9)
          for (int b2c9 = 0; b2c9 <= 1; ++b2c9)
            if (ac9 || b2c9)
              add(ExceptionalClass::f12(ab1, ab2, ac9, b2c9));
  for (int s = 2; s + s <= n - 2; ++s) {
    int t = n - 2 - s;
    add(ExceptionalClass::h(s, t, false));
    add(ExceptionalClass::h(s, t, true));
  }
  return out;
}

namespace {

// Structural matcher for H_{s,t} / H^-_{s,t}.  Looks for the degree-2
// triangle pair {c1, c2} with apex a, then takes the rest apart.
std::optional<ExceptionalClass> recognize_h(const Graph& g) {
  const int n = g.order();
  if (n < 6) return std::nullopt;
  for (int c1 = 0; c1 < n; ++c1) {
    if (g.degree(c1) != 2) continue;
    for (int c2 = c1 + 1; c2 < n; ++c2) {
      if (g.degree(c2) != 2 || !g.adjacent(c1, c2)) continue;
      auto n1 = g.neighbors(c1), n2 = g.neighbors(c2);
      int a1 = n1[0] == c2 ? n1[1] : n1[0];
      int a2 = n2[0] == c1 ? n2[1] : n2[0];
      if (a1 != a2) continue;
      const int a = a1;

      std::vector<int> rest;  // everything but the a/c1/c2 triangle
      for (int v = 0; v < n; ++v)
        if (v != a && v != c1 && v != c2) rest.push_back(v);

      std::vector<int> missing;  // rest-vertices a is not adjacent to
      for (int v : rest)
        if (!g.adjacent(a, v)) missing.push_back(v);
      if (missing.size() > 1) continue;
      const bool minus = missing.size() == 1;

      // candidates for b: in the minus variant it is the vertex a misses
      std::vector<int> b_cands = minus ? missing : rest;
      for (int b : b_cands) {
        // b must see exactly rest\{b}, plus a unless minus
        if (g.degree(b) !=
            static_cast<int>(rest.size()) - 1 + (minus ? 0 : 1))
          continue;
        bool ok = true;
        for (int v : rest)
          if (v != b && !g.adjacent(b, v)) {
            ok = false;
            break;
          }
        if (!ok || g.adjacent(b, c1) || g.adjacent(b, c2)) continue;
        if (minus == g.adjacent(a, b)) continue;

        // rest \ {b} must split into exactly two cliques
        std::vector<int> q;
        for (int v : rest)
          if (v != b) q.push_back(v);
        auto comps = components(induced_subgraph(g, q));
        if (comps.size() != 2) continue;
        bool cliques = true;
        for (const auto& comp : comps) {
          for (size_t i = 0; i < comp.size() && cliques; ++i)
            for (size_t j = i + 1; j < comp.size() && cliques; ++j)
              if (!g.adjacent(q[comp[i]], q[comp[j]])) cliques = false;
        }
        if (!cliques) continue;

        // exact degree check for the clique vertices: inside their clique,
        // plus a and b only
        int k1 = static_cast<int>(comps[0].size());
        int k2 = static_cast<int>(comps[1].size());
        bool degrees_ok = true;
        for (int ci = 0; ci < 2 && degrees_ok; ++ci)
          for (int idx : comps[ci])
            if (g.degree(q[idx]) !=
                static_cast<int>(comps[ci].size()) - 1 + 2) {
              degrees_ok = false;
              break;
            }
        if (!degrees_ok) continue;

        int s = std::min(k1, k2) + 1, t = std::max(k1, k2) + 1;
        return ExceptionalClass::h(s, t, minus);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExceptionalClass> recognize(const Graph& g) {
  const int n = g.order();
  if (n == 2 && g.edge_count() == 1) return ExceptionalClass::k2();
  if (n == 5) {
    if (isomorphic(g, generate(ExceptionalClass::f5())))
      return ExceptionalClass::f5();
    return std::nullopt;
  }
  if (n == 11 || n == 12) {
    for (const auto& [cls, h] : enumerate_family(n)) {
      if (cls.kind != ExceptionalClass::Kind::F11 &&
          cls.kind != ExceptionalClass::Kind::F12)
        break;  // H entries follow the fixed-family entries
      if (isomorphic(g, h)) return cls;
    }
  }
  return recognize_h(g);
}

}  // namespace ppart
