#ifndef PPART_EXCEPTIONAL_HPP
#define PPART_EXCEPTIONAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppart/graph.hpp"

namespace ppart {

// The graphs excluded from the main partition theorem: the single edge K2,
// the 5-vertex graph F5, two finite families on 11 and 12 vertices (F11,
// F12, parametrized by a set L of optional edges), and the H family
// H_{s,t} / H^-_{s,t} for 2 <= s <= t (one graph per order from 6 up).
//
// Canonical vertex numbering used by generate():
//   K2:  0-1.
//   F5:  a=0, b1..b4=1..4.
//   F11: a=0, b1=1, b2=2, c1..c8=3..10.
//   F12: a=0, b1=1, b2=2, c1..c9=3..11.
//   H:   a=0, b=1, c1=2, c2=3, then S1 (s-1 vertices), then S2 (t-1).
struct ExceptionalClass {
  enum class Kind { K2, F5, F11, F12, H };
  Kind kind = Kind::K2;

  // F11/F12: which optional edges of L are present.
  bool l_ab1 = false, l_ab2 = false;
  // F12 only; at least one of these two must be present.
  bool l_ac9 = false, l_b2c9 = false;

  // H family; minus_variant drops the edge ab.
  int s = 0, t = 0;
  bool minus_variant = false;

  static ExceptionalClass k2();
  static ExceptionalClass f5();
  static ExceptionalClass f11(bool ab1, bool ab2);
  static ExceptionalClass f12(bool ab1, bool ab2, bool ac9, bool b2c9);
  static ExceptionalClass h(int s, int t, bool minus = false);

  // True for H with s == t (the subfamily that survives in the pi2 and
  // sigma2 corollaries).
  bool is_balanced_h() const { return kind == Kind::H && s == t; }

  std::string name() const;  // "K2", "F5", "F11{ab1}", "H(3,4)", "H-(3,4)", ...
  bool operator==(const ExceptionalClass&) const = default;
};

// Builds the canonical labeled graph of the class; throws on invalid
// parameters (bad s/t range, F12 without an edge at c9).
Graph generate(const ExceptionalClass& c);

// All exceptional classes of order n with their canonical graphs.  F11 and
// F12 are enumerated as labeled L-variants (4 and 12); the F11 variants
// {ab1} and {ab2} are isomorphic, so n = 11 has 3 classes up to isomorphism.
std::vector<std::pair<ExceptionalClass, Graph>> enumerate_family(int n);

// Isomorphism test against the family; H classes come back with s <= t.
std::optional<ExceptionalClass> recognize(const Graph& g);

}  // namespace ppart

#endif
