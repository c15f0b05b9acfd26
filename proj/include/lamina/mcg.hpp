#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lamina/curve.hpp"

namespace lamina {

// A word in the half-twist generators. Tokens: "s1".."s4" are the positive
// (counterclockwise) half-twists exchanging adjacent punctures (k-1,k) of
// S_{0,5}; capitals are inverses. S_{0,4} supports "s1".."s3". Words act on
// curves right-to-left: apply("s1 s2", c) = s1(s2(c)).
struct MappingClassWord {
  SurfaceKind surface;
  std::vector<int> toks; // index into the generator table for this surface

  static MappingClassWord parse(SurfaceKind s, const std::string& text);
  std::string str() const;
  MappingClassWord inverse() const;
  MappingClassWord then(const MappingClassWord& first) const; // this ∘ first
  bool empty() const { return toks.empty(); }
  size_t size() const { return toks.size(); }
};

int generator_count(SurfaceKind s); // 8 for S_{0,5}, 6 for S_{0,4}
std::string generator_token(SurfaceKind s, int tok);
int inverse_token(SurfaceKind s, int tok);

Multicurve apply_generator(int tok, const Multicurve& mc);
Multicurve apply_word(const MappingClassWord& w, const Multicurve& mc);
Curve apply_word(const MappingClassWord& w, const Curve& c);

// Reference curves around adjacent puncture pairs.
Curve standard_curve(SurfaceKind s, int pair_index); // pair (i, i+1 mod n)

// A deterministic word taking c to the base curve standard_curve(s, 0)
// (around punctures {0,1}). Throws Budget if the beam search exhausts.
MappingClassWord normalize_to_base(const Curve& c, long long node_budget = 200000);

// Word of the positive half twist about c (supported in the twice-punctured
// disk side of c), and of the positive Dehn twist about c (its square).
MappingClassWord half_twist_word(const Curve& c);
MappingClassWord dehn_twist_word(const Curve& c);

} // namespace lamina
