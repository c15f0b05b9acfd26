#include "doctest.h"

#include <random>

#include "lamina/curve.hpp"
#include "lamina/mcg.hpp"
#include "lamina/placement.hpp"

using namespace lamina;

namespace {

MappingClassWord W(SurfaceKind s, const std::string& text) {
  return MappingClassWord::parse(s, text);
}

// deterministic corpus of curves: generator images of the standard curves
std::vector<Curve> corpus(SurfaceKind s, int n_words, unsigned seed) {
  std::mt19937 rng(seed);
  int npairs = (s == kFiveHoledSphere) ? 5 : 3;
  int ngen = generator_count(s);
  std::vector<Curve> out;
  for (int i = 0; i < npairs; ++i) out.push_back(standard_curve(s, i));
  for (int i = 0; i < n_words; ++i) {
    Curve base = out[rng() % npairs];
    MappingClassWord w{s, {}};
    int len = 1 + (int)(rng() % 6);
    for (int j = 0; j < len; ++j) w.toks.push_back((int)(rng() % ngen));
    out.push_back(apply_word(w, base));
  }
  return out;
}

bool words_agree(SurfaceKind s, const std::string& w1, const std::string& w2,
                 const std::vector<Curve>& cs) {
  auto a = W(s, w1), b = W(s, w2);
  for (const auto& c : cs)
    if (apply_word(a, c) != apply_word(b, c)) return false;
  return true;
}

} // namespace

TEST_CASE("word parsing") {
  auto w = W(kFiveHoledSphere, "s1 S2 s3");
  CHECK(w.size() == 3);
  CHECK(w.str() == "s1 S2 s3");
  CHECK_THROWS_AS(W(kFiveHoledSphere, "s9"), Error);
  CHECK_THROWS_AS(W(kFourHoledSphere, "s4"), Error);
  CHECK(w.inverse().str() == "S3 s2 S1");
}

TEST_CASE("identity and inverse cancellation") {
  auto cs = corpus(kFiveHoledSphere, 20, 11);
  for (const auto& c : cs) {
    CHECK(apply_word(W(kFiveHoledSphere, ""), c) == c);
    CHECK(apply_word(W(kFiveHoledSphere, "s1 S1"), c) == c);
    CHECK(apply_word(W(kFiveHoledSphere, "S4 s4"), c) == c);
  }
}

TEST_CASE("braid and sphere relations on S05") {
  SurfaceKind s = kFiveHoledSphere;
  auto cs = corpus(s, 40, 7);
  CHECK(words_agree(s, "s1 s2 s1", "s2 s1 s2", cs));
  CHECK(words_agree(s, "s2 s3 s2", "s3 s2 s3", cs));
  CHECK(words_agree(s, "s3 s4 s3", "s4 s3 s4", cs));
  CHECK(words_agree(s, "s1 s3", "s3 s1", cs));
  CHECK(words_agree(s, "s1 s4", "s4 s1", cs));
  CHECK(words_agree(s, "s2 s4", "s4 s2", cs));
  CHECK(words_agree(s, "s1 s2 s3 s4 s4 s3 s2 s1", "", cs));
  std::string rot5;
  for (int i = 0; i < 5; ++i) rot5 += "s1 s2 s3 s4 ";
  CHECK(words_agree(s, rot5, "", cs));
}

TEST_CASE("braid and sphere relations on S04") {
  SurfaceKind s = kFourHoledSphere;
  auto cs = corpus(s, 30, 13);
  CHECK(words_agree(s, "s1 s2 s1", "s2 s1 s2", cs));
  CHECK(words_agree(s, "s2 s3 s2", "s3 s2 s3", cs));
  CHECK(words_agree(s, "s1 s3", "s3 s1", cs));
  CHECK(words_agree(s, "s1 s2 s3 s3 s2 s1", "", cs));
  std::string rot4;
  for (int i = 0; i < 4; ++i) rot4 += "s1 s2 s3 ";
  CHECK(words_agree(s, rot4, "", cs));
}

TEST_CASE("generators preserve intersection numbers") {
  SurfaceKind s = kFiveHoledSphere;
  auto cs = corpus(s, 12, 3);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Curve& a = cs[rng() % cs.size()];
    const Curve& b = cs[rng() % cs.size()];
    int tok = (int)(rng() % generator_count(s));
    Curve a2 = Curve::from_coords(s, apply_generator(tok, a.as_multicurve()).w);
    Curve b2 = Curve::from_coords(s, apply_generator(tok, b.as_multicurve()).w);
    CHECK(intersection_number(a2, b2) == intersection_number(a, b));
  }
}

TEST_CASE("half twist fixes its curve and acts as expected") {
  SurfaceKind s = kFiveHoledSphere;
  Curve c01 = standard_curve(s, 0);
  Curve c12 = standard_curve(s, 1);
  Curve c23 = standard_curve(s, 2);
  auto s1 = W(s, "s1");
  CHECK(apply_word(s1, c01) == c01);
  CHECK(apply_word(s1, c23) == c23);
  // s1(c12) crosses c12 (twist growth starts immediately)
  Curve img = apply_word(s1, c12);
  CHECK(intersection_number(img, c12) > 0);
  CHECK(intersection_number(img, c01) == 2);
}

TEST_CASE("twist growth is affine in the twist power") {
  SurfaceKind s = kFiveHoledSphere;
  Curve a = standard_curve(s, 1);
  Curve b = standard_curve(s, 0);
  REQUIRE(intersection_number(a, b) > 0);
  // i(s1^{2k}(a), b) should grow affinely for |k| in 1..6
  std::vector<long long> vals;
  for (int k = -6; k <= 6; ++k) {
    MappingClassWord w{s, {}};
    for (int j = 0; j < 2 * std::abs(k); ++j) w.toks.push_back(k > 0 ? 0 : 4);
    vals.push_back(intersection_number(apply_word(w, a), b));
  }
  // affine growth on each side: second differences vanish for k >= 2
  for (size_t i = 8; i + 2 < vals.size(); ++i)
    CHECK(vals[i + 2] - vals[i + 1] == vals[i + 1] - vals[i]);
  for (size_t i = 4; i >= 2; --i)
    CHECK(vals[i - 2] - vals[i - 1] == vals[i - 1] - vals[i]);
}

TEST_CASE("group action composition") {
  SurfaceKind s = kFiveHoledSphere;
  auto cs = corpus(s, 10, 23);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    MappingClassWord w1{s, {}}, w2{s, {}};
    for (int j = 0; j < 3; ++j) w1.toks.push_back((int)(rng() % 8));
    for (int j = 0; j < 3; ++j) w2.toks.push_back((int)(rng() % 8));
    const Curve& c = cs[rng() % cs.size()];
    CHECK(apply_word(w1.then(w2), c) == apply_word(w1, apply_word(w2, c)));
  }
}

TEST_CASE("normalization finds a word to the base curve") {
  SurfaceKind s = kFiveHoledSphere;
  Curve base = standard_curve(s, 0);
  auto cs = corpus(s, 25, 41);
  for (const auto& c : cs) {
    MappingClassWord n = normalize_to_base(c);
    CHECK(apply_word(n, c) == base);
  }
}

TEST_CASE("half twist and Dehn twist about an arbitrary curve") {
  SurfaceKind s = kFiveHoledSphere;
  auto cs = corpus(s, 8, 57);
  for (const auto& c : cs) {
    auto h = half_twist_word(c);
    CHECK(apply_word(h, c) == c);
    auto t = dehn_twist_word(c);
    CHECK(apply_word(t, c) == c);
    // the twist moves curves that cross c
    for (const auto& d : cs) {
      if (intersection_number(c, d) == 0) continue;
      CHECK(apply_word(t, d) != d);
      break;
    }
  }
}
