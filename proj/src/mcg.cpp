#include "lamina/mcg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <queue>

#include "lamina/gen_tables.hpp"

namespace lamina {
namespace {

const tables::GenTable* gen_table(SurfaceKind s, int& count) {
  if (s == kFiveHoledSphere) { count = 8; return tables::five_gens; }
  if (s == kFourHoledSphere) { count = 6; return tables::four_gens; }
  fail(ErrorKind::Domain, "no mapping-class generators for " + s.name());
}

constexpr long long kWeightLimit = (1LL << 61);

} // namespace

int generator_count(SurfaceKind s) {
  int n = 0;
  gen_table(s, n);
  return n;
}

std::string generator_token(SurfaceKind s, int tok) {
  int n = 0;
  const auto* g = gen_table(s, n);
  require(tok >= 0 && tok < n, ErrorKind::Usage, "bad generator index");
  return g[tok].token;
}

int inverse_token(SurfaceKind s, int tok) {
  int n = 0;
  gen_table(s, n);
  require(tok >= 0 && tok < n, ErrorKind::Usage, "bad generator index");
  int half = n / 2;
  return tok < half ? tok + half : tok - half;
}

MappingClassWord MappingClassWord::parse(SurfaceKind s, const std::string& text) {
  int n = 0;
  const auto* g = gen_table(s, n);
  MappingClassWord w{s, {}};
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace((unsigned char)c) || c == ',' || c == '.' || c == '*') {
      ++i;
      continue;
    }
    require(i + 1 < text.size(), ErrorKind::Usage,
            "truncated generator token in word: " + text);
    std::string tok = text.substr(i, 2);
    int found = -1;
    for (int k = 0; k < n; ++k)
      if (tok == g[k].token) { found = k; break; }
    require(found >= 0, ErrorKind::Usage,
            "unknown generator '" + tok + "' for " + s.name());
    w.toks.push_back(found);
    i += 2;
  }
  return w;
}

std::string MappingClassWord::str() const {
  std::string out;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += generator_token(surface, toks[i]);
  }
  return out;
}

MappingClassWord MappingClassWord::inverse() const {
  MappingClassWord w{surface, {}};
  w.toks.reserve(toks.size());
  for (auto it = toks.rbegin(); it != toks.rend(); ++it)
    w.toks.push_back(inverse_token(surface, *it));
  return w;
}

MappingClassWord MappingClassWord::then(const MappingClassWord& first) const {
  require(surface == first.surface, ErrorKind::Domain, "word surface mismatch");
  MappingClassWord w{surface, toks};
  w.toks.insert(w.toks.end(), first.toks.begin(), first.toks.end());
  return w;
}

Multicurve apply_generator(int tok, const Multicurve& mc) {
  int n = 0;
  const auto* g = gen_table(mc.surface, n);
  require(tok >= 0 && tok < n, ErrorKind::Usage, "bad generator index");
  const auto& gt = g[tok];
  std::vector<long long> w = mc.w;
  for (int f = 0; f < gt.n_flips; ++f) {
    const auto& r = gt.flips[f];
    long long lhs = w[r.a] + w[r.c], rhs = w[r.b] + w[r.d];
    require(lhs < kWeightLimit && rhs < kWeightLimit, ErrorKind::Numeric,
            "normal coordinates overflow");
    w[r.e] = std::max(lhs, rhs) - w[r.e];
  }
  std::vector<long long> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = w[gt.match[i]];
  return Multicurve{mc.surface, std::move(out)};
}

Multicurve apply_word(const MappingClassWord& wd, const Multicurve& mc) {
  require(wd.surface == mc.surface, ErrorKind::Domain,
          "word acts on " + wd.surface.name() + ", curve lives on " +
              mc.surface.name());
  Multicurve cur = mc;
  for (auto it = wd.toks.rbegin(); it != wd.toks.rend(); ++it)
    cur = apply_generator(*it, cur);
  return cur;
}

Curve apply_word(const MappingClassWord& wd, const Curve& c) {
  Multicurve img = apply_word(wd, c.as_multicurve());
  return Curve::from_coords(img.surface, img.w);
}

Curve standard_curve(SurfaceKind s, int pair_index) {
  if (s == kFiveHoledSphere) {
    static const std::array<std::array<long long, 9>, 5> cs = {
        tables::five_c01, tables::five_c12, tables::five_c23,
        tables::five_c34, tables::five_c40};
    require(pair_index >= 0 && pair_index < 5, ErrorKind::Usage,
            "pair index out of range");
    const auto& a = cs[pair_index];
    return Curve::from_coords(s, std::vector<long long>(a.begin(), a.end()));
  }
  if (s == kFourHoledSphere) {
    static const std::array<std::array<long long, 6>, 3> cs = {
        tables::four_b01, tables::four_b12, tables::four_b23};
    require(pair_index >= 0 && pair_index < 3, ErrorKind::Usage,
            "pair index out of range");
    const auto& a = cs[pair_index];
    return Curve::from_coords(s, std::vector<long long>(a.begin(), a.end()));
  }
  fail(ErrorKind::Domain, "no standard curves for " + s.name());
}

namespace {

// Lazily built ball of curves around the base curve, with words from base.
struct Atlas {
  std::map<std::vector<long long>, std::vector<int>> word_from_base;

  static const Atlas& get(SurfaceKind s) {
    static Atlas five = build(kFiveHoledSphere);
    static Atlas four = build(kFourHoledSphere);
    if (s == kFiveHoledSphere) return five;
    if (s == kFourHoledSphere) return four;
    fail(ErrorKind::Domain, "no atlas for " + s.name());
  }

  static Atlas build(SurfaceKind s) {
    Atlas a;
    int ngen = generator_count(s);
    Curve base = standard_curve(s, 0);
    std::queue<std::pair<Multicurve, std::vector<int>>> q;
    a.word_from_base[base.coords()] = {};
    q.push({base.as_multicurve(), {}});
    const long long weight_cap = 60;
    const size_t node_cap = 60000;
    while (!q.empty() && a.word_from_base.size() < node_cap) {
      auto [mc, word] = q.front();
      q.pop();
      if (word.size() >= 4) continue;
      for (int tok = 0; tok < ngen; ++tok) {
        Multicurve img = apply_generator(tok, mc);
        if (img.total_weight() > weight_cap) continue;
        if (a.word_from_base.count(img.w)) continue;
        std::vector<int> w2;
        w2.push_back(tok);
        w2.insert(w2.end(), word.begin(), word.end());
        a.word_from_base[img.w] = w2;
        q.push({img, std::move(w2)});
      }
    }
    return a;
  }
};

} // namespace

MappingClassWord normalize_to_base(const Curve& c, long long node_budget) {
  SurfaceKind s = c.surface();
  const Atlas& atlas = Atlas::get(s);
  int ngen = generator_count(s);

  // beam search decreasing total weight until we land in the atlas
  struct Node {
    Multicurve mc;
    std::vector<int> path; // path maps c to mc: mc = path * c
  };
  auto better = [](const Node& x, const Node& y) {
    long long wx = x.mc.total_weight(), wy = y.mc.total_weight();
    if (wx != wy) return wx < wy;
    return x.mc.w < y.mc.w;
  };

  std::map<std::vector<long long>, char> seen;
  std::vector<Node> beam{{c.as_multicurve(), {}}};
  seen[c.coords()] = 1;
  long long spent = 0;
  const size_t beam_width = 96;

  auto finish = [&](const Node& n) {
    // n.path * c is in atlas; atlas word wa maps base to it.
    // word mapping c to base: inverse(wa) followed by path.
    auto wa = atlas.word_from_base.at(n.mc.w);
    MappingClassWord watlas{s, wa};
    MappingClassWord path{s, n.path};
    return watlas.inverse().then(path);
  };

  for (auto& n : beam)
    if (atlas.word_from_base.count(n.mc.w)) return finish(n);

  while (!beam.empty()) {
    std::vector<Node> next;
    for (const auto& n : beam) {
      for (int tok = 0; tok < ngen; ++tok) {
        if (++spent > node_budget)
          fail(ErrorKind::Budget, "normalization budget exhausted");
        Multicurve img = apply_generator(tok, n.mc);
        if (seen.count(img.w)) continue;
        seen[img.w] = 1;
        std::vector<int> p;
        p.reserve(n.path.size() + 1);
        p.push_back(tok);
        p.insert(p.end(), n.path.begin(), n.path.end());
        Node nn{std::move(img), std::move(p)};
        if (atlas.word_from_base.count(nn.mc.w)) return finish(nn);
        next.push_back(std::move(nn));
      }
    }
    std::sort(next.begin(), next.end(), better);
    if (next.size() > beam_width) next.resize(beam_width);
    beam = std::move(next);
  }
  fail(ErrorKind::Budget, "normalization search exhausted");
}

MappingClassWord half_twist_word(const Curve& c) {
  SurfaceKind s = c.surface();
  MappingClassWord n = normalize_to_base(c);
  MappingClassWord h{s, {0}}; // s1: positive half twist about the base curve
  return n.inverse().then(h).then(n);
}

MappingClassWord dehn_twist_word(const Curve& c) {
  SurfaceKind s = c.surface();
  MappingClassWord n = normalize_to_base(c);
  MappingClassWord h{s, {0, 0}};
  return n.inverse().then(h).then(n);
}

} // namespace lamina
