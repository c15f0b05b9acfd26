// Flip-encoding tables for the mapping-class generator action on normal
// coordinates. Each record is {edge, a, b, c, d} acting on a weight vector w
// by w[edge] = max(w[a]+w[c], w[b]+w[d]) - w[edge] (quad sides at flip time);
// after all flips the result is out[i] = w[match[i]].
#pragma once
#include <array>

namespace lamina::tables {

struct FlipRec { int e, a, b, c, d; };
struct GenTable {
  const char* token;
  const FlipRec* flips;
  int n_flips;
  std::array<int, 9> match;  // only the first n_edges entries are used
};

inline constexpr FlipRec five_s1_flips[] = {{5,2,6,0,1}, {6,3,4,0,5}, {4,0,6,3,8}, {8,2,7,0,4}};
inline constexpr FlipRec five_S1_flips[] = {{7,1,0,8,2}, {8,7,0,4,3}, {4,6,3,8,0}, {6,4,0,5,2}};
inline constexpr FlipRec five_s2_flips[] = {{7,1,0,8,2}, {2,6,5,1,7}};
inline constexpr FlipRec five_S2_flips[] = {{5,2,6,0,1}, {2,5,1,7,8}};
inline constexpr FlipRec five_s3_flips[] = {{5,2,6,0,1}, {8,2,7,4,3}, {1,2,5,0,7}, {3,4,6,2,8}};
inline constexpr FlipRec five_S3_flips[] = {{6,3,4,5,2}, {7,1,0,8,2}, {1,5,0,7,2}, {3,6,2,8,4}};
inline constexpr FlipRec five_s4_flips[] = {{6,3,4,5,2}, {2,3,6,7,8}};
inline constexpr FlipRec five_S4_flips[] = {{8,2,7,4,3}, {2,6,5,8,3}};
inline constexpr FlipRec four_s1_flips[] = {{4,2,3,0,1}, {3,0,4,2,5}};
inline constexpr FlipRec four_S1_flips[] = {{5,1,0,3,2}, {3,4,2,5,0}};
inline constexpr FlipRec four_s2_flips[] = {{5,1,0,3,2}, {2,3,4,1,5}};
inline constexpr FlipRec four_S2_flips[] = {{4,2,3,0,1}, {2,4,1,5,3}};
inline constexpr FlipRec four_s3_flips[] = {{4,2,3,0,1}, {1,2,4,0,5}};
inline constexpr FlipRec four_S3_flips[] = {{5,1,0,3,2}, {1,4,0,5,2}};

inline constexpr GenTable five_gens[] = {
  {"s1", five_s1_flips, 4, {{0, 7, 2, 3, 6, 1, 5, 8, 4}}},
  {"s2", five_s2_flips, 2, {{5, 1, 7, 3, 4, 2, 6, 0, 8}}},
  {"s3", five_s3_flips, 4, {{0, 5, 2, 8, 4, 6, 3, 1, 7}}},
  {"s4", five_s4_flips, 2, {{0, 1, 6, 3, 8, 5, 4, 7, 2}}},
  {"S1", five_S1_flips, 4, {{0, 5, 2, 3, 8, 6, 4, 1, 7}}},
  {"S2", five_S2_flips, 2, {{7, 1, 5, 3, 4, 0, 6, 2, 8}}},
  {"S3", five_S3_flips, 4, {{0, 7, 2, 6, 4, 1, 5, 8, 3}}},
  {"S4", five_S4_flips, 2, {{0, 1, 8, 3, 6, 5, 2, 7, 4}}},
};

inline constexpr GenTable four_gens[] = {
  {"s1", four_s1_flips, 2, {{0, 5, 2, 4, 1, 3, 0, 0, 0}}},
  {"s2", four_s2_flips, 2, {{4, 1, 5, 3, 2, 0, 0, 0, 0}}},
  {"s3", four_s3_flips, 2, {{0, 4, 2, 5, 3, 1, 0, 0, 0}}},
  {"S1", four_S1_flips, 2, {{0, 4, 2, 5, 3, 1, 0, 0, 0}}},
  {"S2", four_S2_flips, 2, {{5, 1, 4, 3, 0, 2, 0, 0, 0}}},
  {"S3", four_S3_flips, 2, {{0, 5, 2, 4, 1, 3, 0, 0, 0}}},
};

// reference curves: around adjacent puncture pairs, in normal coordinates
inline constexpr std::array<long long,9> five_c01 = {{0,1,0,0,1,1,1,1,1}};
inline constexpr std::array<long long,9> five_c12 = {{1,0,1,0,0,1,0,1,0}};
inline constexpr std::array<long long,9> five_c23 = {{0,1,0,1,0,1,1,1,1}};
inline constexpr std::array<long long,9> five_c34 = {{0,0,1,0,1,0,1,0,1}};
inline constexpr std::array<long long,9> five_c40 = {{1,0,0,1,0,1,1,1,1}};
inline constexpr std::array<long long,6> four_b01 = {{0,1,0,1,1,1}};
inline constexpr std::array<long long,6> four_b12 = {{1,0,1,0,1,1}};
inline constexpr std::array<long long,6> four_b23 = {{0,1,0,1,1,1}};

} // namespace lamina::tables
