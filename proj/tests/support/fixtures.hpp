// Matrices and forests used across the test suites.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fanobott/forest.hpp"
#include "fanobott/matrix.hpp"

namespace fixtures {

using fanobott::FanoBottMatrix;
using fanobott::IntMatrix;
using fanobott::Sign;
using fanobott::SignedRootedForest;

struct Entry {
  int i;
  int j;
  int v;
};

inline IntMatrix grid(int d, const std::vector<Entry>& entries) {
  IntMatrix m(d, d);
  for (const auto& e : entries) m(e.i, e.j) = e.v;
  return m;
}

inline FanoBottMatrix fb(int d, const std::vector<Entry>& entries) {
  return fanobott::validate(grid(d, entries));
}

inline FanoBottMatrix fb_rows(const std::vector<std::vector<int>>& rows) {
  return fanobott::validate(IntMatrix::from_rows(rows));
}

// Six-vertex matrix used for the operation fixtures.
inline FanoBottMatrix six() {
  return fb_rows({{0, 0, 1, 0, 0, 0},
                  {0, 0, -1, 0, 0, -1},
                  {0, 0, 0, 0, 0, -1},
                  {0, 0, 0, 0, -1, 1},
                  {0, 0, 0, 0, 0, 1},
                  {0, 0, 0, 0, 0, 0}});
}

inline IntMatrix six_op2_3() {
  return IntMatrix::from_rows({{0, 0, -1, 0, 0, -1},
                               {0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, -1, 1},
                               {0, 0, 0, 0, 0, 1},
                               {0, 0, 0, 0, 0, 0}});
}

inline IntMatrix six_op2_5() {
  return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0},
                               {0, 0, -1, 0, 0, -1},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 1},
                               {0, 0, 0, 0, 0, 0}});
}

inline IntMatrix six_op3_3_6() {
  return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0},
                               {0, 0, -1, 0, 0, 1},
                               {0, 0, 0, 0, 0, 1},
                               {0, 0, 0, 0, -1, 1},
                               {0, 0, 0, 0, 0, 1},
                               {0, 0, 0, 0, 0, 0}});
}

inline IntMatrix six_op3_5_6() {
  return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0},
                               {0, 0, -1, 0, 0, -1},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, -1, -1},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 0, 0}});
}

// Five-vertex tree rooted at 5.
inline FanoBottMatrix tree5() {
  return fb(5, {{1, 2, 1}, {3, 5, 1}, {4, 5, 1}, {2, 5, -1}, {3, 4, -1}});
}

// Two components rooted at 3 and 5.
inline FanoBottMatrix forest5() { return fb(5, {{1, 3, 1}, {2, 3, -1}, {4, 5, 1}}); }

// Seven-vertex pair that is diffeomorphic but not variety-equivalent.
inline FanoBottMatrix seven_m() {
  return fb(7, {{1, 3, 1}, {2, 3, -1}, {2, 7, 1}, {3, 7, 1}, {4, 6, 1}, {5, 6, 1}, {6, 7, 1}});
}

inline FanoBottMatrix seven_m2() {
  return fb(7, {{1, 3, -1},
                {1, 7, 1},
                {2, 3, 1},
                {3, 7, 1},
                {4, 6, -1},
                {4, 7, 1},
                {5, 6, -1},
                {5, 7, 1},
                {6, 7, 1}});
}

inline FanoBottMatrix seven_m1() {
  return fb(7, {{1, 3, -1},
                {1, 7, 1},
                {2, 3, 1},
                {3, 7, 1},
                {4, 6, -1},
                {4, 7, -1},
                {5, 6, -1},
                {5, 7, -1},
                {6, 7, -1}});
}

// Forests on v1..v5 rooted at v5; v1, v2, v4 hang from v5 and v3 from v4.
inline SignedRootedForest star5(Sign s1, Sign s2, Sign s4) {
  return SignedRootedForest({5, 5, 4, 5, 0}, {s1, s2, Sign::Plus, s4, std::nullopt});
}

// Brooms on p+3 vertices; the two leaves are rows 1 and 2.
inline FanoBottMatrix broom(int p) {
  std::vector<Entry> e{{1, 3, 1}};
  for (int i = 2; i <= p + 2; ++i) e.push_back({i, i + 1, 1});
  return fb(p + 3, e);
}

inline FanoBottMatrix broom_prime(int p) {
  std::vector<Entry> e{{1, 3, 1}, {2, 3, -1}, {2, 4, 1}};
  for (int i = 3; i <= p + 2; ++i) e.push_back({i, i + 1, 1});
  return fb(p + 3, e);
}

}  // namespace fixtures
