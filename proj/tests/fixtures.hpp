#ifndef DQR_TESTS_FIXTURES_HPP_
#define DQR_TESTS_FIXTURES_HPP_

#include <string>

#include "dqr/core.hpp"
#include "dqr/genfam.hpp"

namespace fixtures {

// The four-variable running example: forall u,v exists x(u), y(v) with
// six clauses; a known false DQBF.  u=1 v=2 x=3 y=4.
inline dqr::Formula running_example() {
  return dqr::gen_family({dqr::Family::RunningExample, 0});
}

// forall u,v exists x,y,z (all depending on u,v):
// (u v y)(u -v x -y)(-u v z)(-u -v -x -z).  u=1 v=2 x=3 y=4 z=5.
inline dqr::Formula scheme_example() {
  dqr::Formula f;
  f.prefix.declare_universal(1);
  f.prefix.declare_universal(2);
  f.prefix.declare_existential(3, {1, 2});
  f.prefix.declare_existential(4, {1, 2});
  f.prefix.declare_existential(5, {1, 2});
  f.matrix.push_back(dqr::Clause({1, 2, 4}));
  f.matrix.push_back(dqr::Clause({1, -2, 3, -4}));
  f.matrix.push_back(dqr::Clause({-1, 2, 5}));
  f.matrix.push_back(dqr::Clause({-1, -2, -3, -5}));
  return f;
}

// forall u,v,w exists a(u,v,w), b(), c(u,v), d(u,w), e(u).
// u=1 v=2 w=3 a=4 b=5 c=6 d=7 e=8.
inline dqr::Prefix hasse_prefix() {
  dqr::Prefix p;
  p.declare_universal(1);
  p.declare_universal(2);
  p.declare_universal(3);
  p.declare_existential(4, {1, 2, 3});
  p.declare_existential(5, {});
  p.declare_existential(6, {1, 2});
  p.declare_existential(7, {1, 3});
  p.declare_existential(8, {1});
  return p;
}

inline std::string golden_script_text() {
  return R"(e 5 1 0
5 3 0
-5 -3 0
-1 -2 5 -4 0
-1 2 5 4 0
-1 -2 -5 4 0
-1 2 -5 -4 0
d 5 3 0
d -5 -3 0
e 5 -1 0
u -1 -2 5 -4 0
u -1 2 5 4 0
u -1 -2 -5 4 0
u -1 2 -5 -4 0
1 2 -5 3 0
1 -2 -5 -3 0
1 2 5 -3 0
1 -2 5 3 0
u 2 1 -5 3 0
u -2 1 -5 -3 0
u 2 1 5 -3 0
u -2 1 5 3 0
1 -5 0
1 5 0
u 1 -5 0
u 1 5 0
0
)";
}

inline std::string dres_proof_text() {
  return R"(1 a 1 3 4 0
2 a -1 -2 3 4 0
3 a -1 2 3 -4 0
4 a 1 -3 -4 0
5 a -1 -2 -3 -4 0
6 a -1 2 -3 4 0
7 x 5 : -1 : 3 3 0
10 r 7 5 -1 -2 5 -4 0
11 r 7 6 -1 2 5 4 0
12 r 9 2 -1 -2 -5 4 0
13 r 9 3 -1 2 -5 -4 0
14 u 10 -2 5 -4 0
15 u 11 2 5 4 0
16 u 12 -2 -5 4 0
17 u 13 2 -5 -4 0
18 r 1 17 1 2 -5 3 0
19 r 4 16 1 -2 -5 -3 0
20 r 4 15 1 2 5 -3 0
21 r 1 14 1 -2 5 3 0
22 u 18 1 -5 3 0
23 u 19 1 -5 -3 0
24 u 20 1 5 -3 0
25 u 21 1 5 3 0
26 r 22 23 1 -5 0
27 r 24 25 1 5 0
28 u 26 -5 0
29 u 27 5 0
30 r 28 29 0
)";
}

}  // namespace fixtures

#endif  // DQR_TESTS_FIXTURES_HPP_
