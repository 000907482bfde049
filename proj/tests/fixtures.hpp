#pragma once

#include <string>

#include "wmi/problem_io.hpp"

namespace fixtures {

// Tree-shaped weight over a 2x3 box with one Boolean split on top.
inline const char* kExample1 = R"(
(declare-bool A1)
(declare-bool A2)
(declare-real x1)
(declare-real x2)
(phi true)
(chi (and (>= x1 0) (<= x1 2) (>= x2 0) (<= x2 3)))
(weight
  (ite A1
       (ite (>= x1 1)
            (ite (>= x2 1) (+ x1 x2) (* 2 x1))
            (ite (>= x2 2) (+ 1 (* x2 x2)) 3))
       (ite A2 (* x1 x2) (+ x1 1))))
)";

// Same structure, every leaf 1.
inline const char* kExample1Ones = R"(
(declare-bool A1)
(declare-bool A2)
(declare-real x1)
(declare-real x2)
(phi true)
(chi (and (>= x1 0) (<= x1 2) (>= x2 0) (<= x2 3)))
(weight
  (ite A1
       (ite (>= x1 1) (ite (>= x2 1) 1 1) (ite (>= x2 2) 1 1))
       (ite A2 1 1)))
)";

inline const char* kExample3 = R"(
(declare-bool A1)
(declare-bool A2)
(declare-bool A3)
(declare-real x)
(phi (and (or A1 A2 A3)
          (or (not A1) A2 (>= x 1))
          (or (not A2) (>= x 2))
          (or (not A3) (<= x 3))))
(chi (and (>= x 0) (<= x 4)))
(weight 1)
)";

inline wmi::Problem example1() { return wmi::parse_problem(kExample1); }
inline wmi::Problem example1_ones() { return wmi::parse_problem(kExample1Ones); }
inline wmi::Problem example3() { return wmi::parse_problem(kExample3); }

}  // namespace fixtures
