#pragma once

#include <map>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace mba {

// Normal forms in the free metabelian Lie algebra, in the two bracketing
// conventions the rest of the code needs.  Both terminate after at most two
// Jacobi steps because the rewritten words land directly in the basis.

// Left-normed [[a,b],c1,...,cm] -> combinations of words with a > b <= c1 <=
// ... <= cm (head strictly descending, sorted tail bounded below by the head
// minimum).  Key: ((a, b), tail).
using LeftLieWord = std::pair<std::pair<int, int>, std::vector<int>>;
std::map<LeftLieWord, Scalar> left_lie_normal(int a, int b, std::vector<int> tail);

// Right-normed [g1,[g2,...[gm,t]...]] -> combinations of words with
// g1 >= g2 >= ... >= gm < t.  Key: (g1..gm, t).
using RightLieWord = std::pair<std::vector<int>, int>;
std::map<RightLieWord, Scalar> right_lie_normal(std::vector<int> gens, int leaf);

}  // namespace mba
