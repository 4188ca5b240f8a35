#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bier/poset.hpp"
#include "bier/report.hpp"
#include "bier/simplicial.hpp"

namespace bier {

// Bier(P,I): the intervals [x,y] with x in I, y not in I, ordered by reversed
// inclusion, plus an adjoined top. Element k of `poset` is `intervals[k]`
// (pairs of P-indices); the last element is the top.
struct BierPoset {
    Poset poset;
    std::vector<std::pair<int, int>> intervals; // top carries (-1,-1)
    int top_index = -1;

    bool is_top(int e) const { return e == top_index; }
};

// Requires a proper ideal (bottom in I, top not in I); throws ImproperIdeal.
BierPoset bier_poset(const Poset& p, const std::vector<int>& ideal_members);

// rank[x,y] = rank_P(x) + (n - rank_P(y)); n for the top. Requires P graded.
int bier_rank(const Poset& p, const BierPoset& b, int element);

// [x,y] ^ [x',y'] = [x^x', y v y']; e ^ top = e. Requires P to be a lattice.
int bier_meet(const Poset& p, const BierPoset& b, int e1, int e2);

// Role of a proper Bier element as a vertex of the subdivided order complex.
struct VertexTag {
    bool is_subdivision = false;
    int old_element = -1;              // when not a subdivision vertex
    std::pair<int, int> edge{-1, -1};  // when a subdivision vertex
    std::string label;                 // matches the labels used when subdividing
};

// [x,1^] -> x, [0^,y] -> y, interior [x,y] -> subdivision vertex (x,y).
// Bottom and top have no vertex role (BoundaryElement).
VertexTag identify_vertex(const Poset& p, const BierPoset& b, int element);

// Subdivides the order complex of P on every edge {x,y}, x in I\{0^},
// y outside I, x < y, in batches of increasing interval length, and compares
// the result with the order complex of Bier(P,I) under identify_vertex.
// Also asserts that no two edges of one batch share a face.
Report verify_subdivision_theorem(const Poset& p, const std::vector<int>& ideal_members);

} // namespace bier
