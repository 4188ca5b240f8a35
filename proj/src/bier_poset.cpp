#include "bier/bier_poset.hpp"

#include <algorithm>
#include <map>

#include "bier/error.hpp"

namespace bier {

BierPoset bier_poset(const Poset& p, const std::vector<int>& ideal_members) {
    if (!is_proper_ideal(p, ideal_members))
        fail("ImproperIdeal", "need a downward-closed set with bottom in, top out");
    std::vector<char> in_ideal(p.size(), 0);
    for (int e : ideal_members) in_ideal[e] = 1;

    std::vector<std::pair<int, int>> intervals;
    for (int x = 0; x < p.size(); ++x) {
        if (!in_ideal[x]) continue;
        for (int y = 0; y < p.size(); ++y)
            if (!in_ideal[y] && p.leq(x, y)) intervals.emplace_back(x, y);
    }
    const int top = static_cast<int>(intervals.size());
    intervals.emplace_back(-1, -1);

    std::vector<std::string> labels;
    labels.reserve(intervals.size());
    for (auto [x, y] : intervals)
        labels.push_back(x == -1 ? "1^" : "[" + p.label(x) + "," + p.label(y) + "]");

    const auto& iv = intervals;
    Poset bposet = Poset::from_relation(std::move(labels), [&p, &iv, top](int e, int f) {
        if (f == top) return true;
        if (e == top) return false;
        // reversed inclusion: [x',y'] <= [x,y] iff x' <= x and y <= y'
        return p.leq(iv[e].first, iv[f].first) && p.leq(iv[f].second, iv[e].second);
    });
    return BierPoset{std::move(bposet), std::move(intervals), top};
}

int bier_rank(const Poset& p, const BierPoset& b, int element) {
    auto rank = rank_function(p);
    if (!rank) fail("NotGraded", "rank formula needs a graded poset");
    if (b.is_top(element)) return p.length();
    auto [x, y] = b.intervals[element];
    return (*rank)[x] + p.length() - (*rank)[y];
}

int bier_meet(const Poset& p, const BierPoset& b, int e1, int e2) {
    if (b.is_top(e1)) return e2;
    if (b.is_top(e2)) return e1;
    auto [x1, y1] = b.intervals[e1];
    auto [x2, y2] = b.intervals[e2];
    int mx = p.meet(x1, x2); // throws NotALattice when undefined
    int jy = p.join(y1, y2);
    for (std::size_t i = 0; i < b.intervals.size(); ++i)
        if (b.intervals[i] == std::make_pair(mx, jy)) return static_cast<int>(i);
    fail("NotALattice", "meet fell outside the Bier poset");
}

VertexTag identify_vertex(const Poset& p, const BierPoset& b, int element) {
    if (b.is_top(element)) fail("BoundaryElement", "top has no vertex role");
    auto [x, y] = b.intervals[element];
    if (x == p.bottom() && y == p.top()) fail("BoundaryElement", "bottom has no vertex role");
    VertexTag tag;
    if (y == p.top()) {
        tag.old_element = x;
        tag.label = p.label(x);
    } else if (x == p.bottom()) {
        tag.old_element = y;
        tag.label = p.label(y);
    } else {
        tag.is_subdivision = true;
        tag.edge = {x, y};
        tag.label = "(" + p.label(x) + "," + p.label(y) + ")";
    }
    return tag;
}

Report verify_subdivision_theorem(const Poset& p, const std::vector<int>& ideal_members) {
    Report rep;
    BierPoset bp = bier_poset(p, ideal_members); // validates the ideal
    std::vector<char> in_ideal(p.size(), 0);
    for (int e : ideal_members) in_ideal[e] = 1;

    const int n = p.length();
    rep.value("length", std::to_string(n));

    // Edges {x,y} of the order complex crossing the ideal, grouped by l(x,y).
    std::map<int, std::vector<std::pair<int, int>>> batches;
    int edge_total = 0;
    for (int x = 0; x < p.size(); ++x) {
        if (!in_ideal[x] || x == p.bottom()) continue;
        for (int y = 0; y < p.size(); ++y) {
            if (in_ideal[y] || y == p.top() || !p.lt(x, y)) continue;
            batches[p.interval_length(x, y)].emplace_back(x, y);
            ++edge_total;
        }
    }
    rep.value("edges-to-subdivide", std::to_string(edge_total));

    SimplicialComplex gamma = order_complex(p);
    for (int k = 1; k <= std::max(0, n - 2); ++k) {
        auto it = batches.find(k);
        if (it == batches.end()) continue;
        const auto& batch = it->second;

        auto label_index = [&gamma](const std::string& l) {
            for (int i = 0; i < gamma.universe_size(); ++i)
                if (gamma.universe()[i] == l) return i;
            fail("BadParameter", "missing vertex " + l);
        };
        std::vector<Mask> edge_faces;
        for (auto [x, y] : batch)
            edge_faces.push_back((Mask{1} << label_index(p.label(x))) |
                                 (Mask{1} << label_index(p.label(y))));

        bool independent = true;
        std::string witness;
        for (std::size_t i = 0; i < batch.size() && independent; ++i)
            for (std::size_t j = i + 1; j < batch.size(); ++j)
                if (gamma.contains(edge_faces[i] | edge_faces[j])) {
                    independent = false;
                    witness = "edges " + std::to_string(i) + "," + std::to_string(j) +
                              " of batch " + std::to_string(k) + " share a face";
                    break;
                }
        rep.check("batch-" + std::to_string(k) + "-independent", independent, witness);

        for (std::size_t i = 0; i < batch.size(); ++i) {
            auto [x, y] = batch[i];
            gamma = stellar_subdivide(gamma, edge_faces[i],
                                      "(" + p.label(x) + "," + p.label(y) + ")");
            // Vertex indices shift as the universe grows; recompute lazily.
            for (std::size_t j = i + 1; j < batch.size(); ++j) {
                auto [xj, yj] = batch[j];
                edge_faces[j] = (Mask{1} << label_index(p.label(xj))) |
                                (Mask{1} << label_index(p.label(yj)));
            }
        }
    }

    SimplicialComplex expected;
    {
        SimplicialComplex oc = order_complex(bp.poset);
        auto proper = bp.poset.proper_elements();
        std::vector<std::string> labels;
        labels.reserve(proper.size());
        for (int e : proper) labels.push_back(identify_vertex(p, bp, e).label);
        expected = SimplicialComplex::from_facets(std::move(labels), oc.facets());
    }

    std::string witness;
    bool equal = equal_as_labeled(gamma, expected, &witness);
    rep.value("subdivided-faces", std::to_string(gamma.face_count()));
    rep.value("bier-order-complex-faces", std::to_string(expected.face_count()));
    rep.check("complexes-equal", equal, witness);
    return rep;
}

} // namespace bier
