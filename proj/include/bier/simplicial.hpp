#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bier/bits.hpp"
#include "bier/report.hpp"

namespace bier {

// Abstract simplicial complex: an antichain of facets over a universe of at
// most 64 labeled vertices. The face family is the downward closure of the
// facets; the void complex (no faces at all) has an empty facet list, while
// {0} encodes the complex whose only face is the empty set.
class SimplicialComplex {
public:
    SimplicialComplex() = default; // void

    static SimplicialComplex from_facets(std::vector<std::string> universe,
                                         std::vector<Mask> facets);

    int universe_size() const { return static_cast<int>(universe_.size()); }
    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<Mask>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool empty_only() const { return facets_.size() == 1 && facets_[0] == 0; }
    int dim() const;      // -1 for {0}; throws VoidComplex on the void complex
    bool is_pure() const; // all facets of equal cardinality
    Mask vertex_set() const;
    long long face_count() const;

    bool contains(Mask f) const; // face query, O(#facets)
    std::vector<Mask> faces() const;                 // sorted by (cardinality, mask)
    std::unordered_set<Mask> face_set() const;

    bool operator==(const SimplicialComplex& o) const {
        return universe_ == o.universe_ && facets_ == o.facets_;
    }

private:
    std::vector<std::string> universe_;
    std::vector<Mask> facets_; // antichain, sorted by (cardinality, mask)
};

// "1".."n" labels for complexes living in the boolean lattice B_n.
std::vector<std::string> numeric_universe(int n);
SimplicialComplex complex_on_ground(int n, std::vector<Mask> facets);

// Face sets compared through labels; universes may order vertices differently.
// Only active vertices (those in some face) take part. Witness describes the
// first discrepancy.
bool equal_as_labeled(const SimplicialComplex& a, const SimplicialComplex& b,
                      std::string* witness = nullptr);

using FVector = std::vector<long long>;

// f_0..f_n with f_i = #faces of cardinality i; requires non-void input and
// faces no larger than n.
FVector f_vector(const SimplicialComplex& k, int n);

// h_i = sum_j (-1)^{i+j} C(n-1-j, n-1-i) f_j for 0 <= i <= n-1, and its exact
// inverse. g_0 = 1, g_i = h_i - h_{i-1} up to floor((n-1)/2).
FVector h_from_f(const FVector& f, int n);
FVector f_from_h(const FVector& h, int n);
FVector g_from_h(const FVector& h);

// Dual { F : complement of F not in K } on the same ground set [1,n].
SimplicialComplex alexander_dual(const SimplicialComplex& k, int n);

// Faces A disjoint-union B, A in a, B in b, A and B disjoint in [1,n];
// universe is the 2n tags 1-..n-,1+..n+.
SimplicialComplex deleted_join(const SimplicialComplex& a, const SimplicialComplex& b, int n);

// Remove the star of F, cone the faces G with F not in G, G u F in K onto a
// fresh apex vertex.
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, Mask face,
                                    const std::string& apex_label);

// Bistellar flip at face A: requires link(A) = boundary of a simplex B that
// is not itself a face. When the link is {0}, B is a single fresh vertex and
// the caller must supply its label.
SimplicialComplex bistellar_flip(const SimplicialComplex& k, Mask face,
                                 const std::optional<std::string>& fresh_vertex = std::nullopt);

struct ShellingCheck {
    bool valid = false;
    int fail_step = -1;             // 0-based, -1 when valid
    std::vector<Mask> restrictions; // unique minimal new face per step (while valid)
};

// Facet order shells K iff each facet attaches along a pure codim-1 part of
// its boundary, i.e. the new faces of each step have a unique minimal element.
ShellingCheck is_shelling(const SimplicialComplex& k, const std::vector<Mask>& facet_order);

// Reduced Betti numbers b~_0..b~_dim over GF(2); {} on the {0} complex.
std::vector<int> homology_gf2(const SimplicialComplex& k);

// Purity, pseudomanifold, reduced Euler characteristic (-1)^dim, GF(2) sphere
// homology, and a bounded-effort shelling search.
Report sphere_checks(const SimplicialComplex& k, int expected_dim);

// Link of every vertex has the GF(2) homology of a (dim-1)-sphere.
Report link_homology_checks(const SimplicialComplex& k, int expected_dim);

// Canonical facet list under the vertex relabeling minimizing the complex's
// face-indicator encoding; equal canonical forms <=> isomorphic complexes.
// Exhaustive search with incremental pruning, capped at 16 active vertices.
struct CanonicalForm {
    int vertex_count = 0;
    std::vector<Mask> facets;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const {
        if (vertex_count != o.vertex_count) return vertex_count < o.vertex_count;
        return facets < o.facets;
    }
    std::string key() const;
};

CanonicalForm canonicalize(const SimplicialComplex& k);
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// Kruskal-Katona: colex shadow sizes via the binomial cascade.
long long kk_shadow(long long m, int k);
bool kk_is_ksequence(const FVector& seq);
// Colex-initial complex with the given face counts; NotAKSequence when the
// shadow inequalities fail, BadParameter when some f_k exceeds C(n,k).
SimplicialComplex kk_compressed_complex(const FVector& f_target, int n);

} // namespace bier
