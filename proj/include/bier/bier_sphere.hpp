#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bier/bits.hpp"
#include "bier/report.hpp"
#include "bier/simplicial.hpp"

namespace bier {

// Boolean case: Delta is a proper ideal of B_n given as a SimplicialComplex
// whose faces are subsets of [1,n]. Facets of Bier(B_n,Delta) are the pairs
// (A;x) with A in Delta, x not in A, A u {x} not in Delta.
struct FacetAX {
    Mask a = 0;
    int x = 0;
    int n = 0;

    Mask support() const { return a | elem_bit(x); }
    bool operator==(const FacetAX&) const = default;
};

std::string facet_to_string(const FacetAX& f); // "1 3 | 2", "- | 2" for empty A

// Interval element (B,C) of Bier(B_n,Delta) minus its top.
struct IntervalBC {
    Mask b = 0;
    Mask c = 0;
    bool operator==(const IntervalBC&) const = default;
};

// (B',C') <= (B,C) in Bier order (reversed inclusion).
inline bool bier_leq(const IntervalBC& lo, const IntervalBC& hi) {
    return subseteq(lo.b, hi.b) && subseteq(hi.c, lo.c);
}

struct BierSphere {
    int n = 0;
    SimplicialComplex delta;
    std::vector<FacetAX> facets;  // sorted by (A, x)
    SimplicialComplex complex;    // on the active labels v-, v+ (v- before v+, v ascending)
};

std::vector<FacetAX> bier_facets(const SimplicialComplex& delta, int n);
BierSphere bier_complex(const SimplicialComplex& delta, int n);

// Face of the 2n-labeled sphere corresponding to (B,C):
// {b- : b in B} u {c+ : c not in C}, as a mask over `universe_labels`.
Mask interval_face(const IntervalBC& bc, int n, const std::vector<std::string>& universe_labels);

// Restriction operator R(A;x) = (A n (x,n], A u [x,n]).
IntervalBC restriction(const FacetAX& f);
int restriction_rank(const FacetAX& f); // |A n (x,n]| + |[1,x) \ A|

// The unique facet whose restriction interval contains (B,C); computed by the
// minimum formula x = min{ y in C\B : B u (C n [1,y]) not in Delta } and
// cross-checked against the maximum formula.
FacetAX locate(const SimplicialComplex& delta, int n, Mask b, Mask c);

// chi(A;x): -1 on (A u {x})_{<=x}, +1 on (A u {x})_{>x}, 0 elsewhere.
using ChiVector = std::vector<int>;
ChiVector chi(const FacetAX& f);
bool chi_lex_less(const ChiVector& a, const ChiVector& b);

// Precedence forced by the restriction operator: the inclusion conditions
// (A u {x})_{>x} <= A', (A' u {x'})_{<x} <= A together with the two
// non-inclusions that break the cycles of the inclusion-only relation.
bool prec_inclusion_only(const FacetAX& f, const FacetAX& g); // R(f) <= g reformulated
bool prec(const FacetAX& f, const FacetAX& g);

// Facets in ascending chi-lexicographic order (-1 < 0 < +1); a shelling order.
std::vector<FacetAX> shelling_order(const SimplicialComplex& delta, int n);

// h_i = #{ (A;x) : restriction_rank = i }, i = 0..n-1.
FVector h_via_restriction(const SimplicialComplex& delta, int n);
// Reversed-ground-set statistic |A n [1,x)| + |(x,n] \ A|; equals the above.
FVector h_via_reversed_statistic(const SimplicialComplex& delta, int n);

// g_i = f_i(Delta) - f_{n-i}(Delta) for 0 <= i <= floor((n-1)/2).
FVector g_bier(const SimplicialComplex& delta, int n);

// Subcomplex with f_i = f_i(Delta) - f_{n-i}(Delta) below the middle and 0
// above, by repeatedly cancelling a large face C against phi(B) = [1,n]\pi(B)
// for an involution pi pairing the complement of C into C.
SimplicialComplex delta_prime(const SimplicialComplex& delta, int n);

// Colex-compressed Delta whose Bier g-vector equals the K-sequence.
SimplicialComplex realize_ksequence(const FVector& seq, int n);

// Face-addition certificate: Bier(B_n,Delta) from the simplex boundary via
// bistellar flips, one flip per face added to Delta (or to its dual).
struct FlipCertificate {
    bool via_dual = false;       // additions build the Alexander dual instead
    std::vector<Mask> additions; // faces in increasing (cardinality, mask) order
};

struct LbcResult {
    bool g_k_zero = false;
    bool cond2 = false; // f_k(Delta) = 0 or f_{n-k}(Delta) = C(n, n-k)
    std::optional<FlipCertificate> certificate;
};

LbcResult lbc_status(const SimplicialComplex& delta, int n, int k);

// Replays a certificate from {0}: every addition must be a bistellar i-flip
// with i <= max_flip_index whose result matches the extended Bier sphere.
Report verify_flip_certificate(const FlipCertificate& cert, const SimplicialComplex& delta,
                               int n, int max_flip_index);

struct AddFaceFlipResult {
    SimplicialComplex extended_delta;   // Delta u {G} and its closure
    std::vector<std::string> flip_face; // labels of A = {b+ : b not in G}
    std::vector<std::string> b_face;    // labels of B = {a- : a in G}
    int flip_index = 0;                 // i = |G| - 1
    SimplicialComplex flipped;          // flip applied to Bier(B_n,Delta)
    SimplicialComplex extended_bier;    // Bier(B_n, Delta u {G})
    FVector g_before, g_after;
    Report verification;
};

// Requires G not in Delta with all proper subsets present (NotAddable).
AddFaceFlipResult add_face_flip(const SimplicialComplex& delta, int n, Mask g_face);

// Expected g change when adding a face of size s to Delta inside B_n:
// +1 at index s when s <= floor((n-1)/2), -1 at n-s when s > n/2, else none.
struct GChange {
    int index = -1; // -1: no change
    int sign = 0;
};
GChange expected_g_change(int face_size, int n);

struct SymmetryResult {
    bool centrally_symmetric = false;
    bool pairing_ok = false;            // v- <-> v+ involution checks on the complex
    std::optional<bool> k_nearly_neighborly;
};

// Central symmetry: A in Delta <=> [1,n]\A not in Delta; k-nearly neighborly
// additionally requires every set of size <= k in Delta, cross-checked by
// testing antipode-free vertex sets on the complex. k needs 1 < k <= (n-1)/2.
SymmetryResult symmetry_checks(const SimplicialComplex& delta, int n, std::optional<int> k);

// Even n: all faces below the middle plus one set from each complementary
// pair of n/2-sets; odd n: every set of size <= floor(n/2) (no choice).
SimplicialComplex cs_construct(int n, const std::vector<Mask>& middle_choice);

} // namespace bier
