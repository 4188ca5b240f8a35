#include "bier/bier_sphere.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "bier/error.hpp"

namespace bier {

namespace {

void validate_proper(const SimplicialComplex& delta, int n) {
    if (n < 1 || n > 32) fail("TooLarge", "boolean Bier spheres support 1 <= n <= 32");
    if (delta.is_void()) fail("ImproperComplex", "void complex is not an ideal");
    if (delta.vertex_set() & ~full_mask(n)) fail("ImproperComplex", "faces exceed [1,n]");
    if (delta.contains(full_mask(n))) fail("ImproperComplex", "contains the whole ground set");
}

// Universe index per tagged vertex; -1 when the label is absent.
struct TagIndex {
    std::array<int, 65> minus{};
    std::array<int, 65> plus{};
    TagIndex() {
        minus.fill(-1);
        plus.fill(-1);
    }
};

TagIndex tag_index(const std::vector<std::string>& labels) {
    TagIndex t;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const std::string& l = labels[i];
        if (l.size() < 2) continue;
        char sign = l.back();
        if (sign != '-' && sign != '+') continue;
        int v = std::stoi(l.substr(0, l.size() - 1));
        if (v < 1 || v > 64) continue;
        (sign == '-' ? t.minus : t.plus)[v] = static_cast<int>(i);
    }
    return t;
}

} // namespace

std::string facet_to_string(const FacetAX& f) {
    std::string s;
    if (f.a == 0) {
        s = "-";
    } else {
        bool first = true;
        for (int v : mask_elems(f.a)) {
            if (!first) s += " ";
            s += std::to_string(v);
            first = false;
        }
    }
    return s + " | " + std::to_string(f.x);
}

std::vector<FacetAX> bier_facets(const SimplicialComplex& delta, int n) {
    validate_proper(delta, n);
    auto faces = delta.face_set();
    std::vector<FacetAX> out;
    for (Mask a : delta.faces())
        for (int x = 1; x <= n; ++x) {
            if (a & elem_bit(x)) continue;
            if (!faces.count(a | elem_bit(x))) out.push_back(FacetAX{a, x, n});
        }
    std::sort(out.begin(), out.end(), [](const FacetAX& f, const FacetAX& g) {
        return f.a != g.a ? f.a < g.a : f.x < g.x;
    });
    return out;
}

BierSphere bier_complex(const SimplicialComplex& delta, int n) {
    BierSphere s;
    s.n = n;
    s.delta = delta;
    s.facets = bier_facets(delta, n);

    auto faces = delta.face_set();
    const Mask full = full_mask(n);
    TagIndex t;
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) {
        if (faces.count(elem_bit(v))) {
            t.minus[v] = static_cast<int>(labels.size());
            labels.push_back(std::to_string(v) + "-");
        }
        if (!faces.count(full & ~elem_bit(v))) {
            t.plus[v] = static_cast<int>(labels.size());
            labels.push_back(std::to_string(v) + "+");
        }
    }

    std::vector<Mask> complex_facets;
    complex_facets.reserve(s.facets.size());
    for (const auto& f : s.facets) {
        Mask face = 0;
        for (int a : mask_elems(f.a)) face |= Mask{1} << t.minus[a];
        for (int b : mask_elems(full & ~f.support())) face |= Mask{1} << t.plus[b];
        complex_facets.push_back(face);
    }
    s.complex = SimplicialComplex::from_facets(std::move(labels), std::move(complex_facets));
    return s;
}

Mask interval_face(const IntervalBC& bc, int n, const std::vector<std::string>& universe_labels) {
    TagIndex t = tag_index(universe_labels);
    Mask face = 0;
    for (int b : mask_elems(bc.b)) {
        if (t.minus[b] < 0) fail("BadParameter", "missing vertex " + std::to_string(b) + "-");
        face |= Mask{1} << t.minus[b];
    }
    for (int c : mask_elems(full_mask(n) & ~bc.c)) {
        if (t.plus[c] < 0) fail("BadParameter", "missing vertex " + std::to_string(c) + "+");
        face |= Mask{1} << t.plus[c];
    }
    return face;
}

IntervalBC restriction(const FacetAX& f) {
    return IntervalBC{f.a & mask_gt(f.x, f.n), f.a | mask_ge(f.x, f.n)};
}

int restriction_rank(const FacetAX& f) {
    return card(f.a & mask_gt(f.x, f.n)) + card(mask_lt(f.x) & ~f.a);
}

FacetAX locate(const SimplicialComplex& delta, int n, Mask b, Mask c) {
    validate_proper(delta, n);
    auto faces = delta.face_set();
    if (!faces.count(b) || faces.count(c) || !subseteq(b, c) || b == c)
        fail("NotAnInterval", "need B in Delta, C not in Delta, B strictly inside C");

    int x_min = -1, x_max = -1;
    for (int y : mask_elems(c & ~b)) {
        if (x_min == -1 && !faces.count(b | (c & mask_le(y)))) x_min = y;
        if (faces.count(b | (c & mask_lt(y)))) x_max = y;
    }
    if (x_min != x_max || x_min == -1)
        fail("InternalError", "min/max locate formulas disagree");
    return FacetAX{b | (c & mask_lt(x_min)), x_min, n};
}

ChiVector chi(const FacetAX& f) {
    ChiVector v(f.n, 0);
    for (int a : mask_elems(f.support())) v[a - 1] = a <= f.x ? -1 : +1;
    return v;
}

bool chi_lex_less(const ChiVector& a, const ChiVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool prec_inclusion_only(const FacetAX& f, const FacetAX& g) {
    const int n = f.n;
    return subseteq(f.support() & mask_gt(f.x, n), g.a) &&
           subseteq(g.support() & mask_lt(f.x), f.a);
}

bool prec(const FacetAX& f, const FacetAX& g) {
    // The inclusion/non-inclusion conditions hold trivially for f against
    // itself; the precedence relation lives on distinct facets.
    if (f == g) return false;
    const int n = f.n;
    return prec_inclusion_only(f, g) &&
           !subseteq(f.support() & mask_le(f.x), g.a) &&
           !subseteq(g.support() & mask_ge(f.x, n), f.a);
}

std::vector<FacetAX> shelling_order(const SimplicialComplex& delta, int n) {
    std::vector<FacetAX> facets = bier_facets(delta, n);
    std::sort(facets.begin(), facets.end(), [](const FacetAX& f, const FacetAX& g) {
        return chi_lex_less(chi(f), chi(g));
    });
    return facets;
}

FVector h_via_restriction(const SimplicialComplex& delta, int n) {
    FVector h(n, 0);
    for (const auto& f : bier_facets(delta, n)) ++h[restriction_rank(f)];
    return h;
}

FVector h_via_reversed_statistic(const SimplicialComplex& delta, int n) {
    FVector h(n, 0);
    for (const auto& f : bier_facets(delta, n))
        ++h[card(f.a & mask_lt(f.x)) + card(mask_gt(f.x, n) & ~f.a)];
    return h;
}

FVector g_bier(const SimplicialComplex& delta, int n) {
    validate_proper(delta, n);
    FVector f = f_vector(delta, n);
    FVector g((n - 1) / 2 + 1, 0);
    for (int i = 0; i < static_cast<int>(g.size()); ++i) g[i] = f[i] - f[n - i];
    return g;
}

SimplicialComplex delta_prime(const SimplicialComplex& delta, int n) {
    validate_proper(delta, n);
    auto faces = delta.face_set();
    const Mask full = full_mask(n);

    for (;;) {
        // Deterministic target: largest cardinality, then smallest mask.
        Mask c_face = 0;
        int best_card = 0;
        for (Mask f : faces) {
            int cf = card(f);
            if (cf >= 1 && 2 * cf >= n &&
                (cf > best_card || (cf == best_card && f < c_face)))
                c_face = f, best_card = cf;
        }
        if (best_card == 0) break;

        // Involution pairing the complement of C into C, smallest first.
        std::array<int, 65> pi{};
        for (int v = 1; v <= n; ++v) pi[v] = v;
        auto comp = mask_elems(full & ~c_face);
        auto inside = mask_elems(c_face);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            pi[comp[i]] = inside[i];
            pi[inside[i]] = comp[i];
        }
        auto phi = [&pi, full](Mask m) {
            Mask img = 0;
            for (int v : mask_elems(m)) img |= elem_bit(pi[v]);
            return full & ~img;
        };

        std::vector<Mask> kill;
        for (Mask f : faces)
            if (faces.count(phi(f))) kill.push_back(f);
        for (Mask f : kill) faces.erase(f);
    }

    std::vector<Mask> all(faces.begin(), faces.end());
    return complex_on_ground(n, std::move(all));
}

SimplicialComplex realize_ksequence(const FVector& seq, int n) {
    if (!kk_is_ksequence(seq)) fail("NotAKSequence", seq_to_string(seq));
    if (static_cast<int>(seq.size()) - 1 > (n - 1) / 2)
        fail("IndexTooLarge", "K-sequence longer than floor((n-1)/2)");
    return kk_compressed_complex(seq, n);
}

GChange expected_g_change(int face_size, int n) {
    if (face_size <= (n - 1) / 2) return GChange{face_size, +1};
    if (2 * face_size == n) return GChange{-1, 0};
    return GChange{n - face_size, -1};
}

AddFaceFlipResult add_face_flip(const SimplicialComplex& delta, int n, Mask g_face) {
    validate_proper(delta, n);
    auto faces = delta.face_set();
    const Mask full = full_mask(n);
    if (g_face == 0 || g_face == full || (g_face & ~full) || faces.count(g_face))
        fail("NotAddable", mask_to_string(g_face));
    for (int v : mask_elems(g_face))
        if (!faces.count(g_face & ~elem_bit(v)))
            fail("NotAddable", "missing subset " + mask_to_string(g_face & ~elem_bit(v)));

    AddFaceFlipResult res;
    BierSphere before = bier_complex(delta, n);
    TagIndex tags = tag_index(before.complex.universe());

    Mask flip_a = 0;
    for (int b : mask_elems(full & ~g_face)) {
        flip_a |= Mask{1} << tags.plus[b];
        res.flip_face.push_back(std::to_string(b) + "+");
    }
    for (int a : mask_elems(g_face)) res.b_face.push_back(std::to_string(a) + "-");
    res.flip_index = card(g_face) - 1;

    // The link of A must be the boundary of B = {a- : a in G}.
    auto sphere_faces = before.complex.face_set();
    Mask link_span = 0;
    long long link_size = 0;
    for (Mask m : sphere_faces)
        if ((m & flip_a) == 0 && sphere_faces.count(m | flip_a)) {
            link_span |= m;
            ++link_size;
        }
    Mask b_expected = 0;
    bool b_is_fresh = card(g_face) == 1;
    if (!b_is_fresh)
        for (int a : mask_elems(g_face)) b_expected |= Mask{1} << tags.minus[a];
    bool link_ok = b_is_fresh
                       ? (link_span == 0 && link_size == 1)
                       : (link_span == b_expected &&
                          link_size == (1LL << card(b_expected)) - 1 &&
                          !sphere_faces.count(b_expected));
    res.verification.check("link-is-simplex-boundary", link_ok,
                           link_ok ? "" : "link of the flip face is not Bd(B)");

    std::optional<std::string> fresh;
    if (b_is_fresh) fresh = std::to_string(mask_elems(g_face)[0]) + "-";
    res.flipped = bistellar_flip(before.complex, flip_a, fresh);

    std::vector<Mask> extended = delta.facets();
    extended.push_back(g_face);
    res.extended_delta = complex_on_ground(n, std::move(extended));
    res.extended_bier = bier_complex(res.extended_delta, n).complex;

    std::string witness;
    bool labeled = equal_as_labeled(res.flipped, res.extended_bier, &witness);
    bool match = labeled || is_isomorphic(res.flipped, res.extended_bier);
    res.verification.check("flip-matches-extended-bier", match,
                           match ? (labeled ? "labeled-equal" : "isomorphic") : witness);

    res.g_before = g_bier(delta, n);
    res.g_after = g_bier(res.extended_delta, n);
    GChange expect = expected_g_change(card(g_face), n);
    bool g_ok = true;
    for (int i = 0; i < static_cast<int>(res.g_before.size()); ++i) {
        long long want = res.g_before[i] + (i == expect.index ? expect.sign : 0);
        if (res.g_after[i] != want) g_ok = false;
    }
    res.verification.check("g-change", g_ok,
                           "g " + seq_to_string(res.g_before) + " -> " +
                               seq_to_string(res.g_after));
    return res;
}

LbcResult lbc_status(const SimplicialComplex& delta, int n, int k) {
    if (k < 2 || k > (n - 1) / 2) fail("IndexOutOfRange", "need 2 <= k <= floor((n-1)/2)");
    FVector f = f_vector(delta, n);
    LbcResult res;
    res.g_k_zero = (f[k] - f[n - k]) == 0;
    res.cond2 = f[k] == 0 || f[n - k] == binomial(n, n - k);
    if (res.g_k_zero && res.cond2) {
        FlipCertificate cert;
        cert.via_dual = f[k] != 0;
        const SimplicialComplex built =
            cert.via_dual ? alexander_dual(delta, n) : delta;
        for (Mask face : built.faces())
            if (face != 0) cert.additions.push_back(face);
        res.certificate = cert;
    }
    return res;
}

Report verify_flip_certificate(const FlipCertificate& cert, const SimplicialComplex& delta,
                               int n, int max_flip_index) {
    Report rep;
    const SimplicialComplex target = cert.via_dual ? alexander_dual(delta, n) : delta;
    rep.value("route", cert.via_dual ? "dual" : "direct");
    rep.value("additions", std::to_string(cert.additions.size()));

    SimplicialComplex current = complex_on_ground(n, {Mask{0}});
    {
        // Start = Bier(B_n, {0}) = boundary of the (n-1)-simplex.
        SimplicialComplex start = bier_complex(current, n).complex;
        std::vector<Mask> boundary;
        for (int v = 1; v <= n; ++v) boundary.push_back(full_mask(n) & ~elem_bit(v));
        bool ok = n == 1 ? start.empty_only()
                         : is_isomorphic(start, complex_on_ground(n, std::move(boundary)));
        rep.check("starts-at-simplex-boundary", ok);
    }

    int prev_card = 0;
    bool flips_ok = true, order_ok = true, bound_ok = true;
    std::string witness;
    for (Mask g_face : cert.additions) {
        if (card(g_face) < prev_card) {
            order_ok = false;
            witness = "addition " + mask_to_string(g_face) + " out of dimension order";
            break;
        }
        prev_card = card(g_face);
        auto step = add_face_flip(current, n, g_face);
        if (step.flip_index > max_flip_index) {
            bound_ok = false;
            witness = "flip index " + std::to_string(step.flip_index) + " at " +
                      mask_to_string(g_face);
            break;
        }
        if (!step.verification.ok()) {
            flips_ok = false;
            witness = "flip at " + mask_to_string(g_face) + " failed";
            break;
        }
        current = step.extended_delta;
    }
    rep.check("additions-in-dimension-order", order_ok, order_ok ? "" : witness);
    rep.check("flip-indices-bounded", bound_ok,
              bound_ok ? "max index " + std::to_string(max_flip_index) : witness);
    rep.check("every-step-verified", flips_ok, flips_ok ? "" : witness);

    bool complete = flips_ok && order_ok && bound_ok &&
                    current.face_set() == target.face_set();
    rep.check("reaches-target", complete, complete ? "" : "walk did not rebuild the ideal");
    return rep;
}

SymmetryResult symmetry_checks(const SimplicialComplex& delta, int n, std::optional<int> k) {
    validate_proper(delta, n);
    if (n > 20) fail("TooLarge", "symmetry scan supports n <= 20");
    if (k && (*k <= 1 || *k > (n - 1) / 2))
        fail("IndexOutOfRange", "need 1 < k <= floor((n-1)/2)");

    auto faces = delta.face_set();
    const Mask full = full_mask(n);
    SymmetryResult res;

    bool cond1 = true;
    for (Mask s = 0;; ++s) {
        bool in = faces.count(s) > 0, comp_in = faces.count(full & ~s) > 0;
        if (in == comp_in) {
            cond1 = false;
            break;
        }
        if (s == full) break;
    }

    // The v- <-> v+ pairing on the complex itself.
    BierSphere sphere = bier_complex(delta, n);
    TagIndex tags = tag_index(sphere.complex.universe());
    bool pairing = true;
    for (int v = 1; v <= n && pairing; ++v)
        if ((tags.minus[v] < 0) != (tags.plus[v] < 0)) pairing = false;
    if (pairing) {
        auto sphere_faces = sphere.complex.face_set();
        for (Mask f : sphere_faces) {
            Mask img = 0;
            bool total = true;
            for (int i : mask_elems(f)) {
                const std::string& l = sphere.complex.universe()[i - 1];
                int v = std::stoi(l.substr(0, l.size() - 1));
                int j = l.back() == '-' ? tags.plus[v] : tags.minus[v];
                if (j < 0) {
                    total = false;
                    break;
                }
                img |= Mask{1} << j;
            }
            if (!total || !sphere_faces.count(img)) {
                pairing = false;
                break;
            }
        }
        for (int v = 1; v <= n && pairing; ++v)
            if (tags.minus[v] >= 0 && tags.plus[v] >= 0 &&
                sphere_faces.count((Mask{1} << tags.minus[v]) | (Mask{1} << tags.plus[v])))
                pairing = false;
    }
    res.pairing_ok = pairing;
    res.centrally_symmetric = cond1 && pairing;

    if (k) {
        bool cond2 = cond1;
        for (Mask s = 0; cond2; ++s) {
            if (card(s) <= *k && !faces.count(s)) cond2 = false;
            if (s == full) break;
        }
        // Cross-check: every antipode-free vertex set of size <= k is a face.
        bool cross = res.centrally_symmetric;
        if (cross) {
            auto sphere_faces = sphere.complex.face_set();
            for (Mask b = 0; cross; ++b) {
                if (card(b) <= *k) {
                    Mask rest_pool = full & ~b;
                    for_each_subset(rest_pool, [&](Mask d) {
                        if (!cross || card(b) + card(d) > *k) return;
                        for (int v : mask_elems(b))
                            if (tags.minus[v] < 0) cross = false;
                        for (int v : mask_elems(d))
                            if (tags.plus[v] < 0) cross = false;
                        if (!cross) return;
                        Mask face = interval_face(IntervalBC{b, full & ~d}, n,
                                                  sphere.complex.universe());
                        if (!sphere_faces.count(face)) cross = false;
                    });
                }
                if (b == full) break;
            }
        }
        res.k_nearly_neighborly = cond2 && cross;
    }
    return res;
}

SimplicialComplex cs_construct(int n, const std::vector<Mask>& middle_choice) {
    if (n < 1 || n > 20) fail("TooLarge", "construction supports n <= 20");
    const Mask full = full_mask(n);
    if (n % 2 == 1) {
        if (!middle_choice.empty()) fail("InvalidChoice", "odd n admits no middle choice");
        std::vector<Mask> facets;
        for (Mask s = 0;; ++s) {
            if (card(s) == n / 2) facets.push_back(s);
            if (s == full) break;
        }
        return complex_on_ground(n, std::move(facets));
    }

    std::unordered_set<Mask> chosen(middle_choice.begin(), middle_choice.end());
    for (Mask s : chosen)
        if ((s & ~full) || card(s) != n / 2) fail("InvalidChoice", mask_to_string(s));
    for (Mask s = 0;; ++s) {
        if (card(s) == n / 2) {
            int picked = static_cast<int>(chosen.count(s)) + static_cast<int>(chosen.count(full & ~s));
            if (picked != 1)
                fail("InvalidChoice", "pair " + mask_to_string(s) + "/" +
                                          mask_to_string(full & ~s) +
                                          (picked ? " double-selected" : " unselected"));
        }
        if (s == full) break;
    }

    std::vector<Mask> facets(chosen.begin(), chosen.end());
    for (Mask s = 0;; ++s) {
        if (card(s) == n / 2 - 1) facets.push_back(s);
        if (s == full) break;
    }
    return complex_on_ground(n, std::move(facets));
}

} // namespace bier
