#include "bier/simplicial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "bier/error.hpp"

namespace bier {

namespace {
bool face_order(Mask a, Mask b) {
    int ca = card(a), cb = card(b);
    return ca != cb ? ca < cb : a < b;
}
} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> universe,
                                                 std::vector<Mask> facets) {
    if (universe.size() > 64) fail("TooLarge", "universe exceeds 64 vertices");
    SimplicialComplex k;
    k.universe_ = std::move(universe);
    const Mask allowed = full_mask(k.universe_size());
    for (Mask f : facets)
        if (f & ~allowed) fail("VertexOutOfUniverse", "facet " + mask_to_string(f));

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Mask f : facets) {
        bool maximal = true;
        for (Mask g : facets)
            if (f != g && subseteq(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) k.facets_.push_back(f);
    }
    std::sort(k.facets_.begin(), k.facets_.end(), face_order);
    return k;
}

int SimplicialComplex::dim() const {
    if (is_void()) fail("VoidComplex", "void complex has no dimension");
    return card(facets_.back()) - 1;
}

bool SimplicialComplex::is_pure() const {
    if (is_void()) fail("VoidComplex", "void complex has no dimension");
    return card(facets_.front()) == card(facets_.back());
}

Mask SimplicialComplex::vertex_set() const {
    Mask v = 0;
    for (Mask f : facets_) v |= f;
    return v;
}

bool SimplicialComplex::contains(Mask f) const {
    for (Mask g : facets_)
        if (subseteq(f, g)) return true;
    return false;
}

long long SimplicialComplex::face_count() const {
    return static_cast<long long>(face_set().size());
}

std::unordered_set<Mask> SimplicialComplex::face_set() const {
    long long bound = 0;
    for (Mask f : facets_) bound += 1LL << card(f);
    if (bound > (1LL << 22)) fail("TooLarge", "face expansion beyond budget");
    std::unordered_set<Mask> faces;
    for (Mask f : facets_)
        for_each_subset(f, [&faces](Mask s) { faces.insert(s); });
    return faces;
}

std::vector<Mask> SimplicialComplex::faces() const {
    auto set = face_set();
    std::vector<Mask> out(set.begin(), set.end());
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

std::vector<std::string> numeric_universe(int n) {
    std::vector<std::string> u;
    u.reserve(n);
    for (int v = 1; v <= n; ++v) u.push_back(std::to_string(v));
    return u;
}

SimplicialComplex complex_on_ground(int n, std::vector<Mask> facets) {
    return SimplicialComplex::from_facets(numeric_universe(n), std::move(facets));
}

bool equal_as_labeled(const SimplicialComplex& a, const SimplicialComplex& b,
                      std::string* witness) {
    auto active_labels = [](const SimplicialComplex& k) {
        std::map<std::string, int> out; // label -> vertex index
        Mask v = k.vertex_set();
        for (int i = 0; i < k.universe_size(); ++i)
            if (v & (Mask{1} << i)) out.emplace(k.universe()[i], i);
        return out;
    };
    auto la = active_labels(a), lb = active_labels(b);
    if (a.empty_only() != b.empty_only() || a.is_void() != b.is_void()) {
        if (witness) *witness = "one side void or empty-only";
        return false;
    }
    {
        auto ia = la.begin();
        auto ib = lb.begin();
        for (; ia != la.end() && ib != lb.end(); ++ia, ++ib)
            if (ia->first != ib->first) break;
        if (ia != la.end() || ib != lb.end()) {
            if (witness)
                *witness = "vertex sets differ at " +
                           (ia != la.end() ? ia->first : ib->first);
            return false;
        }
    }
    // Remap both face sets onto the shared sorted-label indexing.
    auto remap = [](const SimplicialComplex& k, const std::map<std::string, int>& labels) {
        std::unordered_map<int, int> to_common;
        int idx = 0;
        for (const auto& [label, vert] : labels) to_common[vert] = idx++;
        std::unordered_set<Mask> out;
        for (Mask f : k.face_set()) {
            Mask g = 0;
            Mask rest = f;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                g |= Mask{1} << to_common.at(v);
            }
            out.insert(g);
        }
        return out;
    };
    auto fa = remap(a, la), fb = remap(b, lb);
    if (fa == fb) return true;
    if (witness) {
        std::vector<Mask> diff;
        for (Mask f : fa)
            if (!fb.count(f)) diff.push_back(f);
        for (Mask f : fb)
            if (!fa.count(f)) diff.push_back(f);
        std::sort(diff.begin(), diff.end(), face_order);
        std::vector<std::string> names;
        for (const auto& [label, vert] : la) names.push_back(label);
        std::string w = "face {";
        bool first = true;
        for (int v : mask_elems(diff.front())) {
            if (!first) w += ",";
            w += names[v - 1];
            first = false;
        }
        *witness = w + "} on one side only";
    }
    return false;
}

FVector f_vector(const SimplicialComplex& k, int n) {
    if (k.is_void()) fail("VoidComplex", "f-vector of the void complex");
    FVector f(n + 1, 0);
    for (Mask face : k.faces()) {
        int c = card(face);
        if (c > n) fail("LengthMismatch", "face larger than the ambient size");
        ++f[c];
    }
    return f;
}

FVector h_from_f(const FVector& f, int n) {
    for (std::size_t j = n + 1; j < f.size(); ++j)
        if (f[j] != 0) fail("LengthMismatch", "f-entries beyond index n");
    FVector h(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n && j < static_cast<int>(f.size()); ++j) {
            long long sign = ((i + j) % 2 == 0) ? 1 : -1;
            h[i] += sign * binomial(n - 1 - j, n - 1 - i) * f[j];
        }
    return h;
}

FVector f_from_h(const FVector& h, int n) {
    if (static_cast<int>(h.size()) != n) fail("LengthMismatch", "h-sequence must have length n");
    FVector f(n + 1, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f[i] += binomial(n - 1 - j, n - 1 - i) * h[j];
    return f;
}

FVector g_from_h(const FVector& h) {
    const int n = static_cast<int>(h.size());
    FVector g((n - 1) / 2 + 1, 0);
    g[0] = 1;
    for (int i = 1; i < static_cast<int>(g.size()); ++i) g[i] = h[i] - h[i - 1];
    return g;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k, int n) {
    if (n < 1 || n > 20) fail("TooLarge", "dual enumeration supports 1 <= n <= 20");
    if (k.is_void()) fail("ImproperComplex", "void complex has no dual");
    const Mask full = full_mask(n);
    if (k.vertex_set() & ~full) fail("GroundSetMismatch", "complex exceeds [1,n]");
    if (k.contains(full)) fail("ImproperComplex", "complex contains the whole ground set");

    auto faces = k.face_set();
    std::vector<Mask> dual_faces;
    for (Mask s = 0;; ++s) {
        if (!faces.count(full & ~s)) dual_faces.push_back(s);
        if (s == full) break;
    }
    return complex_on_ground(n, std::move(dual_faces));
}

SimplicialComplex deleted_join(const SimplicialComplex& a, const SimplicialComplex& b, int n) {
    if (n < 1 || n > 32) fail("TooLarge", "deleted join supports 1 <= n <= 32");
    const Mask full = full_mask(n);
    if ((a.vertex_set() | b.vertex_set()) & ~full)
        fail("GroundSetMismatch", "complexes exceed the common ground set");
    if (a.is_void() || b.is_void()) fail("ImproperComplex", "void side in a deleted join");

    std::vector<std::string> universe;
    for (int v = 1; v <= n; ++v) universe.push_back(std::to_string(v) + "-");
    for (int v = 1; v <= n; ++v) universe.push_back(std::to_string(v) + "+");

    auto fa = a.faces();
    auto fb = b.faces();
    std::vector<Mask> joint;
    for (Mask x : fa)
        for (Mask y : fb)
            if ((x & y) == 0) joint.push_back(x | (y << n));
    return SimplicialComplex::from_facets(std::move(universe), std::move(joint));
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, Mask face,
                                    const std::string& apex_label) {
    if (face == 0 || !k.contains(face)) fail("FaceNotPresent", mask_to_string(face));
    for (const auto& l : k.universe())
        if (l == apex_label) fail("LabelCollision", apex_label);
    if (k.universe_size() >= 64) fail("TooLarge", "no room for an apex vertex");

    auto faces = k.face_set();
    const Mask apex = Mask{1} << k.universe_size();
    std::vector<Mask> result;
    for (Mask g : faces) {
        if (subseteq(face, g)) continue;
        result.push_back(g);
        if (faces.count(g | face)) result.push_back(g | apex);
    }
    std::vector<std::string> universe = k.universe();
    universe.push_back(apex_label);
    return SimplicialComplex::from_facets(std::move(universe), std::move(result));
}

SimplicialComplex bistellar_flip(const SimplicialComplex& k, Mask face,
                                 const std::optional<std::string>& fresh_vertex) {
    if (k.is_void() || !k.is_pure()) fail("NotPure", "flips need a pure complex");
    if (face == 0 || !k.contains(face)) fail("FaceNotPresent", mask_to_string(face));

    auto faces = k.face_set();
    std::vector<Mask> link;
    Mask link_span = 0;
    for (Mask g : faces)
        if ((g & face) == 0 && faces.count(g | face)) {
            link.push_back(g);
            link_span |= g;
        }

    std::vector<std::string> universe = k.universe();
    Mask b;
    if (link_span == 0) {
        // 0-dimensional B: a vertex that is not yet in the complex.
        if (!fresh_vertex) fail("BadParameter", "0-flip needs a fresh vertex label");
        for (const auto& l : universe)
            if (l == *fresh_vertex) fail("LabelCollision", *fresh_vertex);
        if (universe.size() >= 64) fail("TooLarge", "no room for a fresh vertex");
        b = Mask{1} << universe.size();
        universe.push_back(*fresh_vertex);
    } else {
        std::unordered_set<Mask> link_set(link.begin(), link.end());
        if (link_set.count(link_span) ||
            static_cast<long long>(link_set.size()) != (1LL << card(link_span)) - 1)
            fail("LinkNotSimplexBoundary", "link of " + mask_to_string(face));
        for_each_subset(link_span, [&](Mask s) {
            if (s != link_span && !link_set.count(s))
                fail("LinkNotSimplexBoundary", "link of " + mask_to_string(face));
        });
        if (faces.count(link_span)) fail("BAlreadyPresent", mask_to_string(link_span));
        b = link_span;
    }

    std::vector<Mask> result;
    for (Mask g : faces)
        if (!subseteq(face, g)) result.push_back(g);
    for_each_subset(face, [&](Mask s) {
        if (s != face) result.push_back(s | b);
    });
    return SimplicialComplex::from_facets(std::move(universe), std::move(result));
}

ShellingCheck is_shelling(const SimplicialComplex& k, const std::vector<Mask>& facet_order) {
    if (k.is_void() || !k.is_pure()) fail("NotPure", "shellings need a pure complex");
    {
        std::vector<Mask> sorted = facet_order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Mask> expect = k.facets();
        std::sort(expect.begin(), expect.end());
        if (sorted != expect) fail("NotAPermutation", "order is not a permutation of the facets");
    }

    ShellingCheck res;
    std::unordered_set<Mask> seen;
    for (std::size_t j = 0; j < facet_order.size(); ++j) {
        Mask fj = facet_order[j];
        Mask restr = 0;
        int minimal_count = 0;
        for_each_subset(fj, [&](Mask s) {
            if (seen.count(s)) return;
            // minimal new face: every maximal proper subset already seen
            Mask rest = s;
            bool minimal = true;
            while (rest) {
                Mask low = rest & (rest - 1);
                Mask drop = s ^ (rest ^ low); // s minus the extracted bit
                rest = low;
                if (!seen.count(drop) && drop != s) {
                    minimal = false;
                    break;
                }
            }
            if (s == 0) minimal = true;
            if (minimal) {
                ++minimal_count;
                restr = s;
            }
        });
        if (j == 0) {
            // First facet attaches along nothing; its restriction is the empty face.
            res.restrictions.push_back(0);
        } else if (minimal_count == 1) {
            res.restrictions.push_back(restr);
        } else {
            res.valid = false;
            res.fail_step = static_cast<int>(j);
            return res;
        }
        for_each_subset(fj, [&seen](Mask s) { seen.insert(s); });
    }
    res.valid = true;
    return res;
}

namespace {
// Rank over GF(2); columns as row-index bitsets.
int gf2_rank(std::vector<std::vector<std::uint64_t>> cols) {
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<int> pivot_rows;
    int rank = 0;
    for (auto& col : cols) {
        int lead = -1;
        for (;;) {
            lead = -1;
            for (std::size_t w = 0; w < col.size(); ++w)
                if (col[w]) {
                    lead = static_cast<int>(w * 64) + std::countr_zero(col[w]);
                    break;
                }
            if (lead == -1) break;
            bool reduced = false;
            for (std::size_t p = 0; p < pivots.size(); ++p)
                if (pivot_rows[p] == lead) {
                    for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= pivots[p][w];
                    reduced = true;
                    break;
                }
            if (!reduced) break;
        }
        if (lead != -1) {
            pivots.push_back(col);
            pivot_rows.push_back(lead);
            ++rank;
        }
    }
    return rank;
}
} // namespace

std::vector<int> homology_gf2(const SimplicialComplex& k) {
    if (k.is_void()) fail("VoidComplex", "homology of the void complex");
    const int d = k.dim();
    if (d < 0) return {};

    std::vector<std::vector<Mask>> by_card(d + 2);
    std::vector<std::unordered_map<Mask, int>> index(d + 2);
    for (Mask f : k.faces()) {
        int c = card(f);
        if (c == 0) continue;
        index[c].emplace(f, static_cast<int>(by_card[c].size()));
        by_card[c].push_back(f);
    }

    // rank of the boundary from cardinality c to c-1 (c = 1 is the augmentation)
    std::vector<int> rank(d + 3, 0);
    for (int c = 1; c <= d + 1; ++c) {
        const int rows = c == 1 ? 1 : static_cast<int>(by_card[c - 1].size());
        const int words = (rows + 63) / 64;
        std::vector<std::vector<std::uint64_t>> cols;
        cols.reserve(by_card[c].size());
        for (Mask f : by_card[c]) {
            std::vector<std::uint64_t> col(words, 0);
            if (c == 1) {
                col[0] = 1;
            } else {
                Mask rest = f;
                while (rest) {
                    Mask low = rest & (rest - 1);
                    Mask sub = f ^ (rest ^ low);
                    rest = low;
                    int r = index[c - 1].at(sub);
                    col[r >> 6] |= std::uint64_t{1} << (r & 63);
                }
            }
            cols.push_back(std::move(col));
        }
        rank[c] = gf2_rank(std::move(cols));
    }

    std::vector<int> betti(d + 1, 0);
    for (int c = 1; c <= d + 1; ++c)
        betti[c - 1] = static_cast<int>(by_card[c].size()) - rank[c] - rank[c + 1];
    return betti;
}

namespace {
bool attachment_ok(const std::unordered_set<Mask>& seen, Mask fj) {
    int minimal_count = 0;
    bool ok = true;
    for_each_subset(fj, [&](Mask s) {
        if (!ok || seen.count(s)) return;
        Mask rest = s;
        bool minimal = true;
        while (rest) {
            Mask low = rest & (rest - 1);
            Mask drop = s ^ (rest ^ low);
            rest = low;
            if (drop != s && !seen.count(drop)) {
                minimal = false;
                break;
            }
        }
        if (minimal && ++minimal_count > 1) ok = false;
    });
    return ok && minimal_count == 1;
}

bool shelling_search(const SimplicialComplex& k, std::vector<Mask>& order, long long& budget) {
    const auto& facets = k.facets();
    const std::size_t total = facets.size();
    std::vector<char> used(total, 0);
    std::unordered_set<Mask> seen;
    std::vector<std::vector<Mask>> added; // per-step fresh faces, for backtracking

    auto rec = [&](auto&& self) -> bool {
        if (order.size() == total) return true;
        for (std::size_t i = 0; i < total; ++i) {
            if (used[i]) continue;
            if (--budget < 0) return false;
            if (!order.empty() && !attachment_ok(seen, facets[i])) continue;
            used[i] = 1;
            order.push_back(facets[i]);
            added.emplace_back();
            for_each_subset(facets[i], [&](Mask s) {
                if (seen.insert(s).second) added.back().push_back(s);
            });
            if (self(self)) return true;
            for (Mask s : added.back()) seen.erase(s);
            added.pop_back();
            order.pop_back();
            used[i] = 0;
            if (budget < 0) return false;
        }
        return false;
    };
    return rec(rec);
}
} // namespace

Report sphere_checks(const SimplicialComplex& k, int expected_dim) {
    if (k.is_void()) fail("VoidComplex", "sphere checks on the void complex");
    Report rep;
    if (expected_dim == -1) {
        rep.check("dimension", k.dim() == -1, "expected the empty-face complex");
        rep.check("pure", true);
        rep.check("pseudomanifold", k.empty_only());
        rep.check("euler-characteristic", k.empty_only(), "chi~ = -1");
        rep.check("gf2-homology", k.empty_only(), "(-1)-sphere");
        rep.check("shelling-found", k.empty_only(), "trivial");
        return rep;
    }

    const int d = k.dim();
    rep.check("dimension", d == expected_dim,
              "dim = " + std::to_string(d) + ", expected " + std::to_string(expected_dim));
    bool pure = k.is_pure();
    rep.check("pure", pure, pure ? "" : "facet sizes differ");
    if (!pure || d != expected_dim) return rep;

    bool pm = true;
    std::string pm_witness;
    std::unordered_map<Mask, int> ridge_count;
    for (Mask f : k.facets()) {
        Mask rest = f;
        while (rest) {
            Mask low = rest & (rest - 1);
            ++ridge_count[f ^ (rest ^ low)];
            rest = low;
        }
    }
    for (Mask f : k.faces()) {
        if (card(f) != d) continue;
        auto it = ridge_count.find(f);
        int c = it == ridge_count.end() ? 0 : it->second;
        if (c != 2) {
            pm = false;
            pm_witness = "face " + mask_to_string(f) + " in " + std::to_string(c) + " facets";
            break;
        }
    }
    rep.check("pseudomanifold", pm, pm_witness);

    long long chi = -1;
    for (Mask f : k.faces())
        if (f) chi += (card(f) % 2 == 1) ? 1 : -1;
    long long expect_chi = (d % 2 == 0) ? 1 : -1;
    rep.check("euler-characteristic", chi == expect_chi,
              "chi~ = " + std::to_string(chi) + ", expected " + std::to_string(expect_chi));

    auto betti = homology_gf2(k);
    std::vector<int> sphere(d + 1, 0);
    sphere[d] = 1;
    rep.check("gf2-homology", betti == sphere, "betti~ = " + seq_to_string(betti));

    std::vector<Mask> order;
    long long budget = 200000;
    bool found = shelling_search(k, order, budget);
    rep.check("shelling-found", found,
              found ? std::to_string(order.size()) + " facets"
                    : (budget < 0 ? "search budget exhausted" : "no shelling exists"));
    return rep;
}

Report link_homology_checks(const SimplicialComplex& k, int expected_dim) {
    if (k.is_void()) fail("VoidComplex", "link checks on the void complex");
    Report rep;
    auto faces = k.faces();
    auto face_lookup = k.face_set();
    bool all = true;
    std::string witness;
    int checked = 0;
    for (Mask f : faces) {
        if (f == 0) continue;
        std::vector<Mask> link;
        for (Mask g : faces)
            if ((g & f) == 0 && face_lookup.count(g | f)) link.push_back(g);
        int ld = expected_dim - card(f);
        ++checked;
        auto lk = SimplicialComplex::from_facets(k.universe(), std::move(link));
        if (ld < 0) {
            if (!lk.empty_only()) {
                all = false;
                witness = "link of " + mask_to_string(f) + " not trivial";
                break;
            }
            continue;
        }
        auto betti = homology_gf2(lk);
        std::vector<int> sphere(ld + 1, 0);
        sphere[ld] = 1;
        if (lk.dim() != ld || betti != sphere) {
            all = false;
            witness = "link of " + mask_to_string(f) + ": betti~ = " + seq_to_string(betti);
            break;
        }
    }
    rep.check("links-gf2-spherical", all,
              all ? std::to_string(checked) + " links" : witness);
    return rep;
}

long long kk_shadow(long long m, int k) {
    if (m < 0 || k < 1) fail("BadParameter", "shadow needs m >= 0, k >= 1");
    long long shadow = 0;
    long long rem = m;
    int i = k;
    while (rem > 0 && i >= 1) {
        int a = i;
        while (binomial(a + 1, i) <= rem && a + 1 <= 64) ++a;
        if (binomial(a, i) > rem) break; // rem smaller than C(i,i): impossible for rem>0
        rem -= binomial(a, i);
        shadow += binomial(a, i - 1);
        --i;
    }
    return shadow;
}

bool kk_is_ksequence(const FVector& seq) {
    if (seq.empty() || seq[0] != 1) return false;
    for (std::size_t k = 1; k < seq.size(); ++k) {
        if (seq[k] < 0) return false;
        if (kk_shadow(seq[k], static_cast<int>(k)) > seq[k - 1]) return false;
    }
    return true;
}

SimplicialComplex kk_compressed_complex(const FVector& f_target, int n) {
    if (n < 1 || n > 64) fail("BadParameter", "ambient size out of range");
    if (!kk_is_ksequence(f_target)) fail("NotAKSequence", seq_to_string(f_target));
    for (std::size_t k = 0; k < f_target.size(); ++k) {
        int kk = static_cast<int>(k);
        if (kk > n && f_target[k] != 0) fail("BadParameter", "face counts beyond the ambient size");
        if (kk <= n && f_target[k] > binomial(n, kk))
            fail("BadParameter", "f_" + std::to_string(kk) + " exceeds C(n,k)");
    }

    std::vector<Mask> faces{0};
    for (std::size_t k = 1; k < f_target.size(); ++k) {
        Mask m = full_mask(static_cast<int>(k)); // smallest mask of popcount k
        for (long long taken = 0; taken < f_target[k]; ++taken) {
            faces.push_back(m);
            Mask c = m & (~m + 1);
            Mask r = m + c;
            m = r | (((m ^ r) >> 2) / c);
        }
    }
    auto k = SimplicialComplex::from_facets(numeric_universe(n), std::move(faces));
    // The shadow inequalities make the colex-initial family downward closed.
    long long total = 0;
    for (long long v : f_target) total += v;
    if (k.face_count() != total) fail("NotAKSequence", "compressed family not closed");
    return k;
}

} // namespace bier
