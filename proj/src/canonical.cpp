#include <algorithm>
#include <cstdint>
#include <numeric>

#include "bier/error.hpp"
#include "bier/simplicial.hpp"

namespace bier {

namespace {

bool face_order(Mask a, Mask b) {
    int ca = card(a), cb = card(b);
    return ca != cb ? ca < cb : a < b;
}

// Lexicographically minimal face-indicator encoding over all relabelings of
// the active vertices. Assigning new labels 0,1,... in order pins the
// indicator bits of all masks supported on the assigned prefix, which gives
// exact incremental pruning against the best encoding found so far.
//
// Ties at the leaves reveal automorphisms; candidates lying in the orbit of
// an already-explored sibling under a discovered automorphism that fixes the
// assigned prefix pointwise are skipped. Without this, highly symmetric
// complexes make the tie subtrees factorial.
struct CanonSearch {
    int v_count = 0;
    std::vector<std::uint64_t> face_bits; // indicator over old masks
    std::vector<std::uint32_t> old_of;    // old mask per new mask along the path
    std::vector<std::uint8_t> best;       // minimal indicator, byte per new mask
    std::vector<int> perm;                // new position -> old vertex
    std::vector<int> best_perm;
    std::vector<int> candidates;          // fixed heuristic order
    std::vector<char> used;
    std::vector<std::vector<int>> autos;  // discovered automorphisms, old -> old
    bool have_best = false;

    static constexpr std::size_t kMaxAutos = 192;

    bool face(std::uint32_t m) const { return (face_bits[m >> 6] >> (m & 63)) & 1; }

    void record_tie() {
        if (autos.size() >= kMaxAutos) return;
        std::vector<int> sigma(v_count), inverse(v_count);
        for (int i = 0; i < v_count; ++i) {
            sigma[best_perm[i]] = perm[i];
            inverse[perm[i]] = best_perm[i];
        }
        if (sigma == inverse) {
            autos.push_back(std::move(sigma));
        } else {
            autos.push_back(std::move(sigma));
            autos.push_back(std::move(inverse));
        }
    }

    bool orbit_skip(int t, int v, const std::vector<int>& tried) const {
        for (const auto& sigma : autos) {
            bool fixes_prefix = true;
            for (int s = 0; s < t; ++s)
                if (sigma[perm[s]] != perm[s]) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix) continue;
            int image = sigma[v];
            for (int u : tried)
                if (u == image) return true;
        }
        return false;
    }

    void dfs(int t, bool better) {
        if (t == v_count) {
            if (better || !have_best) {
                best_perm = perm;
                have_best = true;
            } else {
                record_tie();
            }
            return;
        }
        const std::uint32_t lo = 1u << t, hi = 2u << t;
        std::vector<int> tried;
        // Overwrite mode holds only along the leftmost descent that is
        // establishing a new best; once that descent completes, best is a
        // full valid encoding whose prefix equals the current path, and the
        // remaining siblings must compare against it.
        bool establish = better || !have_best;
        for (int v : candidates) {
            if (used[v]) continue;
            bool mode_better = establish || !have_best;
            if (!mode_better && orbit_skip(t, v, tried)) continue;
            tried.push_back(v);
            bool pruned = false;
            const std::uint32_t vbit = 1u << v;
            for (std::uint32_t m = lo; m < hi; ++m) {
                old_of[m] = old_of[m - lo] | vbit;
                std::uint8_t bit = face(old_of[m]) ? 1 : 0;
                if (!mode_better) {
                    if (bit < best[m]) {
                        mode_better = true;
                    } else if (bit > best[m]) {
                        pruned = true;
                        break;
                    }
                }
                if (mode_better) best[m] = bit;
            }
            if (pruned) continue;
            perm[t] = v;
            used[v] = 1;
            dfs(t + 1, mode_better);
            used[v] = 0;
            if (mode_better) establish = false;
        }
    }
};

} // namespace

std::string CanonicalForm::key() const {
    std::string s = std::to_string(vertex_count) + ":";
    for (Mask f : facets) s += std::to_string(f) + ",";
    return s;
}

CanonicalForm canonicalize(const SimplicialComplex& k) {
    const Mask active = k.vertex_set();
    const int v_count = card(active);
    if (v_count > 16) fail("TooLarge", "canonical form capped at 16 active vertices");
    if (v_count == 0) return CanonicalForm{0, k.facets()};

    // Compact active vertices to 0..v_count-1.
    std::vector<int> old_ids = mask_elems(active); // 1-based bit positions
    std::vector<int> compact(64, -1);
    for (int i = 0; i < v_count; ++i) compact[old_ids[i] - 1] = i;
    auto compact_mask = [&](Mask f) {
        std::uint32_t out = 0;
        while (f) {
            int b = std::countr_zero(f);
            f &= f - 1;
            out |= 1u << compact[b];
        }
        return out;
    };

    CanonSearch s;
    s.v_count = v_count;
    const std::size_t space = std::size_t{1} << v_count;
    s.face_bits.assign((space + 63) / 64, 0);
    for (Mask f : k.face_set()) {
        std::uint32_t m = compact_mask(f);
        s.face_bits[m >> 6] |= std::uint64_t{1} << (m & 63);
    }
    s.old_of.assign(space, 0);
    s.best.assign(space, 0);
    s.perm.assign(v_count, 0);
    s.used.assign(v_count, 0);

    // Low-degree vertices first: pushes absent faces toward small masks.
    std::vector<int> degree(v_count, 0);
    for (Mask f : k.facets()) {
        std::uint32_t m = compact_mask(f);
        while (m) {
            ++degree[std::countr_zero(m)];
            m &= m - 1;
        }
    }
    s.candidates.resize(v_count);
    std::iota(s.candidates.begin(), s.candidates.end(), 0);
    std::sort(s.candidates.begin(), s.candidates.end(), [&](int a, int b) {
        return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
    });

    s.dfs(0, false);

    std::vector<int> new_of(v_count, -1); // compact old id -> canonical label
    for (int pos = 0; pos < v_count; ++pos) new_of[s.best_perm[pos]] = pos;
    std::vector<Mask> facets;
    facets.reserve(k.facets().size());
    for (Mask f : k.facets()) {
        std::uint32_t m = compact_mask(f);
        Mask out = 0;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            out |= Mask{1} << new_of[b];
        }
        facets.push_back(out);
    }
    std::sort(facets.begin(), facets.end(), face_order);
    return CanonicalForm{v_count, std::move(facets)};
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    const Mask va = a.vertex_set(), vb = b.vertex_set();
    if (card(va) != card(vb)) return false;
    if (a.facets().size() != b.facets().size()) return false;
    auto card_multiset = [](const SimplicialComplex& k) {
        std::vector<int> cs;
        for (Mask f : k.facets()) cs.push_back(card(f));
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    if (card_multiset(a) != card_multiset(b)) return false;
    if (a.empty_only() || b.empty_only()) return a.empty_only() && b.empty_only();
    if (a.is_void() || b.is_void()) return a.is_void() && b.is_void();
    if (equal_as_labeled(a, b)) return true;
    return canonicalize(a) == canonicalize(b);
}

} // namespace bier
