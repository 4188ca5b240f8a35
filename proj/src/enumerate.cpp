#include "bier/enumerate.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <set>

#include "bier/bier_sphere.hpp"
#include "bier/error.hpp"

namespace bier {

namespace {

struct EnumContext {
    int m = 0;
    int bottom = -1, top = -1;
    std::vector<int> order;              // linear extension, bottom first
    std::vector<std::uint64_t> lower;    // lower-cover element mask
    std::vector<int> level;              // element height
    int levels = 0;
};

EnumContext make_context(const Poset& p) {
    if (p.size() > 64) fail("TooLarge", "enumeration supports posets on <= 64 elements");
    EnumContext ctx;
    ctx.m = p.size();
    ctx.bottom = p.bottom();
    ctx.top = p.top();
    ctx.level = p.height();
    ctx.levels = p.length() + 1;
    ctx.order.resize(ctx.m);
    std::iota(ctx.order.begin(), ctx.order.end(), 0);
    std::sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
        return ctx.level[a] != ctx.level[b] ? ctx.level[a] < ctx.level[b] : a < b;
    });
    ctx.lower.assign(ctx.m, 0);
    for (int e = 0; e < ctx.m; ++e)
        for (int u : p.lower_covers(e)) ctx.lower[e] |= std::uint64_t{1} << u;
    return ctx;
}

// DFS over take/skip decisions in linear-extension order; skip branch first.
// forced_in / forced_out pin elements (used for sharding by atom pattern).
template <typename Fn>
void enumerate_ideals(const EnumContext& ctx, std::uint64_t forced_in,
                      std::uint64_t forced_out, Fn&& fn) {
    std::uint64_t chosen = 0;
    std::vector<int> counts(ctx.levels, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == ctx.m) {
            fn(chosen, counts);
            return;
        }
        const int e = ctx.order[pos];
        const std::uint64_t ebit = std::uint64_t{1} << e;
        const bool may_skip = e != ctx.bottom && !(forced_in & ebit);
        const bool may_take = e != ctx.top && !(forced_out & ebit) &&
                              (chosen & ctx.lower[e]) == ctx.lower[e];
        if (may_skip) self(self, pos + 1);
        if (may_take) {
            chosen |= ebit;
            ++counts[ctx.level[e]];
            self(self, pos + 1);
            --counts[ctx.level[e]];
            chosen &= ~ebit;
        }
    };
    rec(rec, 0);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> shard_patterns(const Poset& p) {
    std::vector<int> atoms = p.upper_covers()[p.bottom()];
    std::sort(atoms.begin(), atoms.end());
    if (atoms.size() > 8) atoms.resize(8);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const int a = static_cast<int>(atoms.size());
    for (int pat = 0; pat < (1 << a); ++pat) {
        std::uint64_t in = 0, outm = 0;
        for (int i = 0; i < a; ++i)
            ((pat >> i) & 1 ? in : outm) |= std::uint64_t{1} << atoms[i];
        out.emplace_back(in, outm);
    }
    return out;
}

} // namespace

void for_each_proper_ideal(const Poset& p,
                           const std::function<void(std::uint64_t, const std::vector<int>&)>& fn) {
    EnumContext ctx = make_context(p);
    enumerate_ideals(ctx, 0, 0, fn);
}

std::uint64_t count_proper_ideals(const Poset& p, int shards) {
    EnumContext ctx = make_context(p);
    if (shards <= 1) {
        std::uint64_t count = 0;
        enumerate_ideals(ctx, 0, 0, [&count](std::uint64_t, const std::vector<int>&) { ++count; });
        return count;
    }
    auto patterns = shard_patterns(p);
    std::vector<std::future<std::uint64_t>> work;
    for (int w = 0; w < shards; ++w)
        work.push_back(std::async(std::launch::async, [&ctx, &patterns, w, shards]() {
            std::uint64_t count = 0;
            for (std::size_t i = w; i < patterns.size(); i += shards)
                enumerate_ideals(ctx, patterns[i].first, patterns[i].second,
                                 [&count](std::uint64_t, const std::vector<int>&) { ++count; });
            return count;
        }));
    std::uint64_t total = 0;
    for (auto& f : work) total += f.get();
    return total;
}

IdealStream::IdealStream(int n) : n_(n) {
    if (n < 1 || n > 6) fail("TooLarge", "ideal stream capped at n = 6");
    m_ = 1 << n;
    covers_.assign(m_, 0);
    for (int s = 0; s < m_; ++s)
        for (int v = 1; v <= n; ++v)
            if (s & static_cast<int>(elem_bit(v)))
                covers_[s] |= std::uint64_t{1} << (s & ~static_cast<int>(elem_bit(v)));
    decision_.assign(m_, 0);
    taken_.assign(m_, 0);
}

// Leaf order matches the recursive skip-first DFS; element order is the
// numeric subset order, which is a linear extension of B_n.
bool IdealStream::advance() {
    auto may_take = [this](int pos) {
        return pos != m_ - 1 && (chosen_ & covers_[pos]) == covers_[pos];
    };
    auto descend = [this](int from) {
        // Skip is the first branch and is always allowed off the bottom.
        for (int pos = from; pos < m_; ++pos) {
            if (pos == 0) {
                taken_[pos] = 1;
                chosen_ |= 1;
            } else {
                taken_[pos] = 0;
            }
        }
    };
    if (done_) return false;
    if (!started_) {
        started_ = true;
        chosen_ = 0;
        descend(0);
        return true;
    }
    int pos = m_ - 1;
    while (pos >= 0) {
        if (taken_[pos]) {
            chosen_ &= ~(std::uint64_t{1} << pos);
            --pos; // take was the last branch at this level (or forced)
            continue;
        }
        if (may_take(pos) && pos != 0) {
            taken_[pos] = 1;
            chosen_ |= std::uint64_t{1} << pos;
            descend(pos + 1);
            return true;
        }
        --pos;
    }
    done_ = true;
    return false;
}

std::optional<std::vector<Mask>> IdealStream::next() {
    if (!advance()) return std::nullopt;
    return ideal_faces(chosen_, n_);
}

std::vector<Mask> ideal_faces(std::uint64_t members, int n) {
    std::vector<Mask> out;
    for (int s = 0; s < (1 << n); ++s)
        if (members & (std::uint64_t{1} << s)) out.push_back(static_cast<Mask>(s));
    return out;
}

SimplicialComplex ideal_to_complex(std::uint64_t members, int n) {
    return complex_on_ground(n, ideal_faces(members, n));
}

namespace {

std::set<std::string> canonical_keys_exhaustive(int n, std::uint64_t forced_in,
                                                std::uint64_t forced_out) {
    Poset b = boolean_lattice(n);
    EnumContext ctx = make_context(b);
    std::set<std::string> keys;
    enumerate_ideals(ctx, forced_in, forced_out,
                     [&](std::uint64_t members, const std::vector<int>&) {
                         keys.insert(canonicalize(bier_complex(ideal_to_complex(members, n), n).complex).key());
                     });
    return keys;
}

std::vector<Mask> middle_level(int n, int size) {
    std::vector<Mask> out;
    for (Mask s = 0; s <= full_mask(n); ++s)
        if (card(s) == size) out.push_back(s);
    return out;
}

} // namespace

std::vector<SimplicialComplex> restricted_family(int n) {
    if (n < 3) fail("BadParameter", "restricted family needs n >= 3");
    const int base = (n - 1) / 2;     // complete skeleton: all sets of size <= base
    const int middle = (n + 1) / 2;   // free choices at this level
    auto mid = middle_level(n, middle);
    if (mid.size() > 12) fail("TooLarge", "restricted family materialization capped");
    std::vector<Mask> skeleton = middle_level(n, base);
    std::vector<SimplicialComplex> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << mid.size()); ++pick) {
        std::vector<Mask> facets = skeleton;
        for (std::size_t i = 0; i < mid.size(); ++i)
            if (pick & (std::uint64_t{1} << i)) facets.push_back(mid[i]);
        out.push_back(complex_on_ground(n, std::move(facets)));
    }
    return out;
}

std::uint64_t count_bier_isoclasses(int n, IsoMode mode, int shards) {
    if (mode == IsoMode::Exhaustive) {
        if (n < 1 || n > 5) fail("TooLarge", "exhaustive isomorph counting capped at n = 5");
        if (shards <= 1) return canonical_keys_exhaustive(n, 0, 0).size();
        Poset b = boolean_lattice(n);
        auto patterns = shard_patterns(b);
        std::vector<std::future<std::set<std::string>>> work;
        for (int w = 0; w < shards; ++w)
            work.push_back(std::async(std::launch::async, [n, &patterns, w, shards]() {
                std::set<std::string> keys;
                for (std::size_t i = w; i < patterns.size(); i += shards)
                    keys.merge(canonical_keys_exhaustive(n, patterns[i].first, patterns[i].second));
                return keys;
            }));
        std::set<std::string> all;
        for (auto& f : work) all.merge(f.get());
        return all.size();
    }

    if (mode == IsoMode::Restricted) {
        if (n < 3 || n > 6) fail("TooLarge", "restricted counting supports 3 <= n <= 6");
        const int base = (n - 1) / 2;
        const int middle = (n + 1) / 2;
        auto mid = middle_level(n, middle);
        std::vector<Mask> skeleton = middle_level(n, base);
        const std::uint64_t total = std::uint64_t{1} << mid.size();
        auto keys_for_range = [&](std::uint64_t from, std::uint64_t to) {
            std::set<std::string> keys;
            for (std::uint64_t pick = from; pick < to; ++pick) {
                std::vector<Mask> facets = skeleton;
                for (std::size_t i = 0; i < mid.size(); ++i)
                    if (pick & (std::uint64_t{1} << i)) facets.push_back(mid[i]);
                auto delta = complex_on_ground(n, std::move(facets));
                keys.insert(canonicalize(bier_complex(delta, n).complex).key());
            }
            return keys;
        };
        if (shards <= 1) return keys_for_range(0, total).size();
        std::vector<std::future<std::set<std::string>>> work;
        const std::uint64_t chunk = (total + shards - 1) / shards;
        for (int w = 0; w < shards; ++w) {
            std::uint64_t from = std::min<std::uint64_t>(w * chunk, total);
            std::uint64_t to = std::min<std::uint64_t>(from + chunk, total);
            work.push_back(std::async(std::launch::async, keys_for_range, from, to));
        }
        std::set<std::string> all;
        for (auto& f : work) all.merge(f.get());
        return all.size();
    }

    // Centrally symmetric selections (even n): one set from each complementary
    // middle pair.
    if (n % 2 != 0) fail("BadParameter", "cs counting needs even n");
    auto mid = middle_level(n, n / 2);
    std::vector<Mask> reps;
    for (Mask s : mid)
        if (s < (full_mask(n) & ~s)) reps.push_back(s);
    if (reps.size() > 20) fail("TooLarge", "too many complementary pairs");
    std::set<std::string> keys;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << reps.size()); ++pick) {
        std::vector<Mask> choice;
        for (std::size_t i = 0; i < reps.size(); ++i)
            choice.push_back((pick & (std::uint64_t{1} << i)) ? (full_mask(n) & ~reps[i])
                                                              : reps[i]);
        auto delta = cs_construct(n, choice);
        keys.insert(canonicalize(bier_complex(delta, n).complex).key());
    }
    return keys.size();
}

SimplicialComplex random_complex(int n, std::uint64_t seed, double density) {
    if (n < 1 || n > 32) fail("TooLarge", "random complexes support n <= 32");
    if (density < 0.0) density = 0.0;
    if (density > 1.0) density = 1.0;
    std::mt19937_64 rng(seed);
    const bool always = density >= 1.0;
    const std::uint64_t threshold =
        always ? 0 : static_cast<std::uint64_t>(density * 18446744073709551616.0);

    std::vector<Mask> gens{0};
    const Mask full = full_mask(n);
    for (int draw = 0; draw < 2 * n; ++draw) {
        Mask g = 0;
        for (int v = 1; v <= n; ++v)
            if (always || rng() < threshold) g |= elem_bit(v);
        if (g == full) {
            // Keep the sample proper. At density 1 the largest proper ideal
            // is the contract; below that, shrink the one draw instead of
            // saturating the whole ideal.
            if (always)
                for (int v = 1; v <= n; ++v) gens.push_back(full & ~elem_bit(v));
            else
                g &= ~elem_bit(1 + static_cast<int>(rng() % n));
        }
        if (g != full) gens.push_back(g);
    }
    return complex_on_ground(n, std::move(gens));
}

} // namespace bier
