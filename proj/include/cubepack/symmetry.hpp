#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cubepack/core.hpp"
#include "cubepack/errors.hpp"

namespace cubepack {

// The symmetry group behind "types": all torus translations, coordinate
// permutations and per-coordinate reflections x_i -> -x_i.
inline constexpr const char* kSymmetryGroupTag = "translations*permutations*reflections";

struct CanonicalForm {
    TorusParams params;
    std::vector<Pos> cubes;  // the orbit-minimal sorted position list

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return cubes < o.cubes; }
};

// Point-group tables plus componentwise differences for one torus.
//
// Canonicalization exploits that the lexicographic minimum over the full
// group always pins some element of the set to position 0 (the sorted list
// starting with 0 beats any list that does not contain it), so the
// translation part reduces to |S| pin choices and the rest is a minimum
// over the 2^n * n! point group.
class SymmetryContext {
  public:
    explicit SymmetryContext(const Torus& t) : torus_(t) {
        const Pos npos = t.position_count();
        std::uint64_t pg = 1;
        for (int i = 1; i <= t.n(); ++i) pg *= static_cast<std::uint64_t>(i);
        pg <<= t.n();
        if (pg * npos > (1ull << 26) || npos > 4096)
            throw capacity_error("symmetry tables beyond supported scale for this (n, N)");

        std::vector<int> perm(static_cast<std::size_t>(t.n()));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> x, y(static_cast<std::size_t>(t.n()));
        do {
            for (int mask = 0; mask < (1 << t.n()); ++mask) {
                std::vector<std::uint16_t> table(npos);
                for (Pos p = 0; p < npos; ++p) {
                    x = t.decode(p);
                    for (int i = 0; i < t.n(); ++i) {
                        int v = x[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                        if (mask >> i & 1) v = (t.side() - v) % t.side();
                        y[static_cast<std::size_t>(i)] = v;
                    }
                    table[p] = static_cast<std::uint16_t>(t.encode(y));
                }
                point_group_.push_back(std::move(table));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        sub_.resize(static_cast<std::size_t>(npos) * npos);
        for (Pos c = 0; c < npos; ++c)
            for (Pos p = 0; p < npos; ++p)
                sub_[static_cast<std::size_t>(c) * npos + p] = static_cast<std::uint16_t>(t.sub(p, c));

        min_image_.assign(npos, static_cast<std::uint16_t>(npos - 1));
        for (const auto& table : point_group_)
            for (Pos p = 0; p < npos; ++p) min_image_[p] = std::min(min_image_[p], table[p]);
    }

    const Torus& torus() const { return torus_; }
    std::size_t point_group_size() const { return point_group_.size(); }

    Pos apply_point_group(std::size_t e, Pos p) const { return point_group_[e][p]; }
    Pos translate(Pos p, Pos by) const { return torus_.add(p, by); }

    // Minimal representative of the orbit of a sorted position list.
    std::vector<Pos> canonical(const std::vector<Pos>& sorted) const {
        if (sorted.size() <= 1) return sorted.empty() ? sorted : std::vector<Pos>{0};
        std::vector<Pos> best;
        minimize(sorted, &best, false);
        return best;
    }

    CanonicalForm canonical_form(const Packing& p) const {
        std::vector<Pos> s = p.cubes;
        std::sort(s.begin(), s.end());
        return CanonicalForm{torus_.params(), canonical(s)};
    }

    // True iff the sorted list (which must start at position 0) is the
    // minimal representative of its own orbit. Used as the orderly-generation
    // pruning test: minimal representatives stay minimal when their largest
    // element is removed, so the search may discard non-minimal partials.
    bool is_canonical(const std::vector<Pos>& sorted) const {
        if (sorted.size() <= 1) return sorted.empty() || sorted[0] == 0;
        if (sorted[0] != 0) return false;
        return minimize(sorted, nullptr, true);
    }

    // Full orbit as sorted lists (small instances; tests and reports).
    std::set<std::vector<Pos>> orbit(const std::vector<Pos>& cubes) const {
        std::set<std::vector<Pos>> out;
        const Pos npos = torus_.position_count();
        std::vector<Pos> img(cubes.size());
        for (std::size_t e = 0; e < point_group_.size(); ++e) {
            for (Pos tr = 0; tr < npos; ++tr) {
                for (std::size_t i = 0; i < cubes.size(); ++i)
                    img[i] = torus_.add(point_group_[e][cubes[i]], tr);
                std::vector<Pos> s = img;
                std::sort(s.begin(), s.end());
                out.insert(std::move(s));
            }
        }
        return out;
    }

  private:
    // Scans all candidates g*(S - c). In prefix mode returns false as soon as
    // a candidate is strictly smaller than S. Otherwise fills *best.
    bool minimize(const std::vector<Pos>& ref, std::vector<Pos>* best, bool prefix_mode) const {
        const Pos npos = torus_.position_count();
        const std::size_t k = ref.size();
        std::vector<Pos> diffs(k), cand(k);
        if (best) *best = prefix_mode ? ref : std::vector<Pos>();
        // In prefix mode ref itself is a candidate (e = id, c = 0), so compare
        // against ref; otherwise start with an empty best and accept the first
        // candidate unconditionally.
        const std::vector<Pos>* cur = prefix_mode ? &ref : nullptr;
        for (std::size_t ci = 0; ci < k; ++ci) {
            const std::uint16_t* sub_row = &sub_[static_cast<std::size_t>(ref[ci]) * npos];
            for (std::size_t i = 0; i < k; ++i) diffs[i] = sub_row[ref[i]];
            if (cur) {
                // No point-group image of this pin can reach a second element
                // below the per-position orbit minima.
                Pos lb = npos;
                for (std::size_t i = 0; i < k; ++i) {
                    if (i == ci) continue;
                    Pos v = min_image_[diffs[i]];
                    if (v < lb) lb = v;
                }
                if (lb > (*cur)[1]) continue;
            }
            for (const auto& table : point_group_) {
                // Second element of the sorted candidate (first is always 0).
                Pos m2 = npos;
                for (std::size_t i = 0; i < k; ++i) {
                    if (i == ci) continue;
                    Pos v = table[diffs[i]];
                    if (v < m2) m2 = v;
                }
                if (cur && m2 > (*cur)[1]) continue;
                for (std::size_t i = 0; i < k; ++i) cand[i] = table[diffs[i]];
                std::sort(cand.begin(), cand.end());
                if (!cur) {
                    if (best) {
                        *best = cand;
                        cur = best;
                    }
                    continue;
                }
                if (cand < *cur) {
                    if (prefix_mode) return false;
                    if (best) {
                        *best = cand;
                        cur = best;
                    }
                }
            }
        }
        return true;
    }

    const Torus torus_;
    std::vector<std::vector<std::uint16_t>> point_group_;
    std::vector<std::uint16_t> sub_;
    std::vector<std::uint16_t> min_image_;
};

}  // namespace cubepack
