#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubepack/bitvec.hpp"
#include "cubepack/errors.hpp"

namespace cubepack {

// Encoded position id: coordinates in lexicographic order, first coordinate
// most significant (base 2N digits).
using Pos = std::uint32_t;

struct TorusParams {
    int n = 1;  // dimension
    int N = 2;  // cube side; torus side is 2N

    bool operator==(const TorusParams&) const = default;
};

// The discrete torus (Z/2NZ)^n with side-N cubes placed at integer positions.
// A cube at p occupies the cells p + {0..N-1}^n (componentwise mod 2N).
class Torus {
  public:
    Torus(int n, int N) : n_(n), N_(N), side_(2 * N) {
        if (n < 1) throw usage_error("dimension n must be >= 1");
        if (N < 2) throw usage_error("scale N must be >= 2");
        std::uint64_t count = 1;
        pow_.assign(static_cast<std::size_t>(n), 1);
        for (int i = n - 1; i >= 0; --i) {
            pow_[static_cast<std::size_t>(i)] = static_cast<Pos>(count);
            count *= static_cast<std::uint64_t>(side_);
            if (count > (1ull << 31))
                throw capacity_error("torus has more than 2^31 positions; instance beyond supported scale");
        }
        npos_ = static_cast<Pos>(count);
    }
    explicit Torus(TorusParams p) : Torus(p.n, p.N) {}

    int n() const { return n_; }
    int N() const { return N_; }
    int side() const { return side_; }
    Pos position_count() const { return npos_; }
    TorusParams params() const { return {n_, N_}; }

    int digit(Pos p, int axis) const {
        return static_cast<int>((p / pow_[static_cast<std::size_t>(axis)]) % static_cast<Pos>(side_));
    }

    Pos encode(const std::vector<int>& coords) const {
        if (static_cast<int>(coords.size()) != n_)
            throw usage_error("coordinate vector has wrong dimension");
        Pos p = 0;
        for (int i = 0; i < n_; ++i) {
            if (coords[static_cast<std::size_t>(i)] < 0 || coords[static_cast<std::size_t>(i)] >= side_)
                throw usage_error("coordinate out of range [0, 2N)");
            p += static_cast<Pos>(coords[static_cast<std::size_t>(i)]) * pow_[static_cast<std::size_t>(i)];
        }
        return p;
    }

    std::vector<int> decode(Pos p) const {
        std::vector<int> c(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = digit(p, i);
        return c;
    }

    // p - q componentwise mod 2N
    Pos sub(Pos p, Pos q) const {
        Pos r = 0;
        for (int i = 0; i < n_; ++i) {
            int d = digit(p, i) - digit(q, i);
            if (d < 0) d += side_;
            r += static_cast<Pos>(d) * pow_[static_cast<std::size_t>(i)];
        }
        return r;
    }
    // p + q componentwise mod 2N
    Pos add(Pos p, Pos q) const {
        Pos r = 0;
        for (int i = 0; i < n_; ++i) {
            int d = digit(p, i) + digit(q, i);
            if (d >= side_) d -= side_;
            r += static_cast<Pos>(d) * pow_[static_cast<std::size_t>(i)];
        }
        return r;
    }

    // Two cubes are compatible (interior-disjoint) iff some coordinate offset
    // is exactly N: two side-N arcs on a circle of length 2N are disjoint only
    // at the antipodal offset.
    bool compatible(Pos v, Pos w) const {
        for (int i = 0; i < n_; ++i) {
            int d = digit(v, i) - digit(w, i);
            if (d == N_ || d == -N_) return true;
        }
        return false;
    }

    // Facet-sharing pair: offset N on exactly one axis, equal elsewhere.
    std::optional<int> shares_facet(Pos v, Pos w) const {
        int axis = -1;
        for (int i = 0; i < n_; ++i) {
            int d = digit(v, i) - digit(w, i);
            if (d == 0) continue;
            if ((d == N_ || d == -N_) && axis < 0)
                axis = i;
            else
                return std::nullopt;
        }
        if (axis < 0) return std::nullopt;
        return axis;
    }

    // Cell offsets {0..N-1}^n as encoded ids; cube at p covers {add(p, o)}.
    const std::vector<Pos>& cover_offsets() const {
        if (cover_offsets_.empty()) {
            std::vector<int> c(static_cast<std::size_t>(n_), 0);
            while (true) {
                Pos off = 0;
                for (int i = 0; i < n_; ++i)
                    off += static_cast<Pos>(c[static_cast<std::size_t>(i)]) * pow_[static_cast<std::size_t>(i)];
                cover_offsets_.push_back(off);
                int i = n_ - 1;
                while (i >= 0 && ++c[static_cast<std::size_t>(i)] == N_) c[static_cast<std::size_t>(i--)] = 0;
                if (i < 0) break;
            }
        }
        return cover_offsets_;
    }

    std::uint64_t cells_per_cube() const {
        std::uint64_t c = 1;
        for (int i = 0; i < n_; ++i) c *= static_cast<std::uint64_t>(N_);
        return c;
    }
    std::uint64_t max_packing_size() const {
        std::uint64_t c = 1;
        for (int i = 0; i < n_; ++i) c *= 2;
        return c;
    }

  private:
    int n_, N_, side_;
    Pos npos_ = 0;
    std::vector<Pos> pow_;
    mutable std::vector<Pos> cover_offsets_;
};

struct Packing {
    TorusParams params;
    std::vector<Pos> cubes;  // kept sorted
};

inline Packing make_packing(const Torus& t, std::vector<Pos> cubes) {
    for (Pos p : cubes)
        if (p >= t.position_count()) throw usage_error("cube position out of range");
    std::sort(cubes.begin(), cubes.end());
    return Packing{t.params(), std::move(cubes)};
}

inline bool is_packing(const Torus& t, const std::vector<Pos>& cubes) {
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        for (std::size_t j = i + 1; j < cubes.size(); ++j) {
            if (cubes[i] == cubes[j]) return false;  // duplicate: full self-overlap
            if (!t.compatible(cubes[i], cubes[j])) return false;
        }
    }
    return true;
}

inline bool is_tiling(const Torus& t, const std::vector<Pos>& cubes) {
    return is_packing(t, cubes) && cubes.size() == t.max_packing_size();
}

// All positions compatible with every cube. Nonempty iff the packing extends.
inline BitVec free_position_set(const Torus& t, const std::vector<Pos>& cubes) {
    BitVec free(t.position_count(), true);
    for (Pos c : cubes) {
        BitVec next(t.position_count());
        free.for_each_set([&](std::size_t q) {
            if (t.compatible(c, static_cast<Pos>(q))) next.set(q);
        });
        free = std::move(next);
    }
    return free;
}

inline std::vector<Pos> free_positions(const Torus& t, const std::vector<Pos>& cubes) {
    std::vector<Pos> out;
    free_position_set(t, cubes).for_each_set([&](std::size_t q) { out.push_back(static_cast<Pos>(q)); });
    return out;
}

inline BitVec covered_cells(const Torus& t, const std::vector<Pos>& cubes) {
    BitVec cov(t.position_count());
    for (Pos c : cubes)
        for (Pos off : t.cover_offsets()) cov.set(t.add(c, off));
    return cov;
}

// Cells of the torus covered by no cube.
inline std::vector<Pos> hole_of(const Torus& t, const std::vector<Pos>& cubes) {
    BitVec cov = covered_cells(t, cubes);
    std::vector<Pos> cells;
    for (Pos z = 0; z < t.position_count(); ++z)
        if (!cov.test(z)) cells.push_back(z);
    return cells;
}

// {0, N}^n: the tiling by integral translates.
inline std::vector<Pos> trivial_tiling(const Torus& t) {
    std::vector<Pos> cubes;
    std::vector<int> c(static_cast<std::size_t>(t.n()), 0);
    while (true) {
        cubes.push_back(t.encode(c));
        int i = t.n() - 1;
        while (i >= 0) {
            auto& ci = c[static_cast<std::size_t>(i)];
            ci = ci == 0 ? t.N() : 0;
            if (ci != 0) break;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(cubes.begin(), cubes.end());
    return cubes;
}

// Pairwise-compatibility rows; the workhorse for search and simulation.
struct CompatTable {
    std::vector<BitVec> rows;
    std::size_t incompatible_per_position = 0;  // (2N-1)^n, including the position itself
};

inline CompatTable make_compat_table(const Torus& t) {
    const Pos n = t.position_count();
    if (n > 65536) throw capacity_error("compatibility table limited to 65536 positions");
    CompatTable table;
    table.rows.assign(n, BitVec(n));
    for (Pos p = 0; p < n; ++p)
        for (Pos q = static_cast<Pos>(p + 1); q < n; ++q)
            if (t.compatible(p, q)) {
                table.rows[p].set(q);
                table.rows[q].set(p);
            }
    table.incompatible_per_position = n - table.rows[0].count();
    return table;
}

}  // namespace cubepack
