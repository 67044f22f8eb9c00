#pragma once

// Exact arithmetic in the rank-10 even unimodular lattice U + E8(-1)
// with an extra 2-torsion class (the canonical class of a classical
// Enriques surface). Coordinates: (e, f) for the hyperbolic plane U,
// then 8 coordinates in a fixed simple-root basis of E8 (Bourbaki
// ordering), with the E8 Gram negated.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace enriques {

using Coord = std::int64_t;
inline constexpr int kRank = 10;
inline constexpr int kE8Rank = 8;

inline constexpr Coord iabs(Coord c) { return c < 0 ? -c : c; }

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotARoot : LatticeError {
    using LatticeError::LatticeError;
};
struct BoundTooLarge : LatticeError {
    using LatticeError::LatticeError;
};

// E8 Cartan matrix, Bourbaki node ordering (node 2 is the branch node
// attached to node 4 of the A7 chain 1-3-4-5-6-7-8).
inline constexpr std::array<std::array<Coord, kE8Rank>, kE8Rank> kCartanE8 = {{
    {2, 0, -1, 0, 0, 0, 0, 0},
    {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0},
    {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, 0, -1, 2},
}};

// Coefficients of the highest root of E8 are at most 6 in this basis,
// so height 6 captures the whole root system.
inline constexpr Coord kE8RootHeight = 6;

struct GramForm {
    std::array<std::array<Coord, kRank>, kRank> matrix{};

    constexpr GramForm() {
        matrix[0][1] = 1;
        matrix[1][0] = 1;
        for (int i = 0; i < kE8Rank; ++i)
            for (int j = 0; j < kE8Rank; ++j)
                matrix[2 + i][2 + j] = -kCartanE8[i][j];
    }
};

inline const GramForm& gram() {
    static const GramForm g{};
    return g;
}

struct NSClass {
    std::array<Coord, kRank> free{};
    int torsion = 0;  // coefficient of K_X, in {0,1}

    NSClass() = default;
    explicit NSClass(std::array<Coord, kRank> c, int t = 0) : free(c), torsion(t & 1) {}

    bool is_zero() const {
        return torsion == 0 &&
               std::all_of(free.begin(), free.end(), [](Coord c) { return c == 0; });
    }
    bool free_zero() const {
        return std::all_of(free.begin(), free.end(), [](Coord c) { return c == 0; });
    }
    Coord height() const {
        Coord h = 0;
        for (Coord c : free) h = std::max(h, iabs(c));
        return h;
    }

    friend NSClass operator+(const NSClass& a, const NSClass& b) {
        NSClass r;
        for (int i = 0; i < kRank; ++i) r.free[i] = a.free[i] + b.free[i];
        r.torsion = (a.torsion ^ b.torsion);
        return r;
    }
    friend NSClass operator-(const NSClass& a, const NSClass& b) {
        NSClass r;
        for (int i = 0; i < kRank; ++i) r.free[i] = a.free[i] - b.free[i];
        r.torsion = (a.torsion ^ b.torsion);  // -K_X = K_X
        return r;
    }
    friend NSClass operator*(Coord n, const NSClass& a) {
        NSClass r;
        for (int i = 0; i < kRank; ++i) r.free[i] = n * a.free[i];
        r.torsion = static_cast<int>(((n % 2) + 2) % 2) * a.torsion;
        return r;
    }
    friend NSClass operator-(const NSClass& a) { return Coord(-1) * a; }
    friend bool operator==(const NSClass& a, const NSClass& b) {
        return a.free == b.free && a.torsion == b.torsion;
    }
    friend bool operator!=(const NSClass& a, const NSClass& b) { return !(a == b); }
    // lexicographic on free part, then torsion; used for deterministic output
    friend bool operator<(const NSClass& a, const NSClass& b) {
        if (a.free != b.free) return a.free < b.free;
        return a.torsion < b.torsion;
    }
};

// numerical intersection pairing; the torsion class is numerically trivial
inline Coord pair(const NSClass& a, const NSClass& b) {
    const auto& g = gram().matrix;
    Coord acc = 0;
    for (int i = 0; i < kRank; ++i) {
        if (a.free[i] == 0) continue;
        Coord row = 0;
        for (int j = 0; j < kRank; ++j) row += g[i][j] * b.free[j];
        acc += a.free[i] * row;
    }
    return acc;
}

inline Coord norm(const NSClass& a) { return pair(a, a); }

// canonical class K_X (zero free part, torsion bit set)
inline NSClass canonical_class() {
    NSClass k;
    k.torsion = 1;
    return k;
}

inline NSClass basis_vector(int i, Coord c = 1) {
    NSClass v;
    v.free[i] = c;
    return v;
}

struct Reflection {
    NSClass root;
    explicit Reflection(NSClass r) : root(std::move(r)) {
        if (root.torsion != 0 || pair(root, root) != -2)
            throw NotARoot("reflection root must be torsion-free with self-pairing -2");
    }
    NSClass operator()(const NSClass& x) const { return x + pair(x, root) * root; }
};

inline NSClass reflect(const NSClass& root, const NSClass& x) {
    return Reflection(root)(x);
}

enum class Block { Full, U, E8 };

namespace detail {

// Cholesky factor R (upper triangular, C = R^T R) of the E8 Cartan matrix.
inline const std::array<std::array<double, kE8Rank>, kE8Rank>& cartan_cholesky() {
    static const auto R = [] {
        std::array<std::array<double, kE8Rank>, kE8Rank> r{};
        std::array<std::array<double, kE8Rank>, kE8Rank> a{};
        for (int i = 0; i < kE8Rank; ++i)
            for (int j = 0; j < kE8Rank; ++j) a[i][j] = double(kCartanE8[i][j]);
        for (int i = 0; i < kE8Rank; ++i) {
            double d = a[i][i];
            for (int k = 0; k < i; ++k) d -= r[k][i] * r[k][i];
            r[i][i] = std::sqrt(d);
            for (int j = i + 1; j < kE8Rank; ++j) {
                double s = a[i][j];
                for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
                r[i][j] = s / r[i][i];
            }
        }
        return r;
    }();
    return R;
}

inline Coord cartan_norm(const std::array<Coord, kE8Rank>& x) {
    Coord acc = 0;
    for (int i = 0; i < kE8Rank; ++i) {
        if (x[i] == 0) continue;
        Coord row = 0;
        for (int j = 0; j < kE8Rank; ++j) row += kCartanE8[i][j] * x[j];
        acc += x[i] * row;
    }
    return acc;
}

// All integer x with x^T C x <= bound (C = E8 Cartan, positive definite),
// including zero, by Fincke-Pohst style recursion on the Cholesky factor.
inline void enumerate_cartan_ball(Coord bound, std::vector<std::array<Coord, kE8Rank>>& out) {
    if (bound < 0) return;
    const auto& R = cartan_cholesky();
    std::array<Coord, kE8Rank> x{};
    const double eps = 1e-9;
    auto rec = [&](auto&& self, int i, double remaining) -> void {
        if (i < 0) {
            out.push_back(x);
            return;
        }
        double c = 0;  // R[i][i]*x_i + sum_{j>i} R[i][j]*x_j must be small
        for (int j = i + 1; j < kE8Rank; ++j) c += R[i][j] * double(x[j]);
        double t = std::sqrt(std::max(remaining, 0.0)) + eps;
        Coord lo = Coord(std::ceil((-t - c) / R[i][i] - eps));
        Coord hi = Coord(std::floor((t - c) / R[i][i] + eps));
        for (Coord v = lo; v <= hi; ++v) {
            x[i] = v;
            double term = R[i][i] * double(v) + c;
            self(self, i - 1, remaining - term * term);
        }
        x[i] = 0;
    };
    rec(rec, kE8Rank - 1, double(bound) + eps);
}

// exact list of E8-block vectors with Cartan norm exactly n and height <= h
inline std::vector<std::array<Coord, kE8Rank>> e8_shell(Coord n, Coord h) {
    std::vector<std::array<Coord, kE8Rank>> ball, out;
    if (n < 0) return out;
    enumerate_cartan_ball(n, ball);
    for (const auto& x : ball) {
        if (cartan_norm(x) != n) continue;
        Coord hh = 0;
        for (Coord c : x) hh = std::max(hh, iabs(c));
        if (hh <= h) out.push_back(x);
    }
    return out;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultSearchLimit = 10'000'000;

// All nonzero torsion-free classes with the given self-pairing and
// max |coordinate| <= height_bound, in lexicographic order.
inline std::vector<NSClass> enumerate_by_norm(Coord norm_value, Coord height_bound,
                                              Block block = Block::Full,
                                              std::uint64_t search_limit = kDefaultSearchLimit) {
    if (height_bound < 0) throw LatticeError("height_bound must be >= 0");
    std::vector<NSClass> out;
    auto push = [&](Coord m, Coord n, const std::array<Coord, kE8Rank>& z) {
        NSClass v;
        v.free[0] = m;
        v.free[1] = n;
        for (int i = 0; i < kE8Rank; ++i) v.free[2 + i] = z[i];
        if (!v.is_zero()) out.push_back(v);
    };
    const std::array<Coord, kE8Rank> zero8{};

    switch (block) {
        case Block::U:
            for (Coord m = -height_bound; m <= height_bound; ++m)
                for (Coord n = -height_bound; n <= height_bound; ++n)
                    if (2 * m * n == norm_value) push(m, n, zero8);
            break;
        case Block::E8:
            for (const auto& z : detail::e8_shell(-norm_value, height_bound)) push(0, 0, z);
            break;
        case Block::Full: {
            std::uint64_t visited = 0;
            for (Coord m = -height_bound; m <= height_bound; ++m) {
                for (Coord n = -height_bound; n <= height_bound; ++n) {
                    Coord rem = norm_value - 2 * m * n;  // the E8 part must carry norm rem (<= 0)
                    auto shell = detail::e8_shell(-rem, height_bound);
                    visited += std::max<std::uint64_t>(shell.size(), 1);
                    if (visited > search_limit)
                        throw BoundTooLarge("enumerate_by_norm: search volume exceeds safety limit");
                    for (const auto& z : shell) push(m, n, z);
                }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Nonzero isotropic classes x with 0 < pair(pair_with, x) <= pair_bound
// and height <= height_bound, lexicographic order.
inline std::vector<NSClass> enumerate_isotropic(const NSClass& pair_with, Coord pair_bound,
                                                Coord height_bound,
                                                std::uint64_t search_limit = kDefaultSearchLimit) {
    if (pair_bound < 1) throw LatticeError("pair_bound must be >= 1");
    std::vector<NSClass> out;
    for (const NSClass& x : enumerate_by_norm(0, height_bound, Block::Full, search_limit)) {
        Coord p = pair(pair_with, x);
        if (p > 0 && p <= pair_bound) out.push_back(x);
    }
    return out;
}

}  // namespace enriques
