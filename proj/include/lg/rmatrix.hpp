#pragma once

#include "lg/laurent.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace lg {

struct ConventionError : std::runtime_error {
    explicit ConventionError(const std::string& what) : std::runtime_error(what) {}
};

/// Engine polynomials are Laurent in the half-power variables s0 = t0^(1/2),
/// s1 = t1^(1/2): exponent (i, j) means s0^i s1^j, so t-exponents are halved
/// on output.  The braiding has entries in s0, s1 but every closure scalar
/// lands back in t0, t1 (even exponents only).
using SPoly = Laurent2;

namespace sp {
inline SPoly term(long long c, int i, int j) { return Laurent2::term(c, i, j); }
inline SPoly t0() { return term(1, 2, 0); }
inline SPoly t1() { return term(1, 0, 2); }
inline SPoly one() { return SPoly(Integer(1)); }
}  // namespace sp

/// 16x16 matrix over SPoly with sparse column decomposition.
class RMatrix16 {
public:
    RMatrix16() = default;

    SPoly& at(int r, int c) { return e_[r][c]; }
    const SPoly& at(int r, int c) const { return e_[r][c]; }

    friend bool operator==(const RMatrix16&, const RMatrix16&) = default;

    friend RMatrix16 operator*(const RMatrix16& a, const RMatrix16& b) {
        RMatrix16 r;
        for (int i = 0; i < 16; ++i)
            for (int k = 0; k < 16; ++k) {
                if (a.e_[i][k].is_zero()) continue;
                for (int j = 0; j < 16; ++j) {
                    if (b.e_[k][j].is_zero()) continue;
                    r.e_[i][j] += a.e_[i][k] * b.e_[k][j];
                }
            }
        return r;
    }

    static RMatrix16 identity() {
        RMatrix16 m;
        for (int i = 0; i < 16; ++i) m.e_[i][i] = sp::one();
        return m;
    }

    bool is_zero() const {
        for (const auto& row : e_)
            for (const auto& p : row)
                if (!p.is_zero()) return false;
        return true;
    }

    struct ColEntry {
        int row;
        SPoly value;
    };
    /// columns()[c] lists the nonzero entries of column c.
    std::vector<std::vector<ColEntry>> columns() const {
        std::vector<std::vector<ColEntry>> cols(16);
        for (int c = 0; c < 16; ++c)
            for (int r = 0; r < 16; ++r)
                if (!e_[r][c].is_zero()) cols[c].push_back({r, e_[r][c]});
        return cols;
    }

private:
    std::array<std::array<SPoly, 16>, 16> e_;
};

/// Diagonal of the mu map of the partial quantum trace:
/// (t0^-1, -t1, -t0^-1, t1); zero quantum superdimension.
inline std::array<SPoly, 4> mu_diagonal() {
    return {sp::term(1, -2, 0), sp::term(-1, 0, 2), sp::term(-1, -2, 0),
            sp::term(1, 0, 2)};
}

struct RMatrixData {
    RMatrix16 r_pos;
    RMatrix16 r_neg;
    /// Conserved gradings of r_pos found by scanning its support: integer
    /// weight vectors w on the 4 basis states with w[a]+w[b] constant across
    /// each nonzero entry ((a,b),(c,d)).  Basis of the solution lattice
    /// modulo the constant grading.
    std::vector<std::array<int, 4>> gradings;
};

namespace detail {

inline RMatrix16 build_r_pos() {
    using namespace sp;
    RMatrix16 B;
    const SPoly T0 = t0(), T1 = t1(), one_ = one();
    const SPoly s0 = term(1, 1, 0), s1 = term(1, 0, 1);
    const SPoly s0s1 = term(1, 1, 1);
    const SPoly Y2 = T0 - T0 * T1 - one_ + T1;  // (t0-1)(1-t1)
    // corner weights
    B.at(0, 0) = T0;
    B.at(5, 5) = -one_;
    B.at(10, 10) = -one_;
    B.at(15, 15) = T1;
    // mixed 2x2 blocks {e_i e_j, e_j e_i}
    auto block = [&](int u, int v, const SPoly& s, const SPoly& t) {
        B.at(u, v) = s;
        B.at(v, u) = s;
        B.at(v, v) = t - one_;
    };
    block(1, 4, s0, T0);    // (e1,e2)
    block(2, 8, s0, T0);    // (e1,e3)
    block(7, 13, s1, T1);   // (e2,e4)
    block(11, 14, s1, T1);  // (e3,e4)
    // central 4x4 on (e1e4, e2e3, e3e2, e4e1)
    B.at(3, 12) = one_;
    B.at(6, 6) = T0 * T1 - one_;
    B.at(6, 9) = -s0s1;
    B.at(6, 12) = -s0s1 * Y2;
    B.at(9, 6) = -s0s1;
    B.at(9, 12) = Y2;
    B.at(12, 3) = one_;
    B.at(12, 6) = -s0s1;
    B.at(12, 9) = one_;
    B.at(12, 12) = -(T0 - one_) * (T1 - one_);
    return B;
}

/// tr_2((id (x) mu) M) as a 4x4 matrix.
inline std::array<std::array<SPoly, 4>, 4> partial_trace(const RMatrix16& M) {
    auto mu = mu_diagonal();
    std::array<std::array<SPoly, 4>, 4> R;
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c)
            for (int b = 0; b < 4; ++b) R[a][c] += mu[b] * M.at(4 * a + b, 4 * c + b);
    return R;
}

inline bool is_identity4(const std::array<std::array<SPoly, 4>, 4>& M) {
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) {
            if (a == c && M[a][c] != sp::one()) return false;
            if (a != c && !M[a][c].is_zero()) return false;
        }
    return true;
}

/// Solve for gradings conserved by the support of B: w[a]+w[b] = w[c]+w[d]
/// for every nonzero entry ((a,b),(c,d)).  Returns a basis of the solution
/// space modulo constants, scaled to integers.
inline std::vector<std::array<int, 4>> detect_gradings(const RMatrix16& B) {
    // collect constraint rows over the 4 unknowns
    std::vector<std::array<int, 4>> rows;
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v) {
            if (B.at(u, v).is_zero()) continue;
            std::array<int, 4> row{};
            row[u / 4] += 1;
            row[u % 4] += 1;
            row[v / 4] -= 1;
            row[v % 4] -= 1;
            bool zero = row == std::array<int, 4>{};
            if (!zero) rows.push_back(row);
        }
    // pin the constant grading out by fixing w[0] = 0
    rows.push_back({1, 0, 0, 0});
    // rational Gaussian elimination on the 4-column system
    std::vector<std::array<double, 4>> m;
    for (const auto& r : rows)
        m.push_back({double(r[0]), double(r[1]), double(r[2]), double(r[3])});
    std::vector<std::array<double, 4>> basis;
    int rank = 0;
    std::array<int, 4> pivot_col{-1, -1, -1, -1};
    for (int c = 0; c < 4 && rank < (int)m.size(); ++c) {
        int piv = -1;
        for (int r = rank; r < (int)m.size(); ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < (int)m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            double f = m[r][c] / m[rank][c];
            for (int k = 0; k < 4; ++k) m[r][k] -= f * m[rank][k];
        }
        pivot_col[rank] = c;
        ++rank;
    }
    // free columns parameterize the kernel
    std::vector<std::array<int, 4>> out;
    for (int c = 0; c < 4; ++c) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r) is_pivot |= pivot_col[r] == c;
        if (is_pivot) continue;
        std::array<double, 4> w{};
        w[c] = 1;
        for (int r = rank - 1; r >= 0; --r) {
            double s = 0;
            for (int k = 0; k < 4; ++k)
                if (k != pivot_col[r]) s += m[r][k] * w[k];
            w[pivot_col[r]] = -s / m[r][pivot_col[r]];
        }
        std::array<int, 4> wi;
        for (int k = 0; k < 4; ++k) wi[k] = (int)std::lround(w[k]);
        out.push_back(wi);
    }
    return out;
}

}  // namespace detail

/// Build the braiding data and hard-verify the defining identities
/// (inverse pair, Yang-Baxter, cubic skein, Markov normalization).
inline const RMatrixData& load_rmatrix() {
    static const RMatrixData data = [] {
        RMatrixData d;
        d.r_pos = detail::build_r_pos();
        const RMatrix16 id = RMatrix16::identity();
        using namespace sp;
        const SPoly T0 = t0(), T1 = t1(), one_ = one();

        // r_neg from the cubic: r^-1 = -(r^2 + (1-t0-t1) r + (t0t1-t0-t1)) / (t0t1)
        {
            RMatrix16 B2 = d.r_pos * d.r_pos;
            const SPoly c1 = one_ - T0 - T1, c2 = T0 * T1 - T0 - T1;
            for (int i = 0; i < 16; ++i)
                for (int j = 0; j < 16; ++j) {
                    SPoly v = B2.at(i, j) + c1 * d.r_pos.at(i, j);
                    if (i == j) v += c2;
                    // divide by -t0 t1 = -s0^2 s1^2
                    d.r_neg.at(i, j) = v.shifted(-2, -2, -1);
                }
        }
        // identity 0: inverse pair
        if (!(d.r_pos * d.r_neg == id))
            throw ConventionError("r_pos * r_neg is not the identity");
        // identity 1: cubic skein
        {
            RMatrix16 B2 = d.r_pos * d.r_pos;
            RMatrix16 B3 = B2 * d.r_pos;
            const SPoly c1 = one_ - T0 - T1, c2 = T0 * T1 - T0 - T1, c3 = T0 * T1;
            RMatrix16 acc = B3;
            for (int i = 0; i < 16; ++i)
                for (int j = 0; j < 16; ++j) {
                    acc.at(i, j) += c1 * B2.at(i, j) + c2 * d.r_pos.at(i, j);
                    if (i == j) acc.at(i, j) += c3;
                }
            if (!acc.is_zero()) throw ConventionError("cubic skein identity fails");
        }
        // identity 2: Yang-Baxter as 64x64 (indices (a,b,c) base 4)
        {
            auto idx = [](int a, int b, int c) { return 16 * a + 4 * b + c; };
            std::vector<std::vector<SPoly>> L(64, std::vector<SPoly>(64)),
                R(64, std::vector<SPoly>(64));
            // L = B12 B23 B12, R = B23 B12 B23, computed entrywise via sparse cols
            auto cols = d.r_pos.columns();
            auto apply12 = [&](std::vector<std::vector<SPoly>>& M) {
                std::vector<std::vector<SPoly>> out(64, std::vector<SPoly>(64));
                for (int col = 0; col < 64; ++col)
                    for (int row = 0; row < 64; ++row) {
                        if (M[row][col].is_zero()) continue;
                        int a = row / 16, b = (row / 4) % 4, c = row % 4;
                        for (const auto& e : cols[4 * a + b]) {
                            int a2 = e.row / 4, b2 = e.row % 4;
                            out[idx(a2, b2, c)][col] += e.value * M[row][col];
                        }
                    }
                M = std::move(out);
            };
            auto apply23 = [&](std::vector<std::vector<SPoly>>& M) {
                std::vector<std::vector<SPoly>> out(64, std::vector<SPoly>(64));
                for (int col = 0; col < 64; ++col)
                    for (int row = 0; row < 64; ++row) {
                        if (M[row][col].is_zero()) continue;
                        int a = row / 16, b = (row / 4) % 4, c = row % 4;
                        for (const auto& e : cols[4 * b + c]) {
                            int b2 = e.row / 4, c2 = e.row % 4;
                            out[idx(a, b2, c2)][col] += e.value * M[row][col];
                        }
                    }
                M = std::move(out);
            };
            for (int i = 0; i < 64; ++i) L[i][i] = one_, R[i][i] = one_;
            apply12(L); apply23(L); apply12(L);
            apply23(R); apply12(R); apply23(R);
            if (L != R) throw ConventionError("Yang-Baxter identity fails");
        }
        // identity 3: Markov normalization for both crossings
        if (!detail::is_identity4(detail::partial_trace(d.r_pos)))
            throw ConventionError("partial trace of (id x mu) r_pos is not id");
        if (!detail::is_identity4(detail::partial_trace(d.r_neg)))
            throw ConventionError("partial trace of (id x mu) r_neg is not id");

        d.gradings = detail::detect_gradings(d.r_pos);
        return d;
    }();
    return data;
}

}  // namespace lg
