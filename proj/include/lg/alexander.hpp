#pragma once

#include "lg/braid.hpp"
#include "lg/laurent.hpp"

#include <vector>

namespace lg {

struct AsymmetricBreadth : std::runtime_error {
    AsymmetricBreadth() : std::runtime_error("no symmetric centering exists") {}
};

/// (n-1)x(n-1) matrix over Laurent1; row-major.
class BurauMatrix {
public:
    explicit BurauMatrix(int size) : size_(size), e_(size * size) {
        for (int i = 0; i < size; ++i) at(i, i) = Laurent1(1);
    }
    int size() const { return size_; }
    Laurent1& at(int r, int c) { return e_[r * size_ + c]; }
    const Laurent1& at(int r, int c) const { return e_[r * size_ + c]; }

    friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;

    friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
        BurauMatrix r(a.size_);
        for (int i = 0; i < a.size_; ++i)
            for (int j = 0; j < a.size_; ++j) {
                Laurent1 s;
                for (int k = 0; k < a.size_; ++k) s += a.at(i, k) * b.at(k, j);
                r.at(i, j) = std::move(s);
            }
        return r;
    }

    /// Exact determinant by column-subset expansion (sizes here are <= 6).
    Laurent1 determinant() const;

private:
    int size_;
    std::vector<Laurent1> e_;
};

namespace detail {

/// Reduced Burau image of sigma_i^{sign} in B_n (i is 1-based, 1 <= i <= n-1).
inline BurauMatrix burau_generator(int n, int i, bool inverse) {
    const int m = n - 1;
    BurauMatrix M(m);
    Laurent1 t = Laurent1::t();
    Laurent1 tinv = Laurent1::term(1, -1);
    int r = i - 1;  // 0-based row of the generator
    if (!inverse) {
        M.at(r, r) = -t;
        if (r > 0) M.at(r, r - 1) = t;
        if (r < m - 1) M.at(r, r + 1) = Laurent1(1);
    } else {
        M.at(r, r) = -tinv;
        if (r > 0) M.at(r, r - 1) = Laurent1(1);
        if (r < m - 1) M.at(r, r + 1) = tinv;
    }
    return M;
}

}  // namespace detail

inline Laurent1 BurauMatrix::determinant() const {
    const int m = size_;
    if (m == 0) return Laurent1(1);
    // dp over column bitmasks: minors of the trailing rows
    std::vector<Laurent1> dp(std::size_t(1) << m);
    dp[(std::size_t(1) << m) - 1] = Laurent1(1);  // no rows left
    // process rows bottom-up; dp[mask] = det of rows >= r on columns not in mask
    for (int r = m - 1; r >= 0; --r) {
        std::vector<Laurent1> next(std::size_t(1) << m);
        for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
            int used = __builtin_popcountll(mask);
            if (used != r) continue;
            Laurent1 acc;
            int sign = 1;
            for (int c = 0; c < m; ++c) {
                if (mask & (std::size_t(1) << c)) continue;
                if (!at(r, c).is_zero()) {
                    Laurent1 sub = dp[mask | (std::size_t(1) << c)];
                    if (sign < 0) sub = -sub;
                    acc += at(r, c) * sub;
                }
                sign = -sign;
            }
            next[mask] = std::move(acc);
        }
        // merge: dp for rows >= r keyed by masks with popcount r
        for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask)
            if (__builtin_popcountll(mask) == r) dp[mask] = std::move(next[mask]);
    }
    return dp[0];
}

inline BurauMatrix burau_rep(const BraidWord& b) {
    BurauMatrix M(b.strands() - 1);
    for (int g : b.letters())
        M = M * detail::burau_generator(b.strands(), std::abs(g), g < 0);
    return M;
}

/// Alexander polynomial of the closure of b, Conway-normalized.
/// det(burau_rep(b) - id) is divided exactly by 1 + t + ... + t^{n-1} and the
/// unit +-t^k stripped.  Knots: symmetric with value 1 at t = 1.  Links:
/// symmetric with positive leading coefficient (value at 1 is 0).  When no
/// symmetric centering exists the result straddles 0 as evenly as possible and
/// *centered (if given) is set false.
inline Laurent1 alexander_closure(const BraidWord& b, bool* centered = nullptr) {
    if (centered) *centered = true;
    if (b.strands() == 1) return Laurent1(1);
    BurauMatrix M = burau_rep(b);
    for (int i = 0; i < M.size(); ++i) M.at(i, i) -= Laurent1(1);
    Laurent1 det = M.determinant();
    if (det.is_zero()) return Laurent1();  // split link: Delta = 0
    Laurent1 cyc;
    for (int k = 0; k < b.strands(); ++k) cyc += Laurent1::term(1, k);
    Laurent1 d = exact_div(det, cyc);
    // strip the unit: center exponents at 0 (floor-midpoint when breadth is odd)
    int lo = d.min_exp(), hi = d.max_exp();
    if ((lo + hi) % 2 != 0 && centered) *centered = false;
    int mid = (lo + hi) >= 0 ? (lo + hi) / 2 : -((-(lo + hi) + 1) / 2);
    d = d.shifted(-mid);
    // sign convention
    if (b.components() == 1) {
        if (d.eval_at_one() < 0) d = -d;
    } else {
        if (d.terms().rbegin()->second < 0) d = -d;
    }
    return d;
}

/// max exponent - min exponent.
inline int breadth(const Laurent1& d) { return d.breadth(); }

}  // namespace lg
