#pragma once

#include "lg/braid.hpp"
#include "lg/laurent.hpp"
#include "lg/rmatrix.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

namespace lg {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ScalarViolation : std::runtime_error {
    explicit ScalarViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NotPolynomial : std::runtime_error {
    explicit NotPolynomial(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse amplitude vector on W^(x)n.  Basis words over {0..3} are packed two
/// bits per strand, strand i at bits 2i.  No zero amplitudes stored.
struct StateVector {
    int strand_count = 1;
    std::map<std::uint32_t, SPoly> entries;
};

namespace detail {

using Columns = std::vector<std::vector<RMatrix16::ColEntry>>;

/// Apply the crossing matrix to tensor slots (k, k+1) of a sparse state.
inline void apply_letter(std::map<std::uint32_t, SPoly>& state, int k,
                         const Columns& cols) {
    std::map<std::uint32_t, SPoly> out;
    const int sh = 2 * k;
    for (const auto& [idx, amp] : state) {
        int a = (idx >> sh) & 3;
        int b = (idx >> (sh + 2)) & 3;
        const std::uint32_t base = idx & ~(std::uint32_t(15) << sh);
        for (const auto& e : cols[4 * a + b]) {
            std::uint32_t nidx = base | (std::uint32_t(e.row / 4) << sh) |
                                 (std::uint32_t(e.row % 4) << (sh + 2));
            auto [it, fresh] = out.try_emplace(nidx, SPoly());
            it->second += amp * e.value;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    state = std::move(out);
}

struct EngineColumns {
    Columns pos, neg;
};

inline const EngineColumns& engine_columns() {
    static const EngineColumns cols = [] {
        const RMatrixData& d = load_rmatrix();
        return EngineColumns{d.r_pos.columns(), d.r_neg.columns()};
    }();
    return cols;
}

/// Convert a scalar in half-power variables to t0, t1.
inline Laurent2 from_half_powers(const SPoly& s) {
    Laurent2 out;
    for (const auto& [e, c] : s.terms()) {
        if (e.i % 2 != 0 || e.j % 2 != 0)
            throw NotPolynomial("closure scalar has a half-integer exponent: s0^" +
                                std::to_string(e.i) + "*s1^" + std::to_string(e.j));
        out += Laurent2::term(c, e.i / 2, e.j / 2);
    }
    return out;
}

}  // namespace detail

inline StateVector apply_braid(const BraidWord& b, StateVector v) {
    if (v.strand_count != b.strands())
        throw DimensionMismatch("state on " + std::to_string(v.strand_count) +
                                " strands, braid on " + std::to_string(b.strands()));
    const auto& cols = detail::engine_columns();
    for (int g : b.letters())
        detail::apply_letter(v.entries, std::abs(g) - 1, g > 0 ? cols.pos : cols.neg);
    return v;
}

struct LgOptions {
    bool verify_scalar = false;
    int workers = 1;
};

/// The invariant c of Theorem-1.3 type: partial quantum trace of the braid
/// image, evaluated as a state sum over trailing basis words.
inline Laurent2 lg_invariant(const BraidWord& b, const LgOptions& opts = {}) {
    const int n = b.strands();
    if (n == 1) return Laurent2(1);
    const auto& cols = detail::engine_columns();
    const auto mu = mu_diagonal();

    const std::uint64_t total = std::uint64_t(1) << (2 * (n - 1));
    const int leads = opts.verify_scalar ? 4 : 1;

    // per-chunk partial sums, combined in chunk order for determinism
    int workers = std::max(1, opts.workers);
    const int chunks = workers == 1 ? 1 : workers * 4;
    // T[a][c] accumulates mu-weighted amplitude of e_c (x) w from start e_a (x) w
    using Trace4 = std::array<std::array<SPoly, 4>, 4>;
    std::vector<Trace4> partial(chunks);

    auto run_chunk = [&](int ci) {
        std::uint64_t lo = total * ci / chunks, hi = total * (ci + 1) / chunks;
        Trace4& T = partial[ci];
        for (std::uint64_t w = lo; w < hi; ++w) {
            SPoly weight = sp::one();
            for (int i = 0; i < n - 1; ++i) weight *= mu[(w >> (2 * i)) & 3];
            for (int a = 0; a < leads; ++a) {
                const std::uint32_t start =
                    std::uint32_t(a) | (std::uint32_t(w) << 2);
                std::map<std::uint32_t, SPoly> state{{start, sp::one()}};
                for (int g : b.letters())
                    detail::apply_letter(state, std::abs(g) - 1,
                                         g > 0 ? cols.pos : cols.neg);
                for (int c = 0; c < 4; ++c) {
                    const std::uint32_t target =
                        std::uint32_t(c) | (std::uint32_t(w) << 2);
                    auto it = state.find(target);
                    if (it != state.end()) T[a][c] += weight * it->second;
                    if (!opts.verify_scalar) break;  // only (0,0) needed
                }
            }
        }
    };

    if (chunks == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int ci; (ci = next.fetch_add(1)) < chunks;) run_chunk(ci);
            });
        for (auto& th : pool) th.join();
    }

    Trace4 T;
    for (const auto& P : partial)
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c) T[a][c] += P[a][c];

    if (opts.verify_scalar) {
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c) {
                if (a == c && T[a][c] != T[0][0])
                    throw ScalarViolation("partial trace diagonal entries differ");
                if (a != c && !T[a][c].is_zero())
                    throw ScalarViolation("partial trace has nonzero off-diagonal");
            }
    }
    return detail::from_half_powers(T[0][0]);
}

struct MarkovCheck {
    bool ok = false;
    bool scalar = false;    // partial traces are alpha * id
    Laurent2 alpha_pos, alpha_neg;  // the scalars, in t0/t1 when expressible
};

/// Algebraic Markov condition: tr_2((id x mu) r_pos) and the r_neg analogue
/// both equal the identity.
inline MarkovCheck markov_property_check() {
    const RMatrixData& d = load_rmatrix();
    MarkovCheck out;
    auto tp = detail::partial_trace(d.r_pos);
    auto tn = detail::partial_trace(d.r_neg);
    auto scalar_of = [](const std::array<std::array<SPoly, 4>, 4>& M, bool& is_scalar) {
        is_scalar = true;
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c) {
                if (a != c && !M[a][c].is_zero()) is_scalar = false;
                if (a == c && M[a][c] != M[0][0]) is_scalar = false;
            }
        return M[0][0];
    };
    bool sp_, sn_;
    SPoly ap = scalar_of(tp, sp_), an = scalar_of(tn, sn_);
    out.scalar = sp_ && sn_;
    if (out.scalar) {
        out.alpha_pos = detail::from_half_powers(ap);
        out.alpha_neg = detail::from_half_powers(an);
        out.ok = out.alpha_pos == Laurent2(1) && out.alpha_neg == Laurent2(1);
    }
    return out;
}

}  // namespace lg
