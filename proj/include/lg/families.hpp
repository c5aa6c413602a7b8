#pragma once

#include "lg/laurent.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace lg {

struct SpanViolation : std::runtime_error {
    explicit SpanViolation(const std::string& what) : std::runtime_error(what) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

struct NotAKnot : std::runtime_error {
    explicit NotAKnot(const std::string& what) : std::runtime_error(what) {}
};

struct FamilySyntaxError : std::runtime_error {
    explicit FamilySyntaxError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

/// t0^i t1^j as a Rat2 (negative exponents allowed).
inline Rat2 mono2(int i, int j) { return Rat2(Laurent2::term(1, i, j)); }

inline Rat2 rat_div(const Rat2& a, const Rat2& b) {
    return Rat2(a.num() * b.den(), a.den() * b.num());
}

}  // namespace detail

/// Coefficients of the n-half-twist tangle expansion; genuine rationals over
/// the common denominator (t0+1)(t1+1)(t0-t1).
struct HalfTwistCoeffs {
    Rat2 x, y, z;
};

inline HalfTwistCoeffs half_twist_coeffs(int n) {
    using detail::mono2;
    const Laurent2 T0 = Laurent2::t0(), T1 = Laurent2::t1(), one(1);
    const Rat2 f1(one, (T0 + one) * (T1 + one));
    const Rat2 f2(one, (T0 + one) * (T0 - T1));
    const Rat2 f3(one, (T1 + one) * (T1 - T0));
    const Rat2 sn(Integer(n % 2 == 0 ? 1 : -1));
    const Rat2 t0n = mono2(n, 0), t1n = mono2(0, n);
    HalfTwistCoeffs c;
    c.x = sn * f1 + t0n * f2 + t1n * f3;
    c.y = sn * Rat2(T0 + T1) * f1 + t0n * Rat2(T1 - one) * f2 + t1n * Rat2(T0 - one) * f3;
    c.z = sn * Rat2(T0 * T1) * f1 - t0n * Rat2(T1) * f2 - t1n * Rat2(T0) * f3;
    return c;
}

enum class TwistRelation { rel2, rel3 };

struct FullTwistCoeffs {
    Rat2 c1, c2, c3;
};

/// The geometric sum sum_{k=0}^{n-1} (t0 t1)^k, a Laurent polynomial for
/// every integer n (negative n gives -sum_{k=n}^{-1}).
inline Laurent2 a1_poly(int n) {
    Laurent2 r;
    if (n >= 0)
        for (int k = 0; k < n; ++k) r += Laurent2::term(1, k, k);
    else
        for (int k = n; k < 0; ++k) r -= Laurent2::term(1, k, k);
    return r;
}

/// Coefficients of the two full-twist expansions.
inline FullTwistCoeffs full_twist_coeffs(int n, TwistRelation rel) {
    const Laurent2 T0 = Laurent2::t0(), T1 = Laurent2::t1(), one(1);
    const Rat2 a1{a1_poly(n)};
    const Laurent2 tt1 = T0 * T1 - one;
    const Laurent2 ee = (T0 - one) * (T1 - one);
    FullTwistCoeffs c;
    c.c1 = a1;
    if (rel == TwistRelation::rel2) {
        c.c2 = Rat2(Integer(1)) - a1;
        c.c3 = Rat2(Laurent2(2) * ee, tt1) * (Rat2(Integer(n)) - a1);
    } else {
        c.c2 = Rat2(Laurent2(2 * n) * ee, tt1) -
               a1 * (Rat2((T0 * T1 + one) * ee, tt1) + Rat2(Integer(1)));
        c.c3 = Rat2(ee) * a1 + Rat2(Integer(1));
    }
    return c;
}

struct TwoBridgeCode {
    std::vector<int> b;  // b1, ..., bm, all > 0
};

namespace detail {

inline FullTwistCoeffs mirror_coeffs(const FullTwistCoeffs& c) {
    return {c.c1.inverted(), c.c2.inverted(), c.c3.inverted()};
}

/// Recursive two-bridge evaluation. Codes reached during recursion may end
/// in a 0 from the "b_{m-1} - 1" branch; the reductions are D(0) = split
/// unlink (value 0) and D(..., a, 0) = D(...) with the last two entries gone.
inline Rat2 two_bridge_value(std::vector<int> b, std::map<std::vector<int>, Rat2>& memo) {
    while (!b.empty() && b.back() == 0) {
        if (b.size() == 1) return Rat2(Integer(0));
        b.erase(b.end() - 2, b.end());
    }
    if (b.empty()) return Rat2(Integer(1));
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    const int m = static_cast<int>(b.size());
    FullTwistCoeffs a = full_twist_coeffs(b.back(), TwistRelation::rel3);
    if (m % 2 != 0) a = mirror_coeffs(a);
    Rat2 r;
    if (m == 1) {
        r = a.c1 + a.c2;  // the c3 term pairs with the split unlink
    } else {
        std::vector<int> head(b.begin(), b.end() - 1);
        std::vector<int> tail(b.begin(), b.end() - 2);
        std::vector<int> dec = head;
        dec.back() -= 1;
        r = a.c1 * two_bridge_value(std::move(dec), memo) +
            a.c2 * two_bridge_value(std::move(head), memo) +
            a.c3 * two_bridge_value(std::move(tail), memo);
    }
    memo.emplace(std::move(b), r);
    return r;
}

}  // namespace detail

inline Laurent2 lg_two_bridge(const TwoBridgeCode& code) {
    if (code.b.empty()) throw FamilySyntaxError("two-bridge code must be nonempty");
    for (int bi : code.b)
        if (bi <= 0) throw FamilySyntaxError("two-bridge parameters must be positive");
    std::map<std::vector<int>, Rat2> memo;
    Laurent2 v = detail::two_bridge_value(code.b, memo).to_laurent();
    const int m = static_cast<int>(code.b.size());
    if (v.is_zero() || v.span() != 2 * m)
        throw SpanViolation("two-bridge span != 2m for m = " + std::to_string(m));
    return v;
}

/// Twist knots: K_0 the unknot, K_1 the trefoil, K_{-1} the figure eight,
/// K_2 the 5_2 knot. Closed forms for both signs of n.
inline Laurent2 lg_twist(int n) {
    using detail::mono2;
    using detail::rat_div;
    if (n == 0) return Laurent2(1);
    const Rat2 one(Integer(1));
    Laurent2 v;
    if (n >= 1) {
        const Rat2 A{a1_poly(n - 1).inverted()};
        const Rat2 u0 = mono2(-1, 0), u1 = mono2(0, -1), u01 = mono2(-1, -1);
        const Rat2 head = -u0 * u0 * u1 - u0 * u1 * u1 + u0 * u0 + Rat2(Integer(2)) * u01 +
                          u1 * u1 - u0 - u1 + one;
        const Rat2 e2 = (u0 - one) * (u0 - one) * (u1 - one) * (u1 - one);
        const Rat2 val =
            head * (u01 * A + one) +
            e2 * rat_div((u01 + one) * A - Rat2(Integer(2 * (n - 1))), u01 - one) +
            A * e2 - u01 * A;
        v = val.to_laurent();
    } else {
        const Laurent2 T0 = Laurent2::t0(), T1 = Laurent2::t1(), l1(1);
        const Rat2 A{a1_poly(-n)};
        const Rat2 ee{(T0 - l1) * (T1 - l1)};
        const Rat2 inner =
            A + ee * Rat2(Laurent2(2 * n) + (T0 * T1 + l1) * a1_poly(-n), T0 * T1 - l1);
        const Rat2 f = (mono2(-1, 0) - one) * (mono2(0, -1) - one);
        v = (f * inner + ee * A + one).to_laurent();
    }
    if (v.span() != 4)
        throw SpanViolation("twist knot span != 4 for n = " + std::to_string(n));
    return v;
}

/// Closed form for the pretzel knot K(2,-1,r), r odd and >= 5; r = 1, 3 give
/// the unknot. No closed form is available for negative r.
inline Laurent2 lg_pretzel_2m1r(int r) {
    if (r % 2 == 0) throw NotAKnot("K(2,-1,r) requires odd r");
    if (r < 0) throw Unsupported("no closed form for K(2,-1,r) with r < 0");
    if (r == 1 || r == 3) return Laurent2(1);
    const Laurent2 T0 = Laurent2::t0(), T1 = Laurent2::t1(), one(1);
    const Laurent2 num = (T0 - T1) * (T0 * T1 + one) -
                         Laurent2::term(1, r - 1, 0) * (T1 - one) * (T1 + one) +
                         Laurent2::term(1, 0, r - 1) * (T0 - one) * (T0 + one);
    const Laurent2 den = (T0 + one) * (T1 + one) * (T0 - T1);
    Laurent2 v = exact_div(num, den);
    if (v.span() != 2 * r - 6)
        throw SpanViolation("pretzel span != 2r-6 for r = " + std::to_string(r));
    return v;
}

struct PretzelCode {
    int p = 0, q = 0, r = 0;
    friend bool operator==(const PretzelCode&, const PretzelCode&) = default;
};

namespace detail {

struct PretzelFrame {
    PretzelCode code;  // even parameter (if any) first, first parameter >= 0
    bool mirrored = false;
};

/// Cyclically rotate an even parameter to the front, then mirror so the
/// leading parameter is nonnegative (all-odd codes rotate a positive entry
/// to the front when one exists, otherwise mirror).
inline PretzelFrame normalize_pretzel(const PretzelCode& c) {
    int p = c.p, q = c.q, r = c.r;
    const int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
    if (evens >= 2) throw NotAKnot("at most one pretzel parameter may be even");
    auto rotate = [&] {
        int t = p;
        p = q;
        q = r;
        r = t;
    };
    if (evens == 1) {
        while (p % 2 != 0) rotate();
    } else if (p < 0 && (q > 0 || r > 0)) {
        while (p < 0) rotate();
    }
    PretzelFrame f;
    if (p < 0) {
        f.mirrored = true;
        p = -p;
        q = -q;
        r = -r;
    }
    f.code = {p, q, r};
    return f;
}

}  // namespace detail

struct FamilyGenus {
    int g = 0;
    int mu = 1;
    PretzelCode normalized{};  // pretzel only: the dispatch frame
};

inline FamilyGenus family_genus(const TwoBridgeCode& code) {
    const int m = static_cast<int>(code.b.size());
    FamilyGenus out;
    out.mu = m % 2 == 0 ? 1 : 2;
    out.g = (m - out.mu + 1) / 2;
    return out;
}

inline FamilyGenus family_genus_twist(int n) {
    FamilyGenus out;
    out.g = n == 0 ? 0 : 1;
    return out;
}

inline FamilyGenus family_genus(const PretzelCode& code) {
    const auto frame = detail::normalize_pretzel(code);
    const auto [p, q, r] = frame.code;
    FamilyGenus out;
    out.normalized = frame.code;
    if (p % 2 != 0) {
        // all odd: the unknot exactly when both +1 and -1 occur
        const bool plus = p == 1 || q == 1 || r == 1;
        const bool minus = p == -1 || q == -1 || r == -1;
        out.g = plus && minus ? 0 : 1;
    } else if ((q == 1 && r == -1) || (q == -1 && r == 1)) {
        out.g = 0;
    } else if (p == 2 && q == -1) {
        out.g = (std::abs(r - 2) - 1) / 2;  // covers the unknot K(2,-1,3)
    } else if ((q > 0) == (r > 0)) {
        out.g = (std::abs(q) + std::abs(r)) / 2;
    } else {
        out.g = (std::abs(q) + std::abs(r) - 2) / 2;
    }
    return out;
}

/// LG of a pretzel knot when its code normalizes into the K(2,-1,r) family
/// (or an unknot presentation).
inline Laurent2 lg_pretzel(const PretzelCode& code) {
    const auto frame = detail::normalize_pretzel(code);
    const auto [p, q, r] = frame.code;
    if (p % 2 != 0) {
        const bool plus = p == 1 || q == 1 || r == 1;
        const bool minus = p == -1 || q == -1 || r == -1;
        if (plus && minus) return Laurent2(1);
        throw Unsupported("no closed form for all-odd pretzel codes");
    }
    if ((q == 1 && r == -1) || (q == -1 && r == 1)) return Laurent2(1);
    if (p != 2 || q != -1)
        throw Unsupported("pretzel evaluation is limited to the K(2,-1,r) family");
    Laurent2 v = lg_pretzel_2m1r(r);
    return frame.mirrored ? v.inverted() : v;
}

/// Parsed "twist:n" / "2bridge:b1,b2,..." / "pretzel:p,q,r" family spec.
struct FamilySpec {
    enum class Kind { twist, two_bridge, pretzel };
    Kind kind = Kind::twist;
    int n = 0;
    TwoBridgeCode two_bridge;
    PretzelCode pretzel;

    static FamilySpec parse(const std::string& text);
    Laurent2 evaluate() const;
    FamilyGenus genus() const;
    /// Component count of the presented link (knots have 1).
    int components() const {
        return kind == Kind::two_bridge ? family_genus(two_bridge).mu : 1;
    }
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& body, const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string item =
            comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw FamilySyntaxError("bad integer \"" + item + "\" in \"" + text + "\"");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw FamilySyntaxError("bad integer \"" + item + "\" in \"" + text + "\"");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

inline FamilySpec FamilySpec::parse(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw FamilySyntaxError("family spec needs \"kind:params\", got \"" + text + "\"");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    FamilySpec spec;
    if (kind == "twist") {
        auto vals = detail::parse_int_list(body, text);
        if (vals.size() != 1) throw FamilySyntaxError("twist spec takes one integer");
        spec.kind = Kind::twist;
        spec.n = vals[0];
    } else if (kind == "2bridge") {
        auto vals = detail::parse_int_list(body, text);
        if (vals.empty()) throw FamilySyntaxError("2bridge spec needs parameters");
        spec.kind = Kind::two_bridge;
        spec.two_bridge.b = std::move(vals);
    } else if (kind == "pretzel") {
        auto vals = detail::parse_int_list(body, text);
        if (vals.size() != 3) throw FamilySyntaxError("pretzel spec takes three integers");
        spec.kind = Kind::pretzel;
        spec.pretzel = {vals[0], vals[1], vals[2]};
    } else {
        throw FamilySyntaxError("unknown family kind \"" + kind + "\"");
    }
    return spec;
}

inline Laurent2 FamilySpec::evaluate() const {
    switch (kind) {
        case Kind::twist: return lg_twist(n);
        case Kind::two_bridge: return lg_two_bridge(two_bridge);
        case Kind::pretzel: return lg_pretzel(pretzel);
    }
    throw FamilySyntaxError("invalid family spec");
}

inline FamilyGenus FamilySpec::genus() const {
    switch (kind) {
        case Kind::twist: return family_genus_twist(n);
        case Kind::two_bridge: return family_genus(two_bridge);
        case Kind::pretzel: return family_genus(pretzel);
    }
    throw FamilySyntaxError("invalid family spec");
}

}  // namespace lg
