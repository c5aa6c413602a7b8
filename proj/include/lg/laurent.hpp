#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lg {

using Integer = boost::multiprecision::cpp_int;

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("operation undefined for the zero polynomial") {}
};

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct PolySyntaxError : std::runtime_error {
    explicit PolySyntaxError(const std::string& what) : std::runtime_error(what) {}
};

/// One-variable Laurent polynomial over Z, variable "t".
/// Terms are kept in a map keyed by exponent; zero coefficients are never stored.
class Laurent1 {
public:
    using Terms = std::map<int, Integer>;

    Laurent1() = default;
    explicit Laurent1(Integer constant) {
        if (constant != 0) terms_[0] = std::move(constant);
    }
    static Laurent1 term(Integer c, int k) {
        Laurent1 p;
        if (c != 0) p.terms_[k] = std::move(c);
        return p;
    }
    static Laurent1 t() { return term(1, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    friend bool operator==(const Laurent1&, const Laurent1&) = default;

    Laurent1& operator+=(const Laurent1& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Laurent1& operator-=(const Laurent1& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
    friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }
    Laurent1 operator-() const {
        Laurent1 r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
        Laurent1 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }

    int min_exp() const {
        if (is_zero()) throw ZeroPolynomial();
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw ZeroPolynomial();
        return terms_.rbegin()->first;
    }
    /// max exponent minus min exponent.
    int breadth() const { return max_exp() - min_exp(); }

    /// Multiply by t^k.
    Laurent1 shifted(int k) const {
        Laurent1 r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    Integer eval_at_one() const {
        Integer s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    /// d(t) == d(t^-1)
    bool is_palindromic() const {
        for (const auto& [k, c] : terms_)
            if (coeff(-k) != c) return false;
        return true;
    }

    /// Substitute t := t^2.
    Laurent1 squared_variable() const {
        Laurent1 r;
        for (const auto& [k, c] : terms_) r.terms_[2 * k] = c;
        return r;
    }

    std::string str() const;
    static Laurent1 parse(const std::string& text);

private:
    void add_term(int k, const Integer& c) {
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    Terms terms_;
};

/// Exponent pair (i, j) for t0^i t1^j, ordered canonically by (deg = i - j, then i).
struct Exp2 {
    int i = 0, j = 0;
    int deg() const { return i - j; }
    friend bool operator==(const Exp2&, const Exp2&) = default;
};

struct Exp2CanonicalLess {
    bool operator()(const Exp2& a, const Exp2& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.i < b.i;
    }
};

/// Two-variable Laurent polynomial over Z in t0, t1.
/// Iteration order of terms() is the canonical text order.
class Laurent2 {
public:
    using Terms = std::map<Exp2, Integer, Exp2CanonicalLess>;

    Laurent2() = default;
    explicit Laurent2(Integer constant) {
        if (constant != 0) terms_[{0, 0}] = std::move(constant);
    }
    static Laurent2 term(Integer c, int i, int j) {
        Laurent2 p;
        if (c != 0) p.terms_[{i, j}] = std::move(c);
        return p;
    }
    static Laurent2 t0() { return term(1, 1, 0); }
    static Laurent2 t1() { return term(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Integer coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    friend bool operator==(const Laurent2&, const Laurent2&) = default;

    Laurent2& operator+=(const Laurent2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent2& operator-=(const Laurent2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
    Laurent2 operator-() const {
        Laurent2 r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
        Laurent2 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
        return r;
    }
    Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }

    /// Multiply by c * t0^i t1^j.
    Laurent2 shifted(int i, int j, const Integer& c = 1) const {
        Laurent2 r;
        for (const auto& [e, cf] : terms_) {
            Integer v = cf * c;
            if (v != 0) r.terms_[{e.i + i, e.j + j}] = std::move(v);
        }
        return r;
    }

    int min_deg() const {
        if (is_zero()) throw ZeroPolynomial();
        return terms_.begin()->first.deg();
    }
    int max_deg() const {
        if (is_zero()) throw ZeroPolynomial();
        return terms_.rbegin()->first.deg();
    }
    /// span = max deg - min deg, deg(t0^i t1^j) = i - j.
    int span() const { return max_deg() - min_deg(); }

    /// t0 <-> t1
    Laurent2 swapped() const {
        Laurent2 r;
        for (const auto& [e, c] : terms_) r.terms_[{e.j, e.i}] = c;
        return r;
    }
    /// (t0, t1) -> (t0^-1, t1^-1)
    Laurent2 inverted() const {
        Laurent2 r;
        for (const auto& [e, c] : terms_) r.terms_[{-e.i, -e.j}] = c;
        return r;
    }
    /// t1 := -t0^-1; the result is a Laurent1 in t0.
    Laurent1 specialize_antidiag() const {
        Laurent1 r;
        for (const auto& [e, c] : terms_)
            r += Laurent1::term((e.j % 2 == 0 || e.j % 2 == -2) ? c : -c, e.deg());
        return r;
    }
    /// t1 := t0^-1.
    Laurent1 specialize_diag() const {
        Laurent1 r;
        for (const auto& [e, c] : terms_) r += Laurent1::term(c, e.deg());
        return r;
    }

    struct MonicExtremes {
        bool monic = false;
        std::optional<std::pair<int, int>> witness;  // (l, m)
    };
    /// Extreme-degree terms are the swap-symmetric pair of coefficient-1
    /// monomials t0^{l+m} t1^{-l+m} / t0^{-l+m} t1^{l+m} with 2m even total
    /// exponent. Span-0 polynomials count as monic iff the single term is
    /// coefficient 1 with even total exponent.
    MonicExtremes monic_extremes() const;

    std::string str() const;
    static Laurent2 parse(const std::string& text);

    /// [i, j, c] triples in canonical order (c as decimal string).
    std::vector<std::tuple<int, int, std::string>> triples() const {
        std::vector<std::tuple<int, int, std::string>> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.emplace_back(e.i, e.j, c.str());
        return out;
    }

private:
    void add_term(const Exp2& e, const Integer& c) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    Terms terms_;
};

/// Exact quotient: returns q with q*den == num, or throws NotDivisible.
/// Sparse division under lex order on (i, j), verified by multiplication.
Laurent2 exact_div(const Laurent2& num, const Laurent2& den);
Laurent1 exact_div(const Laurent1& num, const Laurent1& den);

/// Quotient of two Laurent2 values. No canonical reduction: equality is by
/// cross-multiplication, and a Rat2 converts to Laurent2 only through
/// exact_div at the point where a result is known to be polynomial.
class Rat2 {
public:
    Rat2() : num_(Integer(0)), den_(Integer(1)) {}
    Rat2(Laurent2 num, Laurent2 den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroPolynomial();
    }
    explicit Rat2(Laurent2 p) : num_(std::move(p)), den_(Integer(1)) {}
    explicit Rat2(Integer c) : num_(std::move(c)), den_(Integer(1)) {}

    const Laurent2& num() const { return num_; }
    const Laurent2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const Rat2& a, const Rat2& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    friend Rat2 operator+(const Rat2& a, const Rat2& b) {
        return Rat2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat2 operator-(const Rat2& a, const Rat2& b) {
        return Rat2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat2 operator*(const Rat2& a, const Rat2& b) {
        return Rat2(a.num_ * b.num_, a.den_ * b.den_);
    }
    Rat2 operator-() const { return Rat2(-num_, den_); }

    /// span of a nonzero quotient: span(num) - span(den).
    int span() const {
        if (num_.is_zero()) throw ZeroPolynomial();
        return num_.span() - den_.span();
    }

    Rat2 swapped() const { return Rat2(num_.swapped(), den_.swapped()); }
    Rat2 inverted() const { return Rat2(num_.inverted(), den_.inverted()); }

    /// Reduce to a Laurent2; throws NotDivisible if the value is not polynomial.
    Laurent2 to_laurent() const { return exact_div(num_, den_); }

    Rat2& operator+=(const Rat2& o) { return *this = *this + o; }
    Rat2& operator-=(const Rat2& o) { return *this = *this - o; }
    Rat2& operator*=(const Rat2& o) { return *this = *this * o; }

private:
    Laurent2 num_, den_;
};

// ---------------------------------------------------------------------------
// inline implementations

namespace detail {

inline void append_term(std::ostringstream& os, bool first, const Integer& c,
                        const std::string& mono) {
    Integer a = c < 0 ? Integer(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
        os << a.str();
    } else {
        if (a != 1) os << a.str() << "*";
        os << mono;
    }
}

inline std::string power(const char* var, int e) {
    if (e == 0) return "";
    std::string s = var;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace detail

inline std::string Laurent1::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        detail::append_term(os, first, c, detail::power("t", k));
        first = false;
    }
    return os.str();
}

inline std::string Laurent2::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = detail::power("t0", e.i);
        std::string m1 = detail::power("t1", e.j);
        if (!mono.empty() && !m1.empty()) mono += "*";
        mono += m1;
        detail::append_term(os, first, c, mono);
        first = false;
    }
    return os.str();
}

inline Laurent2::MonicExtremes Laurent2::monic_extremes() const {
    if (is_zero()) throw ZeroPolynomial();
    MonicExtremes res;
    const auto& lo = *terms_.begin();
    const auto& hi = *terms_.rbegin();
    // extreme-degree term sets must each be a single monomial
    if (terms_.size() > 1) {
        auto second = std::next(terms_.begin());
        if (second->first.deg() == lo.first.deg()) return res;
        auto before_hi = std::prev(terms_.end());
        before_hi = terms_.size() > 1 ? std::prev(before_hi) : before_hi;
        if (terms_.size() > 1 && std::prev(terms_.end(), 2)->first.deg() == hi.first.deg())
            return res;
    }
    if (lo.second != 1 || hi.second != 1) return res;
    // highest term t0^{l+m} t1^{-l+m}, lowest its swap image
    if (hi.first.i != lo.first.j || hi.first.j != lo.first.i) return res;
    int total = hi.first.i + hi.first.j;
    if (total % 2 != 0) return res;
    int m = total / 2;
    int l = hi.first.i - m;
    if (l < 0) return res;
    res.monic = true;
    res.witness = {l, m};
    return res;
}

namespace detail {

// lex order on (i, j): the map key order used by the division loop below
struct LexLess {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        return a < b;
    }
};

template <typename Key>
struct DivTraits;

}  // namespace detail

inline Laurent2 exact_div(const Laurent2& num, const Laurent2& den) {
    if (den.is_zero()) throw ZeroPolynomial();
    if (num.is_zero()) return Laurent2();
    // working copy under lex order
    std::map<std::pair<int, int>, Integer> rem, d;
    for (const auto& [e, c] : num.terms()) rem[{e.i, e.j}] = c;
    for (const auto& [e, c] : den.terms()) d[{e.i, e.j}] = c;
    const auto lead_d = *d.rbegin();
    const auto low_d = *d.begin();
    const auto low_n = *rem.begin();
    // lex-min exponent of any valid quotient
    const std::pair<int, int> qmin{low_n.first.first - low_d.first.first,
                                   low_n.first.second - low_d.first.second};
    Laurent2 q;
    std::size_t guard = 4 * num.term_count() * den.term_count() + 64;
    while (!rem.empty()) {
        if (guard-- == 0) throw NotDivisible("exact_div: no exact quotient (non-terminating)");
        auto lead_r = *rem.rbegin();
        if (lead_r.second % lead_d.second != 0)
            throw NotDivisible("exact_div: leading coefficient not divisible");
        std::pair<int, int> m{lead_r.first.first - lead_d.first.first,
                              lead_r.first.second - lead_d.first.second};
        if (m < qmin) throw NotDivisible("exact_div: no exact quotient");
        Integer mc = lead_r.second / lead_d.second;
        q += Laurent2::term(mc, m.first, m.second);
        for (const auto& [e, c] : d) {
            std::pair<int, int> key{e.first + m.first, e.second + m.second};
            auto [it, fresh] = rem.try_emplace(key, Integer(0));
            it->second -= mc * c;
            if (it->second == 0) rem.erase(it);
        }
    }
    if (q * den != num) throw NotDivisible("exact_div: verification failed");
    return q;
}

inline Laurent1 exact_div(const Laurent1& num, const Laurent1& den) {
    if (den.is_zero()) throw ZeroPolynomial();
    if (num.is_zero()) return Laurent1();
    Laurent1 rem = num, q;
    const int dmax = den.max_exp();
    const Integer dlead = den.terms().rbegin()->second;
    const int qmin = num.min_exp() - den.min_exp();
    while (!rem.is_zero()) {
        int e = rem.max_exp() - dmax;
        const Integer& c = rem.terms().rbegin()->second;
        if (e < qmin || c % dlead != 0) throw NotDivisible("exact_div: no exact quotient");
        Laurent1 t = Laurent1::term(c / dlead, e);
        q += t;
        rem -= t * den;
    }
    if (q * den != num) throw NotDivisible("exact_div: verification failed");
    return q;
}

// ---------------------------------------------------------------------------
// parsing: signed term lists like "3 - 4*t1 + 2*t1^2 - 4*t0*t1"

namespace detail {

struct TermLexer {
    const std::string& s;
    std::size_t pos = 0;
    explicit TermLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw PolySyntaxError("expected integer at position " + std::to_string(pos) +
                                  " in \"" + s + "\"");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
    Integer big_integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw PolySyntaxError("expected integer at position " + std::to_string(start) +
                                  " in \"" + s + "\"");
        Integer v(s.substr(start, pos - start));
        return neg ? -v : v;
    }
    bool word(const char* w) {
        skip_ws();
        std::size_t n = std::string(w).size();
        if (s.compare(pos, n, w) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
};

}  // namespace detail

inline Laurent2 Laurent2::parse(const std::string& text) {
    detail::TermLexer lx(text);
    Laurent2 out;
    if (lx.done()) throw PolySyntaxError("empty polynomial text");
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('-'))
            sign = -1;
        else if (lx.accept('+')) {
            if (first) throw PolySyntaxError("unexpected leading '+'");
        } else if (!first) {
            throw PolySyntaxError("expected '+' or '-' between terms in \"" + text + "\"");
        }
        first = false;
        Integer coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coef = lx.big_integer();
            have_coef = true;
        }
        int e0 = 0, e1 = 0;
        bool have_var = false;
        auto read_var = [&]() -> bool {
            if (lx.word("t0")) {
                e0 += lx.accept('^') ? static_cast<int>(lx.integer()) : 1;
                return true;
            }
            if (lx.word("t1")) {
                e1 += lx.accept('^') ? static_cast<int>(lx.integer()) : 1;
                return true;
            }
            return false;
        };
        if (have_coef) {
            while (lx.accept('*')) {
                if (!read_var()) throw PolySyntaxError("expected t0/t1 after '*' in \"" + text + "\"");
                have_var = true;
            }
        } else {
            if (!read_var()) throw PolySyntaxError("expected term in \"" + text + "\"");
            have_var = true;
            while (lx.accept('*')) {
                if (!read_var()) throw PolySyntaxError("expected t0/t1 after '*' in \"" + text + "\"");
            }
        }
        (void)have_var;
        out += Laurent2::term(sign * coef, e0, e1);
    }
    return out;
}

inline Laurent1 Laurent1::parse(const std::string& text) {
    detail::TermLexer lx(text);
    Laurent1 out;
    if (lx.done()) throw PolySyntaxError("empty polynomial text");
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('-'))
            sign = -1;
        else if (lx.accept('+')) {
            if (first) throw PolySyntaxError("unexpected leading '+'");
        } else if (!first) {
            throw PolySyntaxError("expected '+' or '-' between terms in \"" + text + "\"");
        }
        first = false;
        Integer coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coef = lx.big_integer();
            have_coef = true;
        }
        int e = 0;
        bool have_var = false;
        auto read_var = [&]() -> bool {
            if (lx.word("t")) {
                e += lx.accept('^') ? static_cast<int>(lx.integer()) : 1;
                return true;
            }
            return false;
        };
        if (have_coef) {
            while (lx.accept('*')) {
                if (!read_var()) throw PolySyntaxError("expected t after '*' in \"" + text + "\"");
                have_var = true;
            }
        } else {
            if (!read_var()) throw PolySyntaxError("expected term in \"" + text + "\"");
            have_var = true;
        }
        (void)have_var;
        out += Laurent1::term(sign * coef, e);
    }
    return out;
}

}  // namespace lg
