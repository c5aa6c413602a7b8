#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lg {

struct BraidSyntaxError : std::runtime_error {
    explicit BraidSyntaxError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Braid word on n strands; letters are signed Artin generators,
/// +i = sigma_i, -i = sigma_i^-1, 1 <= |g| <= n-1.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) throw BraidSyntaxError("strand count must be >= 1");
        for (int g : letters_) {
            if (g == 0 || std::abs(g) > strands_ - 1)
                throw IndexOutOfRange("letter " + std::to_string(g) +
                                      " out of range for " + std::to_string(strands_) +
                                      " strands");
        }
    }
    explicit BraidWord(int strands) : BraidWord(strands, {}) {}

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

    /// "n: g1 g2 ... gk"
    std::string str() const {
        std::ostringstream os;
        os << strands_ << ":";
        for (int g : letters_) os << " " << g;
        return os.str();
    }

    static BraidWord parse(const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw BraidSyntaxError("expected \"n: g1 g2 ...\" but found no ':' in \"" +
                                   text + "\"");
        int n;
        {
            std::istringstream head(text.substr(0, colon));
            if (!(head >> n)) throw BraidSyntaxError("bad strand count in \"" + text + "\"");
            std::string rest;
            if (head >> rest) throw BraidSyntaxError("bad strand count in \"" + text + "\"");
        }
        std::vector<int> letters;
        std::istringstream body(text.substr(colon + 1));
        std::string tok;
        while (body >> tok) {
            std::size_t used = 0;
            int g;
            try {
                g = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw BraidSyntaxError("bad letter \"" + tok + "\"");
            }
            if (used != tok.size()) throw BraidSyntaxError("bad letter \"" + tok + "\"");
            letters.push_back(g);
        }
        return BraidWord(n, std::move(letters));
    }

    /// Permutation of the closure: perm()[i] is the 0-based strand position
    /// where strand i ends up at the bottom.
    std::vector<int> permutation() const {
        std::vector<int> p(strands_);
        std::iota(p.begin(), p.end(), 0);
        for (int g : letters_) {
            int i = std::abs(g) - 1;
            std::swap(p[i], p[i + 1]);
        }
        return p;
    }

    /// Number of components of the closure = cycles of the permutation.
    int components() const {
        auto p = permutation();
        std::vector<bool> seen(strands_, false);
        int cycles = 0;
        for (int i = 0; i < strands_; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
        }
        return cycles;
    }

    int writhe() const {
        int w = 0;
        for (int g : letters_) w += g > 0 ? 1 : -1;
        return w;
    }

    /// g b g^-1 (same closure).
    BraidWord conjugated(int g) const {
        if (g == 0 || std::abs(g) > strands_ - 1)
            throw IndexOutOfRange("conjugating letter out of range");
        std::vector<int> ls;
        ls.reserve(letters_.size() + 2);
        ls.push_back(g);
        ls.insert(ls.end(), letters_.begin(), letters_.end());
        ls.push_back(-g);
        return BraidWord(strands_, std::move(ls));
    }

    /// Append sigma_n^{+-1} on n+1 strands (same closure).
    BraidWord stabilized(bool positive) const {
        std::vector<int> ls = letters_;
        ls.push_back(positive ? strands_ : -strands_);
        return BraidWord(strands_ + 1, std::move(ls));
    }

    /// Negate every letter (closure of the mirror link).
    BraidWord mirrored() const {
        std::vector<int> ls = letters_;
        for (int& g : ls) g = -g;
        return BraidWord(strands_, std::move(ls));
    }

    /// Reverse and negate (the group inverse; closure of the reverse link).
    BraidWord inversed() const {
        std::vector<int> ls(letters_.rbegin(), letters_.rend());
        for (int& g : ls) g = -g;
        return BraidWord(strands_, std::move(ls));
    }

private:
    int strands_;
    std::vector<int> letters_;
};

/// b1 on strands 1..n1 followed by b2 shifted up by n1-1; the closures share
/// one strand, so the closure is the connected sum.
inline BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2) {
    int n = b1.strands() + b2.strands() - 1;
    std::vector<int> ls = b1.letters();
    int shift = b1.strands() - 1;
    for (int g : b2.letters()) ls.push_back(g > 0 ? g + shift : g - shift);
    return BraidWord(n, std::move(ls));
}

/// b1 and b2 on disjoint strand ranges; closure is the split union.
inline BraidWord split_union(const BraidWord& b1, const BraidWord& b2) {
    int n = b1.strands() + b2.strands();
    std::vector<int> ls = b1.letters();
    int shift = b1.strands();
    for (int g : b2.letters()) ls.push_back(g > 0 ? g + shift : g - shift);
    return BraidWord(n, std::move(ls));
}

}  // namespace lg
