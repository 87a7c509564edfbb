#pragma once

#include <array>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planarinv/indices.hpp"
#include "planarinv/rational.hpp"

namespace planarinv {

inline bool is_odd(int v) { return ((v % 2) + 2) % 2 == 1; }

// Basis symbol X^{a,b}_{k,l}; ordered (X^{a,b}_{k,l} and X^{b,a}_{l,k} are
// distinct basis elements). k and l are odd.
struct XSymbol {
    int a = 0, b = 0, k = 1, l = 1;

    XSymbol() = default;
    XSymbol(int a_, int b_, int k_, int l_) : a(a_), b(b_), k(k_), l(l_) {
        if (!is_odd(k) || !is_odd(l)) throw std::invalid_argument("X symbol bottom entries must be odd");
    }
    friend bool operator==(const XSymbol&, const XSymbol&) = default;
    friend auto operator<=>(const XSymbol&, const XSymbol&) = default;
};

// a + b - k - l; every term of F(c) sits in grade whitney(c).
inline int grade(const XSymbol& x) { return x.a + x.b - x.k - x.l; }

// Y^n_{k,l} stored with k < l; the antisymmetry Y^n_{k,l} = -Y^n_{l,k} and the
// vanishing of Y^n_{k,k} are handled at insertion.
struct YSymbol {
    int n = 0, k = -1, l = 1;

    YSymbol() = default;
    YSymbol(int n_, int k_, int l_) : n(n_), k(k_), l(l_) {
        if (!is_odd(k) || !is_odd(l)) throw std::invalid_argument("Y symbol lower entries must be odd");
        if (k >= l) throw std::invalid_argument("canonical Y symbol requires k < l");
    }
    friend bool operator==(const YSymbol&, const YSymbol&) = default;
    friend auto operator<=>(const YSymbol&, const YSymbol&) = default;
};

template <class Symbol>
class FormalVector {
  public:
    using Map = std::map<Symbol, Rat>;

    FormalVector() = default;

    void add(const Symbol& s, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coeff(const Symbol& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    FormalVector& operator+=(const FormalVector& o) {
        for (auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    FormalVector& operator-=(const FormalVector& o) {
        for (auto& [s, c] : o.terms_) add(s, -c);
        return *this;
    }
    FormalVector& operator*=(const Rat& r) {
        if (r == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, c] : terms_) c *= r;
        return *this;
    }
    friend FormalVector operator+(FormalVector a, const FormalVector& b) { return a += b; }
    friend FormalVector operator-(FormalVector a, const FormalVector& b) { return a -= b; }
    friend FormalVector operator*(const Rat& r, FormalVector a) { return a *= r; }
    friend bool operator==(const FormalVector&, const FormalVector&) = default;

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

  private:
    Map terms_;
};

using XVector = FormalVector<XSymbol>;
using YVector = FormalVector<YSymbol>;

// Insertion with canonicalization: Y^n_{k,k} = 0, Y^n_{k,l} = -Y^n_{l,k}.
inline void add_y_raw(YVector& v, int n, int k, int l, const Rat& c) {
    if (k == l) return;
    if (k < l)
        v.add(YSymbol(n, k, l), c);
    else
        v.add(YSymbol(n, l, k), -c);
}

// Psi(X^{a,b}_{k,l}) = Y^{a+b}_{k,l}, extended linearly.
inline YVector psi(const XVector& x) {
    YVector out;
    for (auto& [s, c] : x) add_y_raw(out, s.a + s.b, s.k, s.l, c);
    return out;
}

// The defining functionals of the subspace where all g_m vanish.
inline Rat g_m(const YVector& y, int m) {
    Rat out(0);
    for (auto& [s, c] : y) {
        if (s.n - s.k - s.l != m) continue;
        int sum = s.k + s.l;
        if (sum == 0)
            out += c * Rat(s.k - s.l);
        else if (sum == 2 || sum == -2)
            out += c * Rat((s.l - s.k) / 2);
    }
    return out;
}

// -------------------------------------------------------------------------
// Singularity symbols
// -------------------------------------------------------------------------

enum class JKind { JPlus, JA, JB };

inline std::string to_string(JKind k) {
    switch (k) {
        case JKind::JPlus: return "J+";
        case JKind::JA: return "JA";
        case JKind::JB: return "JB";
    }
    return "?";
}

// Tangency symbol with an unordered pair of exterior-arc double indices.
struct JSymbol {
    JKind kind = JKind::JPlus;
    DoubleIndex first, second;  // canonical: first <= second

    JSymbol() = default;
    JSymbol(JKind kd, DoubleIndex x, DoubleIndex y) : kind(kd), first(x), second(y) {
        if (second < first) std::swap(first, second);
    }
    friend bool operator==(const JSymbol&, const JSymbol&) = default;
    friend auto operator<=>(const JSymbol&, const JSymbol&) = default;
};

// Triple-point symbol: cyclic triple of (double index, hat) in the order the
// exterior arcs appear along the curve, stored as the minimal rotation.
struct SEntry {
    DoubleIndex index;
    bool hat = false;
    friend bool operator==(const SEntry&, const SEntry&) = default;
    friend auto operator<=>(const SEntry&, const SEntry&) = default;
};

struct SSymbol {
    std::array<SEntry, 3> entries;
    int canonical_shift = 0;  // rotation applied to the input triple

    SSymbol() = default;
    explicit SSymbol(std::array<SEntry, 3> in) {
        int best = 0;
        for (int r = 1; r < 3; ++r) {
            if (rotated(in, r) < rotated(in, best)) best = r;
        }
        entries = rotated(in, best);
        canonical_shift = best;
    }

    bool rotation_symmetric() const { return rotated(entries, 1) == entries || rotated(entries, 2) == entries; }

    friend bool operator==(const SSymbol& a, const SSymbol& b) { return a.entries == b.entries; }
    friend auto operator<=>(const SSymbol& a, const SSymbol& b) { return a.entries <=> b.entries; }

  private:
    static std::array<SEntry, 3> rotated(const std::array<SEntry, 3>& e, int r) {
        return {e[r % 3], e[(r + 1) % 3], e[(r + 2) % 3]};
    }
};

// -------------------------------------------------------------------------
// F^(1) on J symbols
// -------------------------------------------------------------------------

inline XVector f1_jplus(const JSymbol& j) {
    if (j.kind != JKind::JPlus) throw WrongKind("f1_jplus expects a J+ symbol");
    XVector out;
    const DoubleIndex &a = j.first, &b = j.second;
    out.add(XSymbol(a.i1, b.i1, a.i2, b.i2), 1);
    out.add(XSymbol(b.i1, a.i1, b.i2, a.i2), 1);
    return out;
}

inline XVector f1_ja(const JSymbol& j) {
    if (j.kind != JKind::JA) throw WrongKind("f1_ja expects a JA symbol");
    XVector out;
    const DoubleIndex &a = j.first, &b = j.second;
    out.add(XSymbol(a.i1, b.i1 + 1, a.i2, b.i2), 1);
    out.add(XSymbol(b.i1, a.i1 + 1, b.i2, a.i2), 1);
    return out;
}

// J^B_{a,b} = J^A_{a-1,b-1}: shift both top entries down, then apply f1_ja.
inline XVector f1_jb(const JSymbol& j) {
    if (j.kind != JKind::JB) throw WrongKind("f1_jb expects a JB symbol");
    JSymbol shifted(JKind::JA, DoubleIndex{j.first.i1 - 1, j.first.i2},
                    DoubleIndex{j.second.i1 - 1, j.second.i2});
    return f1_ja(shifted);
}

inline XVector f1(const JSymbol& j) {
    switch (j.kind) {
        case JKind::JPlus: return f1_jplus(j);
        case JKind::JA: return f1_ja(j);
        case JKind::JB: return f1_jb(j);
    }
    throw WrongKind("unknown J symbol kind");
}

// -------------------------------------------------------------------------
// Canonical text form. Grammar:
//   vector  := "0" | term (" + " term)*
//   term    := ["-"] [coeff "*"] symbol
//   coeff   := integer | integer "/" integer     (positive)
//   symbol  := "X[" a "," b ";" k "," l "]" | "Y[" n ";" k "," l "]"
// Keys appear in canonical (map) order; coefficients are exact rationals.
// -------------------------------------------------------------------------

namespace detail {

inline void append_term(std::string& out, const Rat& c, const std::string& sym) {
    bool first = out.empty();
    Rat mag = c < 0 ? Rat(-c) : c;
    if (!first) out += " + ";
    if (c < 0) out += "-";
    if (mag != 1) {
        out += rat_to_string(mag);
        out += "*";
    }
    out += sym;
}

}  // namespace detail

inline std::string symbol_text(const XSymbol& s) {
    std::ostringstream os;
    os << "X[" << s.a << "," << s.b << ";" << s.k << "," << s.l << "]";
    return os.str();
}

inline std::string symbol_text(const YSymbol& s) {
    std::ostringstream os;
    os << "Y[" << s.n << ";" << s.k << "," << s.l << "]";
    return os.str();
}

inline std::string symbol_text(const JSymbol& j) {
    std::ostringstream os;
    os << to_string(j.kind) << "[(" << j.first.i1 << "," << j.first.i2 << "),(" << j.second.i1 << ","
       << j.second.i2 << ")]";
    return os.str();
}

inline std::string symbol_text(const SSymbol& s) {
    std::ostringstream os;
    os << "S[";
    for (int i = 0; i < 3; ++i) {
        const SEntry& e = s.entries[static_cast<std::size_t>(i)];
        os << (i ? "," : "") << "(" << e.index.i1 << "," << e.index.i2 << ")" << (e.hat ? "^" : "");
    }
    os << "]";
    return os.str();
}

inline std::string to_text(const XVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (auto& [s, c] : v) detail::append_term(out, c, symbol_text(s));
    return out;
}

inline std::string to_text(const YVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (auto& [s, c] : v) detail::append_term(out, c, symbol_text(s));
    return out;
}

namespace detail {

struct TermScan {
    Rat coeff;
    std::string symbol;
};

inline std::vector<TermScan> scan_terms(const std::string& text) {
    std::vector<TermScan> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;
        Rat c(1);
        if (!term.empty() && term[0] == '-') {
            c = -1;
            term = term.substr(1);
        }
        std::size_t star = term.find('*');
        if (star != std::string::npos) {
            c *= rat_from_fraction(term.substr(0, star));
            term = term.substr(star + 1);
        }
        if (term.empty()) throw ParseError("empty term in vector text");
        out.push_back({c, term});
    }
    if (out.empty()) throw ParseError("empty vector text");
    return out;
}

inline std::vector<int> scan_ints(const std::string& body, std::size_t expected) {
    std::vector<int> vals;
    std::string cur;
    for (char ch : body) {
        if (ch == ',' || ch == ';') {
            if (cur.empty()) throw ParseError("bad symbol body: " + body);
            vals.push_back(std::stoi(cur));
            cur.clear();
        } else if ((ch >= '0' && ch <= '9') || ch == '-') {
            cur += ch;
        } else {
            throw ParseError("bad symbol body: " + body);
        }
    }
    if (!cur.empty()) vals.push_back(std::stoi(cur));
    if (vals.size() != expected) throw ParseError("bad symbol arity: " + body);
    return vals;
}

}  // namespace detail

inline XVector parse_xvector(const std::string& text) {
    XVector v;
    if (text == "0") return v;
    for (auto& t : detail::scan_terms(text)) {
        if (t.symbol.size() < 4 || t.symbol[0] != 'X' || t.symbol[1] != '[' || t.symbol.back() != ']')
            throw ParseError("bad X symbol: " + t.symbol);
        auto vals = detail::scan_ints(t.symbol.substr(2, t.symbol.size() - 3), 4);
        try {
            v.add(XSymbol(vals[0], vals[1], vals[2], vals[3]), t.coeff);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return v;
}

inline YVector parse_yvector(const std::string& text) {
    YVector v;
    if (text == "0") return v;
    for (auto& t : detail::scan_terms(text)) {
        if (t.symbol.size() < 4 || t.symbol[0] != 'Y' || t.symbol[1] != '[' || t.symbol.back() != ']')
            throw ParseError("bad Y symbol: " + t.symbol);
        auto vals = detail::scan_ints(t.symbol.substr(2, t.symbol.size() - 3), 3);
        add_y_raw(v, vals[0], vals[1], vals[2], t.coeff);
    }
    return v;
}

}  // namespace planarinv
