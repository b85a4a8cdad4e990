#pragma once

#include <array>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "barhom/group.hpp"

namespace barhom {

/// A basis tuple (s_0,...,s_n) of the bar resolution in degree n; the empty
/// tuple (degree -1) is the basis element 1 of the augmentation target Z.
struct BarTuple {
    static constexpr int kMaxLen = 12;

    std::uint8_t len = 0;
    std::array<std::uint8_t, kMaxLen> e{};

    BarTuple() = default;

    BarTuple(std::initializer_list<int> xs) {
        for (int x : xs) push_back(x);
    }

    static BarTuple from(const std::vector<Elem>& xs) {
        BarTuple t;
        for (Elem x : xs) t.push_back(x);
        return t;
    }

    int degree() const { return static_cast<int>(len) - 1; }
    int size() const { return static_cast<int>(len); }
    Elem operator[](int i) const { return static_cast<Elem>(e[static_cast<size_t>(i)]); }

    void push_back(Elem x) {
        if (len >= kMaxLen) throw Error("bar tuple exceeds supported length");
        e[len++] = static_cast<std::uint8_t>(x);
    }

    /// Returns the tuple with entry i removed.
    BarTuple dropped(int i) const {
        BarTuple t;
        for (int j = 0; j < size(); ++j)
            if (j != i) t.push_back((*this)[j]);
        return t;
    }

    /// Slice [a, b] inclusive.
    BarTuple slice(int a, int b) const {
        BarTuple t;
        for (int j = a; j <= b; ++j) t.push_back((*this)[j]);
        return t;
    }

    BarTuple prefixed(Elem s) const {
        BarTuple t;
        t.push_back(s);
        for (int j = 0; j < size(); ++j) t.push_back((*this)[j]);
        return t;
    }

    bool has_adjacent_repeat() const {
        for (int j = 0; j + 1 < size(); ++j)
            if (e[static_cast<size_t>(j)] == e[static_cast<size_t>(j + 1)]) return true;
        return false;
    }

    bool operator==(const BarTuple& o) const {
        return len == o.len && std::memcmp(e.data(), o.e.data(), len) == 0;
    }
    bool operator!=(const BarTuple& o) const { return !(*this == o); }
    bool operator<(const BarTuple& o) const {
        if (len != o.len) return len < o.len;
        return std::memcmp(e.data(), o.e.data(), len) < 0;
    }

    std::string str(const Group& g) const {
        std::string s = "(";
        for (int j = 0; j < size(); ++j) {
            if (j) s += ",";
            s += g.name((*this)[j]);
        }
        return s + ")";
    }
};

/// A formal integer combination of bar tuples of one fixed degree.
/// Degree -1 encodes the augmentation target Z (basis: the empty tuple).
/// Zero coefficients are never stored; iteration is lexicographic.
class Chain {
public:
    using Terms = std::map<BarTuple, i64>;

    Chain(const Group& g, int degree) : group_(&g), degree_(degree) {
        if (degree < -1) throw Error("chain degree below -1");
    }

    static Chain basis(const Group& g, const BarTuple& t) {
        Chain c(g, t.degree());
        c.terms_[t] = 1;
        return c;
    }

    /// The element 1 of the degree -1 level.
    static Chain unit(const Group& g) { return basis(g, BarTuple{}); }

    const Group& group() const { return *group_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BarTuple& t, i64 c) {
        if (c == 0) return;
        if (t.degree() != degree_) throw Error("term degree mismatch");
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second = checked::add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Chain& operator+=(const Chain& o) {
        check_compat(o);
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        check_compat(o);
        for (const auto& [t, c] : o.terms_) add_term(t, checked::neg(c));
        return *this;
    }
    Chain operator+(const Chain& o) const {
        Chain r = *this;
        r += o;
        return r;
    }
    Chain operator-(const Chain& o) const {
        Chain r = *this;
        r -= o;
        return r;
    }
    Chain operator-() const {
        Chain r(*group_, degree_);
        for (const auto& [t, c] : terms_) r.terms_[t] = checked::neg(c);
        return r;
    }
    Chain operator*(i64 k) const {
        Chain r(*group_, degree_);
        if (k != 0)
            for (const auto& [t, c] : terms_) r.terms_[t] = checked::mul(c, k);
        return r;
    }

    bool operator==(const Chain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
    bool operator!=(const Chain& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [t, c] : terms_) {
            s += (c >= 0 ? (s.empty() ? "" : "+") : "-");
            const i64 ac = c < 0 ? -c : c;
            if (ac != 1) s += std::to_string(ac) + "*";
            s += t.str(*group_);
        }
        return s;
    }

    /// JSON list of {coefficient, tuple} records, tuples as element indices.
    std::string json_str() const {
        std::string s = "[";
        for (const auto& [t, c] : terms_) {
            if (s.size() > 1) s += ",";
            s += "{\"coefficient\":" + std::to_string(c) + ",\"tuple\":[";
            for (int i = 0; i < t.size(); ++i)
                s += (i ? "," : "") + std::to_string(t[i]);
            s += "]}";
        }
        return s + "]";
    }

private:
    void check_compat(const Chain& o) const {
        if (group_ != o.group_ || degree_ != o.degree_)
            throw Error("chain group/degree mismatch");
    }

    const Group* group_;
    int degree_;
    Terms terms_;
};

/// A formal integer combination of pairs x(x)y of bar tuples with
/// deg(x)+deg(y) equal to the fixed total degree. Total degree -1 encodes Z
/// (basis: the pair of empty tuples).
class TensorChain {
public:
    using Key = std::pair<BarTuple, BarTuple>;
    using Terms = std::map<Key, i64>;

    TensorChain(const Group& g, int degree) : group_(&g), degree_(degree) {
        if (degree < -1) throw Error("tensor chain degree below -1");
    }

    static TensorChain basis(const Group& g, const BarTuple& x, const BarTuple& y) {
        // the only legal empty-factor pair is (empty, empty), the unit of Z
        if ((x.len == 0) != (y.len == 0)) throw Error("mixed empty tensor factors");
        TensorChain c(g, x.len == 0 ? -1 : x.degree() + y.degree());
        c.terms_[{x, y}] = 1;
        return c;
    }

    static TensorChain unit(const Group& g) { return basis(g, BarTuple{}, BarTuple{}); }

    const Group& group() const { return *group_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BarTuple& x, const BarTuple& y, i64 c) {
        if (c == 0) return;
        if (degree_ == -1) {
            if (x.len != 0 || y.len != 0) throw Error("degree -1 takes only the unit pair");
        } else if (x.len == 0 || y.len == 0 || x.degree() + y.degree() != degree_) {
            throw Error("tensor term bidegree mismatch");
        }
        const Key k{x, y};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second = checked::add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorChain& operator+=(const TensorChain& o) {
        check_compat(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorChain& operator-=(const TensorChain& o) {
        check_compat(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, checked::neg(c));
        return *this;
    }
    TensorChain operator+(const TensorChain& o) const {
        TensorChain r = *this;
        r += o;
        return r;
    }
    TensorChain operator-(const TensorChain& o) const {
        TensorChain r = *this;
        r -= o;
        return r;
    }
    TensorChain operator-() const {
        TensorChain r(*group_, degree_);
        for (const auto& [k, c] : terms_) r.terms_[k] = checked::neg(c);
        return r;
    }
    TensorChain operator*(i64 k) const {
        TensorChain r(*group_, degree_);
        if (k != 0)
            for (const auto& [key, c] : terms_) r.terms_[key] = checked::mul(c, k);
        return r;
    }

    bool operator==(const TensorChain& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const TensorChain& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            s += (c >= 0 ? (s.empty() ? "" : "+") : "-");
            const i64 ac = c < 0 ? -c : c;
            if (ac != 1) s += std::to_string(ac) + "*";
            s += k.first.str(*group_) + "(x)" + k.second.str(*group_);
        }
        return s;
    }

    /// JSON list of {coefficient, left, right} records.
    std::string json_str() const {
        std::string s = "[";
        for (const auto& [k, c] : terms_) {
            if (s.size() > 1) s += ",";
            s += "{\"coefficient\":" + std::to_string(c) + ",\"left\":[";
            for (int i = 0; i < k.first.size(); ++i)
                s += (i ? "," : "") + std::to_string(k.first[i]);
            s += "],\"right\":[";
            for (int i = 0; i < k.second.size(); ++i)
                s += (i ? "," : "") + std::to_string(k.second[i]);
            s += "]}";
        }
        return s + "]";
    }

private:
    void check_compat(const TensorChain& o) const {
        if (group_ != o.group_ || degree_ != o.degree_)
            throw Error("tensor chain group/degree mismatch");
    }

    const Group* group_;
    int degree_;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// structural maps of the resolution

/// Alternating-sum boundary of the bar resolution, degree n -> n-1 (n >= 1).
inline Chain boundary(const Chain& c) {
    if (c.degree() < 1) throw Error("boundary needs degree >= 1");
    Chain r(c.group(), c.degree() - 1);
    for (const auto& [t, coef] : c.terms())
        for (int i = 0; i < t.size(); ++i)
            r.add_term(t.dropped(i), (i % 2 == 0) ? coef : checked::neg(coef));
    return r;
}

/// Augmentation F_0 -> Z: sum of coefficients, landed in degree -1.
inline Chain augmentation(const Chain& c) {
    if (c.degree() != 0) throw Error("augmentation needs degree 0");
    Chain r(c.group(), -1);
    i64 total = 0;
    for (const auto& [t, coef] : c.terms()) total = checked::add(total, coef);
    r.add_term(BarTuple{}, total);
    return r;
}

/// Right translation (s_0,...,s_n) -> (s_0 s,...,s_n s); identity in degree -1.
inline Chain translate(Elem s, const Chain& c) {
    if (c.degree() == -1) return c;
    const Group& g = c.group();
    Chain r(g, c.degree());
    for (const auto& [t, coef] : c.terms()) {
        BarTuple u;
        for (int i = 0; i < t.size(); ++i) u.push_back(g.mul(t[i], s));
        r.add_term(u, coef);
    }
    return r;
}

/// Left translation u.(s_0,...,s_n) = (u s_0,...,u s_n); identity in degree -1.
inline Chain act_left(Elem u, const Chain& c) {
    if (c.degree() == -1) return c;
    const Group& g = c.group();
    Chain r(g, c.degree());
    for (const auto& [t, coef] : c.terms()) {
        BarTuple v;
        for (int i = 0; i < t.size(); ++i) v.push_back(g.mul(u, t[i]));
        r.add_term(v, coef);
    }
    return r;
}

/// Contracting homotopy of the augmented resolution: 1 -> (t) in degree -1,
/// prefix by t elsewhere. Raises degree by one.
inline Chain psi(Elem t, const Chain& c) {
    Chain r(c.group(), c.degree() + 1);
    for (const auto& [tup, coef] : c.terms()) r.add_term(tup.prefixed(t), coef);
    return r;
}

/// Projection onto the normalized resolution: kills tuples with an adjacent
/// repeated entry. Idempotent.
inline Chain normalize(const Chain& c) {
    Chain r(c.group(), c.degree());
    for (const auto& [t, coef] : c.terms())
        if (!t.has_adjacent_repeat()) r.add_term(t, coef);
    return r;
}

/// Koszul-signed boundary of the tensor square, total degree n -> n-1 (n >= 1).
inline TensorChain tensor_boundary(const TensorChain& c) {
    if (c.degree() < 1) throw Error("tensor boundary needs degree >= 1");
    TensorChain r(c.group(), c.degree() - 1);
    for (const auto& [k, coef] : c.terms()) {
        const BarTuple& x = k.first;
        const BarTuple& y = k.second;
        const int p = x.degree();
        if (p >= 1)
            for (int i = 0; i < x.size(); ++i)
                r.add_term(x.dropped(i), y, (i % 2 == 0) ? coef : checked::neg(coef));
        if (y.degree() >= 1) {
            const i64 sgn = (p % 2 == 0) ? coef : checked::neg(coef);
            for (int i = 0; i < y.size(); ++i)
                r.add_term(x, y.dropped(i), (i % 2 == 0) ? sgn : checked::neg(sgn));
        }
    }
    return r;
}

/// Augmentation (eps(x)eps) of the tensor square in total degree 0.
inline TensorChain tensor_augmentation(const TensorChain& c) {
    if (c.degree() != 0) throw Error("tensor augmentation needs degree 0");
    TensorChain r(c.group(), -1);
    i64 total = 0;
    for (const auto& [k, coef] : c.terms()) total = checked::add(total, coef);
    r.add_term(BarTuple{}, BarTuple{}, total);
    return r;
}

/// x(x)y -> (-1)^{deg x deg y} y(x)x; identity on the degree -1 unit.
inline TensorChain swap_tensor(const TensorChain& c) {
    TensorChain r(c.group(), c.degree());
    for (const auto& [k, coef] : c.terms()) {
        if (c.degree() == -1) {
            r.add_term(k.first, k.second, coef);
            continue;
        }
        const int pq = k.first.degree() * k.second.degree();
        r.add_term(k.second, k.first, (pq % 2 == 0) ? coef : checked::neg(coef));
    }
    return r;
}

/// Alexander-Whitney diagonal (s_0,...,s_n) -> sum of front(x)back faces.
inline TensorChain alexander_whitney(const Chain& c) {
    if (c.degree() < 0) throw Error("diagonal needs degree >= 0");
    TensorChain r(c.group(), c.degree());
    for (const auto& [t, coef] : c.terms())
        for (int i = 0; i < t.size(); ++i)
            r.add_term(t.slice(0, i), t.slice(i, t.size() - 1), coef);
    return r;
}

/// Contracting homotopy of the augmented tensor square built from prefixes:
/// 1 -> (s)(x)(t); x(x)y -> (s,x)(x)y, plus (s)(x)(t,y) when deg x = 0.
inline TensorChain psi_pair(Elem s, Elem t, const TensorChain& c) {
    TensorChain r(c.group(), c.degree() + 1);
    for (const auto& [k, coef] : c.terms()) {
        if (c.degree() == -1) {
            BarTuple xs, yt;
            xs.push_back(s);
            yt.push_back(t);
            r.add_term(xs, yt, coef);
            continue;
        }
        r.add_term(k.first.prefixed(s), k.second, coef);
        if (k.first.degree() == 0) {
            BarTuple xs;
            xs.push_back(s);
            r.add_term(xs, k.second.prefixed(t), coef);
        }
    }
    return r;
}

/// Left translation on the tensor square: u.(x(x)y) = ux(x)uy.
inline TensorChain act_left(Elem u, const TensorChain& c) {
    if (c.degree() == -1) return c;
    const Group& g = c.group();
    TensorChain r(g, c.degree());
    for (const auto& [k, coef] : c.terms()) {
        BarTuple x, y;
        for (int i = 0; i < k.first.size(); ++i) x.push_back(g.mul(u, k.first[i]));
        for (int i = 0; i < k.second.size(); ++i) y.push_back(g.mul(u, k.second[i]));
        r.add_term(x, y, coef);
    }
    return r;
}

/// Projection killing pairs with a degenerate factor on either side.
inline TensorChain normalize_tensor(const TensorChain& c) {
    TensorChain r(c.group(), c.degree());
    for (const auto& [k, coef] : c.terms())
        if (!k.first.has_adjacent_repeat() && !k.second.has_adjacent_repeat())
            r.add_term(k.first, k.second, coef);
    return r;
}

/// Right translation on the tensor square (both factors); identity in degree -1.
inline TensorChain translate(Elem s, const TensorChain& c) {
    if (c.degree() == -1) return c;
    const Group& g = c.group();
    TensorChain r(g, c.degree());
    for (const auto& [k, coef] : c.terms()) {
        BarTuple x, y;
        for (int i = 0; i < k.first.size(); ++i) x.push_back(g.mul(k.first[i], s));
        for (int i = 0; i < k.second.size(); ++i) y.push_back(g.mul(k.second[i], s));
        r.add_term(x, y, coef);
    }
    return r;
}

} // namespace barhom
