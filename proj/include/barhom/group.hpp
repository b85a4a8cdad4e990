#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "barhom/checked.hpp"

namespace barhom {

/// Group elements are dense indices 0..order-1.
using Elem = int;

/// Maximum group order accepted by the eager O(n^3) table validation.
inline constexpr int kMaxGroupOrder = 64;

/// A finite group given by complete multiplication and inverse tables.
/// Immutable after construction; construction validates the axioms.
class Group {
public:
    /// Builds from a multiplication table; identity and inverses are located
    /// and the axioms checked exhaustively.
    Group(std::vector<std::vector<Elem>> mul, std::string label,
          std::vector<std::string> names = {})
        : label_(std::move(label)), names_(std::move(names)) {
        const int n = static_cast<int>(mul.size());
        if (n == 0) throw SpecError("group", "group order 0");
        if (n > kMaxGroupOrder)
            throw SpecError("group", "group order " + std::to_string(n) + " exceeds limit " +
                                         std::to_string(kMaxGroupOrder));
        order_ = n;
        mul_.assign(static_cast<size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(mul[a].size()) != n)
                throw SpecError("group.mul", "multiplication table is not square");
            for (int b = 0; b < n; ++b) {
                Elem c = mul[a][b];
                if (c < 0 || c >= n)
                    throw SpecError("group.mul", "table entry out of range");
                mul_[static_cast<size_t>(a) * n + b] = c;
            }
        }
        // locate two-sided identity
        id_ = -1;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x)
                ok = mul_at(e, x) == x && mul_at(x, e) == x;
            if (ok) {
                id_ = e;
                break;
            }
        }
        if (id_ < 0) throw SpecError("group.mul", "no two-sided identity element");
        // inverses
        inv_.assign(n, -1);
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (mul_at(x, y) == id_ && mul_at(y, x) == id_) {
                    inv_[x] = y;
                    break;
                }
            }
            if (inv_[x] < 0)
                throw SpecError("group.mul", "element " + std::to_string(x) + " has no inverse");
        }
        // associativity, exhaustive
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul_at(mul_at(a, b), c) != mul_at(a, mul_at(b, c)))
                        throw SpecError("group.mul", "multiplication table is not associative");
        if (names_.empty()) {
            names_.reserve(n);
            for (int i = 0; i < n; ++i)
                names_.push_back(i == id_ ? "e" : "g" + std::to_string(i));
        } else if (static_cast<int>(names_.size()) != n) {
            throw SpecError("group.names", "element name list has wrong length");
        }
    }

    int order() const { return order_; }
    Elem id() const { return id_; }
    Elem mul(Elem a, Elem b) const { return mul_at(a, b); }
    Elem inv(Elem a) const { return inv_[static_cast<size_t>(a)]; }
    const std::string& label() const { return label_; }
    const std::string& name(Elem a) const { return names_[static_cast<size_t>(a)]; }

    /// Resolves an element by name or by decimal index; -1 if unknown.
    Elem find(const std::string& s) const {
        for (int i = 0; i < order_; ++i)
            if (names_[static_cast<size_t>(i)] == s) return i;
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
            int v = std::stoi(s);
            if (v >= 0 && v < order_) return v;
        }
        return -1;
    }

    Elem conj(Elem s, Elem x) const { return mul(mul(inv(s), x), s); }

    bool is_abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                if (mul_at(a, b) != mul_at(b, a)) return false;
        return true;
    }

private:
    Elem mul_at(Elem a, Elem b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }

    int order_ = 0;
    Elem id_ = 0;
    std::vector<Elem> mul_;
    std::vector<Elem> inv_;
    std::string label_;
    std::vector<std::string> names_;
};

namespace detail {

inline Group group_from_permutations(const std::vector<std::vector<int>>& perms,
                                     std::string label, std::vector<std::string> names) {
    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (perms[static_cast<size_t>(i)] == p) return i;
        return -1;
    };
    std::vector<std::vector<Elem>> mul(static_cast<size_t>(n), std::vector<Elem>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // composition: (a*b)(v) = a(b(v))
            std::vector<int> c(perms[static_cast<size_t>(a)].size());
            for (size_t v = 0; v < c.size(); ++v)
                c[v] = perms[static_cast<size_t>(a)][static_cast<size_t>(
                    perms[static_cast<size_t>(b)][v])];
            int idx = index_of(c);
            if (idx < 0) throw SpecError("group", "permutation set not closed");
            mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = idx;
        }
    }
    return Group(std::move(mul), std::move(label), std::move(names));
}

} // namespace detail

/// Cyclic group of order n; element i is g^i, named e, g, g2, ...
inline Group cyclic_group(int n) {
    if (n < 1) throw SpecError("group", "cyclic group needs order >= 1");
    std::vector<std::vector<Elem>> mul(static_cast<size_t>(n), std::vector<Elem>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
    return Group(std::move(mul), "cyclic:" + std::to_string(n), std::move(names));
}

/// Dihedral group of order 2n; element k < n is the rotation r^k, element
/// n+k the reflection r^k f, with f r = r^-1 f.
inline Group dihedral_group(int n) {
    if (n < 1) throw SpecError("group", "dihedral group needs n >= 1");
    const int order = 2 * n;
    auto rot = [n](int k) { return ((k % n) + n) % n; };
    std::vector<std::vector<Elem>> mul(static_cast<size_t>(order),
                                       std::vector<Elem>(static_cast<size_t>(order)));
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            const bool fx = x >= n, fy = y >= n;
            const int a = x % n, b = y % n;
            // (r^a f^fx)(r^b f^fy), pushing f past r^b
            const int k = fx ? rot(a - b) : rot(a + b);
            mul[static_cast<size_t>(x)][static_cast<size_t>(y)] = k + (fx != fy ? n : 0);
        }
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k)
        names.push_back(k == 0 ? "e" : (k == 1 ? "r" : "r" + std::to_string(k)));
    for (int k = 0; k < n; ++k)
        names.push_back(k == 0 ? "f" : "r" + std::to_string(k) + "f");
    return Group(std::move(mul), "dihedral:" + std::to_string(n), std::move(names));
}

/// Symmetric group on n letters; elements are the n! permutations in
/// lexicographic one-line order, named by their one-line images.
inline Group symmetric_group(int n) {
    if (n < 1) throw SpecError("group", "symmetric group needs n >= 1");
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<std::string> names;
    do {
        perms.push_back(base);
        std::string nm;
        for (int v : base) nm += std::to_string(v);
        names.push_back(nm == std::string("0123456789").substr(0, static_cast<size_t>(n)) ? "e"
                                                                                          : nm);
    } while (std::next_permutation(base.begin(), base.end()));
    return detail::group_from_permutations(perms, "symmetric:" + std::to_string(n),
                                           std::move(names));
}

/// Direct product; element index is a*|B|+b, named "<a>|<b>".
inline Group product_group(const Group& a, const Group& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    if (n > kMaxGroupOrder)
        throw SpecError("group", "product order exceeds limit " + std::to_string(kMaxGroupOrder));
    std::vector<std::vector<Elem>> mul(static_cast<size_t>(n), std::vector<Elem>(n));
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        const int xa = x / nb, xb = x % nb;
        names[static_cast<size_t>(x)] = a.name(xa) + "|" + b.name(xb);
        for (int y = 0; y < n; ++y) {
            const int ya = y / nb, yb = y % nb;
            mul[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    }
    return Group(std::move(mul), a.label() + "x" + b.label(), std::move(names));
}

/// Parses builtin group specs: "cyclic:n", "dihedral:n", "symmetric:n" and
/// 'x'-separated products thereof, e.g. "cyclic:2xcyclic:2".
inline Group build_group(const std::string& spec) {
    auto parse_atom = [](const std::string& s) -> Group {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw SpecError("group", "unknown group spec '" + s + "'");
        const std::string kind = s.substr(0, colon);
        const std::string arg = s.substr(colon + 1);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw SpecError("group", "bad group parameter in '" + s + "'");
        const int n = std::stoi(arg);
        if (kind == "cyclic") return cyclic_group(n);
        if (kind == "dihedral") return dihedral_group(n);
        if (kind == "symmetric") return symmetric_group(n);
        throw SpecError("group", "unknown group kind '" + kind + "'");
    };
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t x = spec.find('x', start);
        if (x == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, x - start));
        start = x + 1;
    }
    Group g = parse_atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) g = product_group(g, parse_atom(parts[i]));
    return g;
}

} // namespace barhom
