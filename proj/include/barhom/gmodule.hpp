#pragma once

#include <string>
#include <vector>

#include "barhom/group.hpp"

namespace barhom {

/// A finitely generated abelian group with integral G-action, presented in
/// diagonal form: generator j has order moduli[j] (0 = infinite), and each
/// group element acts by an integer matrix taken modulo the moduli.
class GModule {
public:
    GModule(const Group& g, std::vector<i64> moduli, std::vector<std::vector<i64>> action,
            std::string label)
        : group_(&g), moduli_(std::move(moduli)), label_(std::move(label)) {
        rank_ = static_cast<int>(moduli_.size());
        for (i64 m : moduli_)
            if (m < 0) throw SpecError("module.moduli", "negative modulus");
        if (static_cast<int>(action.size()) != g.order())
            throw SpecError("module.action", "need one matrix per group element");
        action_.reserve(action.size());
        for (auto& mat : action) {
            if (static_cast<int>(mat.size()) != rank_ * rank_)
                throw SpecError("module.action", "action matrix has wrong shape");
            action_.push_back(std::move(mat));
        }
        validate();
    }

    const Group& group() const { return *group_; }
    int rank() const { return rank_; }
    const std::vector<i64>& moduli() const { return moduli_; }
    const std::string& label() const { return label_; }

    /// Entry (row, col) of the action matrix of s.
    i64 action(Elem s, int row, int col) const {
        return action_[static_cast<size_t>(s)][static_cast<size_t>(row) * rank_ + col];
    }

    i64 reduce_coord(int j, i64 x) const {
        return checked::reduce_mod(x, moduli_[static_cast<size_t>(j)]);
    }

    /// Structural identity: same rank, moduli and action tables.
    bool same_structure(const GModule& o) const {
        return rank_ == o.rank_ && moduli_ == o.moduli_ && action_ == o.action_;
    }

    bool is_tensor() const { return left_ != nullptr; }
    const GModule* tensor_left() const { return left_; }
    const GModule* tensor_right() const { return right_; }

    friend GModule tensor_modules(const GModule& m, const GModule& n);

private:
    void validate() {
        const Group& g = *group_;
        auto entry = [&](Elem s, int r, int c) { return action(s, r, c); };
        auto congruent = [&](i64 a, i64 b, int row) {
            return reduce_coord(row, checked::sub(a, b)) == 0;
        };
        // action matrices must descend to the quotient by the moduli
        for (int s = 0; s < g.order(); ++s)
            for (int c = 0; c < rank_; ++c)
                for (int r = 0; r < rank_; ++r)
                    if (reduce_coord(r, checked::mul(moduli_[static_cast<size_t>(c)],
                                                     entry(s, r, c))) != 0)
                        throw SpecError("module.action",
                                        "action matrix incompatible with moduli");
        // identity acts as identity
        for (int r = 0; r < rank_; ++r)
            for (int c = 0; c < rank_; ++c)
                if (!congruent(entry(g.id(), r, c), r == c ? 1 : 0, r))
                    throw SpecError("module.action", "identity does not act as identity");
        // homomorphism: action(st) = action(s) action(t)
        for (int s = 0; s < g.order(); ++s)
            for (int t = 0; t < g.order(); ++t) {
                const Elem st = g.mul(s, t);
                for (int r = 0; r < rank_; ++r)
                    for (int c = 0; c < rank_; ++c) {
                        i64 acc = 0;
                        for (int k = 0; k < rank_; ++k)
                            acc = checked::add(acc, checked::mul(entry(s, r, k), entry(t, k, c)));
                        if (!congruent(entry(st, r, c), acc, r))
                            throw SpecError("module.action", "action is not a homomorphism");
                    }
            }
        // invertibility: action(s) action(s^-1) = identity
        for (int s = 0; s < g.order(); ++s) {
            const Elem si = g.inv(s);
            for (int r = 0; r < rank_; ++r)
                for (int c = 0; c < rank_; ++c) {
                    i64 acc = 0;
                    for (int k = 0; k < rank_; ++k)
                        acc = checked::add(acc, checked::mul(entry(s, r, k), entry(si, k, c)));
                    if (!congruent(acc, r == c ? 1 : 0, r))
                        throw SpecError("module.action", "action matrix not invertible");
                }
        }
    }

    const Group* group_;
    int rank_;
    std::vector<i64> moduli_;
    std::vector<std::vector<i64>> action_; // per element, row-major rank x rank
    std::string label_;
    const GModule* left_ = nullptr;  // set on tensor modules
    const GModule* right_ = nullptr;
};

/// An element of a GModule: an exact coordinate vector in canonical form
/// (each coordinate reduced into [0, modulus) where the modulus is positive).
struct ModuleElement {
    const GModule* owner = nullptr;
    std::vector<i64> coords;

    static ModuleElement zero(const GModule& m) {
        return ModuleElement{&m, std::vector<i64>(static_cast<size_t>(m.rank()), 0)};
    }

    /// Generator j as an element.
    static ModuleElement generator(const GModule& m, int j) {
        ModuleElement e = zero(m);
        e.coords[static_cast<size_t>(j)] = m.reduce_coord(j, 1);
        return e;
    }

    static ModuleElement from_coords(const GModule& m, std::vector<i64> c) {
        if (static_cast<int>(c.size()) != m.rank())
            throw SpecError("element", "coordinate vector has wrong length");
        for (int j = 0; j < m.rank(); ++j)
            c[static_cast<size_t>(j)] = m.reduce_coord(j, c[static_cast<size_t>(j)]);
        return ModuleElement{&m, std::move(c)};
    }

    bool is_zero() const {
        for (i64 c : coords)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const ModuleElement& o) const {
        return owner->same_structure(*o.owner) && coords == o.coords;
    }
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }
};

inline ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    if (a.coords.size() != b.coords.size()) throw Error("module element rank mismatch");
    ModuleElement r = a;
    for (size_t j = 0; j < r.coords.size(); ++j)
        r.coords[j] = a.owner->reduce_coord(static_cast<int>(j),
                                            checked::add(r.coords[j], b.coords[j]));
    return r;
}

inline ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    if (a.coords.size() != b.coords.size()) throw Error("module element rank mismatch");
    ModuleElement r = a;
    for (size_t j = 0; j < r.coords.size(); ++j)
        r.coords[j] = a.owner->reduce_coord(static_cast<int>(j),
                                            checked::sub(r.coords[j], b.coords[j]));
    return r;
}

inline ModuleElement operator*(i64 c, const ModuleElement& a) {
    ModuleElement r = a;
    for (size_t j = 0; j < r.coords.size(); ++j)
        r.coords[j] = a.owner->reduce_coord(static_cast<int>(j), checked::mul(c, r.coords[j]));
    return r;
}

/// s . m, the module action.
inline ModuleElement act(Elem s, const ModuleElement& m) {
    const GModule& mod = *m.owner;
    ModuleElement r = ModuleElement::zero(mod);
    for (int i = 0; i < mod.rank(); ++i) {
        i64 acc = 0;
        for (int j = 0; j < mod.rank(); ++j)
            acc = checked::add(acc, checked::mul(mod.action(s, i, j),
                                                 m.coords[static_cast<size_t>(j)]));
        r.coords[static_cast<size_t>(i)] = mod.reduce_coord(i, acc);
    }
    return r;
}

/// Tensor product over Z of two modules of the same group, in diagonal form:
/// generator (i,j) has modulus gcd(m_i, n_j) (with 0 treated as Z), and the
/// action is the Kronecker product of the parents' actions.
inline GModule tensor_modules(const GModule& m, const GModule& n) {
    if (&m.group() != &n.group())
        throw SpecError("module", "tensor factors live over different groups");
    const Group& g = m.group();
    const int km = m.rank(), kn = n.rank(), k = km * kn;
    std::vector<i64> moduli(static_cast<size_t>(k));
    for (int i = 0; i < km; ++i)
        for (int j = 0; j < kn; ++j) {
            const i64 a = m.moduli()[static_cast<size_t>(i)];
            const i64 b = n.moduli()[static_cast<size_t>(j)];
            i64 mm;
            if (a == 0 && b == 0) mm = 0;
            else if (a == 0) mm = b;
            else if (b == 0) mm = a;
            else mm = checked::gcd(a, b);
            moduli[static_cast<size_t>(i * kn + j)] = mm;
        }
    std::vector<std::vector<i64>> action(static_cast<size_t>(g.order()));
    for (int s = 0; s < g.order(); ++s) {
        std::vector<i64> mat(static_cast<size_t>(k) * k, 0);
        for (int i = 0; i < km; ++i)
            for (int j = 0; j < kn; ++j)
                for (int i2 = 0; i2 < km; ++i2)
                    for (int j2 = 0; j2 < kn; ++j2)
                        mat[static_cast<size_t>(i * kn + j) * k + (i2 * kn + j2)] =
                            checked::mul(m.action(s, i, i2), n.action(s, j, j2));
        action[static_cast<size_t>(s)] = std::move(mat);
    }
    GModule t(g, std::move(moduli), std::move(action), m.label() + "(x)" + n.label());
    t.left_ = &m;
    t.right_ = &n;
    return t;
}

/// Pure tensor m (x) n as an element of the given tensor module.
inline ModuleElement tensor_embed(const ModuleElement& m, const ModuleElement& n,
                                  const GModule& mn) {
    if (!mn.is_tensor()) throw SpecError("module", "target is not a tensor module");
    const int km = m.owner->rank(), kn = n.owner->rank();
    if (mn.rank() != km * kn) throw SpecError("module", "tensor target has wrong rank");
    ModuleElement r = ModuleElement::zero(mn);
    for (int i = 0; i < km; ++i)
        for (int j = 0; j < kn; ++j)
            r.coords[static_cast<size_t>(i * kn + j)] = mn.reduce_coord(
                i * kn + j, checked::mul(m.coords[static_cast<size_t>(i)],
                                         n.coords[static_cast<size_t>(j)]));
    return r;
}

/// The twist N(x)M -> M(x)N, beta(x)alpha -> alpha(x)beta, realized on
/// coordinates as (j,i) -> (i,j). `into` must be the transposed tensor module.
inline ModuleElement twist(const ModuleElement& x, const GModule& into) {
    const GModule& from = *x.owner;
    if (!from.is_tensor() || !into.is_tensor())
        throw SpecError("module", "twist needs tensor modules on both sides");
    const int kn = from.tensor_left()->rank();  // rank of N
    const int km = from.tensor_right()->rank(); // rank of M
    if (!into.tensor_left()->same_structure(*from.tensor_right()) ||
        !into.tensor_right()->same_structure(*from.tensor_left()))
        throw SpecError("module", "twist target is not the transposed tensor");
    ModuleElement r = ModuleElement::zero(into);
    for (int j = 0; j < kn; ++j)
        for (int i = 0; i < km; ++i)
            r.coords[static_cast<size_t>(i * kn + j)] =
                into.reduce_coord(i * kn + j, x.coords[static_cast<size_t>(j * km + i)]);
    return r;
}

/// Builtin module constructors.
inline GModule trivial_int_module(const Group& g) {
    std::vector<std::vector<i64>> action(static_cast<size_t>(g.order()), {1});
    return GModule(g, {0}, std::move(action), "trivial-int");
}

inline GModule trivial_mod_module(const Group& g, i64 m) {
    if (m < 1) throw SpecError("module", "trivial-mod needs modulus >= 1");
    std::vector<std::vector<i64>> action(static_cast<size_t>(g.order()), {1});
    return GModule(g, {m}, std::move(action), "trivial-mod:" + std::to_string(m));
}

/// Sign module Z with s acting by -1 exactly when s lies outside the given
/// index-2 subgroup (the subgroup is validated).
inline GModule sign_module(const Group& g, const std::vector<Elem>& kernel) {
    const int n = g.order();
    if (n % 2 != 0 || static_cast<int>(kernel.size()) != n / 2)
        throw SpecError("module.kernel", "sign kernel must be an index-2 subgroup");
    std::vector<bool> in(static_cast<size_t>(n), false);
    for (Elem x : kernel) {
        if (x < 0 || x >= n) throw SpecError("module.kernel", "kernel element out of range");
        in[static_cast<size_t>(x)] = true;
    }
    if (!in[static_cast<size_t>(g.id())])
        throw SpecError("module.kernel", "sign kernel must contain the identity");
    for (Elem a : kernel)
        for (Elem b : kernel)
            if (!in[static_cast<size_t>(g.mul(a, b))])
                throw SpecError("module.kernel", "sign kernel is not closed");
    std::vector<std::vector<i64>> action(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) action[static_cast<size_t>(s)] = {in[static_cast<size_t>(s)] ? 1 : -1};
    return GModule(g, {0}, std::move(action), "sign");
}

/// Regular module ZG: rank |G|, s permutes the basis by left translation.
inline GModule regular_module(const Group& g) {
    const int n = g.order();
    std::vector<std::vector<i64>> action(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::vector<i64> mat(static_cast<size_t>(n) * n, 0);
        for (int u = 0; u < n; ++u) mat[static_cast<size_t>(g.mul(s, u)) * n + u] = 1;
        action[static_cast<size_t>(s)] = std::move(mat);
    }
    std::vector<i64> moduli(static_cast<size_t>(n), 0);
    return GModule(g, std::move(moduli), std::move(action), "regular");
}

/// Derives the canonical index-2 subgroup for the builtin `sign` module when
/// the group's label makes one canonical: even powers for even cyclic groups,
/// rotations for dihedral groups, even permutations for symmetric groups.
inline std::vector<Elem> builtin_sign_kernel(const Group& g) {
    const std::string& lb = g.label();
    const bool atom = lb.find('x') == std::string::npos;
    auto starts = [&](const char* p) { return atom && lb.rfind(p, 0) == 0; };
    const int n = g.order();
    std::vector<Elem> ker;
    if (starts("cyclic:") && n % 2 == 0) {
        for (int i = 0; i < n; i += 2) ker.push_back(i);
        return ker;
    }
    if (starts("dihedral:")) {
        for (int i = 0; i < n / 2; ++i) ker.push_back(i);
        return ker;
    }
    if (starts("symmetric:")) {
        // element order matches the lexicographic enumeration in symmetric_group
        int m = 1, fact = 1;
        while (fact < n) fact *= ++m;
        std::vector<int> base(static_cast<size_t>(m));
        std::iota(base.begin(), base.end(), 0);
        int idx = 0;
        do {
            int inversions = 0;
            for (size_t i = 0; i < base.size(); ++i)
                for (size_t j = i + 1; j < base.size(); ++j)
                    if (base[i] > base[j]) ++inversions;
            if (inversions % 2 == 0) ker.push_back(idx);
            ++idx;
        } while (std::next_permutation(base.begin(), base.end()));
        return ker;
    }
    throw SpecError("module",
                    "sign module needs an explicit index-2 subgroup for group '" + lb + "'");
}

/// Parses builtin module specs: "trivial-int", "trivial-mod:m", "sign", "regular".
inline GModule build_gmodule(const std::string& spec, const Group& g) {
    if (spec == "trivial-int") return trivial_int_module(g);
    if (spec == "sign") return sign_module(g, builtin_sign_kernel(g));
    if (spec == "regular") return regular_module(g);
    if (spec.rfind("trivial-mod:", 0) == 0) {
        const std::string arg = spec.substr(12);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw SpecError("module", "bad modulus in '" + spec + "'");
        return trivial_mod_module(g, std::stoll(arg));
    }
    throw SpecError("module", "unknown module spec '" + spec + "'");
}

} // namespace barhom
