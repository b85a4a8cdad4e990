#pragma once

#include "barhom/gmodule.hpp"
#include "barhom/homotopies.hpp"

namespace barhom {

enum class HomotopyVariant { kMain, kAlt };
enum class EvalPath { kFormula, kPairing };

inline const char* to_string(HomotopyVariant v) {
    return v == HomotopyVariant::kMain ? "main" : "alt";
}

/// An equivariant cochain of degree n with coefficients in a G-module,
/// stored in inhomogeneous form: a total table G^n -> M (the empty tuple for
/// n = 0). The equivariant (homogeneous) view is computed on demand.
class Cochain {
public:
    Cochain(const Group& g, const GModule& m, int degree)
        : group_(&g), module_(&m), degree_(degree) {
        if (degree < 0) throw Error("cochain degree must be >= 0");
        if (&m.group() != &g) throw Error("module group mismatch");
        i64 cells = m.rank();
        for (int i = 0; i < degree; ++i) cells = checked::mul(cells, g.order());
        if (cells > 100'000'000) throw SizeGuardError("cochain table too large");
        codes_ = cells / m.rank();
        table_.assign(static_cast<size_t>(cells), 0);
    }

    const Group& group() const { return *group_; }
    const GModule& module() const { return *module_; }
    int degree() const { return degree_; }
    i64 codes() const { return codes_; }

    /// Basis cochain: indicator of one tuple code times one generator.
    static Cochain basis(const Group& g, const GModule& m, int degree, i64 code, int gen) {
        Cochain a(g, m, degree);
        a.table_[static_cast<size_t>(code) * m.rank() + gen] = m.reduce_coord(gen, 1);
        return a;
    }

    i64 encode(const std::vector<Elem>& args) const {
        if (static_cast<int>(args.size()) != degree_) throw Error("argument arity mismatch");
        i64 code = 0;
        for (Elem x : args) code = code * group_->order() + x;
        return code;
    }

    std::vector<Elem> decode(i64 code) const {
        std::vector<Elem> args(static_cast<size_t>(degree_));
        for (int i = degree_ - 1; i >= 0; --i) {
            args[static_cast<size_t>(i)] = static_cast<Elem>(code % group_->order());
            code /= group_->order();
        }
        return args;
    }

    ModuleElement value_at(i64 code) const {
        std::vector<i64> c(table_.begin() + static_cast<long>(code) * module_->rank(),
                           table_.begin() + static_cast<long>(code + 1) * module_->rank());
        return ModuleElement{module_, std::move(c)};
    }

    ModuleElement operator()(const std::vector<Elem>& args) const {
        return value_at(encode(args));
    }

    void set(i64 code, const ModuleElement& v) {
        for (int j = 0; j < module_->rank(); ++j)
            table_[static_cast<size_t>(code) * module_->rank() + j] =
                module_->reduce_coord(j, v.coords[static_cast<size_t>(j)]);
    }

    void accumulate(i64 code, const ModuleElement& v, i64 scale = 1) {
        for (int j = 0; j < module_->rank(); ++j) {
            auto& cell = table_[static_cast<size_t>(code) * module_->rank() + j];
            cell = module_->reduce_coord(
                j, checked::add(cell, checked::mul(scale, v.coords[static_cast<size_t>(j)])));
        }
    }

    bool is_zero() const {
        for (i64 x : table_)
            if (x != 0) return false;
        return true;
    }

    Cochain operator+(const Cochain& o) const {
        Cochain r = *this;
        check_compat(o);
        for (size_t i = 0; i < table_.size(); ++i)
            r.table_[i] = module_->reduce_coord(static_cast<int>(i % module_->rank()),
                                                checked::add(table_[i], o.table_[i]));
        return r;
    }
    Cochain operator-(const Cochain& o) const {
        Cochain r = *this;
        check_compat(o);
        for (size_t i = 0; i < table_.size(); ++i)
            r.table_[i] = module_->reduce_coord(static_cast<int>(i % module_->rank()),
                                                checked::sub(table_[i], o.table_[i]));
        return r;
    }
    Cochain operator*(i64 k) const {
        Cochain r = *this;
        for (size_t i = 0; i < table_.size(); ++i)
            r.table_[i] = module_->reduce_coord(static_cast<int>(i % module_->rank()),
                                                checked::mul(table_[i], k));
        return r;
    }

    bool operator==(const Cochain& o) const {
        return degree_ == o.degree_ && module_->same_structure(*o.module_) &&
               table_ == o.table_;
    }
    bool operator!=(const Cochain& o) const { return !(*this == o); }

private:
    void check_compat(const Cochain& o) const {
        if (degree_ != o.degree_ || !module_->same_structure(*o.module_))
            throw Error("cochain degree/module mismatch");
    }

    const Group* group_;
    const GModule* module_;
    int degree_;
    i64 codes_;
    std::vector<i64> table_;
};

/// Homogeneous lift of an inhomogeneous tuple: t_0 = e, t_i = t_{i-1} s_i.
inline BarTuple homogeneous_lift(const Group& g, const std::vector<Elem>& args) {
    BarTuple t;
    t.push_back(g.id());
    Elem acc = g.id();
    for (Elem s : args) {
        acc = g.mul(acc, s);
        t.push_back(acc);
    }
    return t;
}

/// The equivariant view evaluated on a single bar tuple:
/// a^(t_0,...,t_n) = t_0 . a(t_0^-1 t_1, ..., t_{n-1}^-1 t_n).
inline ModuleElement eval_homogeneous(const Cochain& a, const BarTuple& t) {
    if (t.degree() != a.degree()) throw Error("homogeneous arity mismatch");
    const Group& g = a.group();
    std::vector<Elem> args(static_cast<size_t>(a.degree()));
    for (int i = 1; i < t.size(); ++i) args[static_cast<size_t>(i - 1)] = g.mul(g.inv(t[i - 1]), t[i]);
    return act(t[0], a(args));
}

/// Pairing of a cochain against a chain of the same degree, by linear
/// extension of the equivariant view.
inline ModuleElement pair(const Cochain& a, const Chain& c) {
    if (&a.group() != &c.group()) throw Error("pairing group mismatch");
    if (c.degree() != a.degree()) throw Error("pairing degree mismatch");
    ModuleElement r = ModuleElement::zero(a.module());
    for (const auto& [t, coef] : c.terms()) r = r + coef * eval_homogeneous(a, t);
    return r;
}

/// Inhomogeneous coboundary:
/// (da)(s_1,...,s_{n+1}) = s_1.a(s_2,...) + sum (-1)^i a(...,s_i s_{i+1},...)
///                         + (-1)^{n+1} a(s_1,...,s_n).
inline Cochain differential(const Cochain& a) {
    const Group& g = a.group();
    const int n = a.degree();
    Cochain r(g, a.module(), n + 1);
    for (i64 code = 0; code < r.codes(); ++code) {
        const std::vector<Elem> v = r.decode(code);
        ModuleElement acc =
            act(v[0], a(std::vector<Elem>(v.begin() + 1, v.end())));
        for (int i = 1; i <= n; ++i) {
            std::vector<Elem> w;
            w.reserve(static_cast<size_t>(n));
            for (int j = 0; j < i - 1; ++j) w.push_back(v[static_cast<size_t>(j)]);
            w.push_back(g.mul(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]));
            for (int j = i + 1; j <= n; ++j) w.push_back(v[static_cast<size_t>(j)]);
            acc = (i % 2 == 0) ? acc + a(w) : acc - a(w);
        }
        std::vector<Elem> w(v.begin(), v.end() - 1);
        acc = (n % 2 == 0) ? acc - a(w) : acc + a(w);
        r.set(code, acc);
    }
    return r;
}

/// The conjugation action (sa)(s_1,...,s_n) = s.a(s^-1 s_1 s, ..., s^-1 s_n s).
inline Cochain g_action(Elem s, const Cochain& a) {
    const Group& g = a.group();
    Cochain r(g, a.module(), a.degree());
    for (i64 code = 0; code < r.codes(); ++code) {
        std::vector<Elem> v = r.decode(code);
        for (Elem& x : v) x = g.conj(s, x);
        r.set(code, act(s, a(v)));
    }
    return r;
}

/// Cross product evaluated against a tensor chain:
/// (a x b)(x(x)y) = a(x)(x)b(y), restricted to the matching bidegree.
/// The total degree of the tensor chain must equal deg a + deg b.
inline ModuleElement cross(const Cochain& a, const Cochain& b, const TensorChain& tc,
                           const GModule& mn) {
    if (&a.group() != &b.group() || &a.group() != &tc.group())
        throw Error("cross: group mismatch");
    if (tc.degree() != a.degree() + b.degree())
        throw Error("cross: tensor chain degree does not match p+q");
    ModuleElement r = ModuleElement::zero(mn);
    for (const auto& [k, coef] : tc.terms()) {
        if (k.first.degree() != a.degree() || k.second.degree() != b.degree()) continue;
        r = r + coef * tensor_embed(eval_homogeneous(a, k.first),
                                    eval_homogeneous(b, k.second), mn);
    }
    return r;
}

/// Cup product (a u b)(s_1,...,s_{p+q}) = a(s_1..s_p) (x) (s_1...s_p).b(rest).
inline Cochain cup(const Cochain& a, const Cochain& b, const GModule& mn) {
    if (&a.group() != &b.group()) throw Error("cup: group mismatch");
    const Group& g = a.group();
    const int p = a.degree(), q = b.degree();
    Cochain r(g, mn, p + q);
    for (i64 code = 0; code < r.codes(); ++code) {
        const std::vector<Elem> v = r.decode(code);
        const std::vector<Elem> va(v.begin(), v.begin() + p);
        const std::vector<Elem> vb(v.begin() + p, v.end());
        Elem pre = g.id();
        for (Elem x : va) pre = g.mul(pre, x);
        r.set(code, tensor_embed(a(va), act(pre, b(vb)), mn));
    }
    return r;
}

/// Opposite-order cup product pushed through the twist:
/// a ub b = (-1)^{pq} t_*(b u a), valued in M(x)N. `nm` is N(x)M.
inline Cochain bar_cup(const Cochain& a, const Cochain& b, const GModule& mn,
                       const GModule& nm) {
    const int p = a.degree(), q = b.degree();
    Cochain ba = cup(b, a, nm);
    Cochain r(a.group(), mn, p + q);
    const i64 sgn = detail::sign_of(p * q);
    for (i64 code = 0; code < r.codes(); ++code)
        r.set(code, sgn * twist(ba.value_at(code), mn));
    return r;
}

/// Degree-lowering homotopy for the conjugation action, C^{n+1} -> C^n.
/// Formula path (main): sum_i (-1)^i a(s_1,..,s_i, s, s^-1 s_{i+1} s, ..).
/// Formula path (alt):  -sum_i (-1)^i s.a(s^-1 s_1 s,..,s^-1 s_i s, s^-1, s_{i+1},..).
/// Pairing path: pair against the chain-level homotopy of the homogeneous lift.
inline Cochain homotopy_action(Elem s, const Cochain& a,
                               HomotopyVariant variant = HomotopyVariant::kMain,
                               EvalPath path = EvalPath::kFormula) {
    if (a.degree() < 1) throw Error("homotopy_action needs a cochain of degree >= 1");
    const Group& g = a.group();
    const int n = a.degree() - 1;
    Cochain r(g, a.module(), n);
    for (i64 code = 0; code < r.codes(); ++code) {
        const std::vector<Elem> v = r.decode(code);
        if (path == EvalPath::kPairing) {
            const Chain lift = Chain::basis(g, homogeneous_lift(g, v));
            r.set(code, pair(a, variant == HomotopyVariant::kMain ? phi_s(s, lift)
                                                                  : phi_s_alt(s, lift)));
            continue;
        }
        ModuleElement acc = ModuleElement::zero(a.module());
        if (variant == HomotopyVariant::kMain) {
            for (int i = 0; i <= n; ++i) {
                std::vector<Elem> w;
                w.reserve(static_cast<size_t>(n + 1));
                for (int j = 0; j < i; ++j) w.push_back(v[static_cast<size_t>(j)]);
                w.push_back(s);
                for (int j = i; j < n; ++j) w.push_back(g.conj(s, v[static_cast<size_t>(j)]));
                acc = (i % 2 == 0) ? acc + a(w) : acc - a(w);
            }
        } else {
            for (int i = 0; i <= n; ++i) {
                std::vector<Elem> w;
                w.reserve(static_cast<size_t>(n + 1));
                for (int j = 0; j < i; ++j) w.push_back(g.conj(s, v[static_cast<size_t>(j)]));
                w.push_back(g.inv(s));
                for (int j = i; j < n; ++j) w.push_back(v[static_cast<size_t>(j)]);
                const ModuleElement term = act(s, a(w));
                acc = (i % 2 == 0) ? acc - term : acc + term;
            }
        }
        r.set(code, acc);
    }
    return r;
}

/// Degree-lowering homotopy for cup commutativity on a pair of cochains,
/// valued in M(x)N; zero when p or q is 0. Formula and pairing paths as for
/// homotopy_action; the inner sign follows the convention.
inline Cochain homotopy_cup(const Cochain& a, const Cochain& b, const GModule& mn,
                            HomotopyVariant variant = HomotopyVariant::kMain,
                            SignConvention conv = SignConvention::kQPlusOneI,
                            EvalPath path = EvalPath::kFormula) {
    if (&a.group() != &b.group()) throw Error("homotopy_cup: group mismatch");
    const Group& g = a.group();
    const int p = a.degree(), q = b.degree();
    const int n = p + q - 1;
    if (p == 0 || q == 0) return Cochain(g, mn, n < 0 ? 0 : n);
    Cochain r(g, mn, n);
    for (i64 code = 0; code < r.codes(); ++code) {
        const std::vector<Elem> v = r.decode(code);
        if (path == EvalPath::kPairing) {
            const Chain lift = Chain::basis(g, homogeneous_lift(g, v));
            r.set(code, cross(a, b,
                              variant == HomotopyVariant::kMain ? lambda_map(lift, conv)
                                                                : lambda_alt(lift, conv),
                              mn));
            continue;
        }
        ModuleElement acc = ModuleElement::zero(mn);
        if (variant == HomotopyVariant::kMain) {
            for (int i = 0; i < p; ++i) {
                std::vector<Elem> wa;
                wa.reserve(static_cast<size_t>(p));
                for (int j = 1; j <= i; ++j) wa.push_back(v[static_cast<size_t>(j - 1)]);
                Elem block = g.id();
                for (int j = i + 1; j <= i + q; ++j) block = g.mul(block, v[static_cast<size_t>(j - 1)]);
                wa.push_back(block);
                for (int j = i + q + 1; j <= n; ++j) wa.push_back(v[static_cast<size_t>(j - 1)]);
                std::vector<Elem> wb;
                wb.reserve(static_cast<size_t>(q));
                for (int j = i + 1; j <= i + q; ++j) wb.push_back(v[static_cast<size_t>(j - 1)]);
                Elem pre = g.id();
                for (int j = 1; j <= i; ++j) pre = g.mul(pre, v[static_cast<size_t>(j - 1)]);
                const i64 sgn =
                    detail::sign_of(p * q + q + detail::inner_exponent(conv, q, i));
                acc = acc + sgn * tensor_embed(a(wa), act(pre, b(wb)), mn);
            }
        } else {
            for (int i = 0; i < q; ++i) {
                std::vector<Elem> wa;
                wa.reserve(static_cast<size_t>(p));
                for (int j = i + 1; j <= i + p; ++j) wa.push_back(v[static_cast<size_t>(j - 1)]);
                std::vector<Elem> wb;
                wb.reserve(static_cast<size_t>(q));
                for (int j = 1; j <= i; ++j) wb.push_back(v[static_cast<size_t>(j - 1)]);
                Elem block = g.id();
                for (int j = i + 1; j <= i + p; ++j) block = g.mul(block, v[static_cast<size_t>(j - 1)]);
                wb.push_back(block);
                for (int j = i + p + 1; j <= n; ++j) wb.push_back(v[static_cast<size_t>(j - 1)]);
                Elem pre = g.id();
                for (int j = 1; j <= i; ++j) pre = g.mul(pre, v[static_cast<size_t>(j - 1)]);
                const i64 sgn = checked::neg(
                    detail::sign_of(p + detail::inner_exponent(conv, p, i)));
                acc = acc + sgn * tensor_embed(act(pre, a(wa)), b(wb), mn);
            }
        }
        r.set(code, acc);
    }
    return r;
}

} // namespace barhom
