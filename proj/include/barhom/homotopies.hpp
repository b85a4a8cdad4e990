#pragma once

#include <mutex>

#include "barhom/chains.hpp"

namespace barhom {

/// The two printed alternatives for the inner sign of the diagonal homotopy:
/// exponent (q+1)*i versus q*(i+1) on the summation index i. They differ by
/// (-1)^{q+i} and only one satisfies the homotopy identity; the identity
/// sweep pins kQPlusOneI as the default.
enum class SignConvention {
    kQPlusOneI, // inner exponent (q+1)*i
    kQIPlusOne, // inner exponent q*(i+1)
};

inline const char* to_string(SignConvention c) {
    return c == SignConvention::kQPlusOneI ? "(q+1)i" : "q(i+1)";
}

namespace detail {
inline i64 sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

inline int inner_exponent(SignConvention conv, int block, int i) {
    return conv == SignConvention::kQPlusOneI ? (block + 1) * i : block * (i + 1);
}
} // namespace detail

/// Homotopy between right translation by s and the identity:
/// (s_0,...,s_n) -> sum_i (-1)^i (s_0,...,s_i, s_i s,...,s_n s).
inline Chain phi_s(Elem s, const Chain& c) {
    if (c.degree() < 0) throw Error("phi_s needs degree >= 0");
    const Group& g = c.group();
    Chain r(g, c.degree() + 1);
    for (const auto& [t, coef] : c.terms()) {
        for (int i = 0; i < t.size(); ++i) {
            BarTuple u;
            for (int j = 0; j <= i; ++j) u.push_back(t[j]);
            for (int j = i; j < t.size(); ++j) u.push_back(g.mul(t[j], s));
            r.add_term(u, detail::sign_of(i) * coef);
        }
    }
    return r;
}

/// Alternate form -tau_s phi_{s^-1}:
/// (s_0,...,s_n) -> -sum_i (-1)^i (s_0 s,...,s_i s, s_i,...,s_n).
inline Chain phi_s_alt(Elem s, const Chain& c) {
    if (c.degree() < 0) throw Error("phi_s_alt needs degree >= 0");
    const Group& g = c.group();
    Chain r(g, c.degree() + 1);
    for (const auto& [t, coef] : c.terms()) {
        for (int i = 0; i < t.size(); ++i) {
            BarTuple u;
            for (int j = 0; j <= i; ++j) u.push_back(g.mul(t[j], s));
            for (int j = i; j < t.size(); ++j) u.push_back(t[j]);
            r.add_term(u, checked::neg(detail::sign_of(i) * coef));
        }
    }
    return r;
}

/// Homotopy between the Koszul swap and the identity on the tensor square:
/// (s_0,...,s_p)(x)y ->
///   sum_i (-1)^{pq+(q+1)i} (s_0,...,s_i,y)(x)(s_i,...,s_p)
/// + sum_i (-1)^{p+1}       (s_0,...,s_i)(x)(s_i,...,s_p,y),
/// where (s_0,...,s_i,y) extends the tuple by all entries of y.
inline TensorChain phi_pair(const TensorChain& c) {
    if (c.degree() < 0) throw Error("phi_pair needs degree >= 0");
    TensorChain r(c.group(), c.degree() + 1);
    for (const auto& [k, coef] : c.terms()) {
        const BarTuple& x = k.first;
        const BarTuple& y = k.second;
        const int p = x.degree();
        const int q = y.degree();
        for (int i = 0; i <= p; ++i) {
            BarTuple left;
            for (int j = 0; j <= i; ++j) left.push_back(x[j]);
            for (int j = 0; j < y.size(); ++j) left.push_back(y[j]);
            r.add_term(left, x.slice(i, p), detail::sign_of(p * q + (q + 1) * i) * coef);
        }
        for (int i = 0; i <= p; ++i) {
            BarTuple right;
            for (int j = i; j <= p; ++j) right.push_back(x[j]);
            for (int j = 0; j < y.size(); ++j) right.push_back(y[j]);
            r.add_term(x.slice(0, i), right, detail::sign_of(p + 1) * coef);
        }
    }
    return r;
}

/// Diagonal homotopy: the component of bidegree (p,q), p,q >= 1, of degree n
/// input is sum_{i<p} (-1)^{pq+q} inner(q,i)
/// (s_0,...,s_i,s_{i+q},...,s_n)(x)(s_i,...,s_{i+q}); components with p or q
/// zero vanish.
inline TensorChain lambda_map(const Chain& c, SignConvention conv = SignConvention::kQPlusOneI) {
    if (c.degree() < 0) throw Error("lambda needs degree >= 0");
    const int n = c.degree();
    TensorChain r(c.group(), n + 1);
    for (const auto& [t, coef] : c.terms()) {
        for (int p = 1; p <= n; ++p) {
            const int q = n + 1 - p;
            for (int i = 0; i < p; ++i) {
                BarTuple left;
                for (int j = 0; j <= i; ++j) left.push_back(t[j]);
                for (int j = i + q; j <= n; ++j) left.push_back(t[j]);
                const i64 s =
                    detail::sign_of(p * q + q + detail::inner_exponent(conv, q, i));
                r.add_term(left, t.slice(i, i + q), s * coef);
            }
        }
    }
    return r;
}

/// Alternate diagonal homotopy -tau lambda (factor roles exchanged):
/// bidegree (p,q) component is -(-1)^p sum_{i<q} inner(p,i)
/// (s_i,...,s_{i+p})(x)(s_0,...,s_i,s_{i+p},...,s_n).
inline TensorChain lambda_alt(const Chain& c, SignConvention conv = SignConvention::kQPlusOneI) {
    if (c.degree() < 0) throw Error("lambda_alt needs degree >= 0");
    const int n = c.degree();
    TensorChain r(c.group(), n + 1);
    for (const auto& [t, coef] : c.terms()) {
        for (int p = 1; p <= n; ++p) {
            const int q = n + 1 - p;
            for (int i = 0; i < q; ++i) {
                BarTuple right;
                for (int j = 0; j <= i; ++j) right.push_back(t[j]);
                for (int j = i + p; j <= n; ++j) right.push_back(t[j]);
                const i64 s =
                    checked::neg(detail::sign_of(p + detail::inner_exponent(conv, p, i)));
                r.add_term(t.slice(i, i + p), right, s * coef);
            }
        }
    }
    return r;
}

/// Inductive construction of the translation homotopy by the standard lifting
/// procedure: on degree 0, psi_{s_0}(tau_s - 1); on degree n,
/// psi_{s_0}(tau_s - 1 - (previous degree composed with the boundary)).
/// Memoized per basis tuple; results are order-independent since every
/// evaluation is pure.
class TranslationHomotopyOracle {
public:
    TranslationHomotopyOracle(const Group& g, Elem s, bool normalized)
        : group_(&g), s_(s), normalized_(normalized) {}

    Chain eval(const BarTuple& t) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(t);
            if (it != memo_.end()) return it->second;
        }
        Chain result = compute(t);
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.emplace(t, std::move(result)).first->second;
    }

    /// Same value as eval(), but the top-level result is not retained in the
    /// memo table (lower degrees still are).
    Chain compute(const BarTuple& t) {
        if (t.degree() < 0) throw Error("oracle needs degree >= 0");
        Chain x = project(Chain::basis(*group_, t));
        Chain rhs = project(translate(s_, x)) - x;
        if (t.degree() >= 1) rhs -= eval_chain(project(boundary(x)));
        return project(psi(t[0], rhs));
    }

    Chain eval_chain(const Chain& c) {
        Chain r(*group_, c.degree() + 1);
        for (const auto& [t, coef] : c.terms()) r += eval(t) * coef;
        return r;
    }

private:
    Chain project(const Chain& c) const { return normalized_ ? normalize(c) : c; }

    const Group* group_;
    Elem s_;
    bool normalized_;
    std::mutex mu_;
    std::map<BarTuple, Chain> memo_;
};

/// Inductive construction of the swap homotopy on the tensor square, using
/// the pair contracting homotopy with both prefixes equal to the first entry
/// of the left factor.
class SwapHomotopyOracle {
public:
    SwapHomotopyOracle(const Group& g, bool normalized) : group_(&g), normalized_(normalized) {}

    TensorChain eval(const BarTuple& x, const BarTuple& y) {
        const std::pair<BarTuple, BarTuple> key{x, y};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        TensorChain result = compute(x, y);
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.emplace(key, std::move(result)).first->second;
    }

    /// eval() without retaining the top-level result; raw chains can run to
    /// thousands of terms at degree 3 and are only needed transiently.
    TensorChain compute(const BarTuple& x, const BarTuple& y) {
        if (x.len == 0 || y.len == 0) throw Error("oracle needs degree >= 0");
        TensorChain z = project(TensorChain::basis(*group_, x, y));
        TensorChain rhs = project(swap_tensor(z)) - z;
        if (z.degree() >= 1) rhs -= eval_chain(project(tensor_boundary(z)));
        return project(psi_pair(x[0], x[0], rhs));
    }

    TensorChain eval_chain(const TensorChain& c) {
        TensorChain r(*group_, c.degree() + 1);
        for (const auto& [k, coef] : c.terms()) r += eval(k.first, k.second) * coef;
        return r;
    }

private:
    TensorChain project(const TensorChain& c) const {
        return normalized_ ? normalize_tensor(c) : c;
    }

    const Group* group_;
    bool normalized_;
    std::mutex mu_;
    std::map<std::pair<BarTuple, BarTuple>, TensorChain> memo_;
};

/// One-shot oracle evaluations.
inline Chain oracle_phi_s(const Group& g, Elem s, const BarTuple& x, bool use_normalized) {
    TranslationHomotopyOracle o(g, s, use_normalized);
    return o.eval(x);
}

inline TensorChain oracle_phi_pair(const Group& g, const BarTuple& x, const BarTuple& y,
                                   bool use_normalized) {
    SwapHomotopyOracle o(g, use_normalized);
    return o.eval(x, y);
}

} // namespace barhom
