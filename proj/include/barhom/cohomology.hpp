#pragma once

#include <string>

#include "barhom/cochains.hpp"
#include "barhom/intmatrix.hpp"

namespace barhom {

/// Default bound on |G|^(n+1) * rank, the number of target basis vectors a
/// sweep or matrix build may touch.
inline constexpr i64 kDefaultSizeGuard = 20000;

inline void check_size_guard(const Group& g, const GModule& m, int degree,
                             i64 limit = kDefaultSizeGuard) {
    i64 cells = m.rank();
    for (int i = 0; i <= degree; ++i) {
        cells = checked::mul(cells, g.order());
        if (cells > limit)
            throw SizeGuardError("basis count |G|^" + std::to_string(degree + 1) + "*" +
                                 std::to_string(m.rank()) + " exceeds limit " +
                                 std::to_string(limit));
    }
}

/// Isomorphism type of a finitely generated abelian group: free rank plus
/// invariant factors d_1 | d_2 | ... (each > 1).
struct AbelianInvariants {
    i64 free_rank = 0;
    std::vector<i64> torsion;

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    std::string str() const {
        if (is_trivial()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (i64 d : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + std::to_string(d);
        }
        return s;
    }
};

/// Integer matrix of the coboundary d : C^n -> C^{n+1} over the basis
/// indicator(tuple) * generator. Rows index the degree n+1 basis, columns the
/// degree n basis; modulus relations are handled separately by the caller.
inline IntMatrix differential_matrix(const Group& g, const GModule& m, int n,
                                     i64 guard = kDefaultSizeGuard) {
    if (n < 0) throw Error("differential_matrix needs n >= 0");
    check_size_guard(g, m, n, guard);
    const int k = m.rank();
    i64 ncodes = 1, rcodes = 1;
    for (int i = 0; i < n; ++i) ncodes *= g.order();
    rcodes = ncodes * g.order();
    if (checked::mul(checked::mul(rcodes, ncodes), static_cast<i64>(k) * k) > 30'000'000)
        throw SizeGuardError("differential matrix too large");
    IntMatrix A(static_cast<int>(rcodes) * k, static_cast<int>(ncodes) * k);

    std::vector<Elem> v(static_cast<size_t>(n + 1));
    for (i64 code = 0; code < rcodes; ++code) {
        i64 c = code;
        for (int i = n; i >= 0; --i) {
            v[static_cast<size_t>(i)] = static_cast<Elem>(c % g.order());
            c /= g.order();
        }
        auto encode = [&](auto begin, auto end) {
            i64 w = 0;
            for (auto it = begin; it != end; ++it) w = w * g.order() + *it;
            return w;
        };
        const int row0 = static_cast<int>(code) * k;
        // s_1 . a(s_2,...,s_{n+1}) : Kronecker block of the action matrix
        {
            const i64 w = encode(v.begin() + 1, v.end());
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    A.at(row0 + i, static_cast<int>(w) * k + j) = checked::add(
                        A.at(row0 + i, static_cast<int>(w) * k + j), m.action(v[0], i, j));
        }
        // (-1)^i a(s_1,...,s_i s_{i+1},...,s_{n+1})
        for (int i = 1; i <= n; ++i) {
            std::vector<Elem> w;
            w.reserve(static_cast<size_t>(n));
            for (int j = 0; j < i - 1; ++j) w.push_back(v[static_cast<size_t>(j)]);
            w.push_back(g.mul(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]));
            for (int j = i + 1; j <= n; ++j) w.push_back(v[static_cast<size_t>(j)]);
            const i64 wc = encode(w.begin(), w.end());
            const i64 sgn = (i % 2 == 0) ? 1 : -1;
            for (int j = 0; j < k; ++j)
                A.at(row0 + j, static_cast<int>(wc) * k + j) =
                    checked::add(A.at(row0 + j, static_cast<int>(wc) * k + j), sgn);
        }
        // (-1)^{n+1} a(s_1,...,s_n)
        {
            const i64 w = encode(v.begin(), v.end() - 1);
            const i64 sgn = (n % 2 == 0) ? -1 : 1;
            for (int j = 0; j < k; ++j)
                A.at(row0 + j, static_cast<int>(w) * k + j) =
                    checked::add(A.at(row0 + j, static_cast<int>(w) * k + j), sgn);
        }
    }
    return A;
}

namespace detail {

/// Columns m_j * e_(tuple,j) spanning the relation subgroup of the degree-n
/// cochain lattice.
inline IntMatrix relation_columns(const Group& g, const GModule& m, int n) {
    i64 ncodes = 1;
    for (int i = 0; i < n; ++i) ncodes *= g.order();
    const int k = m.rank();
    int nrel = 0;
    for (i64 mod : m.moduli())
        if (mod > 0) ++nrel;
    IntMatrix R(static_cast<int>(ncodes) * k, static_cast<int>(ncodes) * nrel);
    int col = 0;
    for (i64 code = 0; code < ncodes; ++code)
        for (int j = 0; j < k; ++j)
            if (m.moduli()[static_cast<size_t>(j)] > 0)
                R.at(static_cast<int>(code) * k + j, col++) = m.moduli()[static_cast<size_t>(j)];
    return R;
}

/// Invariants of the quotient col(K)/col(J) of integer lattices, given
/// generating matrices with col(J) contained in col(K).
inline AbelianInvariants lattice_quotient(const IntMatrix& K, const IntMatrix& J) {
    SmithResult snf = smith_normal_form(K, true, false);
    const int r = snf.rank();
    IntMatrix jt = *snf.u * J; // J in the transformed coordinates
    for (int i = r; i < jt.rows(); ++i)
        for (int j = 0; j < jt.cols(); ++j)
            if (jt.at(i, j) != 0) throw Error("image does not lie in the kernel lattice");
    IntMatrix X(r, jt.cols());
    for (int i = 0; i < r; ++i) {
        const i64 d = snf.diagonal[static_cast<size_t>(i)];
        for (int j = 0; j < jt.cols(); ++j) {
            if (jt.at(i, j) % d != 0) throw Error("image not divisible in kernel basis");
            X.at(i, j) = jt.at(i, j) / d;
        }
    }
    SmithResult xnf = smith_normal_form(std::move(X), false, false);
    AbelianInvariants inv;
    inv.free_rank = r - xnf.rank();
    for (i64 d : xnf.diagonal)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

} // namespace detail

/// H^n(G, M) = ker(d_n)/im(d_{n-1}) over the relation-augmented lattices,
/// computed by Smith normal form.
inline AbelianInvariants cohomology_group(const Group& g, const GModule& m, int n,
                                          i64 guard = kDefaultSizeGuard) {
    if (n < 0) throw Error("cohomology degree must be >= 0");
    const IntMatrix A = differential_matrix(g, m, n, guard);
    const IntMatrix B = A.hcat(detail::relation_columns(g, m, n + 1));
    const IntMatrix K = kernel_basis(B).top_rows(A.cols());
    IntMatrix J = detail::relation_columns(g, m, n);
    if (n >= 1) J = differential_matrix(g, m, n - 1, guard).hcat(J);
    return detail::lattice_quotient(K, J);
}

/// Independent cross-check for cyclic groups and rank-1 modules: cohomology
/// of the 2-periodic complex M --(t-1)--> M --(norm)--> M --(t-1)--> ...
/// where t is the action of the generator and norm = 1 + t + ... + t^{m-1}.
/// Kernels and images of multiplication maps on Z or Z/m0 are resolved by
/// elementary divisibility arithmetic, with no Smith normal form involved.
inline AbelianInvariants periodic_cyclic_cohomology(const Group& g, const GModule& m, int n) {
    if (m.rank() != 1) throw Error("periodic cross-check needs a rank-1 module");
    // the group must be cyclic with element 1 generating it
    if (g.order() > 1) {
        Elem x = 1;
        int ord = 1;
        while (x != g.id()) {
            x = g.mul(x, 1);
            if (++ord > g.order()) throw Error("periodic cross-check needs a cyclic group");
        }
        if (ord != g.order()) throw Error("periodic cross-check needs element 1 as generator");
    }
    const i64 m0 = m.moduli()[0];
    const i64 t = g.order() > 1 ? m.action(1, 0, 0) : m.action(g.id(), 0, 0);
    i64 norm = 0, tp = 1;
    for (int i = 0; i < g.order(); ++i) {
        norm = checked::add(norm, tp);
        tp = checked::mul(tp, t);
    }
    const i64 tminus1 = checked::sub(t, 1);
    const i64 a = (n % 2 == 0) ? tminus1 : norm; // multiplier of d^n
    const i64 b = (n == 0) ? 0 : ((n % 2 == 1) ? tminus1 : norm);

    AbelianInvariants inv;
    if (m0 == 0) {
        if (a != 0) return inv; // kernel is 0
        if (b == 0) {
            inv.free_rank = 1;
            return inv;
        }
        const i64 order = b < 0 ? -b : b;
        if (order > 1) inv.torsion.push_back(order);
        return inv;
    }
    const i64 gk = checked::gcd(a, m0);         // |ker(a : Z/m0)|
    const i64 gi = m0 / checked::gcd(b, m0);    // |im(b : Z/m0)|
    if (gk % gi != 0) throw Error("periodic complex is not a complex");
    const i64 order = gk / gi;
    if (order > 1) inv.torsion.push_back(order);
    return inv;
}

} // namespace barhom
