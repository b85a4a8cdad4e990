#pragma once

#include <functional>
#include <thread>

#include "barhom/cochains.hpp"
#include "barhom/cohomology.hpp"

namespace barhom {

/// One failed check, with enough context to reproduce it by hand.
struct Witness {
    std::string context; // quantifiers: s, (u,t), (p,q), path, ...
    std::string basis;   // basis chain/cochain descriptor
    std::string input;   // input tuple, if the check is pointwise
    std::string lhs;
    std::string rhs;
};

/// Outcome of one identity family swept over a basis range.
struct VerificationReport {
    std::string identity;
    std::string group;
    std::vector<std::string> modules;
    std::string params;
    int max_degree = 0;
    i64 attempted = 0;
    i64 passed = 0;
    std::vector<Witness> failures;

    VerificationReport() = default;
    VerificationReport(std::string identity_, std::string group_,
                       std::vector<std::string> modules_, std::string params_, int max_degree_)
        : identity(std::move(identity_)), group(std::move(group_)),
          modules(std::move(modules_)), params(std::move(params_)), max_degree(max_degree_) {}

    bool pass() const { return attempted == passed && failures.empty(); }

    void tally(bool ok, Witness w) {
        ++attempted;
        if (ok) ++passed;
        else failures.push_back(std::move(w));
    }
};

namespace detail {

/// Deterministic fan-out: contiguous stripes of the unit range are handled by
/// worker threads writing into private reports, merged in stripe order. The
/// merged report is identical at any width.
template <typename UnitFn>
inline void run_units(i64 n_units, int threads, VerificationReport& rep, UnitFn unit) {
    if (threads <= 1 || n_units <= 1) {
        for (i64 u = 0; u < n_units; ++u) unit(u, rep);
        return;
    }
    const int w = static_cast<int>(std::min<i64>(threads, n_units));
    std::vector<VerificationReport> locals(static_cast<size_t>(w));
    std::vector<std::thread> pool;
    const i64 stride = (n_units + w - 1) / w;
    for (int t = 0; t < w; ++t) {
        pool.emplace_back([&, t]() {
            const i64 lo = t * stride;
            const i64 hi = std::min<i64>(n_units, lo + stride);
            for (i64 u = lo; u < hi; ++u) unit(u, locals[static_cast<size_t>(t)]);
        });
    }
    for (auto& th : pool) th.join();
    for (auto& loc : locals) {
        rep.attempted += loc.attempted;
        rep.passed += loc.passed;
        for (auto& f : loc.failures) rep.failures.push_back(std::move(f));
    }
}

inline BarTuple tuple_from_code(const Group& g, int len, i64 code) {
    std::vector<Elem> v(static_cast<size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        v[static_cast<size_t>(i)] = static_cast<Elem>(code % g.order());
        code /= g.order();
    }
    return BarTuple::from(v);
}

inline i64 pow_i64(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r = checked::mul(r, b);
    return r;
}

/// All tensor basis pairs of the given total degree, in (p, left, right) order.
inline void for_each_tensor_basis(const Group& g, int degree,
                                  const std::function<void(const BarTuple&, const BarTuple&)>& fn) {
    if (degree == -1) {
        fn(BarTuple{}, BarTuple{});
        return;
    }
    for (int p = 0; p <= degree; ++p) {
        const int q = degree - p;
        const i64 lc = pow_i64(g.order(), p + 1);
        const i64 rc = pow_i64(g.order(), q + 1);
        for (i64 i = 0; i < lc; ++i) {
            const BarTuple left = tuple_from_code(g, p + 1, i);
            for (i64 j = 0; j < rc; ++j) fn(left, tuple_from_code(g, q + 1, j));
        }
    }
}

inline std::string coords_str(const ModuleElement& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m.coords[i]);
    }
    return s + "]";
}

inline std::string tuple_str(const Group& g, const std::vector<Elem>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += g.name(v[static_cast<size_t>(i)]);
    }
    return s + ")";
}

} // namespace detail

// ---------------------------------------------------------------------------
// chain-level suite

/// Closed forms versus the inductive lifting oracle, on the normalized and
/// the unnormalized resolution.
inline std::vector<VerificationReport> verify_oracles(const Group& g, int max_degree,
                                                      int threads = 1) {
    std::vector<VerificationReport> out;
    {
        VerificationReport rep{"oracle.translation", g.label(), {}, "", max_degree};
        detail::run_units(g.order(), threads, rep, [&](i64 si, VerificationReport& r) {
            const Elem s = static_cast<Elem>(si);
            TranslationHomotopyOracle norm(g, s, true);
            TranslationHomotopyOracle raw(g, s, false);
            for (int d = 0; d <= max_degree; ++d) {
                const i64 codes = detail::pow_i64(g.order(), d + 1);
                for (i64 c = 0; c < codes; ++c) {
                    const BarTuple t = detail::tuple_from_code(g, d + 1, c);
                    const Chain closed = phi_s(s, Chain::basis(g, t));
                    const Chain a = norm.compute(t);
                    const Chain b = normalize(closed);
                    r.tally(a == b, Witness{"s=" + g.name(s) + " normalized", t.str(g), "",
                                            a.json_str(), b.json_str()});
                    const Chain diff = normalize(raw.compute(t) - closed);
                    r.tally(diff.is_zero(), Witness{"s=" + g.name(s) + " raw-minus-closed",
                                                    t.str(g), "", diff.json_str(), "[]"});
                }
            }
        });
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"oracle.swap", g.label(), {}, "", max_degree};
        SwapHomotopyOracle norm(g, true);
        SwapHomotopyOracle raw(g, false);
        for (int d = 0; d <= max_degree; ++d) {
            detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                const TensorChain closed = phi_pair(TensorChain::basis(g, x, y));
                const TensorChain a = norm.compute(x, y);
                const TensorChain b = normalize_tensor(closed);
                rep.tally(a == b, Witness{"normalized", x.str(g) + "(x)" + y.str(g), "", a.json_str(),
                                          b.json_str()});
                const TensorChain diff = normalize_tensor(raw.compute(x, y) - closed);
                rep.tally(diff.is_zero(), Witness{"raw-minus-closed",
                                                  x.str(g) + "(x)" + y.str(g), "", diff.json_str(),
                                                  "[]"});
            });
        }
        out.push_back(std::move(rep));
    }
    return out;
}

/// The diagonal homotopy identity tau.Delta - Delta = d.lambda + lambda.d
/// under one sign convention, plus the removed-degenerate relation
/// normalize(phi.Delta - lambda) = 0.
inline VerificationReport verify_diagonal_identity(const Group& g, int max_degree,
                                                   SignConvention conv, bool alternate,
                                                   int threads = 1) {
    VerificationReport rep{alternate ? "homotopy.diagonal.alt" : "homotopy.diagonal", g.label(),
                           {}, std::string("convention=") + to_string(conv), max_degree};
    auto lam = [&](const Chain& c) { return alternate ? lambda_alt(c, conv) : lambda_map(c, conv); };
    detail::run_units(max_degree + 1, threads, rep, [&](i64 di, VerificationReport& r) {
        const int d = static_cast<int>(di);
        const i64 codes = detail::pow_i64(g.order(), d + 1);
        for (i64 c = 0; c < codes; ++c) {
            const BarTuple t = detail::tuple_from_code(g, d + 1, c);
            const Chain x = Chain::basis(g, t);
            const TensorChain dx = alexander_whitney(x);
            const TensorChain lhs = swap_tensor(dx) - dx;
            TensorChain rhs = tensor_boundary(lam(x));
            if (d >= 1) rhs += lam(boundary(x));
            r.tally(lhs == rhs, Witness{std::string("degree=") + std::to_string(d), t.str(g), "",
                                        lhs.json_str(), rhs.json_str()});
            if (!alternate) {
                const TensorChain rem = normalize_tensor(phi_pair(dx) - lambda_map(x, conv));
                r.tally(rem.is_zero(), Witness{"phi.Delta-minus-lambda", t.str(g), "", rem.json_str(),
                                               "[]"});
            }
        }
    });
    return rep;
}

/// The full chain-level identity suite for one group: boundary laws, chain
/// maps, contracting homotopies, normalized nilpotence, equivariance, the
/// product-homotopy composition rule, the translation/swap/diagonal
/// homotopies (main and alternate forms), and the oracle comparisons.
/// Boundary-squared checks run one degree higher than the rest.
inline std::vector<VerificationReport> verify_resolution(const Group& g, int max_degree,
                                                         SignConvention conv =
                                                             SignConvention::kQPlusOneI,
                                                         int threads = 1) {
    std::vector<VerificationReport> out;
    const int n = g.order();

    {
        VerificationReport rep{"boundary.squared", g.label(), {}, "", max_degree + 1};
        for (int d = 2; d <= max_degree + 1; ++d) {
            const i64 codes = detail::pow_i64(n, d + 1);
            for (i64 c = 0; c < codes; ++c) {
                const BarTuple t = detail::tuple_from_code(g, d + 1, c);
                const Chain dd = boundary(boundary(Chain::basis(g, t)));
                rep.tally(dd.is_zero(), Witness{"chain", t.str(g), "", dd.json_str(), "[]"});
            }
            detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                const TensorChain dd = tensor_boundary(tensor_boundary(TensorChain::basis(g, x, y)));
                rep.tally(dd.is_zero(),
                          Witness{"tensor", x.str(g) + "(x)" + y.str(g), "", dd.json_str(), "[]"});
            });
        }
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"augmentation.boundary", g.label(), {}, "", max_degree};
        const i64 codes = detail::pow_i64(n, 2);
        for (i64 c = 0; c < codes; ++c) {
            const BarTuple t = detail::tuple_from_code(g, 2, c);
            const Chain e = augmentation(boundary(Chain::basis(g, t)));
            rep.tally(e.is_zero(), Witness{"", t.str(g), "", e.json_str(), "[]"});
        }
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"chainmap.translate", g.label(), {}, "", max_degree};
        for (Elem s = 0; s < n; ++s) {
            for (int d = 0; d <= max_degree; ++d) {
                const i64 codes = detail::pow_i64(n, d + 1);
                for (i64 c = 0; c < codes; ++c) {
                    const BarTuple t = detail::tuple_from_code(g, d + 1, c);
                    const Chain x = Chain::basis(g, t);
                    const Chain lhs = d >= 1 ? boundary(translate(s, x)) : augmentation(translate(s, x));
                    const Chain rhs = d >= 1 ? translate(s, boundary(x)) : augmentation(x);
                    rep.tally(lhs == rhs, Witness{"s=" + g.name(s), t.str(g), "", lhs.json_str(),
                                                  rhs.json_str()});
                }
            }
        }
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"chainmap.swap", g.label(), {}, "", max_degree};
        for (int d = 0; d <= max_degree; ++d) {
            detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                const TensorChain z = TensorChain::basis(g, x, y);
                const TensorChain lhs =
                    d >= 1 ? tensor_boundary(swap_tensor(z)) : tensor_augmentation(swap_tensor(z));
                const TensorChain rhs =
                    d >= 1 ? swap_tensor(tensor_boundary(z)) : tensor_augmentation(z);
                rep.tally(lhs == rhs, Witness{"", x.str(g) + "(x)" + y.str(g), "", lhs.json_str(),
                                              rhs.json_str()});
            });
        }
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"chainmap.diagonal", g.label(), {}, "", max_degree};
        for (int d = 0; d <= max_degree; ++d) {
            const i64 codes = detail::pow_i64(n, d + 1);
            for (i64 c = 0; c < codes; ++c) {
                const BarTuple t = detail::tuple_from_code(g, d + 1, c);
                const Chain x = Chain::basis(g, t);
                if (d >= 1) {
                    const TensorChain lhs = tensor_boundary(alexander_whitney(x));
                    const TensorChain rhs = alexander_whitney(boundary(x));
                    rep.tally(lhs == rhs, Witness{"", t.str(g), "", lhs.json_str(), rhs.json_str()});
                } else {
                    const TensorChain lhs = tensor_augmentation(alexander_whitney(x));
                    const Chain rhs = augmentation(x);
                    const i64 lcoef =
                        lhs.terms().empty() ? 0 : lhs.terms().begin()->second;
                    const i64 rcoef =
                        rhs.terms().empty() ? 0 : rhs.terms().begin()->second;
                    rep.tally(lcoef == rcoef, Witness{"augmentation", t.str(g), "", lhs.json_str(),
                                                      rhs.json_str()});
                }
            }
        }
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"contracting.psi", g.label(), {}, "", max_degree};
        for (Elem t = 0; t < n; ++t) {
            const Chain unit = Chain::unit(g);
            const Chain back = augmentation(psi(t, unit));
            rep.tally(back == unit, Witness{"t=" + g.name(t) + " degree=-1", "1", "", back.json_str(),
                                            unit.json_str()});
            for (int d = 0; d <= max_degree; ++d) {
                const i64 codes = detail::pow_i64(n, d + 1);
                for (i64 c = 0; c < codes; ++c) {
                    const BarTuple tt = detail::tuple_from_code(g, d + 1, c);
                    const Chain x = Chain::basis(g, tt);
                    const Chain lhs =
                        boundary(psi(t, x)) + psi(t, d >= 1 ? boundary(x) : augmentation(x));
                    rep.tally(lhs == x, Witness{"t=" + g.name(t), tt.str(g), "", lhs.json_str(),
                                                x.json_str()});
                }
            }
        }
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"contracting.psi_pair", g.label(), {}, "", max_degree};
        detail::run_units(static_cast<i64>(n) * n, threads, rep, [&](i64 st, VerificationReport& r) {
            const Elem s = static_cast<Elem>(st / n);
            const Elem t = static_cast<Elem>(st % n);
            const TensorChain unit = TensorChain::unit(g);
            const TensorChain back = tensor_augmentation(psi_pair(s, t, unit));
            r.tally(back == unit, Witness{"s=" + g.name(s) + ",t=" + g.name(t) + " degree=-1",
                                          "1", "", back.json_str(), unit.json_str()});
            for (int d = 0; d <= max_degree; ++d) {
                detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                    const TensorChain z = TensorChain::basis(g, x, y);
                    const TensorChain lhs =
                        tensor_boundary(psi_pair(s, t, z)) +
                        psi_pair(s, t, d >= 1 ? tensor_boundary(z) : tensor_augmentation(z));
                    r.tally(lhs == z, Witness{"s=" + g.name(s) + ",t=" + g.name(t),
                                              x.str(g) + "(x)" + y.str(g), "", lhs.json_str(), z.json_str()});
                });
            }
        });
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"normalized.psi_squared", g.label(), {}, "", max_degree};
        for (Elem t = 0; t < n; ++t) {
            const Chain z2 = normalize(psi(t, psi(t, Chain::unit(g))));
            rep.tally(z2.is_zero(), Witness{"t=" + g.name(t) + " degree=-1", "1", "", z2.json_str(), "[]"});
            for (int d = 0; d <= max_degree; ++d) {
                const i64 codes = detail::pow_i64(n, d + 1);
                for (i64 c = 0; c < codes; ++c) {
                    const BarTuple tt = detail::tuple_from_code(g, d + 1, c);
                    const Chain r2 = normalize(psi(t, psi(t, Chain::basis(g, tt))));
                    rep.tally(r2.is_zero(),
                              Witness{"t=" + g.name(t), tt.str(g), "", r2.json_str(), "[]"});
                }
            }
        }
        detail::run_units(static_cast<i64>(n) * n, threads, rep, [&](i64 st, VerificationReport& r) {
            const Elem s = static_cast<Elem>(st / n);
            const Elem t = static_cast<Elem>(st % n);
            for (int d = -1; d <= max_degree; ++d) {
                detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                    const TensorChain z = TensorChain::basis(g, x, y);
                    const TensorChain r2 = normalize_tensor(psi_pair(s, t, psi_pair(s, t, z)));
                    r.tally(r2.is_zero(),
                            Witness{"s=" + g.name(s) + ",t=" + g.name(t),
                                    x.str(g) + "(x)" + y.str(g), "", r2.json_str(), "[]"});
                });
            }
        });
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"equivariance.psi", g.label(), {}, "", max_degree};
        for (Elem u = 0; u < n; ++u)
            for (Elem t = 0; t < n; ++t)
                for (int d = -1; d <= max_degree; ++d) {
                    const i64 codes = d == -1 ? 1 : detail::pow_i64(n, d + 1);
                    for (i64 c = 0; c < codes; ++c) {
                        const BarTuple tt = d == -1 ? BarTuple{} : detail::tuple_from_code(g, d + 1, c);
                        const Chain x = Chain::basis(g, tt);
                        const Chain lhs = psi(g.mul(u, t), act_left(u, x));
                        const Chain rhs = act_left(u, psi(t, x));
                        rep.tally(lhs == rhs, Witness{"u=" + g.name(u) + ",t=" + g.name(t),
                                                      tt.str(g), "", lhs.json_str(), rhs.json_str()});
                    }
                }
        detail::run_units(static_cast<i64>(n) * n * n, threads, rep,
                          [&](i64 ust, VerificationReport& r) {
            const Elem u = static_cast<Elem>(ust / (n * n));
            const Elem s = static_cast<Elem>((ust / n) % n);
            const Elem t = static_cast<Elem>(ust % n);
            const Elem us = g.mul(u, s), ut = g.mul(u, t);
            for (int d = -1; d <= max_degree; ++d) {
                detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                    const TensorChain z = TensorChain::basis(g, x, y);
                    const TensorChain lhs = psi_pair(us, ut, act_left(u, z));
                    const TensorChain rhs = act_left(u, psi_pair(s, t, z));
                    r.tally(lhs == rhs,
                            Witness{"u=" + g.name(u) + ",s=" + g.name(s) + ",t=" + g.name(t),
                                    x.str(g) + "(x)" + y.str(g), "", lhs.json_str(), rhs.json_str()});
                });
            }
        });
        out.push_back(std::move(rep));
    }
    {
        // product contracting homotopy assembled from the two factors:
        // h(x)(x)y for deg x > 0, plus eps(x).(s)(x)h'(y) in bidegree (0,*)
        VerificationReport rep{"composition.product_homotopy", g.label(), {}, "", max_degree};
        detail::run_units(static_cast<i64>(n) * n, threads, rep, [&](i64 st, VerificationReport& r) {
            const Elem s = static_cast<Elem>(st / n);
            const Elem t = static_cast<Elem>(st % n);
            {
                TensorChain expected(g, 0);
                BarTuple bs, bt;
                bs.push_back(s);
                bt.push_back(t);
                expected.add_term(bs, bt, 1);
                const TensorChain got = psi_pair(s, t, TensorChain::unit(g));
                r.tally(got == expected, Witness{"s=" + g.name(s) + ",t=" + g.name(t) +
                                                     " degree=-1",
                                                 "1", "", got.json_str(), expected.json_str()});
            }
            for (int d = 0; d <= max_degree; ++d) {
                detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                    TensorChain built(g, d + 1);
                    const Chain hx = psi(s, Chain::basis(g, x));
                    for (const auto& [tp, coef] : hx.terms()) built.add_term(tp, y, coef);
                    if (x.degree() == 0) {
                        BarTuple bs;
                        bs.push_back(s);
                        const Chain hy = psi(t, Chain::basis(g, y));
                        for (const auto& [tp, coef] : hy.terms()) built.add_term(bs, tp, coef);
                    }
                    const TensorChain got = psi_pair(s, t, TensorChain::basis(g, x, y));
                    r.tally(got == built, Witness{"s=" + g.name(s) + ",t=" + g.name(t),
                                                  x.str(g) + "(x)" + y.str(g), "", got.json_str(),
                                                  built.json_str()});
                });
            }
        });
        out.push_back(std::move(rep));
    }
    for (const bool alternate : {false, true}) {
        VerificationReport rep{alternate ? "homotopy.translation.alt" : "homotopy.translation",
                               g.label(), {}, "", max_degree};
        auto hom = [&](Elem s, const Chain& c) { return alternate ? phi_s_alt(s, c) : phi_s(s, c); };
        detail::run_units(n, threads, rep, [&](i64 si, VerificationReport& r) {
            const Elem s = static_cast<Elem>(si);
            for (int d = 0; d <= max_degree; ++d) {
                const i64 codes = detail::pow_i64(n, d + 1);
                for (i64 c = 0; c < codes; ++c) {
                    const BarTuple t = detail::tuple_from_code(g, d + 1, c);
                    const Chain x = Chain::basis(g, t);
                    const Chain lhs = translate(s, x) - x;
                    Chain rhs = boundary(hom(s, x));
                    if (d >= 1) rhs += hom(s, boundary(x));
                    r.tally(lhs == rhs,
                            Witness{"s=" + g.name(s), t.str(g), "", lhs.json_str(), rhs.json_str()});
                }
            }
        });
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"homotopy.swap", g.label(), {}, "", max_degree};
        detail::run_units(max_degree + 1, threads, rep, [&](i64 di, VerificationReport& r) {
            const int d = static_cast<int>(di);
            detail::for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
                const TensorChain z = TensorChain::basis(g, x, y);
                const TensorChain lhs = swap_tensor(z) - z;
                TensorChain rhs = tensor_boundary(phi_pair(z));
                if (d >= 1) rhs += phi_pair(tensor_boundary(z));
                r.tally(lhs == rhs, Witness{"", x.str(g) + "(x)" + y.str(g), "", lhs.json_str(),
                                            rhs.json_str()});
            });
        });
        out.push_back(std::move(rep));
    }
    out.push_back(verify_diagonal_identity(g, max_degree, conv, false, threads));
    out.push_back(verify_diagonal_identity(g, max_degree, conv, true, threads));
    for (auto& rep : verify_oracles(g, max_degree, threads)) out.push_back(std::move(rep));
    return out;
}

// ---------------------------------------------------------------------------
// cochain-level suites

using ActionHomotopyFn =
    std::function<Cochain(Elem, const Cochain&, HomotopyVariant, EvalPath)>;

namespace detail {

inline Cochain default_action_homotopy(Elem s, const Cochain& a, HomotopyVariant v, EvalPath p) {
    return homotopy_action(s, a, v, p);
}

} // namespace detail

/// The conjugation-action homotopy identity s.a - a = h_s(da) + d(h_s(a))
/// (degree 0 uses h_s(da) alone), swept exactly over every group element and
/// every basis cochain of degree <= max_degree, through both evaluation
/// paths. `hs` is replaceable so tests can inject deliberate faults.
inline VerificationReport verify_action_identity(
    const Group& g, const GModule& m, int max_degree,
    HomotopyVariant variant = HomotopyVariant::kMain, int threads = 1,
    const ActionHomotopyFn& hs = detail::default_action_homotopy,
    i64 guard = kDefaultSizeGuard) {
    check_size_guard(g, m, max_degree, guard);
    VerificationReport rep{"identity.action", g.label(), {m.label()},
                           std::string("variant=") + to_string(variant), max_degree};
    // units: (degree, basis cochain)
    std::vector<std::pair<int, i64>> units;
    for (int d = 0; d <= max_degree; ++d) {
        const i64 nb = detail::pow_i64(g.order(), d) * m.rank();
        for (i64 b = 0; b < nb; ++b) units.emplace_back(d, b);
    }
    detail::run_units(static_cast<i64>(units.size()), threads, rep,
                      [&](i64 ui, VerificationReport& r) {
        const auto [d, bidx] = units[static_cast<size_t>(ui)];
        const i64 code = bidx / m.rank();
        const int gen = static_cast<int>(bidx % m.rank());
        const Cochain a = Cochain::basis(g, m, d, code, gen);
        const Cochain da = differential(a);
        const std::string basis_desc = "deg" + std::to_string(d) +
                                       detail::tuple_str(g, a.decode(code)) + "*gen" +
                                       std::to_string(gen);
        for (Elem s = 0; s < g.order(); ++s) {
            const Cochain lhs = g_action(s, a) - a;
            for (const EvalPath path : {EvalPath::kFormula, EvalPath::kPairing}) {
                Cochain rhs = hs(s, da, variant, path);
                if (d >= 1) rhs = rhs + differential(hs(s, a, variant, path));
                const std::string ctx = "s=" + g.name(s) + " path=" +
                                        (path == EvalPath::kFormula ? "formula" : "pairing");
                for (i64 v = 0; v < lhs.codes(); ++v) {
                    const ModuleElement l = lhs.value_at(v);
                    const ModuleElement rr = rhs.value_at(v);
                    r.tally(l == rr,
                            Witness{ctx, basis_desc, detail::tuple_str(g, lhs.decode(v)),
                                    detail::coords_str(l), detail::coords_str(rr)});
                }
            }
        }
    });
    return rep;
}

using CupHomotopyFn = std::function<Cochain(const Cochain&, const Cochain&, const GModule&,
                                            HomotopyVariant, SignConvention, EvalPath)>;

namespace detail {

inline Cochain default_cup_homotopy(const Cochain& a, const Cochain& b, const GModule& mn,
                                    HomotopyVariant v, SignConvention c, EvalPath p) {
    return homotopy_cup(a, b, mn, v, c, p);
}

} // namespace detail

/// The cup-commutativity homotopy identity
/// (-1)^{pq} t_*(b u a) - a u b = h(da(x)b) + (-1)^p h(a(x)db) + d(h(a(x)b)),
/// swept exactly over all basis cochain pairs with p+q <= max_total,
/// including the degenerate p = 0 / q = 0 slices, through both paths.
inline VerificationReport verify_cup_identity(
    const Group& g, const GModule& m, const GModule& nmod, int max_total,
    HomotopyVariant variant = HomotopyVariant::kMain,
    SignConvention conv = SignConvention::kQPlusOneI, int threads = 1,
    const CupHomotopyFn& h = detail::default_cup_homotopy, i64 guard = kDefaultSizeGuard) {
    check_size_guard(g, m, max_total, guard);
    check_size_guard(g, nmod, max_total, guard);
    VerificationReport rep{"identity.cup", g.label(), {m.label(), nmod.label()},
                           std::string("variant=") + to_string(variant) +
                               " convention=" + to_string(conv),
                           max_total};
    const GModule mn = tensor_modules(m, nmod);
    const GModule nm = tensor_modules(nmod, m);

    std::vector<std::array<i64, 4>> units; // p, q, basisA, basisB
    for (int p = 0; p <= max_total; ++p)
        for (int q = 0; p + q <= max_total; ++q) {
            const i64 na = detail::pow_i64(g.order(), p) * m.rank();
            const i64 nb = detail::pow_i64(g.order(), q) * nmod.rank();
            for (i64 ba = 0; ba < na; ++ba)
                for (i64 bb = 0; bb < nb; ++bb)
                    units.push_back({p, q, ba, bb});
        }
    detail::run_units(static_cast<i64>(units.size()), threads, rep,
                      [&](i64 ui, VerificationReport& r) {
        const auto [pl, ql, ba, bb] = units[static_cast<size_t>(ui)];
        const int p = static_cast<int>(pl), q = static_cast<int>(ql);
        const Cochain a = Cochain::basis(g, m, p, ba / m.rank(), static_cast<int>(ba % m.rank()));
        const Cochain b =
            Cochain::basis(g, nmod, q, bb / nmod.rank(), static_cast<int>(bb % nmod.rank()));
        const Cochain da = differential(a);
        const Cochain db = differential(b);
        const Cochain lhs = bar_cup(a, b, mn, nm) - cup(a, b, mn);
        const std::string basis_desc =
            "a=deg" + std::to_string(p) + detail::tuple_str(g, a.decode(ba / m.rank())) + "*gen" +
            std::to_string(ba % m.rank()) + " b=deg" + std::to_string(q) +
            detail::tuple_str(g, b.decode(bb / nmod.rank())) + "*gen" +
            std::to_string(bb % nmod.rank());
        for (const EvalPath path : {EvalPath::kFormula, EvalPath::kPairing}) {
            Cochain rhs = h(da, b, mn, variant, conv, path);
            const Cochain hadb = h(a, db, mn, variant, conv, path);
            rhs = (p % 2 == 0) ? rhs + hadb : rhs - hadb;
            if (p + q >= 1) rhs = rhs + differential(h(a, b, mn, variant, conv, path));
            const std::string ctx = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") path=" +
                                    (path == EvalPath::kFormula ? "formula" : "pairing");
            for (i64 v = 0; v < lhs.codes(); ++v) {
                const ModuleElement l = lhs.value_at(v);
                const ModuleElement rr = rhs.value_at(v);
                r.tally(l == rr, Witness{ctx, basis_desc, detail::tuple_str(g, lhs.decode(v)),
                                         detail::coords_str(l), detail::coords_str(rr)});
            }
        }
    });
    return rep;
}

/// Dual-path agreement: the inhomogeneous formulas for the coboundary, the
/// conjugation action and the cup product against their pull-back
/// definitions, and the compatibility of the twist with the Koszul swap.
inline std::vector<VerificationReport> verify_dual_paths(const Group& g, const GModule& m,
                                                         const GModule& nmod, int max_total,
                                                         int threads = 1,
                                                         i64 guard = kDefaultSizeGuard) {
    check_size_guard(g, m, max_total, guard);
    check_size_guard(g, nmod, max_total, guard);
    std::vector<VerificationReport> out;
    const GModule mn = tensor_modules(m, nmod);
    const GModule nm = tensor_modules(nmod, m);
    {
        VerificationReport rep{"dual.differential", g.label(), {m.label()}, "", max_total};
        for (int d = 0; d < max_total; ++d) {
            const i64 nb = detail::pow_i64(g.order(), d) * m.rank();
            for (i64 bidx = 0; bidx < nb; ++bidx) {
                const Cochain a =
                    Cochain::basis(g, m, d, bidx / m.rank(), static_cast<int>(bidx % m.rank()));
                const Cochain da = differential(a);
                for (i64 v = 0; v < da.codes(); ++v) {
                    const std::vector<Elem> args = da.decode(v);
                    const ModuleElement viaPair =
                        pair(a, boundary(Chain::basis(g, homogeneous_lift(g, args))));
                    rep.tally(da.value_at(v) == viaPair,
                              Witness{"", "deg" + std::to_string(d) + " basis " +
                                              std::to_string(bidx),
                                      detail::tuple_str(g, args), detail::coords_str(da.value_at(v)),
                                      detail::coords_str(viaPair)});
                }
            }
        }
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"dual.action", g.label(), {m.label()}, "", max_total};
        detail::run_units(g.order(), threads, rep, [&](i64 si, VerificationReport& r) {
            const Elem s = static_cast<Elem>(si);
            for (int d = 0; d <= max_total; ++d) {
                const i64 nb = detail::pow_i64(g.order(), d) * m.rank();
                for (i64 bidx = 0; bidx < nb; ++bidx) {
                    const Cochain a = Cochain::basis(g, m, d, bidx / m.rank(),
                                                     static_cast<int>(bidx % m.rank()));
                    const Cochain sa = g_action(s, a);
                    for (i64 v = 0; v < sa.codes(); ++v) {
                        const std::vector<Elem> args = sa.decode(v);
                        const ModuleElement viaPair =
                            pair(a, translate(s, Chain::basis(g, homogeneous_lift(g, args))));
                        r.tally(sa.value_at(v) == viaPair,
                                Witness{"s=" + g.name(s),
                                        "deg" + std::to_string(d) + " basis " +
                                            std::to_string(bidx),
                                        detail::tuple_str(g, args),
                                        detail::coords_str(sa.value_at(v)),
                                        detail::coords_str(viaPair)});
                    }
                }
            }
        });
        out.push_back(std::move(rep));
    }
    {
        VerificationReport rep{"dual.cup", g.label(), {m.label(), nmod.label()}, "", max_total};
        for (int p = 0; p <= max_total; ++p)
            for (int q = 0; p + q <= max_total; ++q) {
                const i64 na = detail::pow_i64(g.order(), p) * m.rank();
                const i64 nb = detail::pow_i64(g.order(), q) * nmod.rank();
                for (i64 ba = 0; ba < na; ++ba)
                    for (i64 bb = 0; bb < nb; ++bb) {
                        const Cochain a = Cochain::basis(g, m, p, ba / m.rank(),
                                                         static_cast<int>(ba % m.rank()));
                        const Cochain b = Cochain::basis(g, nmod, q, bb / nmod.rank(),
                                                         static_cast<int>(bb % nmod.rank()));
                        const Cochain ab = cup(a, b, mn);
                        for (i64 v = 0; v < ab.codes(); ++v) {
                            const std::vector<Elem> args = ab.decode(v);
                            const ModuleElement viaPair = cross(
                                a, b,
                                alexander_whitney(Chain::basis(g, homogeneous_lift(g, args))), mn);
                            rep.tally(ab.value_at(v) == viaPair,
                                      Witness{"(p,q)=(" + std::to_string(p) + "," +
                                                  std::to_string(q) + ")",
                                              "pair " + std::to_string(ba) + "," +
                                                  std::to_string(bb),
                                              detail::tuple_str(g, args),
                                              detail::coords_str(ab.value_at(v)),
                                              detail::coords_str(viaPair)});
                        }
                    }
            }
        out.push_back(std::move(rep));
    }
    {
        // t_* (b x a) with the order sign against (a x b) after the swap
        VerificationReport rep{"dual.cross_swap", g.label(), {m.label(), nmod.label()}, "",
                               max_total};
        std::vector<std::array<i64, 4>> units;
        for (int p = 0; p <= max_total; ++p)
            for (int q = 0; p + q <= max_total; ++q) {
                const i64 na = detail::pow_i64(g.order(), p) * m.rank();
                const i64 nb = detail::pow_i64(g.order(), q) * nmod.rank();
                for (i64 ba = 0; ba < na; ++ba)
                    for (i64 bb = 0; bb < nb; ++bb) units.push_back({p, q, ba, bb});
            }
        detail::run_units(static_cast<i64>(units.size()), threads, rep,
                          [&](i64 ui, VerificationReport& r) {
            const auto unit = units[static_cast<size_t>(ui)];
            const int p = static_cast<int>(unit[0]), q = static_cast<int>(unit[1]);
            const i64 ba = unit[2], bb = unit[3];
            const i64 sgn = detail::sign_of(p * q);
            const Cochain a =
                Cochain::basis(g, m, p, ba / m.rank(), static_cast<int>(ba % m.rank()));
            const Cochain b = Cochain::basis(g, nmod, q, bb / nmod.rank(),
                                             static_cast<int>(bb % nmod.rank()));
            auto check_z = [&](const BarTuple& x, const BarTuple& y) {
                const TensorChain z = TensorChain::basis(g, x, y);
                const ModuleElement lhs = sgn * twist(cross(b, a, z, nm), mn);
                const ModuleElement rhs = cross(a, b, swap_tensor(z), mn);
                r.tally(lhs == rhs,
                        Witness{"(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")",
                                "pair " + std::to_string(ba) + "," + std::to_string(bb),
                                x.str(g) + "(x)" + y.str(g), detail::coords_str(lhs),
                                detail::coords_str(rhs)});
            };
            // the content-bearing bidegree (q,p), exhaustively
            const i64 lc = detail::pow_i64(g.order(), q + 1);
            const i64 rc = detail::pow_i64(g.order(), p + 1);
            for (i64 i = 0; i < lc; ++i)
                for (i64 j = 0; j < rc; ++j)
                    check_z(detail::tuple_from_code(g, q + 1, i),
                            detail::tuple_from_code(g, p + 1, j));
            // other bidegrees vanish on both sides; spot-check one each
            for (int k = 0; k <= p + q; ++k) {
                if (k == q) continue;
                check_z(detail::tuple_from_code(g, k + 1, 0),
                        detail::tuple_from_code(g, p + q - k + 1, 0));
            }
        });
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace barhom
