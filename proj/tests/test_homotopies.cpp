#include <functional>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "barhom/homotopies.hpp"

using namespace barhom;

namespace {

Chain basis(const Group& g, std::initializer_list<int> t) {
    return Chain::basis(g, BarTuple(t));
}

TensorChain tbasis(const Group& g, std::initializer_list<int> x, std::initializer_list<int> y) {
    return TensorChain::basis(g, BarTuple(x), BarTuple(y));
}

void for_each_basis(const Group& g, int degree, const std::function<void(const BarTuple&)>& fn) {
    i64 codes = 1;
    for (int i = 0; i <= degree; ++i) codes *= g.order();
    for (i64 c = 0; c < codes; ++c) {
        std::vector<Elem> v(static_cast<size_t>(degree + 1));
        i64 x = c;
        for (int i = degree; i >= 0; --i) {
            v[static_cast<size_t>(i)] = static_cast<Elem>(x % g.order());
            x /= g.order();
        }
        fn(BarTuple::from(v));
    }
}

void for_each_tensor_basis(const Group& g, int degree,
                           const std::function<void(const BarTuple&, const BarTuple&)>& fn) {
    for (int p = 0; p <= degree; ++p)
        for_each_basis(g, p, [&](const BarTuple& x) {
            for_each_basis(g, degree - p, [&](const BarTuple& y) { fn(x, y); });
        });
}

} // namespace

TEST_CASE("phi_s on degree 0 and 1") {
    const Group g = build_group("cyclic:2");
    // (s_0) -> (s_0, s_0 s)
    REQUIRE(phi_s(1, basis(g, {0})) == basis(g, {0, 1}));
    REQUIRE(phi_s(1, basis(g, {1})) == basis(g, {1, 0}));
    // (e,e) -> (e,g,g) - (e,e,g) for s = g
    REQUIRE(phi_s(1, basis(g, {0, 0})) == basis(g, {0, 1, 1}) - basis(g, {0, 0, 1}));
    // s = e degenerates every term
    for (int d = 0; d <= 2; ++d)
        for_each_basis(g, d, [&](const BarTuple& t) {
            REQUIRE(normalize(phi_s(0, Chain::basis(g, t))).is_zero());
            REQUIRE(normalize(phi_s_alt(0, Chain::basis(g, t))).is_zero());
        });
}

TEST_CASE("phi_s_alt closed form and composition law") {
    const Group c4 = build_group("cyclic:4");
    // (s_0) -> -(s_0 s, s_0)
    REQUIRE(phi_s_alt(1, basis(c4, {2})) == -basis(c4, {3, 2}));
    // phi'_s = -tau_s phi_{s^-1}
    for (Elem s = 0; s < 4; ++s)
        for (int d = 0; d <= 2; ++d)
            for_each_basis(c4, d, [&](const BarTuple& t) {
                const Chain x = Chain::basis(c4, t);
                REQUIRE(phi_s_alt(s, x) == -translate(s, phi_s(c4.inv(s), x)));
            });
}

TEST_CASE("translation homotopy identity", "[property]") {
    for (const char* spec : {"cyclic:3", "symmetric:3"}) {
        const Group g = build_group(spec);
        const int maxd = g.order() > 4 ? 2 : 3;
        for (Elem s = 0; s < g.order(); ++s)
            for (int d = 0; d <= maxd; ++d)
                for_each_basis(g, d, [&](const BarTuple& t) {
                    const Chain x = Chain::basis(g, t);
                    const Chain lhs = translate(s, x) - x;
                    Chain rhs = boundary(phi_s(s, x));
                    if (d >= 1) rhs += phi_s(s, boundary(x));
                    REQUIRE(lhs == rhs);
                    Chain rhs2 = boundary(phi_s_alt(s, x));
                    if (d >= 1) rhs2 += phi_s_alt(s, boundary(x));
                    REQUIRE(lhs == rhs2);
                });
    }
}

TEST_CASE("phi_pair closed form") {
    const Group c3 = build_group("cyclic:3");
    // (s_0)(x)(y) -> (s_0,y)(x)(s_0) - (s_0)(x)(s_0,y)
    REQUIRE(phi_pair(tbasis(c3, {0}, {2})) ==
            tbasis(c3, {0, 2}, {0}) - tbasis(c3, {0}, {0, 2}));
    // a degree (1,0) input: the first sum lands in bidegrees (1,1) and (2,0),
    // the second in (0,2) and (1,1); all three bidegrees occur
    const TensorChain out = phi_pair(tbasis(c3, {0, 1}, {2}));
    std::set<std::pair<int, int>> seen;
    for (const auto& [k, coef] : out.terms()) {
        const int p = k.first.degree(), q = k.second.degree();
        seen.emplace(p, q);
        REQUIRE(((p == 2 && q == 0) || (p == 1 && q == 1) || (p == 0 && q == 2)));
    }
    REQUIRE(seen == std::set<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("swap homotopy identity", "[property]") {
    const Group c3 = build_group("cyclic:3");
    for (int d = 0; d <= 3; ++d)
        for_each_tensor_basis(c3, d, [&](const BarTuple& x, const BarTuple& y) {
            const TensorChain z = TensorChain::basis(c3, x, y);
            const TensorChain lhs = swap_tensor(z) - z;
            TensorChain rhs = tensor_boundary(phi_pair(z));
            if (d >= 1) rhs += phi_pair(tensor_boundary(z));
            REQUIRE(lhs == rhs);
        });
}

TEST_CASE("lambda on degrees 0 and 1") {
    const Group g = build_group("cyclic:2");
    REQUIRE(lambda_map(basis(g, {0})).is_zero());
    REQUIRE(lambda_map(basis(g, {1})).is_zero());
    // degree 1, default convention: +(s_0,s_1)(x)(s_0,s_1)
    REQUIRE(lambda_map(basis(g, {0, 1})) == tbasis(g, {0, 1}, {0, 1}));
    // the other printed convention flips the degree-1 value
    REQUIRE(lambda_map(basis(g, {0, 1}), SignConvention::kQIPlusOne) ==
            -tbasis(g, {0, 1}, {0, 1}));
}

TEST_CASE("lambda_alt equals minus the swapped lambda") {
    const Group c3 = build_group("cyclic:3");
    REQUIRE(lambda_alt(basis(c3, {1})).is_zero());
    // -swap applied to +(s_0,s_1)(x)(s_0,s_1) keeps the plus sign: the Koszul
    // sign (-1)^{1*1} cancels the leading minus
    REQUIRE(lambda_alt(basis(c3, {0, 1})) == tbasis(c3, {0, 1}, {0, 1}));
    for (const SignConvention conv : {SignConvention::kQPlusOneI, SignConvention::kQIPlusOne})
        for (int d = 0; d <= 3; ++d)
            for_each_basis(c3, d, [&](const BarTuple& t) {
                const Chain x = Chain::basis(c3, t);
                REQUIRE(lambda_alt(x, conv) == -swap_tensor(lambda_map(x, conv)));
            });
}

TEST_CASE("diagonal homotopy identity holds under (q+1)i", "[property]") {
    for (const char* spec : {"cyclic:2", "cyclic:3"}) {
        const Group g = build_group(spec);
        for (int d = 0; d <= 4; ++d)
            for_each_basis(g, d, [&](const BarTuple& t) {
                const Chain x = Chain::basis(g, t);
                const TensorChain dx = alexander_whitney(x);
                const TensorChain lhs = swap_tensor(dx) - dx;
                TensorChain rhs = tensor_boundary(lambda_map(x));
                if (d >= 1) rhs += lambda_map(boundary(x));
                REQUIRE(lhs == rhs);
                TensorChain rhs2 = tensor_boundary(lambda_alt(x));
                if (d >= 1) rhs2 += lambda_alt(boundary(x));
                REQUIRE(lhs == rhs2);
            });
    }
}

TEST_CASE("diagonal homotopy identity fails under q(i+1) at degree 1") {
    const Group g = build_group("cyclic:2");
    const Chain x = basis(g, {0, 1});
    const TensorChain dx = alexander_whitney(x);
    const TensorChain lhs = swap_tensor(dx) - dx;
    const TensorChain rhs = tensor_boundary(lambda_map(x, SignConvention::kQIPlusOne));
    REQUIRE(lhs != rhs);
}

TEST_CASE("lambda is the diagonal homotopy with degenerate terms removed") {
    const Group c3 = build_group("cyclic:3");
    for (int d = 0; d <= 3; ++d)
        for_each_basis(c3, d, [&](const BarTuple& t) {
            const Chain x = Chain::basis(c3, t);
            const TensorChain diff = phi_pair(alexander_whitney(x)) - lambda_map(x);
            REQUIRE(normalize_tensor(diff).is_zero());
        });
}

TEST_CASE("translation oracle values at degree 0") {
    const Group g = build_group("cyclic:2");
    // raw: psi_{s_0}(s_0 s - s_0) = (s_0, s_0 s) - (s_0, s_0)
    REQUIRE(oracle_phi_s(g, 1, BarTuple{0}, false) == basis(g, {0, 1}) - basis(g, {0, 0}));
    // normalized: the degenerate term dies
    REQUIRE(oracle_phi_s(g, 1, BarTuple{0}, true) == basis(g, {0, 1}));
}

TEST_CASE("translation oracle equals the closed form", "[property]") {
    for (const char* spec : {"cyclic:2", "symmetric:3"}) {
        const Group g = build_group(spec);
        const int maxd = g.order() > 4 ? 2 : 3;
        for (Elem s = 0; s < g.order(); ++s) {
            TranslationHomotopyOracle norm(g, s, true);
            TranslationHomotopyOracle raw(g, s, false);
            for (int d = 0; d <= maxd; ++d)
                for_each_basis(g, d, [&](const BarTuple& t) {
                    const Chain closed = phi_s(s, Chain::basis(g, t));
                    REQUIRE(norm.eval(t) == normalize(closed));
                    REQUIRE(normalize(raw.eval(t) - closed).is_zero());
                });
        }
    }
}

TEST_CASE("swap oracle values and agreement", "[property]") {
    const Group g = build_group("cyclic:2");
    SwapHomotopyOracle norm(g, true);
    SwapHomotopyOracle raw(g, false);
    // normalized degree 0 value
    REQUIRE(norm.eval(BarTuple{0}, BarTuple{1}) ==
            tbasis(g, {0, 1}, {0}) - tbasis(g, {0}, {0, 1}));
    for (int d = 0; d <= 3; ++d)
        for_each_tensor_basis(g, d, [&](const BarTuple& x, const BarTuple& y) {
            const TensorChain closed = phi_pair(TensorChain::basis(g, x, y));
            REQUIRE(norm.eval(x, y) == normalize_tensor(closed));
            REQUIRE(normalize_tensor(raw.eval(x, y) - closed).is_zero());
        });
}

TEST_CASE("oracle results are independent of evaluation order") {
    const Group g = build_group("cyclic:3");
    TranslationHomotopyOracle up(g, 1, false);
    TranslationHomotopyOracle down(g, 1, false);
    std::vector<BarTuple> tuples;
    for_each_basis(g, 2, [&](const BarTuple& t) { tuples.push_back(t); });
    std::vector<Chain> a, b;
    for (const BarTuple& t : tuples) a.push_back(up.eval(t));
    for (auto it = tuples.rbegin(); it != tuples.rend(); ++it) b.push_back(down.eval(*it));
    for (size_t i = 0; i < tuples.size(); ++i)
        REQUIRE(a[i] == b[tuples.size() - 1 - i]);
}
