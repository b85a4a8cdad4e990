#include <catch2/catch_amalgamated.hpp>

#include "barhom/cohomology.hpp"

using namespace barhom;

namespace {

// reference determinant for small square matrices, cofactor expansion
i64 det(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    i64 acc = 0;
    for (int j = 0; j < n; ++j) {
        IntMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) sub.at(r - 1, cc++) = m.at(r, c);
        }
        const i64 term = checked::mul(m.at(0, j), det(sub));
        acc = (j % 2 == 0) ? checked::add(acc, term) : checked::sub(acc, term);
    }
    return acc;
}

void check_snf(const IntMatrix& a, const std::vector<i64>& want_diag) {
    SmithResult r = smith_normal_form(a, true, true);
    REQUIRE(r.diagonal == want_diag);
    // reconstruction: U A V = S
    REQUIRE(*r.u * a * *r.v == r.s);
    // unimodularity
    if (a.rows() <= 4) REQUIRE(std::abs(det(*r.u)) == 1);
    if (a.cols() <= 4) REQUIRE(std::abs(det(*r.v)) == 1);
    // divisibility chain
    for (size_t i = 1; i < r.diagonal.size(); ++i)
        REQUIRE(r.diagonal[i] % r.diagonal[i - 1] == 0);
}

} // namespace

TEST_CASE("smith normal form of small matrices") {
    check_snf(IntMatrix::identity(2), {1, 1});
    check_snf(IntMatrix::from_rows({{2}}), {2});
    // gcd 2 and |det| = 8 force diag(2,4)
    check_snf(IntMatrix::from_rows({{2, 4}, {6, 8}}), {2, 4});
    check_snf(IntMatrix::from_rows({{0, 0}, {0, 0}}), {});
    check_snf(IntMatrix::from_rows({{6, 10}, {10, 6}}), {2, 32});
    check_snf(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), {1, 3});
    check_snf(IntMatrix::from_rows({{2, 0}, {0, 3}}), {1, 6});
    // rectangular
    check_snf(IntMatrix::from_rows({{2, 4, 6}}), {2});
    check_snf(IntMatrix::from_rows({{3}, {6}, {9}}), {3});
}

TEST_CASE("smith normal form is deterministic") {
    const IntMatrix a = IntMatrix::from_rows({{4, 6, 2}, {6, 4, 8}, {2, 8, 4}});
    SmithResult r1 = smith_normal_form(a, true, true);
    SmithResult r2 = smith_normal_form(a, true, true);
    REQUIRE(r1.s == r2.s);
    REQUIRE(*r1.u == *r2.u);
    REQUIRE(*r1.v == *r2.v);
}

TEST_CASE("smith normal form reports overflow") {
    const i64 big = INT64_C(1) << 62;
    // clearing the first column multiplies 2^61 by 2^62
    const IntMatrix a = IntMatrix::from_rows({{2, big}, {big, 2}});
    REQUIRE_THROWS_AS(smith_normal_form(a), OverflowError);
}

TEST_CASE("kernel basis") {
    const IntMatrix a = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
    const IntMatrix k = kernel_basis(a);
    REQUIRE(k.cols() == 2);
    const IntMatrix prod = a * k;
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j) REQUIRE(prod.at(i, j) == 0);
    REQUIRE(smith_normal_form(k).rank() == 2); // columns independent
}

TEST_CASE("differential matrices") {
    const Group g = build_group("cyclic:2");
    const GModule ti = build_gmodule("trivial-int", g);
    const IntMatrix a0 = differential_matrix(g, ti, 0);
    REQUIRE(a0.rows() == 2);
    REQUIRE(a0.cols() == 1);
    REQUIRE(a0.at(0, 0) == 0);
    REQUIRE(a0.at(1, 0) == 0);

    const GModule sg = build_gmodule("sign", g);
    const IntMatrix s0 = differential_matrix(g, sg, 0);
    REQUIRE(s0.at(0, 0) == 0);  // row e: e.m - m
    REQUIRE(s0.at(1, 0) == -2); // row g: g.m - m = -2m

    // composite vanishes modulo the coefficient relations
    const GModule t4 = build_gmodule("trivial-mod:4", g);
    for (const GModule* m : {&ti, &sg, &t4})
        for (int n = 0; n <= 2; ++n) {
            const IntMatrix comp =
                differential_matrix(g, *m, n + 1) * differential_matrix(g, *m, n);
            for (int i = 0; i < comp.rows(); ++i)
                for (int j = 0; j < comp.cols(); ++j)
                    REQUIRE(m->reduce_coord(i % m->rank(), comp.at(i, j)) == 0);
        }
}

TEST_CASE("cohomology of cyclic groups with integer coefficients") {
    for (int m : {2, 3, 4}) {
        const Group g = build_group("cyclic:" + std::to_string(m));
        const GModule ti = build_gmodule("trivial-int", g);
        const AbelianInvariants z{1, {}};
        const AbelianInvariants zero{0, {}};
        const AbelianInvariants zm{0, {static_cast<i64>(m)}};
        const AbelianInvariants expected[5] = {z, zero, zm, zero, zm};
        for (int n = 0; n <= 4; ++n) {
            const AbelianInvariants got = cohomology_group(g, ti, n);
            REQUIRE(got == expected[n]);
            REQUIRE(got == periodic_cyclic_cohomology(g, ti, n));
        }
    }
}

TEST_CASE("cohomology with sign and finite coefficients") {
    const Group g = build_group("cyclic:2");
    const GModule sg = build_gmodule("sign", g);
    // H^0 is the fixed-point module, zero for the sign action
    REQUIRE(cohomology_group(g, sg, 0) == AbelianInvariants{0, {}});
    REQUIRE(periodic_cyclic_cohomology(g, sg, 0) == AbelianInvariants{0, {}});
    // H^1(C2, Z_sign) = Z/2
    REQUIRE(cohomology_group(g, sg, 1) == AbelianInvariants{0, {2}});
    REQUIRE(periodic_cyclic_cohomology(g, sg, 1) == AbelianInvariants{0, {2}});

    const GModule t4 = build_gmodule("trivial-mod:4", g);
    for (int n = 0; n <= 3; ++n)
        REQUIRE(cohomology_group(g, t4, n) == periodic_cyclic_cohomology(g, t4, n));
    REQUIRE(cohomology_group(g, t4, 0) == AbelianInvariants{0, {4}});
    REQUIRE(cohomology_group(g, t4, 1) == AbelianInvariants{0, {2}});
}

TEST_CASE("cohomology of free modules vanishes in positive degrees") {
    const Group g = build_group("cyclic:2");
    const GModule rg = build_gmodule("regular", g);
    REQUIRE(cohomology_group(g, rg, 0) == AbelianInvariants{1, {}});
    REQUIRE(cohomology_group(g, rg, 1) == AbelianInvariants{0, {}});
    REQUIRE(cohomology_group(g, rg, 2) == AbelianInvariants{0, {}});
}

TEST_CASE("cohomology of the klein four group") {
    // H^1(C2 x C2, Z) = 0 and H^2(C2 x C2, Z) = (Z/2)^2
    const Group g = build_group("cyclic:2xcyclic:2");
    const GModule ti = build_gmodule("trivial-int", g);
    REQUIRE(cohomology_group(g, ti, 0) == AbelianInvariants{1, {}});
    REQUIRE(cohomology_group(g, ti, 1) == AbelianInvariants{0, {}});
    REQUIRE(cohomology_group(g, ti, 2) == AbelianInvariants{0, {2, 2}});
}

TEST_CASE("size guard aborts cleanly") {
    const Group g = build_group("symmetric:3");
    const GModule rg = build_gmodule("regular", g);
    REQUIRE_THROWS_AS(cohomology_group(g, rg, 4, 20000), SizeGuardError);
    REQUIRE_THROWS_AS(differential_matrix(g, rg, 4, 20000), SizeGuardError);
}

TEST_CASE("invariant pretty printing") {
    REQUIRE(AbelianInvariants{0, {}}.str() == "0");
    REQUIRE(AbelianInvariants{1, {}}.str() == "Z");
    REQUIRE(AbelianInvariants{2, {2}}.str() == "Z^2 + Z/2");
    REQUIRE(AbelianInvariants{0, {4}}.str() == "Z/4");
}

TEST_CASE("periodic cross-check rejects unsuitable inputs") {
    const Group s3 = build_group("symmetric:3");
    const GModule ti = build_gmodule("trivial-int", s3);
    REQUIRE_THROWS_AS(periodic_cyclic_cohomology(s3, ti, 0), Error);
    const Group c2 = build_group("cyclic:2");
    const GModule rg = build_gmodule("regular", c2);
    REQUIRE_THROWS_AS(periodic_cyclic_cohomology(c2, rg, 0), Error);
}
