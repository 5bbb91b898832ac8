#include <doctest.h>

#include "ncmod/dmatrix.hpp"
#include "ncmod/permutation.hpp"
#include "ncmod/rational.hpp"
#include "ncmod/verify.hpp"

using namespace ncmod;

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
    CHECK((Rational(1, 2) * Rational(2, 3)).to_string() == "1/3");
    CHECK(Rational(3, 2).inverse() == Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 2).inverse() * Rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parsing accepts p and p/q only") {
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("-7/3") == Rational(-7, 3));
    CHECK(Rational::from_string("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("a"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
}

TEST_CASE("solve_linear identity and scalar cases") {
    DMatrix i2 = didentity(2);
    DMatrix b = dcolumn({Rational(3), Rational(-1)});
    LinearSolution s = solve_linear(i2, b);
    REQUIRE(s.kind == SolutionKind::Unique);
    CHECK(s.particular == b);

    LinearSolution s1 = solve_linear(dmatrix_from({{2}}), dcolumn({Rational(3)}));
    REQUIRE(s1.kind == SolutionKind::Unique);
    CHECK(s1.particular(0, 0) == Rational(3, 2));
}

TEST_CASE("solve_linear singular system: frozen elimination result") {
    // [[1,2],[2,4]] x = (1,2): pivot in column 0 only, column 1 free.
    LinearSolution s =
        solve_linear(dmatrix_from({{1, 2}, {2, 4}}), dcolumn({Rational(1), Rational(2)}));
    REQUIRE(s.kind == SolutionKind::Infinite);
    CHECK(s.particular == dcolumn({Rational(1), Rational(0)}));
    REQUIRE(s.nullspace_basis.size() == 1);
    CHECK(s.nullspace_basis[0] == dcolumn({Rational(-2), Rational(1)}));
}

TEST_CASE("solve_linear inconsistent system") {
    LinearSolution s =
        solve_linear(dmatrix_from({{1, 2}, {2, 4}}), dcolumn({Rational(1), Rational(3)}));
    CHECK(s.kind == SolutionKind::NoSolution);
}

TEST_CASE("solve_linear dimension mismatch") {
    CHECK_THROWS_AS(solve_linear(dmatrix_from({{1, 2}}), dcolumn({Rational(1), Rational(2)})),
                    DimensionError);
}

TEST_CASE("rank basics") {
    CHECK(rank(didentity(3)) == 3);
    CHECK(rank(dmatrix(2, 2)) == 0);
    CHECK(rank(dmatrix_from({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("solution set contains the seeded solution") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        SplitMix64 prng(split_seed(11, trial));
        std::size_t n = 2 + trial % 3;
        std::size_t m = 2 + (trial / 2) % 3;
        DMatrix a = gen_qmatrix(m, n, prng);
        DMatrix x = gen_qmatrix(n, 1, prng);
        DMatrix b = rc_product(a, x);
        LinearSolution s = solve_linear(a, b);
        REQUIRE(s.kind != SolutionKind::NoSolution);
        if (s.kind == SolutionKind::Unique) {
            CHECK(s.particular == x);
        } else {
            // x - particular must lie in the nullspace span.
            DMatrix ns = dmatrix(n, s.nullspace_basis.size());
            for (std::size_t c = 0; c < s.nullspace_basis.size(); ++c)
                for (std::size_t r = 0; r < n; ++r) ns(r, c) = s.nullspace_basis[c](r, 0);
            DMatrix diff = mat_sum(x, negate(s.particular));
            CHECK(solve_linear(ns, diff).kind != SolutionKind::NoSolution);
            for (const auto& v : s.nullspace_basis) {
                DMatrix av = rc_product(a, v);
                bool zero = true;
                for (std::size_t r = 0; r < av.rows(); ++r)
                    zero = zero && av(r, 0).is_zero();
                CHECK(zero);
            }
        }
    }
}

TEST_CASE("rank equals rank of transpose") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        SplitMix64 prng(split_seed(12, trial));
        DMatrix a = gen_qmatrix(2 + trial % 3, 2 + (trial / 3) % 3, prng);
        CHECK(rank(a) == rank(transpose(a)));
    }
}

TEST_CASE("permutation validation and parity") {
    CHECK(Permutation::identity(3).parity() == 1);
    CHECK(Permutation({1, 0, 2}).parity() == -1); // one inversion
    CHECK(Permutation({1, 2, 0}).parity() == 1);  // 3-cycle, two inversions
    CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 3}), DomainError);
}

TEST_CASE("parity is multiplicative under composition") {
    auto random_permutation = [](std::size_t n, SplitMix64& prng) {
        std::vector<std::size_t> im(n);
        for (std::size_t i = 0; i < n; ++i) im[i] = i;
        for (std::size_t i = n; i > 1; --i)
            std::swap(im[i - 1], im[static_cast<std::size_t>(prng.range(0, long(i) - 1))]);
        return Permutation(im);
    };
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        SplitMix64 prng(split_seed(13, trial));
        std::size_t n = 2 + trial % 5;
        Permutation p = random_permutation(n, prng);
        Permutation q = random_permutation(n, prng);
        CHECK(compose(p, q).parity() == p.parity() * q.parity());
    }
}
