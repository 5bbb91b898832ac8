#include <doctest.h>

#include "ncmod/algebra.hpp"
#include "ncmod/verify.hpp"

using namespace ncmod;

namespace {

Algebra::Ptr quat() { return load_builtin("quaternion"); }
Algebra::Ptr oct() { return load_builtin("octonion"); }

AlgElem basis(const Algebra::Ptr& a, std::size_t i) { return a->basis_element(i); }

// Squared Euclidean norm of the coordinate vector.
Rational norm2(const AlgElem& x) {
    Rational acc(0);
    for (const auto& c : x.coords()) acc += c * c;
    return acc;
}

} // namespace

TEST_CASE("generated quaternion table matches the handwritten one") {
    // Independent oracle: the standard table with basis 1, i, j, k.
    // Rows/columns indexed 0..3; entry = (coeff index, sign), unit handled
    // separately.
    auto q = quat();
    auto e = [&](std::size_t i) { return basis(q, i); };
    struct Entry { std::size_t i, j, k; int sign; };
    const Entry table[] = {
        {1, 1, 0, -1}, {2, 2, 0, -1}, {3, 3, 0, -1}, // i^2 = j^2 = k^2 = -1
        {1, 2, 3, +1}, {2, 1, 3, -1},                // ij = k,  ji = -k
        {2, 3, 1, +1}, {3, 2, 1, -1},                // jk = i,  kj = -i
        {3, 1, 2, +1}, {1, 3, 2, -1},                // ki = j,  ik = -j
    };
    for (const auto& t : table) {
        AlgElem expected = Rational(t.sign) * e(t.k);
        CHECK(e(t.i) * e(t.j) == expected);
    }
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(e(0) * e(i) == e(i));
        CHECK(e(i) * e(0) == e(i));
    }
}

TEST_CASE("quaternion unit law on random elements") {
    auto q = quat();
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        SplitMix64 prng(split_seed(31, trial));
        AlgElem x = gen_element(q, prng);
        CHECK(q->unit() * x == x);
        CHECK(x * q->unit() == x);
    }
}

TEST_CASE("matrix2 acts like 2x2 matrix units") {
    auto m = load_builtin("matrix2");
    AlgElem e11 = basis(m, 0), e12 = basis(m, 1), e21 = basis(m, 2), e22 = basis(m, 3);
    CHECK(e12 * e21 == e11);
    CHECK(e21 * e12 == e22);
    CHECK((e12 * e12).is_zero());
    CHECK(!m->unit_index().has_value()); // unit is E11+E22, not a basis vector
    REQUIRE(m->has_unit());
    CHECK(m->unit() == e11 + e22);
}

TEST_CASE("zero1 multiplies to zero and has no unit") {
    auto z = load_builtin("zero1");
    CHECK((basis(z, 0) * basis(z, 0)).is_zero());
    CHECK(!z->has_unit());
    CHECK(!z->unit_index().has_value());
    CHECK_THROWS_AS(z->unit(), DomainError);
}

TEST_CASE("unknown builtin name") {
    CHECK_THROWS_AS(load_builtin("sedenion"), DomainError);
}

TEST_CASE("mixing algebras is rejected") {
    CHECK_THROWS_AS(basis(quat(), 0) * basis(load_builtin("complex"), 0), DomainError);
}

TEST_CASE("distributivity on random elements") {
    for (const char* name : {"quaternion", "octonion", "matrix2"}) {
        auto alg = load_builtin(name);
        for (std::uint64_t trial = 0; trial < 25; ++trial) {
            SplitMix64 prng(split_seed(32, trial));
            AlgElem a = gen_element(alg, prng);
            AlgElem b = gen_element(alg, prng);
            AlgElem c = gen_element(alg, prng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("commutator and associator golden values") {
    auto q = quat();
    AlgElem i = basis(q, 1), j = basis(q, 2), k = basis(q, 3);
    CHECK(commutator(i, j) == Rational(2) * k);
    CHECK(associator(i, j, k).is_zero());
}

TEST_CASE("quaternion associator vanishes on all 64 basis triples") {
    auto q = quat();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(associator(basis(q, i), basis(q, j), basis(q, k)).is_zero());
}

TEST_CASE("octonion frozen doubling values and nonassociativity witness") {
    auto o = oct();
    auto e = [&](std::size_t i) { return basis(o, i); };
    // Values computed by hand from (x,y)(u,v) = (xu - conj(v)y, vx + y conj(u)).
    CHECK(e(1) * e(4) == e(5));
    CHECK(e(4) * e(1) == -e(5));
    CHECK(e(4) * e(4) == -e(0));
    CHECK(e(1) * e(5) == -e(4));
    CHECK(associator(e(1), e(2), e(4)) == Rational(2) * e(7));
}

TEST_CASE("octonion is alternative and composes norms") {
    auto o = oct();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(associator(basis(o, i), basis(o, i), basis(o, j)).is_zero());
            CHECK(associator(basis(o, i), basis(o, j), basis(o, j)).is_zero());
        }
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SplitMix64 prng(split_seed(33, trial));
        AlgElem a = gen_element(o, prng);
        AlgElem b = gen_element(o, prng);
        CHECK(norm2(a * b) == norm2(a) * norm2(b));
    }
}

TEST_CASE("octonion contains quaternion as the first four coordinates") {
    auto o = oct();
    auto q = quat();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            AlgElem prod_o = basis(o, i) * basis(o, j);
            AlgElem prod_q = basis(q, i) * basis(q, j);
            for (std::size_t k = 0; k < 8; ++k)
                CHECK(prod_o.coord(k) == (k < 4 ? prod_q.coord(k) : Rational(0)));
        }
}

TEST_CASE("classification table") {
    Classification c = classify(load_builtin("complex"));
    CHECK(c.commutative);
    CHECK(c.associative);
    CHECK(c.nucleus_dim == 2);
    CHECK(c.center_dim == 2);

    c = classify(quat());
    CHECK(!c.commutative);
    CHECK(c.associative);
    CHECK(c.nucleus_dim == 4);
    CHECK(c.center_dim == 1);

    c = classify(load_builtin("matrix2"));
    CHECK(!c.commutative);
    CHECK(c.associative);
    CHECK(c.nucleus_dim == 4);
    CHECK(c.center_dim == 1);

    c = classify(oct());
    CHECK(!c.commutative);
    CHECK(!c.associative);
    CHECK(c.nucleus_dim == 1);
    CHECK(c.center_dim == 1);
}

TEST_CASE("cached flags agree with the basis-level classification") {
    for (const auto& name : builtin_names()) {
        auto alg = load_builtin(name);
        Classification c = classify(alg);
        CHECK(alg->commutative() == c.commutative);
        CHECK(alg->associative() == c.associative);
    }
}

TEST_CASE("unital extension leaves unital algebras alone") {
    CHECK(unital_extension(quat()).get() == quat().get());
    CHECK(unital_extension(load_builtin("matrix2")).get() == load_builtin("matrix2").get());
}

TEST_CASE("unital extension of zero1 gives dual numbers") {
    auto d = unital_extension(load_builtin("zero1"));
    REQUIRE(d->dim() == 2);
    REQUIRE(d->has_unit());
    CHECK(d->unit_index() == 1);
    AlgElem eps = d->basis_element(0);
    AlgElem one = d->basis_element(1);
    CHECK((eps * eps).is_zero());
    CHECK(one * eps == eps);
    CHECK(eps * one == eps);
    // (eps + 1)(eps + 1) = 2 eps + 1
    AlgElem s = eps + one;
    CHECK(s * s == Rational(2) * eps + one);
    // The base algebra sits in the leading coordinates and absorbs products.
    CHECK((eps * (eps + one)) == eps);
    CHECK(classify(d).commutative);
}

TEST_CASE("unital extension has a verified unit and the base as an ideal") {
    auto z = load_builtin("zero1");
    auto d = unital_extension(z);
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SplitMix64 prng(split_seed(34, trial));
        AlgElem p = gen_element(d, prng);
        CHECK(d->unit() * p == p);
        CHECK(p * d->unit() == p);
        // Elements of the base (last coordinate zero) stay in the base.
        AlgElem a = gen_element(d, prng);
        std::vector<Rational> coords = a.coords();
        coords.back() = Rational(0);
        AlgElem base = d->element(coords);
        CHECK((p * base).coord(1) == Rational(0));
        CHECK((base * p).coord(1) == Rational(0));
    }
}

TEST_CASE("regular representations") {
    auto q = quat();
    AlgElem i = basis(q, 1), j = basis(q, 2), k = basis(q, 3);
    CHECK(left_regular(q->unit()) == didentity(4));
    CHECK(right_regular(q->unit()) == didentity(4));

    // L(i) applied to coords(j) gives coords(k).
    DMatrix lj = rc_product(left_regular(i), dcolumn(j.coords()));
    CHECK(lj == dcolumn(k.coords()));

    // L is multiplicative on an associative algebra.
    CHECK(rc_product(left_regular(i), left_regular(j)) == left_regular(i * j));

    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        SplitMix64 prng(split_seed(35, trial));
        AlgElem a = gen_element(q, prng);
        AlgElem x = gen_element(q, prng);
        CHECK(rc_product(left_regular(a), dcolumn(x.coords())) == dcolumn((a * x).coords()));
        CHECK(rc_product(right_regular(a), dcolumn(x.coords())) == dcolumn((x * a).coords()));
    }
}

TEST_CASE("algebra homomorphism condition") {
    auto q = quat();
    auto c = load_builtin("complex");

    CHECK(check_algebra_hom(didentity(4), q, q));

    // Embedding 1 -> 1, i -> i.
    DMatrix embed = dmatrix(4, 2);
    embed(0, 0) = Rational(1);
    embed(1, 1) = Rational(1);
    CHECK(check_algebra_hom(embed, c, q));

    // i -> 1 is not a homomorphism: f(i^2) = -1 but f(i)^2 = 1.
    DMatrix bad = dmatrix(2, 2);
    bad(0, 0) = Rational(1);
    bad(0, 1) = Rational(1);
    CHECK(!check_algebra_hom(bad, c, c));

    CHECK_THROWS_AS(check_algebra_hom(didentity(3), q, q), DimensionError);
}

TEST_CASE("conjugate flips non-unit coordinates") {
    auto q = quat();
    AlgElem x = q->element({Rational(2), Rational(3), Rational(-1), Rational(5)});
    AlgElem cx = conjugate(x);
    CHECK(cx == q->element({Rational(2), Rational(-3), Rational(1), Rational(-5)}));
    CHECK_THROWS_AS(conjugate(load_builtin("matrix2")->unit()), DomainError);
}

TEST_CASE("declared units are validated") {
    // A dim-1 algebra with zero product cannot declare a unit.
    CHECK_THROWS_AS(Algebra::create("bad", {"e"}, {Rational(0)}, 0), DomainError);
    // Constants table must be cubic in the dimension.
    CHECK_THROWS_AS(Algebra::create("bad", {"e"}, {Rational(0), Rational(1)}, std::nullopt),
                    DomainError);
}

TEST_CASE("coordinate strings round trip") {
    auto q = quat();
    AlgElem x = q->element({Rational(1, 2), Rational(0), Rational(-3), Rational(7, 3)});
    CHECK(x.to_string() == "1/2,0,-3,7/3");
    CHECK(AlgElem::from_string(q, "1/2,0,-3,7/3") == x);
    CHECK_THROWS_AS(AlgElem::from_string(q, "1,2,3"), ParseError);
    CHECK_THROWS_AS(AlgElem::from_string(q, "1,2,3,x"), ParseError);
}
