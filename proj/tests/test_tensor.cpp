#include <doctest.h>

#include <algorithm>

#include "ncmod/tensor.hpp"
#include "ncmod/verify.hpp"

using namespace ncmod;

namespace {

Algebra::Ptr quat() { return load_builtin("quaternion"); }
const std::vector<std::string> kVars{"x", "y", "z"};

Tensor simple(const AlgElem& a, const AlgElem& b) {
    return Tensor(a.algebra(), {{Rational(1), a, b}});
}

} // namespace

TEST_CASE("polynomial parsing expands powers and preserves factor order") {
    NCPoly p = parse_ncpoly("x^2*y^3 + x*z^2*x", kVars);
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms().count({0, 0, 1, 1, 1}) == 1);
    CHECK(p.terms().count({0, 2, 2, 0}) == 1);
    CHECK(p.terms().at({0, 0, 1, 1, 1}) == Rational(1));

    CHECK(parse_ncpoly("x - x", kVars).is_zero());

    NCPoly d = parse_ncpoly("2*(x+y)*x", kVars);
    REQUIRE(d.terms().size() == 2);
    CHECK(d.terms().at({0, 0}) == Rational(2));
    CHECK(d.terms().at({1, 0}) == Rational(2));
}

TEST_CASE("parsing accepts juxtaposition, fractions, and grouping") {
    NCPoly a = parse_ncpoly("3/2 x y", kVars);
    CHECK(a.terms().at({0, 1}) == Rational(3, 2));
    CHECK(parse_ncpoly("x*(y + z)", kVars) == parse_ncpoly("x*y + x*z", kVars));
    CHECK(parse_ncpoly("x^0", kVars).terms().at({}) == Rational(1));
    CHECK(parse_ncpoly("-2*x + x", kVars).terms().at({0}) == Rational(-1));
}

TEST_CASE("parser reports positions for malformed input") {
    auto pos_of = [](const char* src) {
        try {
            parse_ncpoly(src, kVars);
        } catch (const ParseError& e) {
            std::string msg = e.what();
            auto at = msg.rfind("position ");
            REQUIRE(at != std::string::npos);
            return std::stoul(msg.substr(at + 9));
        }
        REQUIRE(false);
        return 0ul;
    };
    CHECK(pos_of("x + ") == 4);       // missing term
    CHECK(pos_of("w") == 0);          // unknown variable
    CHECK(pos_of("x^-2") == 2);       // negative exponent
    CHECK(pos_of("(x + y") == 6);     // missing ')'
    CHECK(pos_of("x ** y") == 3);     // dangling '*'
    CHECK_THROWS_AS(parse_ncpoly("", kVars), ParseError);
}

TEST_CASE("polynomial products preserve order") {
    NCPoly xy = parse_ncpoly("x*y", kVars);
    NCPoly yx = parse_ncpoly("y*x", kVars);
    CHECK(xy != yx);
    CHECK(xy * yx == parse_ncpoly("x*y^2*x", kVars));
}

TEST_CASE("word rendering groups runs") {
    CHECK(word_to_string({0, 2, 2}, kVars) == "x*z^2");
    CHECK(word_to_string({}, kVars) == "1");
    CHECK(word_to_string({0, 0, 1, 1, 1}, kVars) == "x^2*y^3");
}

TEST_CASE("tensor action golden values over quaternions") {
    auto qa = quat();
    AlgElem one = qa->unit(), i = qa->basis_element(1), j = qa->basis_element(2),
            k = qa->basis_element(3);

    SplitMix64 prng(61);
    AlgElem x = gen_element(qa, prng);
    CHECK(tensor_apply(simple(one, one), x) == x);
    CHECK(tensor_apply(simple(i, j), k) == one); // (i k) j = (-j) j = 1

    Tensor cancel = simple(one, i) + simple(i, one);
    CHECK(tensor_apply(cancel, j).is_zero()); // j i + i j = 0
}

TEST_CASE("tensor composition follows the product rule") {
    auto qa = quat();
    AlgElem one = qa->unit(), i = qa->basis_element(1), j = qa->basis_element(2),
            k = qa->basis_element(3);

    Tensor left = tensor_compose(simple(i, one), simple(j, k));
    CHECK(tensor_equal(left, simple(k, k))); // (i j) (x) (k 1)

    SplitMix64 prng(62);
    for (int trial = 0; trial < 20; ++trial) {
        Tensor s(qa, {{gen_rational(prng), gen_element(qa, prng), gen_element(qa, prng)},
                      {gen_rational(prng), gen_element(qa, prng), gen_element(qa, prng)}});
        Tensor t(qa, {{gen_rational(prng), gen_element(qa, prng), gen_element(qa, prng)}});
        CHECK(tensor_to_map(tensor_compose(s, t)) ==
              rc_product(tensor_to_map(s), tensor_to_map(t)));
        CHECK(tensor_equal(tensor_compose(Tensor::identity(qa), t), t));
    }
}

TEST_CASE("tensor maps reduce to regular representations") {
    auto qa = quat();
    AlgElem one = qa->unit(), i = qa->basis_element(1), j = qa->basis_element(2);
    CHECK(tensor_to_map(Tensor::identity(qa)) == didentity(4));
    CHECK(tensor_to_map(simple(i, one)) == left_regular(i));
    CHECK(tensor_to_map(simple(one, j)) == right_regular(j));
}

TEST_CASE("tensor operations reject nonassociative algebras") {
    auto oc = load_builtin("octonion");
    Tensor t = simple(oc->basis_element(1), oc->basis_element(2));
    CHECK_THROWS_AS(tensor_apply(t, oc->unit()), DomainError);
    CHECK_THROWS_AS(tensor_compose(t, t), DomainError);
    CHECK_THROWS_AS(tensor_to_map(t), DomainError);
}

TEST_CASE("differentiation reproduces the displayed partials") {
    NCPoly v = parse_ncpoly("x^2*y^3 + x*z^2*x", kVars);
    auto terms_of = [](const TensorPoly& tp) {
        std::vector<std::tuple<Rational, Word, Word>> out;
        for (const auto& t : tp.terms()) out.emplace_back(t.scale, t.prefix, t.suffix);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<1>(a), std::get<2>(a)) <
                   std::tie(std::get<1>(b), std::get<2>(b));
        });
        return out;
    };

    const std::uint32_t X = 0, Y = 1, Z = 2;
    auto sorted_expected = [&](std::vector<std::tuple<Rational, Word, Word>> v2) {
        std::sort(v2.begin(), v2.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<1>(a), std::get<2>(a)) <
                   std::tie(std::get<1>(b), std::get<2>(b));
        });
        return v2;
    };

    // dv/dx = 1 (x) x y^3 + x (x) y^3 + 1 (x) z^2 x + x z^2 (x) 1
    CHECK(terms_of(differentiate(v, "x")) ==
          sorted_expected({{Rational(1), {}, {X, Y, Y, Y}},
                           {Rational(1), {X}, {Y, Y, Y}},
                           {Rational(1), {}, {Z, Z, X}},
                           {Rational(1), {X, Z, Z}, {}}}));
    // dv/dy = x^2 (x) y^2 + x^2 y (x) y + x^2 y^2 (x) 1
    CHECK(terms_of(differentiate(v, "y")) ==
          sorted_expected({{Rational(1), {X, X}, {Y, Y}},
                           {Rational(1), {X, X, Y}, {Y}},
                           {Rational(1), {X, X, Y, Y}, {}}}));
    // dv/dz = x (x) z x + x z (x) x
    CHECK(terms_of(differentiate(v, "z")) ==
          sorted_expected({{Rational(1), {X}, {Z, X}}, {Rational(1), {X, Z}, {X}}}));

    CHECK(differentiate(parse_ncpoly("x", kVars), "x").terms().size() == 1);
    CHECK(differentiate(parse_ncpoly("x", kVars), "x").terms()[0].prefix.empty());
    CHECK(differentiate(parse_ncpoly("x", kVars), "x").terms()[0].suffix.empty());
    CHECK_THROWS_AS(differentiate(v, "w"), DomainError);
}

TEST_CASE("second displayed map differentiates consistently with the dual oracle") {
    auto qa = quat();
    NCPoly w = parse_ncpoly("x*z*y*x + x^2*y*x*y", kVars);
    SplitMix64 prng(63);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<AlgElem> point{gen_element(qa, prng), gen_element(qa, prng),
                                   gen_element(qa, prng)};
        std::vector<AlgElem> disp{gen_element(qa, prng), gen_element(qa, prng),
                                  gen_element(qa, prng)};
        CHECK(jacobian_apply({w}, point, disp)[0] == evaluate_dual(w, point, disp).deriv);
    }
}

TEST_CASE("jacobian golden cases") {
    auto qa = quat();
    AlgElem i = qa->basis_element(1), j = qa->basis_element(2);
    SplitMix64 prng(64);
    AlgElem x0 = gen_element(qa, prng);
    AlgElem h = gen_element(qa, prng);

    // d(x)/dx = 1 (x) 1: the displacement passes through.
    NCPoly id_map = parse_ncpoly("x", kVars);
    CHECK(jacobian_apply({id_map}, {x0, qa->zero(), qa->zero()},
                         {h, qa->zero(), qa->zero()})[0] == h);

    // Product rule at a point: map x*y at (i, j) sends (hx, hy) to
    // hx j + i hy.
    NCPoly xy = parse_ncpoly("x*y", kVars);
    AlgElem hx = gen_element(qa, prng), hy = gen_element(qa, prng);
    CHECK(jacobian_apply({xy}, {i, j, qa->zero()}, {hx, hy, qa->zero()})[0] ==
          hx * j + i * hy);
}

TEST_CASE("first-order exactness against the dual-number oracle") {
    auto qa = quat();
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        SplitMix64 prng(split_seed(65, trial));
        NCPoly p = gen_ncpoly(kVars, prng);
        std::vector<AlgElem> point{gen_element(qa, prng), gen_element(qa, prng),
                                   gen_element(qa, prng)};
        std::vector<AlgElem> disp{gen_element(qa, prng), gen_element(qa, prng),
                                  gen_element(qa, prng)};
        Dual d = evaluate_dual(p, point, disp);
        CHECK(d.value == p.evaluate(point));
        CHECK(jacobian_apply({p}, point, disp)[0] == d.deriv);
    }
}

TEST_CASE("leibniz consistency through the dual oracle") {
    auto qa = quat();
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        SplitMix64 prng(split_seed(66, trial));
        NCPoly p = gen_ncpoly(kVars, prng);
        NCPoly q = gen_ncpoly(kVars, prng);
        std::vector<AlgElem> point{gen_element(qa, prng), gen_element(qa, prng),
                                   gen_element(qa, prng)};
        std::vector<AlgElem> disp{gen_element(qa, prng), gen_element(qa, prng),
                                  gen_element(qa, prng)};
        Dual dp = evaluate_dual(p, point, disp);
        Dual dq = evaluate_dual(q, point, disp);
        Dual dpq = evaluate_dual(p * q, point, disp);
        CHECK(dpq.value == dp.value * dq.value);
        CHECK(dpq.deriv == dp.deriv * dq.value + dp.value * dq.deriv);
        // The symbolic route agrees.
        CHECK(jacobian_apply({p * q}, point, disp)[0] == dpq.deriv);
    }
}

TEST_CASE("jacobian rejects nonassociative algebras and bad shapes") {
    auto oc = load_builtin("octonion");
    NCPoly p = parse_ncpoly("x*y", kVars);
    SplitMix64 prng(67);
    std::vector<AlgElem> point{gen_element(oc, prng), gen_element(oc, prng),
                               gen_element(oc, prng)};
    CHECK_THROWS_AS(jacobian_apply({p}, point, point), DomainError);

    auto qa = quat();
    std::vector<AlgElem> short_point{qa->unit()};
    CHECK_THROWS_AS(jacobian_apply({p}, short_point, short_point), DimensionError);
}

TEST_CASE("tensor poly renders deterministically") {
    NCPoly v = parse_ncpoly("x^2*y^3 + x*z^2*x", kVars);
    TensorPoly dx = differentiate(v, "x");
    CHECK(dx.to_string() ==
          "(1 ⊗ z^2*x) + (x*z^2 ⊗ 1) + (1 ⊗ x*y^3) + (x ⊗ y^3)");
}
