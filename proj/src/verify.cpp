#include "ncmod/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ncmod/matexpr.hpp"
#include "ncmod/tensor.hpp"

namespace ncmod {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return g.next();
}

Rational gen_rational(SplitMix64& prng) {
    long num = prng.range(-3, 3);
    long den = prng.range(1, 2);
    return Rational(num, den);
}

Rational gen_nonzero_rational(SplitMix64& prng) {
    while (true) {
        Rational r = gen_rational(prng);
        if (!r.is_zero()) return r;
    }
}

AlgElem gen_element(const Algebra::Ptr& algebra, SplitMix64& prng) {
    std::vector<Rational> coords(algebra->dim());
    for (auto& c : coords) c = gen_rational(prng);
    return algebra->element(std::move(coords));
}

AlgMatrix gen_matrix(const Algebra::Ptr& algebra, std::size_t rows, std::size_t cols,
                     SplitMix64& prng) {
    AlgMatrix m(rows, cols, algebra->zero());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = gen_element(algebra, prng);
    return m;
}

DMatrix gen_qmatrix(std::size_t rows, std::size_t cols, SplitMix64& prng) {
    DMatrix m = dmatrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = gen_rational(prng);
    return m;
}

NCPoly gen_ncpoly(const std::vector<std::string>& vars, SplitMix64& prng) {
    NCPoly p(vars);
    std::size_t terms = static_cast<std::size_t>(prng.range(1, 4));
    for (std::size_t t = 0; t < terms; ++t) {
        std::size_t len = static_cast<std::size_t>(prng.range(1, 4));
        Word w(len);
        for (auto& v : w)
            v = static_cast<std::uint32_t>(prng.range(0, static_cast<long>(vars.size()) - 1));
        p.add_term(w, gen_nonzero_rational(prng));
    }
    return p;
}

OrientedVector gen_vector(const Algebra::Ptr& algebra, Orientation o, std::size_t n,
                          SplitMix64& prng) {
    std::vector<AlgElem> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(gen_element(algebra, prng));
    return OrientedVector(o, std::move(comps));
}

Basis gen_basis(const Algebra::Ptr& algebra, Orientation o, std::size_t n, SplitMix64& prng) {
    AlgElem one = algebra->unit();
    std::vector<OrientedVector> vectors;
    vectors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<AlgElem> comps(n, algebra->zero());
        comps[i] = one;
        for (std::size_t j = i + 1; j < n; ++j) comps[j] = gen_element(algebra, prng);
        vectors.emplace_back(o, std::move(comps));
    }
    return Basis(o, std::move(vectors));
}

Json report_to_json(const SuiteReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["algebra"] = report.algebra;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["passed"] = report.passed;
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back(Json{{"law", f.law}, {"inputs", f.inputs}, {"detail", f.detail}});
    j["failures"] = std::move(failures);
    return j;
}

namespace {

/// Collects failures for one suite run.
class Harness {
public:
    Harness(std::string suite, std::string algebra, std::uint64_t trials, std::uint64_t seed)
        : report_{std::move(suite), std::move(algebra), trials, seed, false, {}} {}

    void check(bool ok, const std::string& law, const std::string& inputs,
               const std::string& detail) {
        if (!ok) report_.failures.push_back({law, inputs, detail});
    }

    SuiteReport finish() {
        report_.passed = report_.failures.empty();
        return std::move(report_);
    }

private:
    SuiteReport report_;
};

std::string describe_elems(std::initializer_list<std::pair<const char*, const AlgElem*>> items) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, elem] : items) {
        if (!first) os << " ";
        os << name << "=" << elem->to_string();
        first = false;
    }
    return os.str();
}

std::string describe_matrix(const AlgMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ";" : "");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).to_string();
    }
    os << "]";
    return os.str();
}

std::string describe_vector(const OrientedVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "; " : "") << v.comp(i).to_string();
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- biring

void suite_biring(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                  std::size_t n, Harness& h) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        AlgMatrix a = gen_matrix(alg, n, n, prng);
        AlgMatrix b = gen_matrix(alg, n, n, prng);
        AlgMatrix b2 = gen_matrix(alg, n, n, prng);
        AlgMatrix c = gen_matrix(alg, n, n, prng);
        std::string in = "trial=" + std::to_string(trial);

        h.check(transpose(transpose(a)) == a, "double-transpose", in, describe_matrix(a));
        h.check(transpose(rc_product(a, b)) == cr_product(transpose(a), transpose(b)),
                "transpose-of-rc", in, describe_matrix(a) + " " + describe_matrix(b));
        h.check(transpose(cr_product(a, b)) == rc_product(transpose(a), transpose(b)),
                "transpose-of-cr", in, describe_matrix(a) + " " + describe_matrix(b));

        h.check(rc_product(a, mat_sum(b, b2)) == mat_sum(rc_product(a, b), rc_product(a, b2)),
                "rc-left-distributive", in, "");
        h.check(rc_product(mat_sum(b, b2), a) == mat_sum(rc_product(b, a), rc_product(b2, a)),
                "rc-right-distributive", in, "");
        h.check(cr_product(a, mat_sum(b, b2)) == mat_sum(cr_product(a, b), cr_product(a, b2)),
                "cr-left-distributive", in, "");
        h.check(cr_product(mat_sum(b, b2), a) == mat_sum(cr_product(b, a), cr_product(b2, a)),
                "cr-right-distributive", in, "");

        if (alg->has_unit()) {
            AlgMatrix e = identity(n, alg->unit(), alg->zero());
            h.check(transpose(e) == e, "transpose-of-identity", in, "");
            h.check(rc_product(e, a) == a, "rc-identity", in, "");
            h.check(cr_product(a, e) == a, "cr-identity", in, "");
        }
        if (alg->associative()) {
            h.check(rc_product(rc_product(a, b), c) == rc_product(a, rc_product(b, c)),
                    "rc-associative", in, "");
            h.check(cr_product(cr_product(a, b), c) == cr_product(a, cr_product(b, c)),
                    "cr-associative", in, "");
        }
    }
}

// ---------------------------------------------------------------- duality

using Expr = MatExpr<AlgElem>;

Expr::Ptr gen_expr(const Algebra::Ptr& alg, std::size_t n, std::size_t depth,
                   SplitMix64& prng) {
    std::uint64_t kind = depth == 0 ? 0 : prng.next() % 5;
    switch (kind) {
    case 1:
        return Expr::transposed(gen_expr(alg, n, depth - 1, prng));
    case 2:
        return Expr::rc(gen_expr(alg, n, depth - 1, prng), gen_expr(alg, n, depth - 1, prng));
    case 3:
        return Expr::cr(gen_expr(alg, n, depth - 1, prng), gen_expr(alg, n, depth - 1, prng));
    case 4:
        return Expr::sum(gen_expr(alg, n, depth - 1, prng), gen_expr(alg, n, depth - 1, prng));
    default:
        return Expr::leaf(gen_matrix(alg, n, n, prng));
    }
}

void suite_duality(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                   std::size_t n, Harness& h) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        Expr::Ptr e = gen_expr(alg, n, 5, prng);
        h.check(eval<AlgElem>(dualize<AlgElem>(e)) == transpose(eval<AlgElem>(e)),
                "duality-rewrite", "trial=" + std::to_string(trial), "");
    }
}

// ---------------------------------------------------------------- reducibility

void suite_reducibility(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                        std::size_t n, Harness& h) {
    bool counterexample = false;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        AlgMatrix a = gen_matrix(alg, n, n, prng);
        AlgMatrix b = gen_matrix(alg, n, n, prng);
        bool equal = rc_product(a, b) == cr_product(b, a);
        if (alg->commutative()) {
            h.check(equal, "reducibility", "trial=" + std::to_string(trial),
                    describe_matrix(a) + " " + describe_matrix(b));
        } else if (!equal) {
            counterexample = true;
        }
    }
    if (!alg->commutative())
        h.check(counterexample, "reducibility-counterexample-exists", "all-trials",
                "no pair with rc(a,b) != cr(b,a) found over noncommutative carrier");
}

// ---------------------------------------------------------------- module laws

void suite_module_laws(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                       std::size_t n, Harness& h) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        for (const Orientation& o : all_orientations()) {
            OrientedVector v = gen_vector(alg, o, n, prng);
            OrientedVector w = gen_vector(alg, o, n, prng);
            AlgElem p = gen_element(alg, prng);
            AlgElem q = gen_element(alg, prng);
            Rational m = gen_rational(prng);
            Rational mm = gen_rational(prng);
            std::string in = "trial=" + std::to_string(trial) + " " + orientation_name(o);

            h.check(v + w == w + v, "addition-commutative", in, "");
            h.check(scale(m * mm, v) == scale(m, scale(mm, v)), "ground-scalar-associative",
                    in, "");
            h.check(scale(p, v + w) == scale(p, v) + scale(p, w), "distributive-over-vectors",
                    in, describe_elems({{"p", &p}}));
            h.check(scale(p + q, v) == scale(p, v) + scale(q, v), "distributive-over-scalars",
                    in, describe_elems({{"p", &p}, {"q", &q}}));
            h.check(scale(p, scale(m, v)) == scale(m, scale(p, v)), "ground-ring-central", in,
                    "");
            if (alg->has_unit())
                h.check(scale(alg->unit(), v) == v, "unitarity", in, "");
            if (alg->associative()) {
                if (o.side == Side::Left)
                    h.check(scale(p * q, v) == scale(p, scale(q, v)), "scalar-associative",
                            in, describe_elems({{"p", &p}, {"q", &q}}));
                else
                    h.check(scale(p * q, v) == scale(q, scale(p, v)), "scalar-associative",
                            in, describe_elems({{"p", &p}, {"q", &q}}));
            }
        }
    }

    // Side sensitivity: noncommutative scalars must produce a witness where
    // the left and right actions differ; commutative scalars never can.
    auto witness = find_side_action_witness(alg, trials, seed);
    if (alg->commutative())
        h.check(!witness.has_value(), "sides-coincide-when-commutative", "all-trials",
                witness ? describe_vector(witness->left_value) : "");
    else
        h.check(witness.has_value(), "side-witness-exists", "all-trials",
                "no coefficient/vector pair distinguishing left from right action");
}

// ---------------------------------------------------------------- coords

void suite_coords(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                  std::size_t base_n, Harness& h) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        std::size_t n = base_n + trial % 2;
        for (const Orientation& o : all_orientations()) {
            Basis basis = gen_basis(alg, o, n, prng);
            std::string in = "trial=" + std::to_string(trial) + " " + orientation_name(o);
            h.check(basis.verify(), "basis-verifies", in, "");

            std::vector<AlgElem> c;
            for (std::size_t i = 0; i < n; ++i) c.push_back(gen_element(alg, prng));
            CoordsResult r = coordinates(expand(basis, c), basis);
            bool ok = r.kind == CoordsKind::Unique && r.coords == c;
            std::ostringstream detail;
            if (!ok) {
                detail << "expected";
                for (const auto& x : c) detail << " " << x.to_string();
            }
            h.check(ok, "coordinates-round-trip", in, detail.str());

            h.check(in_span(expand(basis, c), basis.vectors()), "in-span", in, "");
        }
    }

    // Dependent generators: {(1, 0), (b, 0)} always admits a nonzero
    // annihilating coefficient tuple.
    const Orientation o = kLeftColumn;
    AlgElem one = alg->unit();
    AlgElem b = alg->basis_element(alg->dim() > 1 ? 1 : 0);
    std::vector<OrientedVector> gens;
    gens.emplace_back(o, std::vector<AlgElem>{one, alg->zero()});
    gens.emplace_back(o, std::vector<AlgElem>{b, alg->zero()});
    Basis dependent(o, gens);
    OrientedVector target(o, std::vector<AlgElem>{one + b, alg->zero()});
    CoordsResult r = coordinates(target, dependent);
    h.check(r.kind == CoordsKind::NonUnique, "dependent-generators-non-unique", "constructed",
            "");
    if (r.kind == CoordsKind::NonUnique) {
        bool nonzero = false;
        for (const auto& x : r.coords) nonzero = nonzero || !x.is_zero();
        h.check(nonzero, "non-unique-witness-nonzero", "constructed", "");
        h.check(contract(r.coords, gens).is_zero(), "non-unique-witness-annihilates",
                "constructed", "");
    }
    h.check(!dependent.verify(), "dependent-generators-fail-verify", "constructed", "");

    OrientedVector outside(o, std::vector<AlgElem>{alg->zero(), one});
    h.check(coordinates(outside, dependent).kind == CoordsKind::NotInSpan, "not-in-span",
            "constructed", "");
}

// ---------------------------------------------------------------- extension

void suite_extension(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                     std::size_t max_n, Harness& h) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        std::size_t n = 1 + trial % max_n;
        for (const Orientation& o : all_orientations()) {
            Basis basis = gen_basis(alg, o, n, prng);
            BasisExtension ext = extend_basis(basis);
            std::string in = "trial=" + std::to_string(trial) + " n=" + std::to_string(n) +
                             " " + orientation_name(o);
            h.check(ext.vectors.size() == n * alg->dim(), "extension-count", in, "");
            h.check(ext.rank_over_d == n * alg->dim(), "extension-rank", in,
                    "rank=" + std::to_string(ext.rank_over_d));
        }
    }

    // Degenerate basis: a zero vector caps the rank below n*dim.
    const Orientation o = kLeftColumn;
    std::vector<OrientedVector> vecs;
    vecs.push_back(OrientedVector(o, {alg->unit(), alg->zero()}));
    vecs.push_back(zero_vector(alg, o, 2));
    BasisExtension degenerate = extend_basis(Basis(o, vecs));
    h.check(degenerate.rank_over_d < 2 * alg->dim(), "degenerate-extension-rank", "constructed",
            "rank=" + std::to_string(degenerate.rank_over_d));
}

// ---------------------------------------------------------------- hom laws

std::vector<AlgElem> gen_coords(const Algebra::Ptr& alg, std::size_t n, SplitMix64& prng) {
    std::vector<AlgElem> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(gen_element(alg, prng));
    return v;
}

std::vector<AlgElem> coords_sum(const std::vector<AlgElem>& a, const std::vector<AlgElem>& b) {
    std::vector<AlgElem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

std::vector<AlgElem> coords_scale(const AlgElem& a, const std::vector<AlgElem>& v, Side side) {
    std::vector<AlgElem> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(side == Side::Left ? a * x : x * a);
    return out;
}

void suite_hom_laws(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                    std::size_t dims, Harness& h) {
    std::size_t nu = dims, nv = dims + 1, nw = dims;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        for (const Orientation& o : all_orientations()) {
            ModuleHom g(o, gen_matrix(alg, nv, nu, prng));
            ModuleHom g2(o, gen_matrix(alg, nv, nu, prng));
            ModuleHom hm(o, gen_matrix(alg, nw, nv, prng));
            std::vector<AlgElem> u = gen_coords(alg, nu, prng);
            std::vector<AlgElem> u2 = gen_coords(alg, nu, prng);
            AlgElem a = gen_element(alg, prng);
            std::string in = "trial=" + std::to_string(trial) + " " + orientation_name(o);

            h.check(g.apply(coords_sum(u, u2)) == coords_sum(g.apply(u), g.apply(u2)),
                    "apply-additive", in, "");
            if (alg->associative())
                h.check(g.apply(coords_scale(a, u, o.side)) ==
                            coords_scale(a, g.apply(u), o.side),
                        "apply-homogeneous", in, describe_elems({{"a", &a}}));

            h.check(hom_sum(g, g2).apply(u) == coords_sum(g.apply(u), g2.apply(u)),
                    "sum-soundness", in, "");
            if (alg->associative())
                h.check(hom_compose(hm, g).apply(u) == hm.apply(g.apply(u)),
                        "compose-soundness", in, "");

            if (alg->has_unit()) {
                ModuleHom id = hom_identity(alg, o, nu);
                h.check(id.apply(u) == u, "identity-hom", in, "");
                h.check(hom_compose(g, id).matrix() == g.matrix(), "compose-with-identity",
                        in, "");
            }
        }
    }
}

const char* kStarFormNames[4] = {"rc(g,h)", "cr(g,h)", "rc(h,g)", "cr(h,g)"};

// The four candidate matrix products of the stored hom matrices; entries are
// nullopt when the shapes do not meet the product's precondition.
std::array<std::optional<AlgMatrix>, 4> star_candidates(const AlgMatrix& g, const AlgMatrix& h) {
    std::array<std::optional<AlgMatrix>, 4> out;
    if (g.cols() == h.rows()) out[0] = rc_product(g, h);
    if (g.rows() == h.cols()) out[1] = cr_product(g, h);
    if (h.cols() == g.rows()) out[2] = rc_product(h, g);
    if (h.rows() == g.cols()) out[3] = cr_product(h, g);
    return out;
}

} // namespace

StarIdentification identify_star_forms(const Algebra::Ptr& alg, std::uint64_t trials,
                                       std::uint64_t seed) {
    if (!alg->associative())
        throw DomainError("star identification requires an associative algebra");
    std::size_t nu = 2, nv = 3, nw = 2;
    std::map<std::string, std::string> result;
    for (const Orientation& o : all_orientations()) {
        std::array<bool, 4> alive{true, true, true, true};
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            SplitMix64 prng(split_seed(seed, trial));
            AlgMatrix gm = gen_matrix(alg, nv, nu, prng);
            AlgMatrix hm = gen_matrix(alg, nw, nv, prng);
            ModuleHom g(o, gm);
            ModuleHom hh(o, hm);
            AlgMatrix composite = hom_compose(hh, g).matrix();
            auto candidates = star_candidates(gm, hm);
            for (std::size_t k = 0; k < 4; ++k)
                if (alive[k] && !(candidates[k] && *candidates[k] == composite))
                    alive[k] = false;
        }
        std::string matched;
        std::size_t count = 0;
        for (std::size_t k = 0; k < 4; ++k)
            if (alive[k]) {
                if (count) matched += "=";
                matched += kStarFormNames[k];
                ++count;
            }
        // Over a commutative carrier the two products are reducible to each
        // other, so two forms legitimately survive; noncommutative entries
        // must single one out.
        if (count == 0 || (count != 1 && !alg->commutative()))
            throw DomainError("star identification inconclusive for " + orientation_name(o) +
                              ": " + std::to_string(count) + " surviving forms");
        result[orientation_name(o)] = matched;
    }
    return {result["left-column"], result["left-row"], result["right-column"],
            result["right-row"]};
}

std::optional<std::pair<std::size_t, std::size_t>>
find_noncommuting_shift_pair(const Algebra::Ptr& alg) {
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = 0; j < alg->dim(); ++j) {
            DMatrix l = left_regular(alg->basis_element(i));
            DMatrix r = right_regular(alg->basis_element(j));
            if (rc_product(l, r) != rc_product(r, l)) return std::make_pair(i, j);
        }
    return std::nullopt;
}

std::optional<std::array<std::size_t, 3>>
find_nonzero_associator_triple(const Algebra::Ptr& alg) {
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = 0; j < alg->dim(); ++j)
            for (std::size_t k = 0; k < alg->dim(); ++k)
                if (!associator(alg->basis_element(i), alg->basis_element(j),
                                alg->basis_element(k))
                         .is_zero())
                    return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
}

std::optional<SideActionWitness> find_side_action_witness(const Algebra::Ptr& alg,
                                                          std::uint64_t trials,
                                                          std::uint64_t seed) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed ^ 0x5157ull, trial));
        std::size_t n = 2;
        std::vector<AlgElem> coeffs = gen_coords(alg, n, prng);
        std::vector<std::vector<AlgElem>> comps;
        for (std::size_t i = 0; i < n; ++i) comps.push_back(gen_coords(alg, n, prng));

        std::vector<OrientedVector> lv, rv;
        for (std::size_t i = 0; i < n; ++i) {
            lv.emplace_back(kLeftColumn, comps[i]);
            rv.emplace_back(kRightColumn, comps[i]);
        }
        OrientedVector left = contract(coeffs, lv);
        OrientedVector right = contract(coeffs, rv);
        if (left.comps() != right.comps())
            return SideActionWitness{std::move(coeffs), std::move(comps), std::move(left),
                                     std::move(right)};
    }
    return std::nullopt;
}

namespace {

void suite_hom_star(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                    Harness& h) {
    try {
        StarIdentification id = identify_star_forms(alg, trials, seed);
        h.check(id.left_column == id.left_row, "star-shape-pairing-left", "all-trials",
                id.left_column + " vs " + id.left_row);
        h.check(id.right_column == id.right_row, "star-shape-pairing-right", "all-trials",
                id.right_column + " vs " + id.right_row);
        if (!alg->commutative())
            h.check(id.left_column != id.right_column, "star-sides-differ", "all-trials",
                    id.left_column);
    } catch (const DomainError& e) {
        h.check(false, "star-identification-consistent", "all-trials", e.what());
    }
}

// ---------------------------------------------------------------- tensors

void suite_tensor_laws(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                       Harness& h) {
    if (!alg->associative()) {
        // Deliberate expected-rejection checks.
        SplitMix64 prng(split_seed(seed, 0));
        Tensor t(alg, {{Rational(1), gen_element(alg, prng), gen_element(alg, prng)}});
        AlgElem c = gen_element(alg, prng);
        auto throws = [&](auto&& fn) {
            try {
                fn();
                return false;
            } catch (const DomainError&) {
                return true;
            }
        };
        h.check(throws([&] { tensor_apply(t, c); }), "apply-rejected-nonassociative", "", "");
        h.check(throws([&] { tensor_compose(t, t); }), "compose-rejected-nonassociative", "",
                "");
        h.check(throws([&] { tensor_to_map(t); }), "map-rejected-nonassociative", "", "");
        return;
    }

    auto gen_tensor = [&](SplitMix64& prng) {
        std::vector<TensorTerm> terms;
        std::size_t count = static_cast<std::size_t>(prng.range(1, 3));
        for (std::size_t i = 0; i < count; ++i)
            terms.push_back({gen_nonzero_rational(prng), gen_element(alg, prng),
                             gen_element(alg, prng)});
        return Tensor(alg, std::move(terms));
    };

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        Tensor s = gen_tensor(prng);
        Tensor t = gen_tensor(prng);
        Tensor u = gen_tensor(prng);
        AlgElem c = gen_element(alg, prng);
        AlgElem c2 = gen_element(alg, prng);
        Rational d = gen_rational(prng);
        std::string in = "trial=" + std::to_string(trial);

        h.check(tensor_to_map(tensor_compose(s, t)) ==
                    rc_product(tensor_to_map(s), tensor_to_map(t)),
                "compose-matches-map-product", in, "");
        h.check(tensor_apply(s + t, c) == tensor_apply(s, c) + tensor_apply(t, c),
                "apply-additive-in-tensor", in, "");
        h.check(tensor_apply(d * s, c) == d * tensor_apply(s, c), "apply-scale-in-tensor", in,
                "");
        h.check(tensor_apply(s, c + c2) == tensor_apply(s, c) + tensor_apply(s, c2),
                "apply-additive-in-argument", in, "");
        h.check(tensor_apply(s, d * c) == d * tensor_apply(s, c), "apply-scale-in-argument",
                in, "");
        h.check(tensor_equal(tensor_compose(tensor_compose(s, t), u),
                             tensor_compose(s, tensor_compose(t, u))),
                "compose-associative", in, "");
        if (alg->has_unit()) {
            Tensor id = Tensor::identity(alg);
            h.check(tensor_apply(id, c) == c, "identity-tensor", in, "");
            h.check(tensor_equal(tensor_compose(id, s), s), "identity-compose", in, "");
        }
    }

    if (alg->name() == "quaternion") {
        AlgElem i = alg->basis_element(1), j = alg->basis_element(2),
                k = alg->basis_element(3);
        Tensor ij(alg, {{Rational(1), i, j}});
        h.check(tensor_apply(ij, k) == alg->unit(), "i-tensor-j-on-k", "golden",
                tensor_apply(ij, k).to_string());
    }
}

// ---------------------------------------------------------------- shifts

void suite_shifts(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed,
                  Harness& h) {
    // Definitional checks hold for every algebra.
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        AlgElem a = gen_element(alg, prng);
        AlgElem b = gen_element(alg, prng);
        AlgElem x = gen_element(alg, prng);
        std::string in = "trial=" + std::to_string(trial);

        auto apply_q = [&](const DMatrix& m, const AlgElem& e) {
            std::vector<Rational> out(m.rows(), Rational(0));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * e.coord(c);
            return alg->element(std::move(out));
        };
        h.check(apply_q(left_regular(a), x) == a * x, "left-shift-definition", in,
                describe_elems({{"a", &a}, {"x", &x}}));
        h.check(apply_q(right_regular(b), x) == x * b, "right-shift-definition", in,
                describe_elems({{"b", &b}, {"x", &x}}));

        if (alg->associative()) {
            h.check(rc_product(left_regular(a), right_regular(b)) ==
                        rc_product(right_regular(b), left_regular(a)),
                    "shifts-commute", in, describe_elems({{"a", &a}, {"b", &b}}));
            h.check(rc_product(left_regular(a), left_regular(b)) == left_regular(a * b),
                    "left-shift-multiplicative", in, "");
            h.check(rc_product(right_regular(b), right_regular(a)) == right_regular(a * b),
                    "right-shift-antimultiplicative", in, "");
        }
    }

    if (alg->associative()) {
        for (std::size_t i = 0; i < alg->dim(); ++i)
            for (std::size_t j = 0; j < alg->dim(); ++j) {
                DMatrix l = left_regular(alg->basis_element(i));
                DMatrix r = right_regular(alg->basis_element(j));
                h.check(rc_product(l, r) == rc_product(r, l), "shifts-commute-basis",
                        "pair=(" + std::to_string(i) + "," + std::to_string(j) + ")", "");
            }
    } else {
        auto witness = find_noncommuting_shift_pair(alg);
        h.check(witness.has_value(), "noncommuting-shift-witness-exists", "basis-pairs",
                "no basis pair with L(a)R(b) != R(b)L(a)");
    }
}

// ---------------------------------------------------------------- diff

void suite_diff(const Algebra::Ptr& alg, std::uint64_t trials, std::uint64_t seed, Harness& h) {
    std::vector<std::string> vars{"x", "y", "z"};

    if (!alg->associative()) {
        SplitMix64 prng(split_seed(seed, 0));
        NCPoly p = gen_ncpoly(vars, prng);
        std::vector<AlgElem> point = gen_coords(alg, 3, prng);
        std::vector<AlgElem> disp = gen_coords(alg, 3, prng);
        bool rejected = false;
        try {
            jacobian_apply({p}, point, disp);
        } catch (const DomainError&) {
            rejected = true;
        }
        h.check(rejected, "jacobian-rejected-nonassociative", "", "");
        return;
    }

    // Symbolic golden checks: occurrence-rule partials of x^2 y^3 + x z^2 x.
    {
        NCPoly v = parse_ncpoly("x^2*y^3 + x*z^2*x", vars);
        auto term_set = [](const TensorPoly& tp) {
            std::vector<std::tuple<std::string, Word, Word>> out;
            for (const auto& t : tp.terms())
                out.emplace_back(t.scale.to_string(), t.prefix, t.suffix);
            std::sort(out.begin(), out.end());
            return out;
        };
        auto expect = [&](const char* wrt,
                          std::vector<std::tuple<std::string, Word, Word>> want,
                          const char* law) {
            auto got = term_set(differentiate(v, wrt));
            std::sort(want.begin(), want.end());
            h.check(got == want, law, "golden", differentiate(v, wrt).to_string());
        };
        const std::uint32_t X = 0, Y = 1, Z = 2;
        expect("x",
               {{"1", {}, {X, Y, Y, Y}},
                {"1", {X}, {Y, Y, Y}},
                {"1", {}, {Z, Z, X}},
                {"1", {X, Z, Z}, {}}},
               "partial-x-golden");
        expect("y",
               {{"1", {X, X}, {Y, Y}}, {"1", {X, X, Y}, {Y}}, {"1", {X, X, Y, Y}, {}}},
               "partial-y-golden");
        expect("z", {{"1", {X}, {Z, X}}, {"1", {X, Z}, {X}}}, "partial-z-golden");
    }

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 prng(split_seed(seed, trial));
        std::size_t map_count = 1 + trial % 2;
        std::vector<NCPoly> maps;
        for (std::size_t i = 0; i < map_count; ++i) maps.push_back(gen_ncpoly(vars, prng));
        std::vector<AlgElem> point = gen_coords(alg, 3, prng);
        std::vector<AlgElem> disp = gen_coords(alg, 3, prng);
        std::string in = "trial=" + std::to_string(trial);

        std::vector<AlgElem> jac = jacobian_apply(maps, point, disp);
        for (std::size_t i = 0; i < map_count; ++i) {
            Dual d = evaluate_dual(maps[i], point, disp);
            h.check(d.value == maps[i].evaluate(point), "dual-value-matches-evaluation", in,
                    maps[i].to_string());
            h.check(jac[i] == d.deriv, "first-order-exactness", in, maps[i].to_string());
        }
    }
}

using SuiteFn = std::function<void(const Algebra::Ptr&, std::uint64_t, std::uint64_t,
                                   std::optional<std::size_t>, Harness&)>;

struct SuiteEntry {
    const char* name;
    SuiteFn run;
    bool (*compatible)(const Algebra::Ptr&);
};

bool always(const Algebra::Ptr&) { return true; }
bool needs_unit(const Algebra::Ptr& a) { return a->has_unit(); }
bool diff_ok(const Algebra::Ptr& a) { return a->associative() ? a->has_unit() : true; }

const std::vector<SuiteEntry>& suite_table() {
    static const std::vector<SuiteEntry> table = {
        {"biring",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s,
            std::optional<std::size_t> d, Harness& h) { suite_biring(a, t, s, d.value_or(3), h); },
         always},
        {"duality",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s,
            std::optional<std::size_t> d, Harness& h) { suite_duality(a, t, s, d.value_or(2), h); },
         always},
        {"reducibility",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s,
            std::optional<std::size_t> d, Harness& h) {
             suite_reducibility(a, t, s, d.value_or(2), h);
         },
         always},
        {"module-laws",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s,
            std::optional<std::size_t> d, Harness& h) {
             suite_module_laws(a, t, s, d.value_or(2), h);
         },
         always},
        {"coords",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s,
            std::optional<std::size_t> d, Harness& h) { suite_coords(a, t, s, d.value_or(2), h); },
         needs_unit},
        {"extension",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s,
            std::optional<std::size_t> d, Harness& h) {
             suite_extension(a, t, s, d.value_or(3), h);
         },
         needs_unit},
        {"hom-laws",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s,
            std::optional<std::size_t> d, Harness& h) {
             suite_hom_laws(a, t, s, d.value_or(2), h);
             if (a->associative()) suite_hom_star(a, t, s, h);
         },
         always},
        {"tensor-laws",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s, std::optional<std::size_t>,
            Harness& h) { suite_tensor_laws(a, t, s, h); },
         always},
        {"shifts",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s, std::optional<std::size_t>,
            Harness& h) { suite_shifts(a, t, s, h); },
         always},
        {"diff",
         [](const Algebra::Ptr& a, std::uint64_t t, std::uint64_t s, std::optional<std::size_t>,
            Harness& h) { suite_diff(a, t, s, h); },
         diff_ok},
    };
    return table;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& e : suite_table()) out.emplace_back(e.name);
    return out;
}

bool suite_compatible(const std::string& suite, const Algebra::Ptr& algebra) {
    for (const auto& e : suite_table())
        if (suite == e.name) return e.compatible(algebra);
    throw DomainError("unknown suite '" + suite + "'");
}

SuiteReport run_suite(const std::string& suite, const std::string& algebra,
                      std::uint64_t trials, std::uint64_t seed,
                      std::optional<std::size_t> dims) {
    if (trials < 1) throw DomainError("run_suite: trials must be >= 1");
    Algebra::Ptr alg = resolve_algebra(algebra);
    for (const auto& e : suite_table()) {
        if (suite != e.name) continue;
        if (!e.compatible(alg))
            throw DomainError("suite '" + suite + "' is incompatible with algebra '" +
                              algebra + "'");
        Harness h(suite, alg->name(), trials, seed);
        e.run(alg, trials, seed, dims, h);
        return h.finish();
    }
    throw DomainError("unknown suite '" + suite + "'");
}

std::vector<SuiteReport> run_all_suites(const std::string& algebra, std::uint64_t trials,
                                        std::uint64_t seed, std::optional<std::size_t> dims) {
    Algebra::Ptr alg = resolve_algebra(algebra);
    std::vector<SuiteReport> out;
    for (const auto& e : suite_table())
        if (e.compatible(alg)) out.push_back(run_suite(e.name, algebra, trials, seed, dims));
    return out;
}

} // namespace ncmod
