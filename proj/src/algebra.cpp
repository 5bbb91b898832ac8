#include "ncmod/algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace ncmod {

namespace {

// Product of coordinate vectors through a raw constants table.
std::vector<Rational> table_mul(const std::vector<Rational>& constants, std::size_t n,
                                const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Rational ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = constants[(i * n + j) * n + k];
                if (!c.is_zero()) out[k] += ab * c;
            }
        }
    }
    return out;
}

std::optional<std::vector<Rational>> find_unit(const std::vector<Rational>& constants,
                                               std::size_t n) {
    if (n == 0) return std::nullopt;
    // u is a unit iff u e_j = e_j and e_j u = e_j for every j. Both families
    // are linear in the coordinates of u.
    DMatrix sys = dmatrix(2 * n * n, n);
    DMatrix rhs = dmatrix(2 * n * n, 1);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys(row, i) = constants[(i * n + j) * n + k];       // (u e_j)^k
                sys(row + 1, i) = constants[(j * n + i) * n + k];   // (e_j u)^k
            }
            Rational delta = (j == k) ? Rational(1) : Rational(0);
            rhs(row, 0) = delta;
            rhs(row + 1, 0) = delta;
            row += 2;
        }
    }
    LinearSolution sol = solve_linear(sys, rhs);
    if (sol.kind != SolutionKind::Unique) return std::nullopt;
    std::vector<Rational> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = sol.particular(i, 0);
    return u;
}

} // namespace

Algebra::Ptr Algebra::create(std::string name, std::vector<std::string> basis_labels,
                             std::vector<Rational> constants,
                             std::optional<std::size_t> declared_unit) {
    std::size_t n = basis_labels.size();
    if (constants.size() != n * n * n)
        throw DomainError("algebra: constants table must hold dim^3 entries");

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->name_ = std::move(name);
    alg->dim_ = n;
    alg->basis_labels_ = std::move(basis_labels);
    alg->constants_ = std::move(constants);

    // Flags straight from the table.
    alg->commutative_ = true;
    for (std::size_t i = 0; i < n && alg->commutative_; ++i)
        for (std::size_t j = 0; j < n && alg->commutative_; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (alg->constant(i, j, k) != alg->constant(j, i, k)) {
                    alg->commutative_ = false;
                    break;
                }

    auto basis_coords = [&](std::size_t i) {
        std::vector<Rational> c(n, Rational(0));
        c[i] = Rational(1);
        return c;
    };
    alg->associative_ = true;
    for (std::size_t i = 0; i < n && alg->associative_; ++i)
        for (std::size_t j = 0; j < n && alg->associative_; ++j)
            for (std::size_t k = 0; k < n && alg->associative_; ++k) {
                auto ij = table_mul(alg->constants_, n, basis_coords(i), basis_coords(j));
                auto jk = table_mul(alg->constants_, n, basis_coords(j), basis_coords(k));
                if (table_mul(alg->constants_, n, ij, basis_coords(k)) !=
                    table_mul(alg->constants_, n, basis_coords(i), jk))
                    alg->associative_ = false;
            }

    alg->unit_coords_ = find_unit(alg->constants_, n);

    if (declared_unit) {
        std::size_t u = *declared_unit;
        if (u >= n) throw DomainError("algebra: unit index out of range");
        bool ok = alg->unit_coords_.has_value();
        if (ok)
            for (std::size_t i = 0; i < n; ++i) {
                Rational want = (i == u) ? Rational(1) : Rational(0);
                if ((*alg->unit_coords_)[i] != want) { ok = false; break; }
            }
        if (!ok)
            throw DomainError("algebra '" + alg->name_ + "': declared unit index " +
                              std::to_string(u) + " is not a unit");
        alg->unit_index_ = u;
    } else if (alg->unit_coords_) {
        // Remember when the unit happens to be a basis vector.
        for (std::size_t i = 0; i < n; ++i) {
            bool is_basis = true;
            for (std::size_t j = 0; j < n; ++j) {
                Rational want = (j == i) ? Rational(1) : Rational(0);
                if ((*alg->unit_coords_)[j] != want) { is_basis = false; break; }
            }
            if (is_basis) { alg->unit_index_ = i; break; }
        }
    }
    return alg;
}

AlgElem Algebra::unit() const {
    if (!unit_coords_) throw DomainError("algebra '" + name_ + "' has no unit");
    return AlgElem(shared_from_this(), *unit_coords_);
}

AlgElem Algebra::basis_element(std::size_t i) const {
    if (i >= dim_) throw DomainError("algebra: basis index out of range");
    std::vector<Rational> c(dim_, Rational(0));
    c[i] = Rational(1);
    return AlgElem(shared_from_this(), std::move(c));
}

AlgElem Algebra::zero() const {
    return AlgElem(shared_from_this(), std::vector<Rational>(dim_, Rational(0)));
}

AlgElem Algebra::element(std::vector<Rational> coords) const {
    return AlgElem(shared_from_this(), std::move(coords));
}

bool Algebra::same(const Ptr& a, const Ptr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->dim_ == b->dim_ && a->constants_ == b->constants_;
}

AlgElem::AlgElem(Algebra::Ptr algebra, std::vector<Rational> coords)
    : alg_(std::move(algebra)), coords_(std::move(coords)) {
    if (!alg_) throw DomainError("element: null algebra");
    if (coords_.size() != alg_->dim())
        throw DimensionError("element: coordinate count differs from algebra dimension");
}

bool AlgElem::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

std::string AlgElem::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i == 0 ? "" : ",") << coords_[i].to_string();
    return os.str();
}

AlgElem AlgElem::from_string(const Algebra::Ptr& algebra, std::string_view s) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
        coords.push_back(Rational::from_string(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (coords.size() != algebra->dim())
        throw ParseError("element '" + std::string(s) + "': expected " +
                         std::to_string(algebra->dim()) + " coordinates, got " +
                         std::to_string(coords.size()));
    return AlgElem(algebra, std::move(coords));
}

void require_same_algebra(const AlgElem& a, const AlgElem& b) {
    if (!Algebra::same(a.algebra(), b.algebra()))
        throw DomainError("elements belong to different algebras");
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    require_same_algebra(a, b);
    std::vector<Rational> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return AlgElem(a.alg_, std::move(c));
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    require_same_algebra(a, b);
    std::vector<Rational> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return AlgElem(a.alg_, std::move(c));
}

AlgElem AlgElem::operator-() const {
    std::vector<Rational> c(coords_);
    for (auto& x : c) x = -x;
    return AlgElem(alg_, std::move(c));
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    require_same_algebra(a, b);
    std::size_t n = a.alg_->dim();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords_[j].is_zero()) continue;
            Rational ab = a.coords_[i] * b.coords_[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = a.alg_->constant(i, j, k);
                if (!c.is_zero()) out[k] += ab * c;
            }
        }
    }
    return AlgElem(a.alg_, std::move(out));
}

AlgElem operator*(const Rational& d, const AlgElem& a) {
    std::vector<Rational> c(a.coords_);
    for (auto& x : c) x *= d;
    return AlgElem(a.alg_, std::move(c));
}

AlgElem operator*(const AlgElem& a, const Rational& d) { return d * a; }

bool operator==(const AlgElem& a, const AlgElem& b) {
    return Algebra::same(a.alg_, b.alg_) && a.coords_ == b.coords_;
}

AlgElem commutator(const AlgElem& a, const AlgElem& b) { return a * b - b * a; }

AlgElem associator(const AlgElem& a, const AlgElem& b, const AlgElem& c) {
    return (a * b) * c - a * (b * c);
}

AlgElem conjugate(const AlgElem& a) {
    auto u = a.algebra()->unit_index();
    if (!u)
        throw DomainError("conjugate: algebra has no basis-vector unit");
    std::vector<Rational> c(a.coords());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != *u) c[i] = -c[i];
    return AlgElem(a.algebra(), std::move(c));
}

Classification classify(const Algebra::Ptr& algebra) {
    std::size_t n = algebra->dim();
    Classification out{};

    // Basis-level checks, independent of the table-derived flags.
    out.commutative = true;
    for (std::size_t i = 0; i < n && out.commutative; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!commutator(algebra->basis_element(i), algebra->basis_element(j)).is_zero()) {
                out.commutative = false;
                break;
            }
    out.associative = true;
    for (std::size_t i = 0; i < n && out.associative; ++i)
        for (std::size_t j = 0; j < n && out.associative; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!associator(algebra->basis_element(i), algebra->basis_element(j),
                                algebra->basis_element(k))
                         .is_zero()) {
                    out.associative = false;
                    break;
                }

    // Nucleus: a with (a,e_j,e_k) = (e_j,a,e_k) = (e_j,e_k,a) = 0. Each
    // condition is linear in a; row (j,k,l,slot) has the l-th coordinate of
    // the associator with e_i in the given slot as the coefficient of a^i.
    std::size_t conds = 3 * n * n * n;
    DMatrix nucleus_sys = dmatrix(conds, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            AlgElem ej = algebra->basis_element(j);
            AlgElem ek = algebra->basis_element(k);
            for (std::size_t i = 0; i < n; ++i) {
                AlgElem ei = algebra->basis_element(i);
                AlgElem s0 = associator(ei, ej, ek);
                AlgElem s1 = associator(ej, ei, ek);
                AlgElem s2 = associator(ej, ek, ei);
                for (std::size_t l = 0; l < n; ++l) {
                    nucleus_sys(row + l, i) = s0.coord(l);
                    nucleus_sys(row + n + l, i) = s1.coord(l);
                    nucleus_sys(row + 2 * n + l, i) = s2.coord(l);
                }
            }
            row += 3 * n;
        }
    out.nucleus_dim = n - rank(nucleus_sys);

    // Center: nucleus conditions plus [a, e_j] = 0.
    DMatrix center_sys = dmatrix(conds + n * n, n);
    for (std::size_t r = 0; r < conds; ++r)
        for (std::size_t c = 0; c < n; ++c) center_sys(r, c) = nucleus_sys(r, c);
    row = conds;
    for (std::size_t j = 0; j < n; ++j) {
        AlgElem ej = algebra->basis_element(j);
        for (std::size_t i = 0; i < n; ++i) {
            AlgElem com = commutator(algebra->basis_element(i), ej);
            for (std::size_t l = 0; l < n; ++l) center_sys(row + l, i) = com.coord(l);
        }
        row += n;
    }
    out.center_dim = n - rank(center_sys);
    return out;
}

DMatrix left_regular(const AlgElem& a) {
    std::size_t n = a.algebra()->dim();
    DMatrix m = dmatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        AlgElem col = a * a.algebra()->basis_element(j);
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col.coord(k);
    }
    return m;
}

DMatrix right_regular(const AlgElem& a) {
    std::size_t n = a.algebra()->dim();
    DMatrix m = dmatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        AlgElem col = a.algebra()->basis_element(j) * a;
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col.coord(k);
    }
    return m;
}

namespace {

AlgElem apply_qmatrix(const DMatrix& f, const Algebra::Ptr& target, const AlgElem& x) {
    std::vector<Rational> out(f.rows(), Rational(0));
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (!f(r, c).is_zero() && !x.coord(c).is_zero())
                out[r] += f(r, c) * x.coord(c);
    return target->element(std::move(out));
}

} // namespace

bool check_algebra_hom(const DMatrix& f, const Algebra::Ptr& a1, const Algebra::Ptr& a2) {
    if (f.cols() != a1->dim() || f.rows() != a2->dim())
        throw DimensionError("check_algebra_hom: matrix shape must be dim(A2) x dim(A1)");
    for (std::size_t i = 0; i < a1->dim(); ++i)
        for (std::size_t j = 0; j < a1->dim(); ++j) {
            AlgElem lhs = apply_qmatrix(f, a2, a1->basis_element(i) * a1->basis_element(j));
            AlgElem rhs = apply_qmatrix(f, a2, a1->basis_element(i)) *
                          apply_qmatrix(f, a2, a1->basis_element(j));
            if (lhs != rhs) return false;
        }
    return true;
}

Algebra::Ptr unital_extension(const Algebra::Ptr& algebra) {
    if (algebra->has_unit()) return algebra;
    std::size_t n = algebra->dim();
    std::size_t m = n + 1;
    std::vector<Rational> c(m * m * m, Rational(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return c[(i * m + j) * m + k];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) at(i, j, k) = algebra->constant(i, j, k);
    // Adjoint unit at the last coordinate: e_i * 1 = 1 * e_i = e_i, 1 * 1 = 1.
    for (std::size_t i = 0; i < n; ++i) {
        at(i, n, i) = Rational(1);
        at(n, i, i) = Rational(1);
    }
    at(n, n, n) = Rational(1);

    std::vector<std::string> labels = algebra->basis_labels();
    labels.push_back("1");
    return Algebra::create(algebra->name() + "_unital", std::move(labels), std::move(c), n);
}

Algebra::Ptr cayley_dickson_double(const Algebra::Ptr& algebra, const std::string& name,
                                   std::vector<std::string> basis_labels) {
    if (!algebra->unit_index())
        throw DomainError("cayley_dickson_double: algebra needs a basis-vector unit");
    std::size_t n = algebra->dim();
    std::size_t m = 2 * n;
    if (basis_labels.size() != m)
        throw DomainError("cayley_dickson_double: need 2*dim labels");

    // Basis of the double: (e_p, 0) for p < n, (0, e_{p-n}) for p >= n.
    auto first = [&](std::size_t p) {
        return p < n ? algebra->basis_element(p) : algebra->zero();
    };
    auto second = [&](std::size_t p) {
        return p < n ? algebra->zero() : algebra->basis_element(p - n);
    };

    std::vector<Rational> c(m * m * m, Rational(0));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            AlgElem x = first(p), y = second(p), u = first(q), v = second(q);
            AlgElem re = x * u - conjugate(v) * y;
            AlgElem im = v * x + y * conjugate(u);
            for (std::size_t k = 0; k < n; ++k) {
                c[(p * m + q) * m + k] = re.coord(k);
                c[(p * m + q) * m + (n + k)] = im.coord(k);
            }
        }
    return Algebra::create(name, std::move(basis_labels), std::move(c),
                           algebra->unit_index());
}

namespace {

Algebra::Ptr make_rational_algebra() {
    return Algebra::create("rational", {"1"}, {Rational(1)}, 0);
}

Algebra::Ptr make_complex() {
    std::size_t n = 2;
    std::vector<Rational> c(n * n * n, Rational(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return c[(i * n + j) * n + k];
    };
    at(0, 0, 0) = Rational(1);
    at(0, 1, 1) = Rational(1);
    at(1, 0, 1) = Rational(1);
    at(1, 1, 0) = Rational(-1);
    return Algebra::create("complex", {"1", "i"}, std::move(c), 0);
}

Algebra::Ptr make_matrix2() {
    // Basis E11, E12, E21, E22 with E_ab E_cd = delta_bc E_ad.
    std::size_t n = 4;
    std::vector<Rational> c(n * n * n, Rational(0));
    auto idx = [](std::size_t a, std::size_t b) { return 2 * a + b; }; // a,b in {0,1}
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t d = 0; d < 2; ++d)
                c[(idx(a, b) * n + idx(b, d)) * n + idx(a, d)] = Rational(1);
    return Algebra::create("matrix2", {"E11", "E12", "E21", "E22"}, std::move(c));
}

Algebra::Ptr make_zero1() {
    return Algebra::create("zero1", {"eps"}, {Rational(0)});
}

} // namespace

namespace {

Algebra::Ptr build_builtin(std::map<std::string, Algebra::Ptr>& cache, const std::string& name) {
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;

    Algebra::Ptr alg;
    if (name == "rational") {
        alg = make_rational_algebra();
    } else if (name == "complex") {
        alg = make_complex();
    } else if (name == "quaternion") {
        alg = cayley_dickson_double(build_builtin(cache, "complex"), "quaternion",
                                    {"1", "i", "j", "k"});
    } else if (name == "octonion") {
        alg = cayley_dickson_double(build_builtin(cache, "quaternion"), "octonion",
                                    {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"});
    } else if (name == "matrix2") {
        alg = make_matrix2();
    } else if (name == "zero1") {
        alg = make_zero1();
    } else {
        throw DomainError("unknown algebra '" + name + "'");
    }
    cache[name] = alg;
    return alg;
}

} // namespace

Algebra::Ptr load_builtin(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, Algebra::Ptr> cache;
    std::lock_guard<std::mutex> lock(mu);
    return build_builtin(cache, name);
}

std::vector<std::string> builtin_names() {
    return {"complex", "matrix2", "octonion", "quaternion", "rational", "zero1"};
}

} // namespace ncmod
