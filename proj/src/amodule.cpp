#include "ncmod/amodule.hpp"

namespace ncmod {

std::string orientation_name(const Orientation& o) {
    std::string side = o.side == Side::Left ? "left" : "right";
    std::string shape = o.shape == VecShape::Column ? "column" : "row";
    return side + "-" + shape;
}

Orientation orientation_from_name(const std::string& name) {
    for (const Orientation& o : all_orientations())
        if (orientation_name(o) == name) return o;
    throw ParseError("unknown orientation '" + name + "'");
}

std::vector<Orientation> all_orientations() {
    return {kLeftColumn, kLeftRow, kRightColumn, kRightRow};
}

OrientedVector::OrientedVector(Orientation orientation, std::vector<AlgElem> comps)
    : orient_(orientation), comps_(std::move(comps)) {
    if (comps_.empty())
        throw DimensionError("vector: needs at least one component");
    for (std::size_t i = 1; i < comps_.size(); ++i)
        require_same_algebra(comps_[0], comps_[i]);
}

bool OrientedVector::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void require_compatible(const OrientedVector& a, const OrientedVector& b) {
    if (a.orientation() != b.orientation())
        throw DomainError("vectors have different orientations");
    if (a.size() != b.size())
        throw DimensionError("vectors have different lengths");
    require_same_algebra(a.comp(0), b.comp(0));
}

} // namespace

OrientedVector operator+(const OrientedVector& a, const OrientedVector& b) {
    require_compatible(a, b);
    std::vector<AlgElem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.comp(i) + b.comp(i));
    return OrientedVector(a.orientation(), std::move(out));
}

OrientedVector operator-(const OrientedVector& a, const OrientedVector& b) {
    require_compatible(a, b);
    std::vector<AlgElem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.comp(i) - b.comp(i));
    return OrientedVector(a.orientation(), std::move(out));
}

bool operator==(const OrientedVector& a, const OrientedVector& b) {
    return a.orient_ == b.orient_ && a.comps_ == b.comps_;
}

OrientedVector zero_vector(const Algebra::Ptr& algebra, Orientation o, std::size_t n) {
    return OrientedVector(o, std::vector<AlgElem>(n, algebra->zero()));
}

OrientedVector scale(const AlgElem& a, const OrientedVector& v) {
    std::vector<AlgElem> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(v.orientation().side == Side::Left ? a * v.comp(i) : v.comp(i) * a);
    return OrientedVector(v.orientation(), std::move(out));
}

OrientedVector scale(const Rational& d, const OrientedVector& v) {
    std::vector<AlgElem> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(d * v.comp(i));
    return OrientedVector(v.orientation(), std::move(out));
}

OrientedVector contract(const std::vector<AlgElem>& coeffs,
                        const std::vector<OrientedVector>& vectors) {
    if (coeffs.size() != vectors.size())
        throw DimensionError("contract: coefficient and vector counts differ");
    if (vectors.empty())
        throw DimensionError("contract: empty combination");
    for (std::size_t i = 1; i < vectors.size(); ++i) require_compatible(vectors[0], vectors[i]);
    for (const auto& c : coeffs) require_same_algebra(c, vectors[0].comp(0));

    OrientedVector acc = scale(coeffs[0], vectors[0]);
    for (std::size_t i = 1; i < vectors.size(); ++i)
        acc = acc + scale(coeffs[i], vectors[i]);
    return acc;
}

Basis::Basis(Orientation orientation, std::vector<OrientedVector> vectors)
    : orient_(orientation), vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw DimensionError("basis: needs at least one vector");
    for (const auto& v : vectors_) {
        if (v.orientation() != orient_)
            throw DomainError("basis: vector orientation differs from basis orientation");
        if (v.size() != vectors_.front().size())
            throw DimensionError("basis: vectors have different lengths");
        require_same_algebra(v.comp(0), vectors_.front().comp(0));
    }
}

DMatrix flatten(const OrientedVector& v) {
    std::size_t d = v.algebra()->dim();
    DMatrix out = dmatrix(v.size() * d, 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t k = 0; k < d; ++k) out(i * d + k, 0) = v.comp(i).coord(k);
    return out;
}

namespace {

// Product of an algebra element with a vector, multiplication side per the
// orientation: the coefficient side for Left is c * v, for Right v * c.
OrientedVector side_product(const AlgElem& c, const OrientedVector& v) {
    return scale(c, v);
}

// Columns of the linearized system: flatten(e_k . v_i) for each basis vector
// v_i and algebra basis element e_k, so that the combination with rational
// unknowns x_{ik} reproduces contract() with coefficients sum_k x_{ik} e_k.
DMatrix linearized_columns(const std::vector<OrientedVector>& vectors) {
    const Algebra::Ptr& alg = vectors.front().algebra();
    std::size_t d = alg->dim();
    std::size_t n = vectors.front().size();
    DMatrix m = dmatrix(n * d, vectors.size() * d);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t k = 0; k < d; ++k) {
            DMatrix col = flatten(side_product(alg->basis_element(k), vectors[i]));
            for (std::size_t r = 0; r < n * d; ++r) m(r, i * d + k) = col(r, 0);
        }
    return m;
}

std::vector<AlgElem> repack(const Algebra::Ptr& alg, const DMatrix& flat, std::size_t count) {
    std::size_t d = alg->dim();
    std::vector<AlgElem> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Rational> coords(d);
        for (std::size_t k = 0; k < d; ++k) coords[k] = flat(i * d + k, 0);
        out.push_back(alg->element(std::move(coords)));
    }
    return out;
}

} // namespace

bool Basis::verify() {
    DMatrix m = linearized_columns(vectors_);
    verified_ = rank(m) == m.cols();
    return verified_;
}

OrientedVector expand(const Basis& basis, const std::vector<AlgElem>& coords) {
    return contract(coords, basis.vectors());
}

CoordsResult coordinates(const OrientedVector& v, const Basis& basis) {
    if (v.orientation() != basis.orientation())
        throw DomainError("coordinates: orientation mismatch");
    require_same_algebra(v.comp(0), basis.vectors().front().comp(0));
    if (v.size() != basis.vector_length())
        throw DimensionError("coordinates: vector length differs from basis");

    const Algebra::Ptr& alg = v.algebra();
    DMatrix m = linearized_columns(basis.vectors());
    LinearSolution sol = solve_linear(m, flatten(v));
    switch (sol.kind) {
    case SolutionKind::NoSolution:
        return {CoordsKind::NotInSpan, {}};
    case SolutionKind::Unique:
        return {CoordsKind::Unique, repack(alg, sol.particular, basis.count())};
    case SolutionKind::Infinite:
        return {CoordsKind::NonUnique, repack(alg, sol.nullspace_basis.front(), basis.count())};
    }
    throw Error("coordinates: unreachable");
}

BasisExtension extend_basis(const Basis& basis) {
    const Algebra::Ptr& alg = basis.algebra();
    std::size_t d = alg->dim();
    BasisExtension out;
    out.vectors.reserve(basis.count() * d);
    for (std::size_t i = 0; i < basis.count(); ++i)
        for (std::size_t k = 0; k < d; ++k)
            out.vectors.push_back(side_product(alg->basis_element(k), basis.vectors()[i]));

    DMatrix flat = dmatrix(basis.vector_length() * d, out.vectors.size());
    for (std::size_t c = 0; c < out.vectors.size(); ++c) {
        DMatrix col = flatten(out.vectors[c]);
        for (std::size_t r = 0; r < flat.rows(); ++r) flat(r, c) = col(r, 0);
    }
    out.rank_over_d = rank(flat);
    return out;
}

bool in_span(const OrientedVector& v, const std::vector<OrientedVector>& generators) {
    if (generators.empty()) return v.is_zero();
    for (const auto& g : generators) {
        if (g.orientation() != v.orientation())
            throw DomainError("in_span: orientation mismatch");
        if (g.size() != v.size())
            throw DimensionError("in_span: vector length mismatch");
        require_same_algebra(g.comp(0), v.comp(0));
    }
    DMatrix m = linearized_columns(generators);
    LinearSolution sol = solve_linear(m, flatten(v));
    return sol.kind != SolutionKind::NoSolution;
}

} // namespace ncmod
