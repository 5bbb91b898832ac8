#pragma once

#include <memory>
#include <utility>

#include "ncmod/genmatrix.hpp"

namespace ncmod {

/**
 * Immutable expression tree over matrices: leaves, transpose, the two
 * products and sums. Evaluation is strict bottom-up; the only rewrite is
 * dualize(), which swaps the two products and transposes every leaf.
 */
template <typename Carrier>
class MatExpr {
public:
    enum class Kind { Leaf, Transpose, Rc, Cr, Sum };
    using Ptr = std::shared_ptr<const MatExpr>;

    static Ptr leaf(GenMatrix<Carrier> m) {
        return Ptr(new MatExpr(Kind::Leaf, std::move(m), nullptr, nullptr));
    }
    static Ptr transposed(Ptr e) {
        return Ptr(new MatExpr(Kind::Transpose, std::move(e), nullptr));
    }
    static Ptr rc(Ptr a, Ptr b) {
        return Ptr(new MatExpr(Kind::Rc, std::move(a), std::move(b)));
    }
    static Ptr cr(Ptr a, Ptr b) {
        return Ptr(new MatExpr(Kind::Cr, std::move(a), std::move(b)));
    }
    static Ptr sum(Ptr a, Ptr b) {
        return Ptr(new MatExpr(Kind::Sum, std::move(a), std::move(b)));
    }

    Kind kind() const { return kind_; }
    const GenMatrix<Carrier>& matrix() const { return *leaf_; }
    const Ptr& lhs() const { return lhs_; }
    const Ptr& rhs() const { return rhs_; }

private:
    MatExpr(Kind kind, GenMatrix<Carrier> m, Ptr, Ptr)
        : kind_(kind), leaf_(std::make_shared<GenMatrix<Carrier>>(std::move(m))) {}
    MatExpr(Kind kind, Ptr a, Ptr b) : kind_(kind), lhs_(std::move(a)), rhs_(std::move(b)) {}

    Kind kind_;
    std::shared_ptr<const GenMatrix<Carrier>> leaf_;
    Ptr lhs_, rhs_;
};

/// Shape of the expression's value; throws DimensionError at the first
/// node whose children do not fit together.
template <typename C>
std::pair<std::size_t, std::size_t> expr_shape(const typename MatExpr<C>::Ptr& e) {
    switch (e->kind()) {
    case MatExpr<C>::Kind::Leaf:
        return {e->matrix().rows(), e->matrix().cols()};
    case MatExpr<C>::Kind::Transpose: {
        auto s = expr_shape<C>(e->lhs());
        return {s.second, s.first};
    }
    case MatExpr<C>::Kind::Rc: {
        auto a = expr_shape<C>(e->lhs());
        auto b = expr_shape<C>(e->rhs());
        if (a.second != b.first) throw DimensionError("matexpr: rc node shape mismatch");
        return {a.first, b.second};
    }
    case MatExpr<C>::Kind::Cr: {
        auto a = expr_shape<C>(e->lhs());
        auto b = expr_shape<C>(e->rhs());
        if (a.first != b.second) throw DimensionError("matexpr: cr node shape mismatch");
        return {b.first, a.second};
    }
    case MatExpr<C>::Kind::Sum: {
        auto a = expr_shape<C>(e->lhs());
        auto b = expr_shape<C>(e->rhs());
        if (a != b) throw DimensionError("matexpr: sum node shape mismatch");
        return a;
    }
    }
    throw Error("matexpr: corrupt node");
}

template <typename C>
GenMatrix<C> eval_node(const typename MatExpr<C>::Ptr& e) {
    switch (e->kind()) {
    case MatExpr<C>::Kind::Leaf:
        return e->matrix();
    case MatExpr<C>::Kind::Transpose:
        return transpose(eval_node<C>(e->lhs()));
    case MatExpr<C>::Kind::Rc:
        return rc_product(eval_node<C>(e->lhs()), eval_node<C>(e->rhs()));
    case MatExpr<C>::Kind::Cr:
        return cr_product(eval_node<C>(e->lhs()), eval_node<C>(e->rhs()));
    case MatExpr<C>::Kind::Sum:
        return mat_sum(eval_node<C>(e->lhs()), eval_node<C>(e->rhs()));
    }
    throw Error("matexpr: corrupt node");
}

/// Strict bottom-up evaluation; shapes are validated across the whole tree
/// before any carrier arithmetic runs.
template <typename C>
GenMatrix<C> eval(const typename MatExpr<C>::Ptr& e) {
    expr_shape<C>(e);
    return eval_node<C>(e);
}

/// Duality rewrite: transpose every leaf and swap the two products.
/// Evaluates to the transpose of the original expression's value.
template <typename C>
typename MatExpr<C>::Ptr dualize(const typename MatExpr<C>::Ptr& e) {
    switch (e->kind()) {
    case MatExpr<C>::Kind::Leaf:
        return MatExpr<C>::leaf(transpose(e->matrix()));
    case MatExpr<C>::Kind::Transpose:
        return MatExpr<C>::transposed(dualize<C>(e->lhs()));
    case MatExpr<C>::Kind::Rc:
        return MatExpr<C>::cr(dualize<C>(e->lhs()), dualize<C>(e->rhs()));
    case MatExpr<C>::Kind::Cr:
        return MatExpr<C>::rc(dualize<C>(e->lhs()), dualize<C>(e->rhs()));
    case MatExpr<C>::Kind::Sum:
        return MatExpr<C>::sum(dualize<C>(e->lhs()), dualize<C>(e->rhs()));
    }
    throw Error("matexpr: corrupt node");
}

} // namespace ncmod
