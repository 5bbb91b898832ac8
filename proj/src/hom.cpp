#include "ncmod/hom.hpp"

namespace ncmod {

namespace {

Algebra::Ptr entries_algebra(const AlgMatrix& m) {
    const Algebra::Ptr& alg = m.zero_value().algebra();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            require_same_algebra(m.zero_value(), m(i, j));
    return alg;
}

AlgElem map_through(const DMatrix& f, const Algebra::Ptr& target, const AlgElem& x) {
    std::vector<Rational> out(f.rows(), Rational(0));
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (!f(r, c).is_zero() && !x.coord(c).is_zero())
                out[r] += f(r, c) * x.coord(c);
    return target->element(std::move(out));
}

} // namespace

ModuleHom::ModuleHom(Orientation orientation, AlgMatrix matrix)
    : orient_(orientation), matrix_(std::move(matrix)),
      target_alg_(entries_algebra(matrix_)), source_alg_(target_alg_) {
    if (matrix_.rows() == 0 || matrix_.cols() == 0)
        throw DimensionError("hom: matrix must be nonempty");
}

ModuleHom::ModuleHom(Orientation orientation, AlgMatrix matrix, Algebra::Ptr source_algebra,
                     DMatrix alg_hom)
    : orient_(orientation), matrix_(std::move(matrix)),
      target_alg_(entries_algebra(matrix_)), source_alg_(std::move(source_algebra)),
      alg_hom_(std::move(alg_hom)) {
    if (matrix_.rows() == 0 || matrix_.cols() == 0)
        throw DimensionError("hom: matrix must be nonempty");
    if (alg_hom_->cols() != source_alg_->dim() || alg_hom_->rows() != target_alg_->dim())
        throw DimensionError("hom: algebra map shape must be dim(target) x dim(source)");
    if (!check_algebra_hom(*alg_hom_, source_alg_, target_alg_))
        throw DomainError("hom: matrix fails the algebra homomorphism condition");
}

std::vector<AlgElem> ModuleHom::apply(const std::vector<AlgElem>& v) const {
    if (v.size() != source_dim())
        throw DimensionError("hom apply: expected " + std::to_string(source_dim()) +
                             " coordinates");
    std::vector<AlgElem> mapped;
    mapped.reserve(v.size());
    for (const auto& c : v) {
        require_same_algebra(c, source_alg_->zero());
        mapped.push_back(alg_hom_ ? map_through(*alg_hom_, target_alg_, c) : c);
    }
    std::vector<AlgElem> out;
    out.reserve(target_dim());
    for (std::size_t k = 0; k < target_dim(); ++k) {
        AlgElem acc = target_alg_->zero();
        for (std::size_t i = 0; i < source_dim(); ++i)
            acc = acc + (orient_.side == Side::Left ? mapped[i] * matrix_(k, i)
                                                    : matrix_(k, i) * mapped[i]);
        out.push_back(std::move(acc));
    }
    return out;
}

namespace {

void require_same_alg_hom(const ModuleHom& g, const ModuleHom& h) {
    bool ga = g.alg_hom().has_value(), ha = h.alg_hom().has_value();
    if (ga != ha || (ga && !(*g.alg_hom() == *h.alg_hom())))
        throw DomainError("hom_sum: algebra maps differ");
}

} // namespace

ModuleHom hom_sum(const ModuleHom& g, const ModuleHom& h) {
    if (g.orientation() != h.orientation())
        throw DomainError("hom_sum: orientation mismatch");
    if (g.source_dim() != h.source_dim() || g.target_dim() != h.target_dim())
        throw DimensionError("hom_sum: shape mismatch");
    if (!Algebra::same(g.target_algebra(), h.target_algebra()) ||
        !Algebra::same(g.source_algebra(), h.source_algebra()))
        throw DomainError("hom_sum: algebra mismatch");
    require_same_alg_hom(g, h);
    if (g.alg_hom())
        return ModuleHom(g.orientation(), mat_sum(g.matrix(), h.matrix()),
                         g.source_algebra(), *g.alg_hom());
    return ModuleHom(g.orientation(), mat_sum(g.matrix(), h.matrix()));
}

ModuleHom hom_negate(const ModuleHom& g) {
    if (g.alg_hom())
        return ModuleHom(g.orientation(), negate(g.matrix()), g.source_algebra(),
                         *g.alg_hom());
    return ModuleHom(g.orientation(), negate(g.matrix()));
}

ModuleHom hom_compose(const ModuleHom& h, const ModuleHom& g) {
    if (g.orientation() != h.orientation())
        throw DomainError("hom_compose: orientation mismatch");
    if (g.target_dim() != h.source_dim())
        throw DimensionError("hom_compose: inner dimensions differ");
    if (!Algebra::same(g.target_algebra(), h.source_algebra()))
        throw DomainError("hom_compose: inner algebras differ");

    const Algebra::Ptr& target = h.target_algebra();
    // Entries of g pushed through h's algebra map, if any, so the composite
    // matrix lives over the final target algebra.
    auto g_entry = [&](std::size_t m, std::size_t i) {
        return h.alg_hom() ? map_through(*h.alg_hom(), target, g.matrix()(m, i))
                           : g.matrix()(m, i);
    };

    AlgMatrix f(h.target_dim(), g.source_dim(), target->zero());
    for (std::size_t k = 0; k < h.target_dim(); ++k)
        for (std::size_t i = 0; i < g.source_dim(); ++i) {
            AlgElem acc = target->zero();
            for (std::size_t m = 0; m < h.source_dim(); ++m)
                acc = acc + (g.orientation().side == Side::Left
                                 ? g_entry(m, i) * h.matrix()(k, m)
                                 : h.matrix()(k, m) * g_entry(m, i));
            f(k, i) = std::move(acc);
        }

    bool ga = g.alg_hom().has_value(), ha = h.alg_hom().has_value();
    if (!ga && !ha) return ModuleHom(g.orientation(), std::move(f));
    DMatrix composite = ga && ha ? rc_product(*h.alg_hom(), *g.alg_hom())
                       : ga      ? *g.alg_hom()
                                 : *h.alg_hom();
    return ModuleHom(g.orientation(), std::move(f), g.source_algebra(), std::move(composite));
}

ModuleHom hom_identity(const Algebra::Ptr& algebra, Orientation o, std::size_t n) {
    return ModuleHom(o, identity(n, algebra->unit(), algebra->zero()));
}

} // namespace ncmod
