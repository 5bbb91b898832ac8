#pragma once

#include <optional>
#include <vector>

#include "ncmod/amodule.hpp"
#include "ncmod/genmatrix.hpp"

namespace ncmod {

using AlgMatrix = GenMatrix<AlgElem>;

/**
 * Homomorphism of oriented modules, presented as a matrix of target-algebra
 * elements. The matrix is stored m x n with entry (k, i) carrying target
 * index k and source index i, for every orientation.
 *
 * An optional algebra homomorphism (a rational matrix, checked against the
 * structural constants) lets the source module live over a different
 * algebra; coordinates are pushed through it before the matrix acts.
 */
class ModuleHom {
public:
    /// Same-algebra homomorphism.
    ModuleHom(Orientation orientation, AlgMatrix matrix);

    /// Cross-algebra homomorphism; `alg_hom` maps source coordinates into
    /// the target algebra and must satisfy the homomorphism condition.
    ModuleHom(Orientation orientation, AlgMatrix matrix, Algebra::Ptr source_algebra,
              DMatrix alg_hom);

    const Orientation& orientation() const { return orient_; }
    std::size_t source_dim() const { return matrix_.cols(); }
    std::size_t target_dim() const { return matrix_.rows(); }
    const AlgMatrix& matrix() const { return matrix_; }
    const Algebra::Ptr& target_algebra() const { return target_alg_; }
    const Algebra::Ptr& source_algebra() const { return source_alg_; }
    const std::optional<DMatrix>& alg_hom() const { return alg_hom_; }

    /// Image coordinates of a coordinate tuple. Multiplication order per the
    /// orientation side: Left puts the vector factor first, Right the matrix
    /// entry first.
    std::vector<AlgElem> apply(const std::vector<AlgElem>& v) const;

private:
    Orientation orient_;
    AlgMatrix matrix_;
    Algebra::Ptr target_alg_;
    Algebra::Ptr source_alg_;
    std::optional<DMatrix> alg_hom_;
};

/// Entrywise sum; requires equal orientation, shape, algebras and alg_hom.
ModuleHom hom_sum(const ModuleHom& g, const ModuleHom& h);

/// Negated matrix.
ModuleHom hom_negate(const ModuleHom& g);

/// Composite with apply(hom_compose(h, g), v) = apply(h, apply(g, v)).
ModuleHom hom_compose(const ModuleHom& h, const ModuleHom& g);

/// Identity homomorphism on an n-dimensional module (needs a unital algebra).
ModuleHom hom_identity(const Algebra::Ptr& algebra, Orientation o, std::size_t n);

} // namespace ncmod
