#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncmod/algebra.hpp"

namespace ncmod {

enum class Side { Left, Right };
enum class VecShape { Column, Row };

/// One of the four module orientations: scalars act from the left or right,
/// coordinates are arranged as a column or a row.
struct Orientation {
    Side side;
    VecShape shape;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.side == b.side && a.shape == b.shape;
    }
    friend bool operator!=(const Orientation& a, const Orientation& b) { return !(a == b); }
};

inline constexpr Orientation kLeftColumn{Side::Left, VecShape::Column};
inline constexpr Orientation kLeftRow{Side::Left, VecShape::Row};
inline constexpr Orientation kRightColumn{Side::Right, VecShape::Column};
inline constexpr Orientation kRightRow{Side::Right, VecShape::Row};

/// "left-column", "left-row", "right-column", "right-row".
std::string orientation_name(const Orientation& o);
Orientation orientation_from_name(const std::string& name);
std::vector<Orientation> all_orientations();

/// Tuple of algebra elements tagged with a module orientation. The shape is
/// bookkeeping for matrix conventions; the side fixes multiplication order.
class OrientedVector {
public:
    OrientedVector(Orientation orientation, std::vector<AlgElem> comps);

    const Orientation& orientation() const { return orient_; }
    const Algebra::Ptr& algebra() const { return comps_.front().algebra(); }
    std::size_t size() const { return comps_.size(); }
    const AlgElem& comp(std::size_t i) const { return comps_.at(i); }
    const std::vector<AlgElem>& comps() const { return comps_; }

    bool is_zero() const;

    friend OrientedVector operator+(const OrientedVector& a, const OrientedVector& b);
    friend OrientedVector operator-(const OrientedVector& a, const OrientedVector& b);
    friend bool operator==(const OrientedVector& a, const OrientedVector& b);
    friend bool operator!=(const OrientedVector& a, const OrientedVector& b) { return !(a == b); }

private:
    Orientation orient_;
    std::vector<AlgElem> comps_;
};

OrientedVector zero_vector(const Algebra::Ptr& algebra, Orientation o, std::size_t n);

/// Scalar action on a vector, multiplication side per the orientation.
OrientedVector scale(const AlgElem& a, const OrientedVector& v);
/// Ground-ring action (central, side-independent).
OrientedVector scale(const Rational& d, const OrientedVector& v);

/**
 * Linear combination of vectors with algebra coefficients. The orientation
 * side dictates the factor order componentwise: Left gives sum_i c_i * v_i,
 * Right gives sum_i v_i * c_i.
 */
OrientedVector contract(const std::vector<AlgElem>& coeffs,
                        const std::vector<OrientedVector>& vectors);

/// Ordered list of generators of a free submodule.
class Basis {
public:
    Basis(Orientation orientation, std::vector<OrientedVector> vectors);

    const Orientation& orientation() const { return orient_; }
    const Algebra::Ptr& algebra() const { return vectors_.front().algebra(); }
    std::size_t count() const { return vectors_.size(); }
    std::size_t vector_length() const { return vectors_.front().size(); }
    const std::vector<OrientedVector>& vectors() const { return vectors_; }

    /// True once the rank certificate has been computed and coordinates with
    /// respect to this basis are known to be unique.
    bool verified() const { return verified_; }

    /// Runs the rank certificate: the scalar extension of the basis must be
    /// linearly independent over the ground ring. Returns the new flag.
    bool verify();

private:
    Orientation orient_;
    std::vector<OrientedVector> vectors_;
    bool verified_ = false;
};

/// Expansion of coordinates in a basis; alias of contract with the basis
/// vectors as the combination.
OrientedVector expand(const Basis& basis, const std::vector<AlgElem>& coords);

enum class CoordsKind { Unique, NotInSpan, NonUnique };

/**
 * Result of coordinates(): Unique carries the coefficient tuple; NonUnique
 * carries a nonzero tuple annihilating the basis (coordinates of the zero
 * vector); NotInSpan carries nothing.
 */
struct CoordsResult {
    CoordsKind kind;
    std::vector<AlgElem> coords;
};

/// Solves v = combination(basis) exactly by linearizing each unknown algebra
/// coefficient into dim(A) rational unknowns.
CoordsResult coordinates(const OrientedVector& v, const Basis& basis);

struct BasisExtension {
    std::vector<OrientedVector> vectors;
    std::size_t rank_over_d;
};

/// All products of algebra basis elements with basis vectors (side per the
/// orientation) plus their rank over the ground ring after flattening.
BasisExtension extend_basis(const Basis& basis);

/// True iff v is a linear combination of the generators.
bool in_span(const OrientedVector& v, const std::vector<OrientedVector>& generators);

/// Flattens a vector of n algebra elements into an n*dim column of rationals.
DMatrix flatten(const OrientedVector& v);

} // namespace ncmod
