#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncmod/dmatrix.hpp"
#include "ncmod/rational.hpp"

namespace ncmod {

class AlgElem;

/**
 * Finite-dimensional algebra over the rationals, given by its structural
 * constants: e_i e_j = sum_k c(i,j,k) e_k. Immutable after creation.
 *
 * The constants table is stored dense (n^3 rationals); every classification
 * flag is derived from it at construction time.
 */
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    using Ptr = std::shared_ptr<const Algebra>;

    /// Validates and freezes an algebra. `constants` is indexed by
    /// (i*n + j)*n + k. A declared unit index is checked against the table
    /// and rejected when false.
    static Ptr create(std::string name, std::vector<std::string> basis_labels,
                      std::vector<Rational> constants,
                      std::optional<std::size_t> declared_unit = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }

    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim_ + j) * dim_ + k];
    }

    bool commutative() const { return commutative_; }
    bool associative() const { return associative_; }

    /// Index of the basis vector declared (and verified) as the unit.
    std::optional<std::size_t> unit_index() const { return unit_index_; }

    /// True when a two-sided unit element exists anywhere in the algebra,
    /// basis vector or not (the 2x2 matrix-unit algebra has unit E11+E22).
    bool has_unit() const { return unit_coords_.has_value(); }

    /// Coordinates of the unit element, when one exists.
    AlgElem unit() const;

    AlgElem basis_element(std::size_t i) const;
    AlgElem zero() const;
    AlgElem element(std::vector<Rational> coords) const;

    /// Arithmetic equivalence: same dimension and same constants table.
    static bool same(const Ptr& a, const Ptr& b);

private:
    Algebra() = default;

    std::string name_;
    std::size_t dim_ = 0;
    std::vector<std::string> basis_labels_;
    std::vector<Rational> constants_;
    std::optional<std::size_t> unit_index_;
    std::optional<std::vector<Rational>> unit_coords_;
    bool commutative_ = false;
    bool associative_ = false;
};

/// Element of an algebra, held as its coordinate vector in the algebra basis.
class AlgElem {
public:
    AlgElem(Algebra::Ptr algebra, std::vector<Rational> coords);

    const Algebra::Ptr& algebra() const { return alg_; }
    std::size_t dim() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& coord(std::size_t i) const { return coords_.at(i); }

    bool is_zero() const;

    /// Coordinate string "c0,c1,...,c(d-1)".
    std::string to_string() const;
    static AlgElem from_string(const Algebra::Ptr& algebra, std::string_view s);

    friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
    AlgElem operator-() const;
    /// Algebra product via the structural constants.
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    /// Central scalar action of the ground ring.
    friend AlgElem operator*(const Rational& d, const AlgElem& a);
    friend AlgElem operator*(const AlgElem& a, const Rational& d);

    friend bool operator==(const AlgElem& a, const AlgElem& b);
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

private:
    Algebra::Ptr alg_;
    std::vector<Rational> coords_;
};

/// Throws DomainError unless both elements live in the same algebra.
void require_same_algebra(const AlgElem& a, const AlgElem& b);

/// [a, b] = ab - ba.
AlgElem commutator(const AlgElem& a, const AlgElem& b);
/// (a, b, c) = (ab)c - a(bc).
AlgElem associator(const AlgElem& a, const AlgElem& b, const AlgElem& c);

/// Negates every non-unit coordinate; defined for algebras whose unit is a
/// basis vector. This is the conjugation used by the Cayley-Dickson doubling.
AlgElem conjugate(const AlgElem& a);

struct Classification {
    bool commutative;
    bool associative;
    std::size_t nucleus_dim;
    std::size_t center_dim;
};

/// Decides commutativity/associativity on basis pairs/triples and computes
/// nucleus and center dimensions as exact nullspace dimensions.
Classification classify(const Algebra::Ptr& algebra);

/// n x n matrix L(a) with L(a) coords(x) = coords(a x).
DMatrix left_regular(const AlgElem& a);
/// n x n matrix R(a) with R(a) coords(x) = coords(x a).
DMatrix right_regular(const AlgElem& a);

/// Checks the homomorphism condition f(e_i e_j) = f(e_i) f(e_j) for the
/// rational matrix f (columns indexed by A1 basis, rows by A2 basis).
bool check_algebra_hom(const DMatrix& f, const Algebra::Ptr& a1, const Algebra::Ptr& a2);

/// Returns the input unchanged when the algebra already has a unit;
/// otherwise adjoins one: A (+) D with product
/// (a + n)(b + m) = (ab + ma + nb) + nm and the unit at the last coordinate.
Algebra::Ptr unital_extension(const Algebra::Ptr& algebra);

/// Doubles an algebra by the Cayley-Dickson rule
/// (x, y)(u, v) = (xu - conj(v) y, vx + y conj(u)).
Algebra::Ptr cayley_dickson_double(const Algebra::Ptr& algebra, const std::string& name,
                                   std::vector<std::string> basis_labels);

/// Built-in algebras: rational, complex, quaternion, octonion, matrix2, zero1.
Algebra::Ptr load_builtin(const std::string& name);
std::vector<std::string> builtin_names();

} // namespace ncmod
