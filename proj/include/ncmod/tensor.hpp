#pragma once

#include <string>
#include <vector>

#include "ncmod/algebra.hpp"
#include "ncmod/ncpoly.hpp"

namespace ncmod {

/// One summand of a tensor: scale * (a (x) b).
struct TensorTerm {
    Rational scale;
    AlgElem a;
    AlgElem b;
};

/**
 * Formal sum of a (x) b terms acting on an associative algebra by
 * (a (x) b) o c = (a c) b. Terms are not canonicalized; equality is
 * extensional, through the induced rational matrix.
 */
class Tensor {
public:
    /// Drops terms with zero scale or a zero factor.
    Tensor(Algebra::Ptr algebra, std::vector<TensorTerm> terms);

    static Tensor zero(Algebra::Ptr algebra) { return Tensor(std::move(algebra), {}); }
    /// 1 (x) 1; needs a unital algebra.
    static Tensor identity(const Algebra::Ptr& algebra);

    const Algebra::Ptr& algebra() const { return alg_; }
    const std::vector<TensorTerm>& terms() const { return terms_; }

    friend Tensor operator+(const Tensor& s, const Tensor& t);
    friend Tensor operator*(const Rational& d, const Tensor& t);

    std::string to_string() const;

private:
    Algebra::Ptr alg_;
    std::vector<TensorTerm> terms_;
};

/// (a (x) b) o c with the bracketing (a c) b, summed over terms.
/// Rejects nonassociative algebras.
AlgElem tensor_apply(const Tensor& t, const AlgElem& c);

/// Composition rule (p0 (x) p1) o (q0 (x) q1) = (p0 q0) (x) (q1 p1),
/// extended bilinearly. Rejects nonassociative algebras.
Tensor tensor_compose(const Tensor& s, const Tensor& t);

/// The induced linear map as a dim x dim rational matrix. Tensor equality
/// is defined as equality of these matrices.
DMatrix tensor_to_map(const Tensor& t);

/// Extensional equality of the induced maps.
bool tensor_equal(const Tensor& s, const Tensor& t);

/// Tensor term with symbolic words in place of the factors; evaluation at a
/// point substitutes the words.
struct TensorPolyTerm {
    Rational scale;
    Word prefix;
    Word suffix;
};

/// Formal sum of symbolic prefix (x) suffix terms, the shape of a partial
/// derivative of a noncommutative polynomial.
class TensorPoly {
public:
    TensorPoly(std::vector<std::string> variables, std::vector<TensorPolyTerm> terms);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<TensorPolyTerm>& terms() const { return terms_; }

    /// Substitutes algebra elements for the variables; empty words become
    /// the unit.
    Tensor evaluate(const std::vector<AlgElem>& point) const;

    /// Terms joined by " + ", each "scale*(prefix ⊗ suffix)"; unit scales
    /// are omitted and empty words print as "1".
    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    std::vector<TensorPolyTerm> terms_;
};

/**
 * Partial derivative of a noncommutative polynomial: every occurrence of the
 * variable in a word contributes (prefix (x) suffix) with the word's
 * coefficient. Term order follows the polynomial's canonical term order,
 * occurrences left to right.
 */
TensorPoly differentiate(const NCPoly& p, const std::string& var);

/**
 * Derivative of a polynomial map applied to a displacement: component r is
 * sum_v (d p_r / d v at point) o displacement_v. Exact first-order behavior;
 * rejects nonassociative algebras.
 */
std::vector<AlgElem> jacobian_apply(const std::vector<NCPoly>& maps,
                                    const std::vector<AlgElem>& point,
                                    const std::vector<AlgElem>& displacement);

/**
 * First-order evaluation ring A[t]/(t^2): pairs (value, t-coefficient) with
 * (u0, u1)(v0, v1) = (u0 v0, u0 v1 + u1 v0). Evaluating a polynomial at
 * point + t*displacement yields the exact directional derivative in the
 * t-coefficient, independently of the symbolic differentiation path.
 */
struct Dual {
    AlgElem value;
    AlgElem deriv;

    friend Dual operator+(const Dual& u, const Dual& v) {
        return {u.value + v.value, u.deriv + v.deriv};
    }
    friend Dual operator*(const Dual& u, const Dual& v) {
        return {u.value * v.value, u.value * v.deriv + u.deriv * v.value};
    }
};

Dual dual_constant(const AlgElem& x);

/// Evaluates p at (point_i + t * displacement_i) over A[t]/(t^2).
Dual evaluate_dual(const NCPoly& p, const std::vector<AlgElem>& point,
                   const std::vector<AlgElem>& displacement);

} // namespace ncmod
