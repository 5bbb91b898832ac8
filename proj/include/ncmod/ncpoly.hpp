#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncmod/algebra.hpp"

namespace ncmod {

/// A word over the variable alphabet, stored fully expanded (x^3 = x x x).
using Word = std::vector<std::uint32_t>;

/// Orders words by length first, then lexicographically.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/**
 * Polynomial in noncommuting variables with rational coefficients: a finite
 * weighted sum of words. The zero polynomial has no terms.
 */
class NCPoly {
public:
    explicit NCPoly(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Word, Rational, WordOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * word; drops the term when the total vanishes.
    void add_term(const Word& word, const Rational& coeff);

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    /// Order-preserving product: words concatenate.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Rational& d, const NCPoly& a);
    friend bool operator==(const NCPoly& a, const NCPoly& b);
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Evaluation with one carrier value per variable. The carrier needs
    /// +, * and an explicit zero/one (constants map to multiples of one).
    template <typename Elem>
    Elem evaluate_with(const std::vector<Elem>& point, const Elem& zero, const Elem& one,
                       auto scale) const {
        if (point.size() != vars_.size())
            throw DimensionError("ncpoly: point size differs from variable count");
        Elem acc = zero;
        for (const auto& [word, coeff] : terms_) {
            Elem prod = one;
            for (std::uint32_t v : word) prod = prod * point[v];
            acc = acc + scale(coeff, prod);
        }
        return acc;
    }

    /// Evaluation at algebra elements (left-bracketed products).
    AlgElem evaluate(const std::vector<AlgElem>& point) const;

    std::string to_string() const;

private:
    void require_same_alphabet(const NCPoly& other) const;

    std::vector<std::string> vars_;
    std::map<Word, Rational, WordOrder> terms_;
};

/// Renders a word with '*' separators and exponents for runs ("x*z^2");
/// the empty word renders as "1".
std::string word_to_string(const Word& word, const std::vector<std::string>& vars);

/**
 * Parses the polynomial grammar
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := [coef '*'?] factor ('*'? factor)*
 *   factor := var ('^' nat)? | '(' expr ')'
 *   coef   := int | int '/' posint
 *
 * over the given variable alphabet. Juxtaposition and '*' both denote the
 * noncommutative product; factor order is preserved. Errors carry the
 * offending position.
 */
NCPoly parse_ncpoly(const std::string& src, const std::vector<std::string>& vars);

/// A named system of polynomials, "name = expr; name = expr; ...".
std::vector<std::pair<std::string, NCPoly>> parse_poly_map(const std::string& src,
                                                           const std::vector<std::string>& vars);

} // namespace ncmod
