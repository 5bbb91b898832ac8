#include "ncmod/tensor.hpp"

#include <sstream>

namespace ncmod {

namespace {

void require_associative(const Algebra::Ptr& alg, const char* op) {
    if (!alg->associative())
        throw DomainError(std::string(op) + ": algebra '" + alg->name() +
                          "' is not associative");
}

} // namespace

Tensor::Tensor(Algebra::Ptr algebra, std::vector<TensorTerm> terms) : alg_(std::move(algebra)) {
    for (auto& t : terms) {
        require_same_algebra(t.a, alg_->zero());
        require_same_algebra(t.b, alg_->zero());
        if (t.scale.is_zero() || t.a.is_zero() || t.b.is_zero()) continue;
        terms_.push_back(std::move(t));
    }
}

Tensor Tensor::identity(const Algebra::Ptr& algebra) {
    AlgElem one = algebra->unit();
    return Tensor(algebra, {{Rational(1), one, one}});
}

Tensor operator+(const Tensor& s, const Tensor& t) {
    if (!Algebra::same(s.alg_, t.alg_)) throw DomainError("tensor: algebra mismatch");
    std::vector<TensorTerm> terms = s.terms_;
    terms.insert(terms.end(), t.terms_.begin(), t.terms_.end());
    return Tensor(s.alg_, std::move(terms));
}

Tensor operator*(const Rational& d, const Tensor& t) {
    std::vector<TensorTerm> terms = t.terms_;
    for (auto& term : terms) term.scale = d * term.scale;
    return Tensor(t.alg_, std::move(terms));
}

std::string Tensor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        if (terms_[i].scale != Rational(1)) os << terms_[i].scale.to_string() << "\u00b7";
        os << "(" << terms_[i].a.to_string() << " ⊗ " << terms_[i].b.to_string() << ")";
    }
    return os.str();
}

AlgElem tensor_apply(const Tensor& t, const AlgElem& c) {
    require_associative(t.algebra(), "tensor_apply");
    require_same_algebra(c, t.algebra()->zero());
    AlgElem acc = t.algebra()->zero();
    for (const auto& term : t.terms())
        acc = acc + term.scale * ((term.a * c) * term.b);
    return acc;
}

Tensor tensor_compose(const Tensor& s, const Tensor& t) {
    require_associative(s.algebra(), "tensor_compose");
    if (!Algebra::same(s.algebra(), t.algebra()))
        throw DomainError("tensor_compose: algebra mismatch");
    std::vector<TensorTerm> terms;
    terms.reserve(s.terms().size() * t.terms().size());
    for (const auto& p : s.terms())
        for (const auto& q : t.terms())
            terms.push_back({p.scale * q.scale, p.a * q.a, q.b * p.b});
    return Tensor(s.algebra(), std::move(terms));
}

DMatrix tensor_to_map(const Tensor& t) {
    require_associative(t.algebra(), "tensor_to_map");
    std::size_t n = t.algebra()->dim();
    DMatrix m = dmatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        AlgElem img = tensor_apply(t, t.algebra()->basis_element(c));
        for (std::size_t r = 0; r < n; ++r) m(r, c) = img.coord(r);
    }
    return m;
}

bool tensor_equal(const Tensor& s, const Tensor& t) {
    if (!Algebra::same(s.algebra(), t.algebra())) return false;
    return tensor_to_map(s) == tensor_to_map(t);
}

TensorPoly::TensorPoly(std::vector<std::string> variables, std::vector<TensorPolyTerm> terms)
    : vars_(std::move(variables)) {
    for (auto& t : terms) {
        if (t.scale.is_zero()) continue;
        terms_.push_back(std::move(t));
    }
}

Tensor TensorPoly::evaluate(const std::vector<AlgElem>& point) const {
    if (point.size() != vars_.size())
        throw DimensionError("tensor poly: point size differs from variable count");
    if (point.empty()) throw DimensionError("tensor poly: empty point");
    const Algebra::Ptr& alg = point.front().algebra();
    AlgElem one = alg->unit();
    auto eval_word = [&](const Word& w) {
        AlgElem acc = one;
        for (std::uint32_t v : w) acc = acc * point[v];
        return acc;
    };
    std::vector<TensorTerm> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_)
        terms.push_back({t.scale, eval_word(t.prefix), eval_word(t.suffix)});
    return Tensor(alg, std::move(terms));
}

std::string TensorPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        if (terms_[i].scale != Rational(1)) os << terms_[i].scale.to_string() << "\u00b7";
        os << "(" << word_to_string(terms_[i].prefix, vars_) << " ⊗ "
           << word_to_string(terms_[i].suffix, vars_) << ")";
    }
    return os.str();
}

TensorPoly differentiate(const NCPoly& p, const std::string& var) {
    std::uint32_t target = 0;
    bool found = false;
    for (std::size_t i = 0; i < p.variables().size(); ++i)
        if (p.variables()[i] == var) {
            target = static_cast<std::uint32_t>(i);
            found = true;
            break;
        }
    if (!found) throw DomainError("differentiate: unknown variable '" + var + "'");

    std::vector<TensorPolyTerm> terms;
    for (const auto& [word, coeff] : p.terms())
        for (std::size_t pos = 0; pos < word.size(); ++pos) {
            if (word[pos] != target) continue;
            Word prefix(word.begin(), word.begin() + pos);
            Word suffix(word.begin() + pos + 1, word.end());
            terms.push_back({coeff, std::move(prefix), std::move(suffix)});
        }
    return TensorPoly(p.variables(), std::move(terms));
}

std::vector<AlgElem> jacobian_apply(const std::vector<NCPoly>& maps,
                                    const std::vector<AlgElem>& point,
                                    const std::vector<AlgElem>& displacement) {
    if (maps.empty()) throw DimensionError("jacobian: empty map list");
    const std::vector<std::string>& vars = maps.front().variables();
    for (const auto& m : maps)
        if (m.variables() != vars) throw DomainError("jacobian: maps disagree on variables");
    if (point.size() != vars.size() || displacement.size() != vars.size())
        throw DimensionError("jacobian: point/displacement size differs from variable count");
    const Algebra::Ptr& alg = point.front().algebra();
    require_associative(alg, "jacobian_apply");

    std::vector<AlgElem> out;
    out.reserve(maps.size());
    for (const auto& m : maps) {
        AlgElem acc = alg->zero();
        for (std::size_t v = 0; v < vars.size(); ++v) {
            Tensor partial = differentiate(m, vars[v]).evaluate(point);
            acc = acc + tensor_apply(partial, displacement[v]);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Dual dual_constant(const AlgElem& x) { return {x, x.algebra()->zero()}; }

Dual evaluate_dual(const NCPoly& p, const std::vector<AlgElem>& point,
                   const std::vector<AlgElem>& displacement) {
    if (point.size() != displacement.size())
        throw DimensionError("evaluate_dual: point/displacement sizes differ");
    if (point.empty()) throw DimensionError("evaluate_dual: empty point");
    const Algebra::Ptr& alg = point.front().algebra();
    std::vector<Dual> dual_point;
    dual_point.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        dual_point.push_back({point[i], displacement[i]});
    Dual zero{alg->zero(), alg->zero()};
    Dual one{alg->unit(), alg->zero()};
    return p.evaluate_with<Dual>(
        dual_point, zero, one,
        [](const Rational& d, const Dual& x) { return Dual{d * x.value, d * x.deriv}; });
}

} // namespace ncmod
