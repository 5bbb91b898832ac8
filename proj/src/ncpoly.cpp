#include "ncmod/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ncmod {

NCPoly::NCPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw DomainError("ncpoly: duplicate variable '" + vars_[i] + "'");
}

void NCPoly::add_term(const Word& word, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(word, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void NCPoly::require_same_alphabet(const NCPoly& other) const {
    if (vars_ != other.vars_)
        throw DomainError("ncpoly: operands have different variable alphabets");
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    a.require_same_alphabet(b);
    NCPoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    a.require_same_alphabet(b);
    NCPoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.require_same_alphabet(b);
    NCPoly out(a.vars_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

NCPoly operator*(const Rational& d, const NCPoly& a) {
    NCPoly out(a.vars_);
    for (const auto& [w, c] : a.terms_) out.add_term(w, d * c);
    return out;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

AlgElem NCPoly::evaluate(const std::vector<AlgElem>& point) const {
    if (point.empty()) throw DimensionError("ncpoly: empty evaluation point");
    const Algebra::Ptr& alg = point.front().algebra();
    AlgElem one = alg->unit();
    return evaluate_with<AlgElem>(
        point, alg->zero(), one,
        [](const Rational& d, const AlgElem& x) { return d * x; });
}

std::string word_to_string(const Word& word, const std::vector<std::string>& vars) {
    if (word.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < word.size()) {
        std::size_t run = 1;
        while (i + run < word.size() && word[i + run] == word[i]) ++run;
        if (!first) os << "*";
        os << vars.at(word[i]);
        if (run > 1) os << "^" << run;
        first = false;
        i += run;
    }
    return os.str();
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        if (c != Rational(1) || w.empty()) {
            os << c.to_string();
            if (!w.empty()) os << "*";
        }
        if (!w.empty()) os << word_to_string(w, vars_);
        first = false;
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars)
        : src_(src), vars_(vars) {}

    NCPoly parse() {
        NCPoly result = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial: " + msg + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9';
    }

    bool at_ident() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
            out.push_back(src_[pos_++]);
        if (out.empty()) fail("expected digits");
        return out;
    }

    Rational parse_coef() {
        skip_ws();
        bool neg = accept('-');
        std::string num = read_digits();
        std::string text = (neg ? "-" : "") + num;
        if (peek('/')) {
            // Only a fraction when digits follow; otherwise leave '/' alone.
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') {
                text += "/" + read_digits();
            } else {
                pos_ = save;
                fail("expected digits after '/'");
            }
        }
        return Rational::from_string(text);
    }

    std::string parse_ident() {
        skip_ws();
        if (!at_ident()) fail("expected variable name");
        std::string out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                      (c >= '0' && c <= '9') || c == '_';
            if (!ok) break;
            out.push_back(c);
            ++pos_;
        }
        return out;
    }

    NCPoly one_poly() {
        NCPoly p(vars_);
        p.add_term({}, Rational(1));
        return p;
    }

    NCPoly parse_factor() {
        skip_ws();
        if (accept('(')) {
            NCPoly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return maybe_power(std::move(inner));
        }
        std::size_t var_pos = pos_;
        std::string name = parse_ident();
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
            pos_ = var_pos;
            fail("unknown variable '" + name + "'");
        }
        NCPoly p(vars_);
        p.add_term({static_cast<std::uint32_t>(it - vars_.begin())}, Rational(1));
        return maybe_power(std::move(p));
    }

    NCPoly maybe_power(NCPoly base) {
        if (!accept('^')) return base;
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '-') fail("negative exponent");
        std::string digits = read_digits();
        if (digits.size() > 4) fail("exponent too large");
        unsigned long n = std::stoul(digits);
        NCPoly acc = one_poly();
        for (unsigned long i = 0; i < n; ++i) acc = acc * base;
        return acc;
    }

    bool factor_follows() {
        skip_ws();
        return at_ident() || peek('(');
    }

    NCPoly parse_term() {
        NCPoly acc = one_poly();
        if (at_digit() || peek('-')) {
            acc = parse_coef() * acc;
            accept('*');
        }
        if (!factor_follows()) fail("expected variable or '('");
        acc = acc * parse_factor();
        while (true) {
            bool starred = accept('*');
            if (factor_follows()) {
                acc = acc * parse_factor();
            } else if (starred) {
                fail("expected variable or '(' after '*'");
            } else {
                break;
            }
        }
        return acc;
    }

    NCPoly parse_expr() {
        NCPoly acc = parse_term();
        while (true) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    const std::string& src_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

NCPoly parse_ncpoly(const std::string& src, const std::vector<std::string>& vars) {
    return Parser(src, vars).parse();
}

std::vector<std::pair<std::string, NCPoly>> parse_poly_map(const std::string& src,
                                                           const std::vector<std::string>& vars) {
    std::vector<std::pair<std::string, NCPoly>> out;
    std::size_t start = 0;
    while (start <= src.size()) {
        std::size_t semi = src.find(';', start);
        std::string piece =
            semi == std::string::npos ? src.substr(start) : src.substr(start, semi - start);
        bool blank = piece.find_first_not_of(" \t") == std::string::npos;
        if (!blank) {
            std::size_t eq = piece.find('=');
            if (eq == std::string::npos)
                throw ParseError("map: expected 'name = expr' in '" + piece + "'");
            std::string name = piece.substr(0, eq);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty()) throw ParseError("map: empty binding name");
            out.emplace_back(name, parse_ncpoly(piece.substr(eq + 1), vars));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (out.empty()) throw ParseError("map: no bindings");
    return out;
}

} // namespace ncmod
