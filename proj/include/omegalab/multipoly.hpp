#pragma once

// Sparse multivariate polynomials over ExactInt with formal partial
// derivatives. Canonical form: no zero coefficients, exponent vectors
// unique, terms ordered graded-lexicographically (printing follows the
// same order, leading term first).

#include "omegalab/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace omegalab {

class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    // graded-lex, leading term first
    struct TermOrder {
        bool operator()(const Exponents& a, const Exponents& b) const {
            unsigned da = std::accumulate(a.begin(), a.end(), 0u);
            unsigned db = std::accumulate(b.begin(), b.end(), 0u);
            if (da != db) return da > db;
            return a > b;
        }
    };
    using TermMap = std::map<Exponents, ExactInt, TermOrder>;

    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const std::vector<std::string>& vars, ExactInt c) {
        MultiPoly p(vars);
        if (sgn(c) != 0) p.terms_.emplace(Exponents(vars.size(), 0), std::move(c));
        return p;
    }

    static MultiPoly var(const std::vector<std::string>& vars, const std::string& name) {
        MultiPoly p(vars);
        Exponents e(vars.size(), 0);
        e[p.index_of(name)] = 1;
        p.terms_.emplace(std::move(e), ExactInt(1));
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u) == 0);
    }

    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
        p.require_same(q);
        MultiPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly r = p;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
        p.require_same(q);
        MultiPoly r(p.vars_);
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_) {
                Exponents e(ep.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
                r.add_term(e, cp * cq);
            }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
    MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
    MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(vars_, 1);
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return p.vars_ == q.vars_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    // formal partial derivative
    MultiPoly partial(const std::string& name) const {
        size_t i = index_of(name);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents de = e;
            de[i] -= 1;
            r.add_term(de, c * ExactInt(static_cast<long>(e[i])));
        }
        return r;
    }

    // exact evaluation in the target ring; every variable must be assigned
    template <typename R, typename Map>
    R eval(const Map& assignment, const R& exemplar) const {
        std::vector<R> values;
        values.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("MultiPoly::eval: missing assignment for " + v);
            values.push_back(it->second);
        }
        R acc = zero_like(exemplar);
        for (const auto& [e, c] : terms_) {
            R t = from_exact_int_like(exemplar, c);
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned j = 0; j < e[i]; ++j) t *= values[i];
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            ExactInt mag = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
                first = false;
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            bool any_var = std::accumulate(e.begin(), e.end(), 0u) > 0;
            if (mag != 1 || !any_var) os << mag.get_str();
            bool need_star = mag != 1;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                os << vars_[i];
                if (e[i] > 1) os << "^" << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

private:
    friend MultiPoly exact_div(const MultiPoly&, const MultiPoly&);
    friend MultiPoly scale_exact(const MultiPoly&, const ExactRational&);

    size_t index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw std::invalid_argument("MultiPoly: unknown variable " + name);
        return static_cast<size_t>(it - vars_.begin());
    }

    void require_same(const MultiPoly& q) const {
        if (vars_ != q.vars_)
            throw std::invalid_argument("MultiPoly: mismatched variable universes");
    }

    void add_term(const Exponents& e, ExactInt c) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        } else if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.variables()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.variables(), 1); }
inline MultiPoly from_int_like(const MultiPoly& p, long v) {
    return MultiPoly::constant(p.variables(), ExactInt(v));
}
inline MultiPoly from_exact_int_like(const MultiPoly& p, const ExactInt& v) {
    return MultiPoly::constant(p.variables(), v);
}
inline bool is_zero(const MultiPoly& p) { return p.terms().empty(); }

// Division by a constant or a single monomial only; the identities we
// verify never need general polynomial division.
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (is_zero(b)) throw DivideByZero();
    if (b.terms().size() != 1)
        throw std::invalid_argument("MultiPoly exact_div: divisor must be a monomial");
    const auto& [be, bc] = *b.terms().begin();
    MultiPoly r(a.variables());
    for (const auto& [e, c] : a.terms()) {
        MultiPoly::Exponents qe(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < be[i]) throw NotDivisible(a.str() + " by " + b.str());
            qe[i] = e[i] - be[i];
        }
        r.add_term(qe, exact_div(c, bc));
    }
    return r;
}

inline MultiPoly scale_exact(const MultiPoly& p, const ExactRational& s) {
    MultiPoly r(p.variables());
    for (const auto& [e, c] : p.terms())
        r.add_term(e, exact_div(ExactInt(c * s.get_num()), s.get_den()));
    return r;
}

}  // namespace omegalab
