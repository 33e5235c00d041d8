#ifndef MIXMULT_POLYNOMIAL_HPP
#define MIXMULT_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/fields.hpp"
#include "mixmult/monomial.hpp"
#include "mixmult/term_order.hpp"

namespace mixmult {

// Exact polynomial with coefficients in K (Fp or Rat). Terms are kept in a
// fixed canonical container with no zero coefficients, so equality is
// structural; term orders enter only when a lead term is requested.
template <class K>
class Polynomial {
public:
    using TermMap = std::map<Monomial, K, MonomialLexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial from_term(const Monomial& m, const K& c) {
        Polynomial p(m.nvars());
        p.add_term(m, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const K& c) {
        if (mixmult::is_zero(c)) return;
        if (m.nvars() != nvars_) {
            throw Error(ErrorKind::DimensionMismatch, "term over a different variable set");
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (mixmult::is_zero(it->second)) terms_.erase(it);
        }
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [m, c] : terms_) {
            if (d == -2) {
                d = m.total_degree();
            } else if (m.total_degree() != d) {
                return false;
            }
        }
        return true;
    }

    std::pair<Monomial, K> lead_term(const TermOrder& order) const {
        if (terms_.empty()) throw Error(ErrorKind::Internal, "lead term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
            if (order.compare(it->first, best->first) > 0) best = it;
        }
        return {best->first, best->second};
    }

    K evaluate(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != nvars_) {
            throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong arity");
        }
        K acc{};
        bool first = true;
        for (const auto& [m, c] : terms_) {
            K term = c;
            for (int i = 0; i < nvars_; ++i) {
                for (std::int32_t e = 0; e < m.exp(i); ++e) term = term * point[static_cast<std::size_t>(i)];
            }
            acc = first ? term : acc + term;
            first = false;
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        }
        return r;
    }

    Polynomial times_term(const Monomial& m, const K& c) const {
        Polynomial r(nvars_);
        if (mixmult::is_zero(c)) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
        return r;
    }

    Polynomial scaled(const K& c) const {
        Polynomial r(nvars_);
        if (mixmult::is_zero(c)) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm, cc * c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    static void check_compatible(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) {
            throw Error(ErrorKind::DimensionMismatch, "polynomials over different variable sets");
        }
    }

    int nvars_;
    TermMap terms_;
};

// Terms printed in grevlex-descending order, so the text form is canonical.
template <class K>
std::string to_string(const Polynomial<K>& p, const VariableSet& vars) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, K>> ts(p.terms().begin(), p.terms().end());
    TermOrder ord = TermOrder::grevlex();
    std::sort(ts.begin(), ts.end(), [&ord](const auto& a, const auto& b) {
        return ord.compare(a.first, b.first) > 0;
    });
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::string cs = coeff_to_string(ts[i].second);
        bool neg = !cs.empty() && cs[0] == '-';
        if (i == 0) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        std::string ms = to_string(ts[i].first, vars);
        if (ms == "1") {
            out += cs;
        } else if (cs == "1") {
            out += ms;
        } else {
            out += cs + "*" + ms;
        }
    }
    return out;
}

} // namespace mixmult

#endif
