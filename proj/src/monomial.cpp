#include "mixmult/monomial.hpp"

#include <set>

namespace mixmult {

VariableSet::VariableSet(std::vector<std::string> ns) : names(std::move(ns)) {
    if (names.empty()) {
        throw Error(ErrorKind::UnsupportedInput, "variable set must be non-empty");
    }
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) {
        throw Error(ErrorKind::UnsupportedInput, "variable names must be distinct");
    }
}

std::optional<int> VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

Monomial::Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {
    for (std::int32_t v : e_) {
        if (v < 0) throw Error(ErrorKind::UnsupportedInput, "negative exponent");
    }
}

Monomial Monomial::variable(int nvars, int index, std::int32_t power) {
    Monomial m(nvars);
    m.e_[static_cast<std::size_t>(index)] = power;
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (std::int32_t v : e_) d += v;
    return d;
}

bool Monomial::is_one() const {
    for (std::int32_t v : e_) {
        if (v != 0) return false;
    }
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i) {
        if (e_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    }
    return s;
}

namespace {
void check_same_dim(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) {
        throw Error(ErrorKind::DimensionMismatch, "monomials over different variable sets");
    }
}
} // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b);
    std::vector<std::int32_t> e(a.exponents());
    for (int i = 0; i < b.nvars(); ++i) e[static_cast<std::size_t>(i)] += b.exp(i);
    return Monomial(std::move(e));
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b);
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) > b.exp(i)) return false;
    }
    return true;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    check_same_dim(a, b);
    std::vector<std::int32_t> e(static_cast<std::size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) > b.exp(i)) {
            throw Error(ErrorKind::Internal, "monomial quotient of non-multiple");
        }
        e[static_cast<std::size_t>(i)] = b.exp(i) - a.exp(i);
    }
    return Monomial(std::move(e));
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b);
    std::vector<std::int32_t> e(static_cast<std::size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) e[static_cast<std::size_t>(i)] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b);
    std::vector<std::int32_t> e(static_cast<std::size_t>(a.nvars()));
    for (int i = 0; i < a.nvars(); ++i) e[static_cast<std::size_t>(i)] = std::min(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

std::string to_string(const Monomial& m, const VariableSet& vars) {
    if (m.is_one()) return "1";
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.names[static_cast<std::size_t>(i)];
        if (m.exp(i) > 1) out += "^" + std::to_string(m.exp(i));
    }
    return out;
}

} // namespace mixmult
