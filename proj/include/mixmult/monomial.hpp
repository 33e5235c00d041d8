#ifndef MIXMULT_MONOMIAL_HPP
#define MIXMULT_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixmult/errors.hpp"

namespace mixmult {

// Ordered list of distinct variable identifiers; its size is the ambient
// dimension of the ring.
struct VariableSet {
    std::vector<std::string> names;

    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> ns);

    int dim() const { return static_cast<int>(names.size()); }
    std::optional<int> index_of(const std::string& name) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names == b.names; }
};

// A point of N^d: the exponent vector of a monomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps);

    static Monomial variable(int nvars, int index, std::int32_t power = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    std::int32_t exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }
    int total_degree() const;
    bool is_one() const;
    std::vector<int> support() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::vector<std::int32_t> e_;
};

// a | b componentwise.
bool monomial_divides(const Monomial& a, const Monomial& b);
// b / a; requires a | b.
Monomial monomial_quotient(const Monomial& b, const Monomial& a);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

// Fixed storage order (plain lex on exponent vectors), used for canonical
// containers; unrelated to term orders.
struct MonomialLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exponents() < b.exponents();
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ULL;
        for (std::int32_t e : m.exponents()) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b9ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::string to_string(const Monomial& m, const VariableSet& vars);

} // namespace mixmult

#endif
