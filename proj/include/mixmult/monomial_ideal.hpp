#ifndef MIXMULT_MONOMIAL_IDEAL_HPP
#define MIXMULT_MONOMIAL_IDEAL_HPP

#include <vector>

#include "mixmult/monomial.hpp"

namespace mixmult {

inline constexpr long long kDefaultLengthGuard = 10'000'000;

// Monomial ideal held by its minimal generating set, kept sorted for
// deterministic output. The empty set is the zero ideal; {1} is the unit
// ideal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars); }
    static MonomialIdeal unit(int nvars) {
        return MonomialIdeal(nvars, {Monomial(nvars)});
    }

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;

    int max_generator_degree() const;

    // Equality of ideals (mutual membership of generators).
    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

// The cyclic module A/H; H must be proper.
struct QuotientModule {
    MonomialIdeal H;

    explicit QuotientModule(MonomialIdeal kernel);
};

// Prime generated by a subset of the variables; height = subset size.
struct CoordinatePrime {
    std::vector<int> vars; // sorted ascending

    int height() const { return static_cast<int>(vars.size()); }
    bool contains_var(int v) const;
    // p contains monomial m iff some variable of p divides m.
    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& I) const;
    bool subset_of(const CoordinatePrime& other) const;
    MonomialIdeal to_ideal(int nvars) const;

    friend bool operator==(const CoordinatePrime& a, const CoordinatePrime& b) { return a.vars == b.vars; }
    friend bool operator<(const CoordinatePrime& a, const CoordinatePrime& b) {
        if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
        return a.vars < b.vars;
    }
};

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_power(const MonomialIdeal& I, int n);

// {m : m * J <= I}; J nonzero for saturate.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J);

// Minimal primes of a proper nonzero ideal, computed as minimal vertex
// covers of the hypergraph of generator supports.
std::vector<CoordinatePrime> minimal_primes(const MonomialIdeal& I);

// Same computation but the zero ideal is allowed and yields {(0)}.
std::vector<CoordinatePrime> minimal_primes_allowing_zero(const MonomialIdeal& I);

// dim A/H for proper H; dim A/0 = nvars.
int dim_quotient(const MonomialIdeal& H);

// ht((I+H)/H) computed over coordinate-prime chains; requires I+H and H
// proper.
int height_in_quotient(const MonomialIdeal& I, const MonomialIdeal& H);

// Every variable appears as a pure power among the generators.
bool is_m_primary(const MonomialIdeal& I);

// Exact count of monomials in P but not in Q+H, by staircase BFS; requires
// Q contained in P. Throws LengthOverflow past the guard.
long long count_quotient_length(const MonomialIdeal& P, const MonomialIdeal& Q,
                                const MonomialIdeal& H,
                                long long guard = kDefaultLengthGuard);

std::string to_string(const MonomialIdeal& I, const VariableSet& vars);
std::string to_string(const CoordinatePrime& p, const VariableSet& vars);

} // namespace mixmult

#endif
