#ifndef MIXMULT_BHATTACHARYA_HPP
#define MIXMULT_BHATTACHARYA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixmult/fields.hpp"
#include "mixmult/monomial_ideal.hpp"

namespace mixmult {

// Type (k_1,...,k_s; k_0+1) of a mixed multiplicity.
struct MixedType {
    std::vector<int> k; // (k_1..k_s)
    int k0_plus_1 = 1;

    MixedType() = default;
    MixedType(std::vector<int> kk, int k0p1);

    int k0() const { return k0_plus_1 - 1; }
    int s() const { return static_cast<int>(k.size()); }
    int arity() const { return s() + 1; }
    int total() const;
    int sum_k() const;

    std::string to_string() const; // "k1,..,ks;k0+1"

    friend bool operator==(const MixedType& a, const MixedType& b) {
        return a.k == b.k && a.k0_plus_1 == b.k0_plus_1;
    }
};

struct AnalysisContext {
    int d = 0; // dim A/H
    int q = 0; // dim of the I-saturated quotient
    int h = 0; // ht((I+H)/H)
    int s = 0; // number of non-primary ideals
};

// Exact polynomial in (n_0..n_s) recovered from the sampled length
// function; exponent tuples are ordered (J slot first).
struct InterpolatedPolynomial {
    int arity = 0;
    long long offset = 0;
    std::map<std::vector<int>, Rat> coeffs; // no zero coefficients stored

    int total_degree() const;
    Rat coefficient(const std::vector<int>& alpha) const;
    Rat evaluate(const std::vector<long long>& point) const;

    bool same_polynomial(const InterpolatedPolynomial& o) const { return coeffs == o.coeffs; }
};

struct BhattacharyaOptions {
    std::optional<long long> offset_override;
    int max_doublings = 6;
    long long guard = kDefaultLengthGuard;
};

// d, q, h for the data (J; I_1..I_s; H). Requires J m-primary, H proper,
// and the product of the I_i proper, nonzero, and not inside rad(H).
AnalysisContext analyze(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                        const MonomialIdeal& H);

// Base offset for sampling windows: the largest generator degree in sight.
long long default_offset(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                         const MonomialIdeal& H);

// One value of the length function: with P = J^{n0} I_1^{n1} ... I_s^{ns},
// the monomial count of P \ (J P + H).
long long sample_length_function(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                                 const MonomialIdeal& H, const std::vector<long long>& point,
                                 long long guard = kDefaultLengthGuard);

// Unique polynomial of total degree <= D through samples on the simplex
// grid {offset + a : |a| <= D}; exact rational solve.
InterpolatedPolynomial interpolate(const std::map<std::vector<long long>, long long>& samples,
                                   int D, int arity, long long offset);

struct MixedValue {
    long long value = 0;
    int degree = 0;        // certified total degree (= q - 1)
    long long offset = 0;  // stabilized base offset
    InterpolatedPolynomial interpolant;
};

MixedValue mixed_multiplicity_full(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                                   const MonomialIdeal& H, const MixedType& type,
                                   const BhattacharyaOptions& opts = {});

long long mixed_multiplicity(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                             const MonomialIdeal& H, const MixedType& type,
                             const BhattacharyaOptions& opts = {});

} // namespace mixmult

#endif
