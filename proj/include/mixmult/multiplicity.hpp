#ifndef MIXMULT_MULTIPLICITY_HPP
#define MIXMULT_MULTIPLICITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/reductions.hpp"

namespace mixmult {

struct MultiplicityResult {
    enum class Method { HilbertSamuelInterpolation, Additivity };

    long long value = 0;
    Method method = Method::HilbertSamuelInterpolation;
    std::vector<std::pair<long long, long long>> samples; // (n, colength)
};

struct MultiplicityOptions {
    std::optional<long long> offset_override;
    int max_doublings = 6;
    long long guard = kDefaultLengthGuard;
};

const char* method_name(MultiplicityResult::Method m);

// All products of n generators (with repetition).
template <class K>
PolyIdeal<K> poly_ideal_power(const PolyIdeal<K>& I, int n) {
    if (n < 0) throw Error(ErrorKind::UnsupportedInput, "negative ideal power");
    if (I.is_zero()) {
        if (n == 0) throw Error(ErrorKind::Internal, "unit power of the zero ideal needs a coefficient");
        return I;
    }
    const auto& gens = I.generators();
    const std::size_t m = gens.size();
    const K one = unit_coeff_like(gens.front().terms().begin()->second);
    if (n == 0) {
        return PolyIdeal<K>(I.nvars(), {Polynomial<K>::from_term(Monomial(I.nvars()), one)});
    }
    // Powers of each generator, memoized.
    std::vector<std::vector<Polynomial<K>>> pows(m);
    for (std::size_t i = 0; i < m; ++i) {
        pows[i].push_back(Polynomial<K>::from_term(Monomial(I.nvars()), one));
    }
    auto gen_pow = [&](std::size_t i, int e) -> const Polynomial<K>& {
        while (static_cast<int>(pows[i].size()) <= e) {
            pows[i].push_back(pows[i].back() * gens[i]);
        }
        return pows[i][static_cast<std::size_t>(e)];
    };
    std::vector<Polynomial<K>> out;
    std::vector<int> expo(m, 0);
    // Enumerate compositions of n into m parts.
    auto rec = [&](auto&& self, std::size_t idx, int rest) -> void {
        if (idx + 1 == m) {
            expo[idx] = rest;
            Polynomial<K> prod = gen_pow(0, expo[0]);
            for (std::size_t i = 1; i < m; ++i) prod = prod * gen_pow(i, expo[i]);
            out.push_back(std::move(prod));
            if (out.size() > 200000) {
                throw Error(ErrorKind::UnsupportedInput, "ideal power has too many generator products");
            }
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            expo[idx] = e;
            self(self, idx + 1, rest - e);
        }
    };
    rec(rec, 0, n);
    return PolyIdeal<K>(I.nvars(), std::move(out));
}

// Hilbert-Samuel multiplicity e(q; A/H): sample the colengths of
// q^{n+1} + H, fit the degree-d polynomial exactly, certify by agreement at
// consecutive offsets, return d! times the leading coefficient.
template <class K>
MultiplicityResult hilbert_samuel(const PolyIdeal<K>& q, const MonomialIdeal& H,
                                  const MultiplicityOptions& opts = {}) {
    if (!H.is_proper()) {
        throw Error(ErrorKind::UnsupportedInput, "module kernel is the unit ideal");
    }
    if (q.is_zero()) {
        throw Error(ErrorKind::NotMPrimary, "zero ideal has infinite colength");
    }
    for (const Polynomial<K>& g : q.generators()) {
        if (!g.is_homogeneous()) {
            throw Error(ErrorKind::UnsupportedInput, "parameter ideal generators must be homogeneous");
        }
    }
    const int d = dim_quotient(H);
    if (d <= 0) {
        throw Error(ErrorKind::UnsupportedInput, "dim A/H must be positive");
    }
    const K one = unit_coeff_like(q.generators().front().terms().begin()->second);
    PolyIdeal<K> Hp = to_poly_ideal(H, one);
    if (!colength(poly_ideal_sum(q, Hp), opts.guard).has_value()) {
        throw Error(ErrorKind::NotMPrimary, "q + H has infinite colength");
    }

    long long degree_base = 1;
    for (const Polynomial<K>& g : q.generators()) {
        degree_base = std::max<long long>(degree_base, g.total_degree());
    }
    degree_base = std::max<long long>(degree_base, H.max_generator_degree());
    long long N = opts.offset_override.value_or(degree_base);

    auto colength_at = [&](long long n) -> long long {
        PolyIdeal<K> power = poly_ideal_power(q, static_cast<int>(n) + 1);
        std::optional<long long> c = colength(poly_ideal_sum(power, Hp), opts.guard);
        if (!c) throw Error(ErrorKind::Internal, "power of an m-primary ideal has infinite colength");
        return *c;
    };

    for (int round = 0;; ++round) {
        std::vector<std::pair<long long, long long>> samples;
        std::map<std::vector<long long>, long long> grid0, grid1;
        for (long long n = N; n <= N + d + 1; ++n) {
            long long c = colength_at(n);
            samples.emplace_back(n, c);
            if (n <= N + d) grid0.emplace(std::vector<long long>{n}, c);
            if (n >= N + 1) grid1.emplace(std::vector<long long>{n}, c);
        }
        InterpolatedPolynomial f0 = interpolate(grid0, d, 1, N);
        InterpolatedPolynomial f1 = interpolate(grid1, d, 1, N + 1);
        if (f0.same_polynomial(f1)) {
            Rat lead = f0.coefficient(std::vector<int>{d});
            Rat e = lead;
            for (int f = 2; f <= d; ++f) e *= f;
            e.canonicalize();
            if (e.get_den() != 1 || e <= 0) {
                throw Error(ErrorKind::StabilityFailure,
                            "leading coefficient " + rat_to_string(lead) +
                                " does not give a positive integer multiplicity");
            }
            MultiplicityResult res;
            res.value = static_cast<long long>(e.get_num().get_si());
            res.method = MultiplicityResult::Method::HilbertSamuelInterpolation;
            res.samples = std::move(samples);
            return res;
        }
        if (round >= opts.max_doublings) {
            throw Error(ErrorKind::StabilityFailure,
                        "Hilbert-Samuel samples do not stabilize after " +
                            std::to_string(opts.max_doublings) + " doublings");
        }
        N *= 2;
    }
}

// e(R; A/H) for a system of parameters given as general elements.
template <class K>
MultiplicityResult multiplicity_symbol(const std::vector<GeneralElement<K>>& R,
                                       const MonomialIdeal& H,
                                       const MultiplicityOptions& opts = {}) {
    if (!H.is_proper()) {
        throw Error(ErrorKind::UnsupportedInput, "module kernel is the unit ideal");
    }
    const int d = dim_quotient(H);
    if (static_cast<int>(R.size()) != d) {
        throw Error(ErrorKind::NotSystemOfParameters,
                    "sequence has " + std::to_string(R.size()) + " elements, dim M = " + std::to_string(d));
    }
    std::vector<Polynomial<K>> gens;
    for (const GeneralElement<K>& e : R) gens.push_back(e.poly);
    PolyIdeal<K> q(H.nvars(), std::move(gens));
    if (q.is_zero()) {
        throw Error(ErrorKind::NotSystemOfParameters, "sequence generates the zero ideal");
    }
    const K one = unit_coeff_like(q.generators().front().terms().begin()->second);
    if (!colength(poly_ideal_sum(q, to_poly_ideal(H, one)), opts.guard).has_value()) {
        throw Error(ErrorKind::NotSystemOfParameters, "sequence ideal has infinite colength on M");
    }
    return hilbert_samuel(q, H, opts);
}

// Length of the localization (A/H)_p at a minimal prime p of H: drop the
// variables outside p and count the staircase of the restricted ideal.
long long localized_length(const MonomialIdeal& H, const CoordinatePrime& p,
                           long long guard = kDefaultLengthGuard);

// Minimal primes of H of maximal coheight, including (0) for H = 0.
std::vector<CoordinatePrime> top_dimensional_primes(const MonomialIdeal& H);

// Associativity of multiplicities: e(R; A/H) equals the sum over the
// top-dimensional minimal primes p of length((A/H)_p) * e(R; A/p).
template <class K>
bool additivity_check(const std::vector<GeneralElement<K>>& R, const MonomialIdeal& H,
                      const MultiplicityOptions& opts = {}) {
    long long lhs = multiplicity_symbol(R, H, opts).value;
    long long rhs = 0;
    for (const CoordinatePrime& p : top_dimensional_primes(H)) {
        long long len = localized_length(H, p, opts.guard);
        long long e = multiplicity_symbol(R, p.to_ideal(H.nvars()), opts).value;
        rhs += len * e;
    }
    return lhs == rhs;
}

} // namespace mixmult

#endif
