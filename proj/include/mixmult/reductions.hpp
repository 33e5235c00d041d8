#ifndef MIXMULT_REDUCTIONS_HPP
#define MIXMULT_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixmult/bhattacharya.hpp"
#include "mixmult/groebner.hpp"
#include "mixmult/rng.hpp"

namespace mixmult {

// Random homogeneous combination of the minimal generators of one of the
// input ideals, with full provenance for reproducibility.
template <class K>
struct GeneralElement {
    Polynomial<K> poly;
    int source_index = 0;        // 0 = the J slot, i >= 1 = I_i
    std::vector<K> coefficients; // one per minimal generator of the source
    std::uint64_t seed = 0;
};

// Box [lo, hi]^arity of exponent tuples ordered (n_0; n_1..n_s); empty when
// hi < lo.
struct Window {
    long long lo = 0;
    long long hi = -1;
    int arity = 0;

    static Window box(long long lo, long long hi, int arity);

    bool empty() const { return hi < lo; }
    long long width() const { return empty() ? 0 : hi - lo; }
    std::vector<std::vector<long long>> tuples() const;

    friend bool operator==(const Window& a, const Window& b) {
        return a.lo == b.lo && a.hi == b.hi && a.arity == b.arity;
    }
};

template <class K>
struct SuperficialCertificate {
    GeneralElement<K> element;
    Window window;
    bool fc1 = false;
    bool fc2 = false;
    std::optional<bool> fc3;
    bool vacuous = false; // window was empty, checks hold vacuously
};

template <class K>
struct JointReductionCertificate {
    std::vector<GeneralElement<K>> elements;
    std::vector<int> tally; // per family slot: [0] = J count, [i] = I_i count
    Window window;
    bool is_sop = false;
    bool verified = false;
};

std::string source_name(int source_index);

// Family order used throughout: slot 0 is J, slot i >= 1 is I_i.
std::vector<MonomialIdeal> family_with_J(const MonomialIdeal& J,
                                         const std::vector<MonomialIdeal>& I_list);

// Wrap an explicit polynomial as an element (fixture use); coefficients are
// taken from its terms.
template <class K>
GeneralElement<K> make_element(const Polynomial<K>& poly, int source_index,
                               std::uint64_t seed = 0) {
    if (poly.is_zero()) {
        throw Error(ErrorKind::UnsupportedInput, "general element must be nonzero");
    }
    GeneralElement<K> x;
    x.poly = poly;
    x.source_index = source_index;
    x.seed = seed;
    for (const auto& [m, c] : poly.terms()) x.coefficients.push_back(c);
    return x;
}

template <class F>
GeneralElement<typename F::Elem> sample_general_element(const MonomialIdeal& source,
                                                        int source_index, const F& field,
                                                        std::uint64_t seed) {
    using K = typename F::Elem;
    if (source.is_zero() || source.is_unit()) {
        throw Error(ErrorKind::UnsupportedInput, "general element needs a proper nonzero source ideal");
    }
    const auto& gens = source.generators();
    const int deg = gens.front().total_degree();
    for (const Monomial& g : gens) {
        if (g.total_degree() != deg) {
            throw Error(ErrorKind::UnsupportedInput, "source ideal is not equigenerated");
        }
    }
    Rng rng(seed);
    GeneralElement<K> x;
    x.source_index = source_index;
    x.seed = seed;
    x.poly = Polynomial<K>(source.nvars());
    for (const Monomial& g : gens) {
        K c = field.random_nonzero(rng);
        x.coefficients.push_back(c);
        x.poly.add_term(g, c);
    }
    return x;
}

// (FC1) on a finite window: for each tuple n, with P = prod family[j]^{n_j}
// and P' = P * family[i],
//   ((x) + H) cap (P' + H)  ==  x P + H.
template <class K>
bool check_fc1(const GeneralElement<K>& x, const MonomialIdeal& J,
               const std::vector<MonomialIdeal>& I_list, const PolyIdeal<K>& H,
               const Window& window) {
    const std::vector<MonomialIdeal> family = family_with_J(J, I_list);
    const int i = x.source_index;
    if (i < 0 || i >= static_cast<int>(family.size())) {
        throw Error(ErrorKind::UnsupportedInput, "element source index out of range");
    }
    const K one = unit_coeff_like(x.coefficients.front());
    PolyIdeal<K> xH = poly_ideal_sum(PolyIdeal<K>(H.nvars(), {x.poly}), H);
    for (const std::vector<long long>& n : window.tuples()) {
        MonomialIdeal P = MonomialIdeal::unit(J.nvars());
        for (std::size_t j = 0; j < family.size(); ++j) {
            P = ideal_product(P, ideal_power(family[j], static_cast<int>(n[j])));
        }
        MonomialIdeal Pp = ideal_product(P, family[static_cast<std::size_t>(i)]);
        PolyIdeal<K> lhs = ideal_intersect(xH, poly_ideal_sum(to_poly_ideal(Pp, one), H));
        std::vector<Polynomial<K>> rhs_gens;
        for (const Monomial& p : P.generators()) rhs_gens.push_back(x.poly.times_term(p, one));
        PolyIdeal<K> rhs = poly_ideal_sum(PolyIdeal<K>(H.nvars(), std::move(rhs_gens)), H);
        if (!ideal_equal(lhs, rhs)) return false;
    }
    return true;
}

// (FC2): (H : x) contained in H : I^infinity.
template <class K>
bool check_fc2(const GeneralElement<K>& x, const PolyIdeal<K>& H, const MonomialIdeal& I) {
    if (H.is_zero()) return true; // domain case
    PolyIdeal<K> Hx = ideal_colon_poly(H, x.poly);
    PolyIdeal<K> sat = ideal_saturate(H, I);
    for (const Polynomial<K>& g : Hx.generators()) {
        if (!ideal_member(g, sat)) return false;
    }
    return true;
}

// (FC3): dim M/(xM : I^infinity) = dim M/(0 : I^infinity) - 1; a degenerate
// saturation (unit ideal) reports false.
template <class K>
bool check_fc3(const GeneralElement<K>& x, const PolyIdeal<K>& H, const MonomialIdeal& I) {
    PolyIdeal<K> xH = poly_ideal_sum(PolyIdeal<K>(H.nvars(), {x.poly}), H);
    PolyIdeal<K> sat_x = ideal_saturate(xH, I);
    PolyIdeal<K> sat_0 = ideal_saturate(H, I);
    if (!sat_x.is_zero() && sat_x.basis().contains_one()) return false;
    if (!sat_0.is_zero() && sat_0.basis().contains_one()) return false;
    return ideal_dimension(sat_x) == ideal_dimension(sat_0) - 1;
}

struct BuildOptions {
    int retries = 5;
    long long window_width = 2;
    std::optional<long long> offset_override;
    int max_window_doublings = 6;
    bool force = false;       // skip the k_1+...+k_s < h hypothesis gate
    bool certify_fc2 = true;
};

template <class K>
struct SuperficialSequence {
    std::vector<GeneralElement<K>> elements;
    std::vector<SuperficialCertificate<K>> certificates;
};

// Typed Rees superficial sequence: k_i elements from each I_i, then k_0+1
// from J, each certified by (FC1) against the current quotient plus a
// dimension drop of exactly one; failures resample, persistent (FC1)
// failures double the window base.
template <class F>
SuperficialSequence<typename F::Elem> build_superficial_sequence(
    const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list, const MonomialIdeal& H,
    const MixedType& type, const F& field, std::uint64_t seed, const BuildOptions& opts = {}) {
    using K = typename F::Elem;
    AnalysisContext ctx = analyze(J, I_list, H);
    if (type.s() != ctx.s) {
        throw Error(ErrorKind::UnsupportedInput, "type arity does not match the number of ideals");
    }
    const int count = type.sum_k() + type.k0_plus_1;
    if (count > ctx.d) {
        throw Error(ErrorKind::HypothesisViolated,
                    "type requests " + std::to_string(count) + " elements but dim M = " + std::to_string(ctx.d));
    }
    if (!opts.force && type.sum_k() >= ctx.h) {
        throw Error(ErrorKind::HypothesisViolated,
                    "k_1+...+k_s = " + std::to_string(type.sum_k()) + " must be below ht = " + std::to_string(ctx.h));
    }
    const std::vector<MonomialIdeal> family = family_with_J(J, I_list);
    MonomialIdeal I_all = family.front();
    for (std::size_t j = 1; j < family.size(); ++j) I_all = ideal_product(I_all, family[j]);

    const long long base_offset = opts.offset_override.value_or(default_offset(J, I_list, H));
    Rng master(seed);
    SuperficialSequence<K> out;
    PolyIdeal<K> Hcur = to_poly_ideal(H, field.one());
    int dim_cur = ctx.d;

    // Draw order follows the construction: I-blocks first, then the J block.
    std::vector<int> slots;
    for (int i = 1; i <= ctx.s; ++i) {
        for (int c = 0; c < type.k[static_cast<std::size_t>(i - 1)]; ++c) slots.push_back(i);
    }
    for (int c = 0; c < type.k0_plus_1; ++c) slots.push_back(0);

    for (int slot : slots) {
        bool placed = false;
        long long N = base_offset;
        for (int doubling = 0; doubling <= opts.max_window_doublings && !placed; ++doubling) {
            Window window = Window::box(N, N + opts.window_width, ctx.s + 1);
            bool fc1_seen_failing = false;
            for (int attempt = 0; attempt <= opts.retries; ++attempt) {
                GeneralElement<K> x =
                    sample_general_element(family[static_cast<std::size_t>(slot)], slot, field, master.next());
                PolyIdeal<K> Hnext = poly_ideal_sum(PolyIdeal<K>(H.nvars(), {x.poly}), Hcur);
                if (ideal_dimension(Hnext) != dim_cur - 1) continue;
                if (!check_fc1(x, J, I_list, Hcur, window)) {
                    fc1_seen_failing = true;
                    continue;
                }
                bool fc2 = !opts.certify_fc2 || check_fc2(x, Hcur, I_all);
                if (!fc2) continue;
                SuperficialCertificate<K> cert;
                cert.element = x;
                cert.window = window;
                cert.fc1 = true;
                cert.fc2 = fc2;
                cert.vacuous = window.empty();
                out.certificates.push_back(cert);
                out.elements.push_back(std::move(x));
                Hcur = std::move(Hnext);
                --dim_cur;
                placed = true;
                break;
            }
            if (!placed && !fc1_seen_failing) {
                throw Error(ErrorKind::GenericityFailure,
                            "no general element of " + source_name(slot) + " certified after " +
                                std::to_string(opts.retries + 1) + " draws");
            }
            N *= 2;
        }
        if (!placed) {
            throw Error(ErrorKind::GenericityFailure,
                        "(FC1) window certification failed for " + source_name(slot) +
                            " after window doublings");
        }
    }
    return out;
}

// Joint-reduction identity of Definition-style typing on a finite window:
// the J slot carries exponent n_0+1. Also records whether the elements form
// a system of parameters.
template <class K>
JointReductionCertificate<K> check_joint_reduction(const std::vector<GeneralElement<K>>& R,
                                                   const MonomialIdeal& J,
                                                   const std::vector<MonomialIdeal>& I_list,
                                                   const MonomialIdeal& H, const Window& window) {
    const std::vector<MonomialIdeal> family = family_with_J(J, I_list);
    JointReductionCertificate<K> cert;
    cert.elements = R;
    cert.window = window;
    cert.tally.assign(family.size(), 0);
    if (R.empty()) throw Error(ErrorKind::UnsupportedInput, "empty joint reduction candidate");
    for (const GeneralElement<K>& e : R) {
        if (e.source_index < 0 || e.source_index >= static_cast<int>(family.size())) {
            throw Error(ErrorKind::UnsupportedInput, "element source index out of range");
        }
        ++cert.tally[static_cast<std::size_t>(e.source_index)];
    }
    const K one = unit_coeff_like(R.front().coefficients.front());

    std::vector<Polynomial<K>> r_gens;
    for (const GeneralElement<K>& e : R) r_gens.push_back(e.poly);
    PolyIdeal<K> RH = poly_ideal_sum(PolyIdeal<K>(H.nvars(), std::move(r_gens)),
                                     to_poly_ideal(H, one));
    const int d = dim_quotient(H);
    cert.is_sop = static_cast<int>(R.size()) == d && colength(RH).has_value() &&
                  (RH.is_zero() ? H.nvars() : ideal_dimension(RH)) == 0;

    bool all_hold = true;
    for (const std::vector<long long>& n : window.tuples()) {
        MonomialIdeal lhs_mono = MonomialIdeal::unit(J.nvars());
        for (std::size_t j = 0; j < family.size(); ++j) {
            lhs_mono = ideal_product(lhs_mono, ideal_power(family[j], static_cast<int>(n[j]) + 1));
        }
        PolyIdeal<K> lhs = poly_ideal_sum(to_poly_ideal(lhs_mono, one), to_poly_ideal(H, one));
        std::vector<Polynomial<K>> rhs_gens;
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (cert.tally[j] == 0) continue;
            MonomialIdeal Pj = MonomialIdeal::unit(J.nvars());
            for (std::size_t l = 0; l < family.size(); ++l) {
                int e = static_cast<int>(n[l]) + (l == j ? 0 : 1);
                Pj = ideal_product(Pj, ideal_power(family[l], e));
            }
            for (const GeneralElement<K>& el : R) {
                if (el.source_index != static_cast<int>(j)) continue;
                for (const Monomial& p : Pj.generators()) rhs_gens.push_back(el.poly.times_term(p, one));
            }
        }
        PolyIdeal<K> rhs = poly_ideal_sum(PolyIdeal<K>(H.nvars(), std::move(rhs_gens)),
                                          to_poly_ideal(H, one));
        if (!ideal_equal(lhs, rhs)) {
            all_hold = false;
            break;
        }
    }
    cert.verified = all_hold && !window.empty();
    return cert;
}

// Replace one element by a fresh generic draw from the same source; the
// caller re-certifies.
template <class F>
std::vector<GeneralElement<typename F::Elem>> resample_element(
    const std::vector<GeneralElement<typename F::Elem>>& R, std::size_t position,
    const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list, const F& field,
    std::uint64_t seed) {
    if (position >= R.size()) {
        throw Error(ErrorKind::UnsupportedInput, "resample position out of range");
    }
    const std::vector<MonomialIdeal> family = family_with_J(J, I_list);
    std::vector<GeneralElement<typename F::Elem>> out = R;
    int src = R[position].source_index;
    out[position] =
        sample_general_element(family[static_cast<std::size_t>(src)], src, field, seed);
    return out;
}

} // namespace mixmult

#endif
