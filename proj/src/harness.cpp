#include "mixmult/harness.hpp"

#include <algorithm>
#include <chrono>

namespace mixmult {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void check_theorem_hypotheses(const AnalysisContext& ctx, const MixedType& type) {
    if (ctx.d <= 0) {
        throw Error(ErrorKind::HypothesisViolated, "dim M must be positive");
    }
    if (ctx.h <= 0) {
        throw Error(ErrorKind::HypothesisViolated, "ht((I+H)/H) must be positive");
    }
    if (type.total() != ctx.d - 1) {
        throw Error(ErrorKind::HypothesisViolated,
                    "type total " + std::to_string(type.total()) + " must equal d-1 = " +
                        std::to_string(ctx.d - 1));
    }
    if (type.sum_k() >= ctx.h) {
        throw Error(ErrorKind::HypothesisViolated,
                    "k_1+...+k_s = " + std::to_string(type.sum_k()) + " must be below ht = " +
                        std::to_string(ctx.h));
    }
}

// Re-run the ladder checks from `from` on after one element was replaced;
// certificates are refreshed in place. Returns false on any failed check.
template <class F>
bool recertify_ladder(std::vector<GeneralElement<typename F::Elem>>& R,
                      std::vector<SuperficialCertificate<typename F::Elem>>& certs,
                      std::size_t from, const MonomialIdeal& J,
                      const std::vector<MonomialIdeal>& I_list, const MonomialIdeal& H,
                      const F& field) {
    using K = typename F::Elem;
    std::vector<MonomialIdeal> family = family_with_J(J, I_list);
    MonomialIdeal I_all = family.front();
    for (std::size_t j = 1; j < family.size(); ++j) I_all = ideal_product(I_all, family[j]);
    PolyIdeal<K> Hcur = to_poly_ideal(H, field.one());
    for (std::size_t j = 0; j < from; ++j) {
        Hcur = poly_ideal_sum(PolyIdeal<K>(H.nvars(), {R[j].poly}), Hcur);
    }
    int dim_cur = ideal_dimension(Hcur);
    for (std::size_t j = from; j < R.size(); ++j) {
        PolyIdeal<K> Hnext = poly_ideal_sum(PolyIdeal<K>(H.nvars(), {R[j].poly}), Hcur);
        if (ideal_dimension(Hnext) != dim_cur - 1) return false;
        if (!check_fc1(R[j], J, I_list, Hcur, certs[j].window)) return false;
        bool fc2 = check_fc2(R[j], Hcur, I_all);
        if (!fc2) return false;
        certs[j].element = R[j];
        certs[j].fc1 = true;
        certs[j].fc2 = fc2;
        certs[j].fc3.reset();
        certs[j].vacuous = certs[j].window.empty();
        Hcur = std::move(Hnext);
        --dim_cur;
    }
    return true;
}

template <class F>
void run_reduction_side(VerificationReport<typename F::Elem>& rep, const MonomialIdeal& J,
                        const std::vector<MonomialIdeal>& I_list, const MonomialIdeal& H,
                        const MixedType& type, const F& field, std::uint64_t seed,
                        const VerifyOptions& opts, bool check_jr) {
    using K = typename F::Elem;
    Rng master(seed);
    BuildOptions bopts;
    bopts.retries = opts.retries;
    bopts.window_width = opts.window_width.value_or(2);
    bopts.offset_override = opts.offset_override;
    bopts.max_window_doublings = opts.max_window_doublings;
    SuperficialSequence<K> seq =
        build_superficial_sequence(J, I_list, H, type, field, master.next(), bopts);
    std::vector<GeneralElement<K>> R = std::move(seq.elements);
    std::vector<SuperficialCertificate<K>> certs = std::move(seq.certificates);

    if (check_jr) {
        const long long base = opts.offset_override.value_or(default_offset(J, I_list, H));
        const long long w = opts.window_width.value_or(2);
        long long N = base;
        int doublings = 0;
        int resamples = 0;
        std::size_t pos = 0;
        for (;;) {
            Window window = Window::box(N, N + w, type.arity());
            JointReductionCertificate<K> cert = check_joint_reduction(R, J, I_list, H, window);
            if (cert.is_sop && cert.verified) {
                rep.joint = std::move(cert);
                break;
            }
            if (cert.is_sop && doublings < opts.max_window_doublings) {
                // The identity is asymptotic; give it a larger window first.
                N *= 2;
                ++doublings;
                continue;
            }
            if (resamples >= opts.retries) {
                throw Error(ErrorKind::GenericityFailure,
                            "joint-reduction certification failed after " +
                                std::to_string(resamples) + " resamples");
            }
            ++resamples;
            std::size_t at = pos++ % R.size();
            std::vector<GeneralElement<K>> R2 =
                resample_element(R, at, J, I_list, field, master.next());
            std::vector<SuperficialCertificate<K>> certs2 = certs;
            if (recertify_ladder(R2, certs2, at, J, I_list, H, field)) {
                R = std::move(R2);
                certs = std::move(certs2);
                N = base;
                doublings = 0;
            }
        }
    }

    rep.superficial = certs;
    MultiplicityOptions mopts;
    mopts.offset_override = opts.offset_override;
    mopts.guard = opts.guard;
    rep.reduction_value = multiplicity_symbol(R, H, mopts).value;
}

template <class F>
VerificationReport<typename F::Elem> run_verification(const std::string& command,
                                                      const MonomialIdeal& J,
                                                      const std::vector<MonomialIdeal>& I_list,
                                                      const MonomialIdeal& H, const MixedType& type,
                                                      const F& field, std::uint64_t seed,
                                                      const VerifyOptions& opts, bool check_jr) {
    using K = typename F::Elem;
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport<K> rep;
    rep.command = command;
    rep.seed = seed;
    rep.type = type;
    BhattacharyaOptions bopts;
    bopts.offset_override = opts.offset_override;
    bopts.guard = opts.guard;
    try {
        rep.context = analyze(J, I_list, H);
        check_theorem_hypotheses(rep.context, type);
        MixedValue mv = mixed_multiplicity_full(J, I_list, H, type, bopts);
        rep.mixed_value = mv.value;
        rep.offset = mv.offset;
        rep.degree = mv.degree;
        run_reduction_side(rep, J, I_list, H, type, field, seed, opts, check_jr);
        rep.equal = rep.mixed_value.has_value() && rep.reduction_value.has_value() &&
                    *rep.mixed_value == *rep.reduction_value;
    } catch (const Error& e) {
        rep.status = error_kind_name(e.kind());
        rep.detail = e.what();
        rep.equal = false;
        if (e.kind() == ErrorKind::HypothesisViolated && !rep.mixed_value.has_value()) {
            // Advisory mode: record the mixed value when it is still defined.
            try {
                MixedValue mv = mixed_multiplicity_full(J, I_list, H, type, bopts);
                rep.mixed_value = mv.value;
                rep.offset = mv.offset;
                rep.degree = mv.degree;
            } catch (const Error&) {
            }
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace

template <class F>
VerificationReport<typename F::Elem> verify_main_theorem(const MonomialIdeal& J,
                                                         const std::vector<MonomialIdeal>& I_list,
                                                         const MonomialIdeal& H,
                                                         const MixedType& type, const F& field,
                                                         std::uint64_t seed,
                                                         const VerifyOptions& opts) {
    return run_verification("verify", J, I_list, H, type, field, seed, opts, true);
}

template <class F>
VerificationReport<typename F::Elem> verify_superficial_remark(
    const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list, const MonomialIdeal& H,
    const MixedType& type, const F& field, std::uint64_t seed, const VerifyOptions& opts) {
    return run_verification("superficial", J, I_list, H, type, field, seed, opts, false);
}

template <class F>
VerificationReport<typename F::Elem> verify_rees_corollary(
    const std::vector<MonomialIdeal>& I_list, const MonomialIdeal& H, const std::vector<int>& k,
    const F& field, std::uint64_t seed, const VerifyOptions& opts) {
    using K = typename F::Elem;
    auto fail = [&](ErrorKind kind, const std::string& msg) {
        VerificationReport<K> rep;
        rep.command = "verify-rees";
        rep.seed = seed;
        rep.status = error_kind_name(kind);
        rep.detail = msg;
        return rep;
    };
    if (I_list.empty() || k.size() != I_list.size()) {
        return fail(ErrorKind::UnsupportedInput, "need one tally per ideal");
    }
    for (std::size_t i = 0; i < I_list.size(); ++i) {
        if (!is_m_primary(I_list[i]) || !I_list[i].is_proper()) {
            return fail(ErrorKind::NotMPrimary, "ideal I" + std::to_string(i + 1) + " is not m-primary");
        }
        if (k[i] < 0) return fail(ErrorKind::UnsupportedInput, "negative tally");
    }
    if (!H.is_proper()) return fail(ErrorKind::UnsupportedInput, "module kernel is the unit ideal");
    const int d = dim_quotient(H);
    int sum = 0;
    for (int v : k) sum += v;
    if (sum != d) {
        return fail(ErrorKind::HypothesisViolated,
                    "tallies sum to " + std::to_string(sum) + ", dim M = " + std::to_string(d));
    }
    // The last listed ideal with positive tally plays the J slot.
    int jslot = -1;
    for (int i = static_cast<int>(k.size()) - 1; i >= 0; --i) {
        if (k[static_cast<std::size_t>(i)] > 0) {
            jslot = i;
            break;
        }
    }
    MonomialIdeal J = I_list[static_cast<std::size_t>(jslot)];
    std::vector<MonomialIdeal> rest;
    std::vector<int> krest;
    for (std::size_t i = 0; i < I_list.size(); ++i) {
        if (static_cast<int>(i) == jslot) continue;
        rest.push_back(I_list[i]);
        krest.push_back(k[i]);
    }
    if (rest.empty()) {
        rest.push_back(J);
        krest.push_back(0);
    }
    MixedType type(krest, k[static_cast<std::size_t>(jslot)]);
    VerificationReport<K> rep = run_verification("verify-rees", J, rest, H, type, field, seed, opts, true);
    return rep;
}

EquimultipleReport verify_equimultiple_vanishing(int d, int h, const BhattacharyaOptions& opts) {
    if (!(0 < h && h < d) || d > 6) {
        throw Error(ErrorKind::UnsupportedInput, "fixture needs 0 < h < d <= 6");
    }
    std::vector<Monomial> m_gens, i_gens;
    for (int i = 0; i < d; ++i) m_gens.push_back(Monomial::variable(d, i));
    for (int i = 0; i < h; ++i) i_gens.push_back(Monomial::variable(d, i));
    MonomialIdeal J(d, std::move(m_gens));
    MonomialIdeal I(d, std::move(i_gens));
    MonomialIdeal H = MonomialIdeal::zero(d);

    EquimultipleReport rep;
    rep.d = d;
    rep.h = h;
    for (int i = 0; i < d; ++i) {
        MixedType type({i}, d - i);
        rep.values.push_back(mixed_multiplicity(J, {I}, H, type, opts));
    }
    bool zeros_ok = true;
    bool positive_seen = false;
    for (int i = 0; i < d; ++i) {
        if (i >= h && rep.values[static_cast<std::size_t>(i)] != 0) zeros_ok = false;
        if (i < h && rep.values[static_cast<std::size_t>(i)] > 0) positive_seen = true;
    }
    rep.ok = zeros_ok && positive_seen;
    rep.note = "vanishing values cannot be the multiplicity of any system of parameters "
               "(multiplicities are positive)";
    return rep;
}

namespace {

// Deterministic hypothesis-satisfying instance; resamples internally until
// the height gate holds.
FuzzCase generate_fuzz_case(const FuzzConfig& cfg, Rng& rng) {
    static const char* kNames[] = {"x", "y", "z"};
    for (int attempt = 0; attempt < 64; ++attempt) {
        FuzzCase c;
        int d = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.max_dim - 1)));
        for (int i = 0; i < d; ++i) c.vars.emplace_back(kNames[i]);
        std::vector<Monomial> m_gens;
        for (int i = 0; i < d; ++i) m_gens.push_back(Monomial::variable(d, i));
        MonomialIdeal m(d, m_gens);
        c.J = rng.below(2) == 0 ? m : ideal_product(m, m);

        int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.max_s)));
        for (int i = 0; i < s; ++i) {
            int deg = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.max_deg)));
            // All monomials of this degree, then a random nonempty subset.
            std::vector<Monomial> all;
            std::vector<std::int32_t> expo(static_cast<std::size_t>(d), 0);
            auto enumerate = [&](auto&& self, int idx, int rest) -> void {
                if (idx + 1 == d) {
                    expo[static_cast<std::size_t>(idx)] = rest;
                    all.push_back(Monomial(expo));
                    return;
                }
                for (int e = 0; e <= rest; ++e) {
                    expo[static_cast<std::size_t>(idx)] = e;
                    self(self, idx + 1, rest - e);
                }
            };
            enumerate(enumerate, 0, deg);
            int cnt = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(4, all.size())));
            std::vector<Monomial> picked;
            std::vector<std::size_t> idxs(all.size());
            for (std::size_t j = 0; j < idxs.size(); ++j) idxs[j] = j;
            for (int j = 0; j < cnt; ++j) {
                std::size_t at = static_cast<std::size_t>(rng.below(idxs.size() - static_cast<std::size_t>(j)));
                picked.push_back(all[idxs[at]]);
                std::swap(idxs[at], idxs[idxs.size() - 1 - static_cast<std::size_t>(j)]);
            }
            c.I_list.emplace_back(d, std::move(picked));
        }

        c.H = MonomialIdeal::zero(d);
        if (cfg.allow_kernel && rng.below(4) == 0) {
            std::vector<std::int32_t> expo(static_cast<std::size_t>(d), 0);
            int v1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
            expo[static_cast<std::size_t>(v1)] = 1 + static_cast<int>(rng.below(2));
            c.H = MonomialIdeal(d, {Monomial(expo)});
        }

        AnalysisContext ctx;
        try {
            ctx = analyze(c.J, c.I_list, c.H);
        } catch (const Error&) {
            continue;
        }
        if (ctx.h < 1 || ctx.d < 1) continue;

        // All admissible types, then a random pick.
        std::vector<MixedType> types;
        std::vector<int> kk(static_cast<std::size_t>(s), 0);
        auto enum_types = [&](auto&& self, int idx) -> void {
            if (idx == s) {
                int sk = 0;
                for (int v : kk) sk += v;
                if (sk < ctx.h && sk <= ctx.d - 1) types.emplace_back(kk, ctx.d - sk);
                return;
            }
            for (int v = 0; v <= ctx.d - 1; ++v) {
                kk[static_cast<std::size_t>(idx)] = v;
                self(self, idx + 1);
            }
        };
        enum_types(enum_types, 0);
        if (types.empty()) continue;
        c.type = types[rng.below(types.size())];
        c.seed = rng.next();
        return c;
    }
    throw Error(ErrorKind::Internal, "fuzz generator failed to satisfy the hypotheses");
}

} // namespace

template <class F>
FuzzSummary fuzz_campaign(const FuzzConfig& config, const F& field, std::uint64_t master_seed) {
    if (config.trials < 0 || config.trials > 200 || config.max_dim < 2 || config.max_dim > 3 ||
        config.max_deg < 1 || config.max_deg > 3 || config.max_s < 1 || config.max_s > 2) {
        throw Error(ErrorKind::UnsupportedInput,
                    "fuzz bounds: trials <= 200, dim <= 3, degrees <= 3, s <= 2");
    }
    FuzzSummary summary;
    summary.trials = config.trials;
    Rng master(master_seed);
    for (int t = 0; t < config.trials; ++t) {
        Rng rng = master.fork(static_cast<std::uint64_t>(t) + 1);
        FuzzCase c = generate_fuzz_case(config, rng);
        auto rep = verify_main_theorem(c.J, c.I_list, c.H, c.type, field, c.seed);
        if (rep.status != "ok") {
            ++summary.error_count;
            c.status = rep.status;
            summary.reproducers.push_back(c);
        } else if (rep.equal) {
            ++summary.equal_count;
        } else {
            ++summary.unequal_count;
            c.status = "unequal";
            summary.reproducers.push_back(c);
        }
    }
    return summary;
}

template VerificationReport<Fp> verify_main_theorem<FpField>(const MonomialIdeal&,
                                                             const std::vector<MonomialIdeal>&,
                                                             const MonomialIdeal&, const MixedType&,
                                                             const FpField&, std::uint64_t,
                                                             const VerifyOptions&);
template VerificationReport<Rat> verify_main_theorem<RatField>(const MonomialIdeal&,
                                                               const std::vector<MonomialIdeal>&,
                                                               const MonomialIdeal&, const MixedType&,
                                                               const RatField&, std::uint64_t,
                                                               const VerifyOptions&);
template VerificationReport<Fp> verify_superficial_remark<FpField>(
    const MonomialIdeal&, const std::vector<MonomialIdeal>&, const MonomialIdeal&, const MixedType&,
    const FpField&, std::uint64_t, const VerifyOptions&);
template VerificationReport<Rat> verify_superficial_remark<RatField>(
    const MonomialIdeal&, const std::vector<MonomialIdeal>&, const MonomialIdeal&, const MixedType&,
    const RatField&, std::uint64_t, const VerifyOptions&);
template VerificationReport<Fp> verify_rees_corollary<FpField>(const std::vector<MonomialIdeal>&,
                                                               const MonomialIdeal&,
                                                               const std::vector<int>&, const FpField&,
                                                               std::uint64_t, const VerifyOptions&);
template VerificationReport<Rat> verify_rees_corollary<RatField>(const std::vector<MonomialIdeal>&,
                                                                 const MonomialIdeal&,
                                                                 const std::vector<int>&,
                                                                 const RatField&, std::uint64_t,
                                                                 const VerifyOptions&);
template FuzzSummary fuzz_campaign<FpField>(const FuzzConfig&, const FpField&, std::uint64_t);
template FuzzSummary fuzz_campaign<RatField>(const FuzzConfig&, const RatField&, std::uint64_t);

} // namespace mixmult
