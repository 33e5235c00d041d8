#ifndef MIXMULT_HARNESS_HPP
#define MIXMULT_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixmult/multiplicity.hpp"

namespace mixmult {

struct VerifyOptions {
    std::optional<long long> offset_override;
    std::optional<long long> window_width; // default 2
    int retries = 5;
    int max_window_doublings = 6;
    long long guard = kDefaultLengthGuard;
};

// Outcome of one theorem-verification run. `equal` is meaningful only when
// both values were computed and status is "ok"; elapsed time is for the
// human summary and never serialized.
template <class K>
struct VerificationReport {
    std::string command;
    std::uint64_t seed = 0;
    std::string status = "ok";
    std::string detail;
    AnalysisContext context;
    MixedType type;
    std::optional<long long> mixed_value;
    std::optional<long long> reduction_value;
    bool equal = false;
    long long offset = 0;
    int degree = -1;
    std::vector<SuperficialCertificate<K>> superficial;
    std::optional<JointReductionCertificate<K>> joint;
    double elapsed_ms = 0.0;
};

struct EquimultipleReport {
    int d = 0;
    int h = 0;
    std::vector<long long> values; // value for type (i; d-i), i = 0..d-1
    bool ok = false;
    std::string note;
};

struct FuzzConfig {
    int trials = 50;
    int max_dim = 3;
    int max_deg = 3;
    int max_s = 2;
    bool allow_kernel = true; // mix in nonzero monomial H
};

struct FuzzCase {
    std::vector<std::string> vars;
    MonomialIdeal J;
    std::vector<MonomialIdeal> I_list;
    MonomialIdeal H;
    MixedType type;
    std::uint64_t seed = 0;
    std::string status;

    FuzzCase() : J(1), H(1) {}
};

struct FuzzSummary {
    int trials = 0;
    int equal_count = 0;
    int unequal_count = 0;
    int error_count = 0;
    std::vector<FuzzCase> reproducers; // unequal or errored cases
};

template <class F>
VerificationReport<typename F::Elem> verify_main_theorem(const MonomialIdeal& J,
                                                         const std::vector<MonomialIdeal>& I_list,
                                                         const MonomialIdeal& H,
                                                         const MixedType& type, const F& field,
                                                         std::uint64_t seed,
                                                         const VerifyOptions& opts = {});

template <class F>
VerificationReport<typename F::Elem> verify_superficial_remark(
    const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list, const MonomialIdeal& H,
    const MixedType& type, const F& field, std::uint64_t seed, const VerifyOptions& opts = {});

// Rees's m-primary case: all ideals m-primary, type (k_1..k_s) summing to
// dim; the last listed ideal with positive tally plays the J slot.
template <class F>
VerificationReport<typename F::Elem> verify_rees_corollary(
    const std::vector<MonomialIdeal>& I_list, const MonomialIdeal& H, const std::vector<int>& k,
    const F& field, std::uint64_t seed, const VerifyOptions& opts = {});

// Fixture family I = (x_1..x_h) in k[x_1..x_d], J = m: the mixed
// multiplicities of type (i; d-i) vanish exactly for i >= h.
EquimultipleReport verify_equimultiple_vanishing(int d, int h,
                                                 const BhattacharyaOptions& opts = {});

template <class F>
FuzzSummary fuzz_campaign(const FuzzConfig& config, const F& field, std::uint64_t master_seed);

} // namespace mixmult

#endif
