#include "mixmult/multiplicity.hpp"

#include <algorithm>

namespace mixmult {

const char* method_name(MultiplicityResult::Method m) {
    switch (m) {
        case MultiplicityResult::Method::HilbertSamuelInterpolation:
            return "hilbert-samuel-interpolation";
        case MultiplicityResult::Method::Additivity:
            return "additivity";
    }
    return "unknown";
}

long long localized_length(const MonomialIdeal& H, const CoordinatePrime& p, long long guard) {
    if (!H.is_proper()) {
        throw Error(ErrorKind::UnsupportedInput, "module kernel is the unit ideal");
    }
    std::vector<CoordinatePrime> mins = minimal_primes_allowing_zero(H);
    if (std::find(mins.begin(), mins.end(), p) == mins.end()) {
        throw Error(ErrorKind::UnsupportedInput, "prime is not minimal over the module kernel");
    }
    // Set every variable outside p to 1: keep only the exponents on p's
    // variables.
    const int k = p.height();
    std::vector<Monomial> restricted;
    for (const Monomial& g : H.generators()) {
        std::vector<std::int32_t> e(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            e[static_cast<std::size_t>(i)] = g.exp(p.vars[static_cast<std::size_t>(i)]);
        }
        restricted.emplace_back(std::move(e));
    }
    MonomialIdeal Hp(k, std::move(restricted));
    return count_quotient_length(MonomialIdeal::unit(k), Hp, MonomialIdeal::zero(k), guard);
}

std::vector<CoordinatePrime> top_dimensional_primes(const MonomialIdeal& H) {
    if (!H.is_proper()) {
        throw Error(ErrorKind::UnsupportedInput, "module kernel is the unit ideal");
    }
    std::vector<CoordinatePrime> mins = minimal_primes_allowing_zero(H);
    int min_height = H.nvars();
    for (const CoordinatePrime& p : mins) min_height = std::min(min_height, p.height());
    std::vector<CoordinatePrime> top;
    for (const CoordinatePrime& p : mins) {
        if (p.height() == min_height) top.push_back(p);
    }
    return top;
}

} // namespace mixmult
