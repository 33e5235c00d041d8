#ifndef MIXMULT_FIELDS_HPP
#define MIXMULT_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "mixmult/errors.hpp"
#include "mixmult/rng.hpp"

namespace mixmult {

// Exact arbitrary-precision scalars. All arithmetic in the library is exact;
// there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return a == 0; }

std::string rat_to_string(const Rat& a);
bool is_prime_u32(std::uint32_t n);

// Element of a prime field F_p. The modulus travels with the value so that
// elements are self-contained; a default-constructed element is a zero that
// is compatible with any modulus.
struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    Fp() = default;
    Fp(std::uint32_t value, std::uint32_t modulus) : v(value), p(modulus) {}

    Fp inv() const;

    friend Fp operator+(Fp a, Fp b);
    friend Fp operator-(Fp a, Fp b);
    friend Fp operator*(Fp a, Fp b);
    friend Fp operator/(Fp a, Fp b);
    friend Fp operator-(Fp a);

    friend bool operator==(Fp a, Fp b) {
        return a.v == b.v && (a.p == b.p || a.p == 0 || b.p == 0);
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }
};

inline bool is_zero(Fp a) { return a.v == 0; }

// A multiplicative unit compatible with c. Used where generic code needs a
// "1" but only has existing coefficients in hand (e.g. tag polynomials).
inline Rat unit_coeff_like(const Rat&) { return Rat(1); }
inline Fp unit_coeff_like(Fp c) { return Fp(1, c.p); }

std::string fp_to_string(Fp a);

inline std::string coeff_to_string(const Rat& a) { return rat_to_string(a); }
inline std::string coeff_to_string(Fp a) { return fp_to_string(a); }

// Field contexts: make elements, draw random nonzero scalars, print.
class FpField {
public:
    using Elem = Fp;

    static constexpr std::uint32_t kDefaultModulus = 32003;

    explicit FpField(std::uint32_t modulus);

    std::uint32_t modulus() const { return p_; }
    Elem zero() const { return Fp(0, p_); }
    Elem one() const { return Fp(1, p_); }
    Elem from_int(long long x) const;
    Elem random_nonzero(Rng& rng) const { return Fp(1 + static_cast<std::uint32_t>(rng.below(p_ - 1)), p_); }
    std::string name() const { return "Fp " + std::to_string(p_); }

private:
    std::uint32_t p_;
};

class RatField {
public:
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long long x) const;
    // Drawn from {-99..99} \ {0}.
    Elem random_nonzero(Rng& rng) const {
        std::uint64_t r = rng.below(198);
        long long val = r < 99 ? static_cast<long long>(r) - 99 : static_cast<long long>(r) - 98;
        return from_int(val);
    }
    std::string name() const { return "Q"; }
};

} // namespace mixmult

#endif
