#include "mixmult/fields.hpp"

namespace mixmult {

std::string rat_to_string(const Rat& a) {
    return a.get_str();
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

namespace {

std::uint32_t reconcile(std::uint32_t a, std::uint32_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw Error(ErrorKind::Internal, "prime field modulus mismatch");
    return a;
}

} // namespace

Fp operator+(Fp a, Fp b) {
    std::uint32_t m = reconcile(a.p, b.p);
    if (m == 0) return Fp();
    std::uint64_t s = static_cast<std::uint64_t>(a.v) + b.v;
    return Fp(static_cast<std::uint32_t>(s >= m ? s - m : s), m);
}

Fp operator-(Fp a, Fp b) {
    std::uint32_t m = reconcile(a.p, b.p);
    if (m == 0) return Fp();
    std::uint64_t s = static_cast<std::uint64_t>(a.v) + m - b.v;
    return Fp(static_cast<std::uint32_t>(s >= m ? s - m : s), m);
}

Fp operator*(Fp a, Fp b) {
    std::uint32_t m = reconcile(a.p, b.p);
    if (m == 0) return Fp();
    return Fp(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % m), m);
}

Fp operator-(Fp a) {
    if (a.p == 0 || a.v == 0) return Fp(0, a.p);
    return Fp(a.p - a.v, a.p);
}

Fp Fp::inv() const {
    if (p == 0 || v == 0) throw Error(ErrorKind::Internal, "inverse of zero in prime field");
    // Extended Euclid on (v, p).
    long long t = 0, new_t = 1;
    long long r = p, new_r = v;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return Fp(static_cast<std::uint32_t>(t), p);
}

Fp operator/(Fp a, Fp b) {
    return a * b.inv();
}

std::string fp_to_string(Fp a) {
    return std::to_string(a.v);
}

FpField::FpField(std::uint32_t modulus) : p_(modulus) {
    if (!is_prime_u32(modulus)) {
        throw Error(ErrorKind::UnsupportedInput, "modulus " + std::to_string(modulus) + " is not prime");
    }
}

FpField::Elem FpField::from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r), p_);
}

RatField::Elem RatField::from_int(long long x) const {
    Rat r;
    r = static_cast<long>(x);
    return r;
}

} // namespace mixmult
