#include "mixmult/monomial_ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace mixmult {

namespace {

bool degree_lex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) {
        throw Error(ErrorKind::DimensionMismatch, "ideals over different variable sets");
    }
}

// Minimal vertex covers of the generator-support hypergraph; the zero ideal
// yields the single empty cover (the prime (0)).
std::vector<CoordinatePrime> minimal_covers(const MonomialIdeal& I) {
    if (I.is_unit()) {
        throw Error(ErrorKind::UnsupportedInput, "minimal primes of the unit ideal");
    }
    const int n = I.nvars();
    if (n > 24) throw Error(ErrorKind::UnsupportedInput, "too many variables for prime enumeration");
    std::vector<std::uint32_t> supports;
    for (const Monomial& g : I.generators()) {
        std::uint32_t s = 0;
        for (int v : g.support()) s |= (1u << v);
        supports.push_back(s);
    }
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::vector<std::uint32_t> accepted;
    for (std::uint32_t m : masks) {
        bool redundant = false;
        for (std::uint32_t c : accepted) {
            if ((c & m) == c) {
                redundant = true;
                break;
            }
        }
        if (redundant) continue;
        bool covers = true;
        for (std::uint32_t s : supports) {
            if ((s & m) == 0) {
                covers = false;
                break;
            }
        }
        if (covers) accepted.push_back(m);
    }
    std::vector<CoordinatePrime> primes;
    for (std::uint32_t m : accepted) {
        CoordinatePrime p;
        for (int v = 0; v < n; ++v) {
            if (m & (1u << v)) p.vars.push_back(v);
        }
        primes.push_back(std::move(p));
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

} // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const Monomial& g : gens) {
        if (g.nvars() != nvars) {
            throw Error(ErrorKind::DimensionMismatch, "generator over a different variable set");
        }
    }
    // Drop generators divisible by another; a unit generator collapses to (1).
    std::sort(gens.begin(), gens.end(), degree_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : gens_) {
            if (monomial_divides(kept, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_) {
        if (monomial_divides(g, m)) return true;
    }
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same_ring(*this, other);
    for (const Monomial& g : other.gens_) {
        if (!contains(g)) return false;
    }
    return true;
}

int MonomialIdeal::max_generator_degree() const {
    int d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.total_degree());
    return d;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.contains(b) && b.contains(a);
}

QuotientModule::QuotientModule(MonomialIdeal kernel) : H(std::move(kernel)) {
    if (H.is_unit()) {
        throw Error(ErrorKind::UnsupportedInput, "module kernel is the unit ideal (module is zero)");
    }
}

bool CoordinatePrime::contains_var(int v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
}

bool CoordinatePrime::contains(const Monomial& m) const {
    for (int v : vars) {
        if (m.exp(v) > 0) return true;
    }
    return false;
}

bool CoordinatePrime::contains(const MonomialIdeal& I) const {
    for (const Monomial& g : I.generators()) {
        if (!contains(g)) return false;
    }
    return true;
}

bool CoordinatePrime::subset_of(const CoordinatePrime& other) const {
    return std::includes(other.vars.begin(), other.vars.end(), vars.begin(), vars.end());
}

MonomialIdeal CoordinatePrime::to_ideal(int nvars) const {
    std::vector<Monomial> gens;
    for (int v : vars) gens.push_back(Monomial::variable(nvars, v));
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.nvars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    std::vector<Monomial> gens;
    for (const Monomial& a : I.generators()) {
        for (const Monomial& b : J.generators()) gens.push_back(a * b);
    }
    return MonomialIdeal(I.nvars(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, int n) {
    if (n < 0) throw Error(ErrorKind::UnsupportedInput, "negative ideal power");
    MonomialIdeal acc = MonomialIdeal::unit(I.nvars());
    for (int i = 0; i < n; ++i) acc = ideal_product(acc, I);
    return acc;
}

namespace {

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    std::vector<Monomial> gens;
    for (const Monomial& a : I.generators()) {
        for (const Monomial& b : J.generators()) gens.push_back(monomial_lcm(a, b));
    }
    return MonomialIdeal(I.nvars(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& g) {
    std::vector<Monomial> gens;
    for (const Monomial& m : I.generators()) {
        gens.push_back(monomial_quotient(monomial_lcm(m, g), g));
    }
    return MonomialIdeal(I.nvars(), std::move(gens));
}

} // namespace

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    if (J.is_zero()) return MonomialIdeal::unit(I.nvars());
    bool first = true;
    MonomialIdeal acc(I.nvars());
    for (const Monomial& g : J.generators()) {
        MonomialIdeal part = colon_by_monomial(I, g);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    if (J.is_zero()) {
        throw Error(ErrorKind::UnsupportedInput, "saturation by the zero ideal");
    }
    MonomialIdeal cur = I;
    for (;;) {
        MonomialIdeal next = colon(cur, J);
        if (next == cur) return cur;
        cur = next;
    }
}

std::vector<CoordinatePrime> minimal_primes(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) {
        throw Error(ErrorKind::UnsupportedInput, "minimal primes require a proper nonzero ideal");
    }
    return minimal_covers(I);
}

std::vector<CoordinatePrime> minimal_primes_allowing_zero(const MonomialIdeal& I) {
    return minimal_covers(I);
}

int dim_quotient(const MonomialIdeal& H) {
    if (H.is_unit()) {
        throw Error(ErrorKind::UnsupportedInput, "dimension of the zero module");
    }
    int minh = H.nvars();
    for (const CoordinatePrime& p : minimal_covers(H)) minh = std::min(minh, p.height());
    return H.nvars() - minh;
}

int height_in_quotient(const MonomialIdeal& I, const MonomialIdeal& H) {
    check_same_ring(I, H);
    if (!H.is_proper()) {
        throw Error(ErrorKind::UnsupportedInput, "module kernel is the unit ideal");
    }
    MonomialIdeal IH = ideal_sum(I, H);
    if (IH.is_unit()) {
        throw Error(ErrorKind::UnsupportedInput, "height undefined: V(I) misses Supp M");
    }
    // A/H is catenary and all relevant primes are coordinate primes, so
    // ht((I+H)/H) = min over P >= I+H of max over q <= P of ht P - ht q.
    std::vector<CoordinatePrime> over = minimal_covers(IH);
    std::vector<CoordinatePrime> base = minimal_covers(H);
    int h = -1;
    for (const CoordinatePrime& P : over) {
        int best = -1;
        for (const CoordinatePrime& q : base) {
            if (q.subset_of(P)) best = std::max(best, P.height() - q.height());
        }
        if (best < 0) throw Error(ErrorKind::Internal, "no base prime under a covering prime");
        h = (h < 0) ? best : std::min(h, best);
    }
    return h;
}

bool is_m_primary(const MonomialIdeal& I) {
    if (I.is_unit()) return true;
    const int n = I.nvars();
    std::vector<bool> pure(static_cast<std::size_t>(n), false);
    for (const Monomial& g : I.generators()) {
        std::vector<int> s = g.support();
        if (s.size() == 1) pure[static_cast<std::size_t>(s[0])] = true;
    }
    for (bool b : pure) {
        if (!b) return false;
    }
    return true;
}

long long count_quotient_length(const MonomialIdeal& P, const MonomialIdeal& Q,
                                const MonomialIdeal& H, long long guard) {
    check_same_ring(P, Q);
    check_same_ring(P, H);
    for (const Monomial& g : Q.generators()) {
        if (!P.contains(g)) {
            throw Error(ErrorKind::Internal, "count_quotient_length: Q not contained in P");
        }
    }
    const MonomialIdeal denom = ideal_sum(Q, H);
    const int n = P.nvars();
    std::unordered_set<Monomial, MonomialHash> kept;
    std::deque<Monomial> frontier;
    for (const Monomial& g : P.generators()) {
        if (!denom.contains(g) && kept.insert(g).second) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        Monomial m = std::move(frontier.front());
        frontier.pop_front();
        for (int i = 0; i < n; ++i) {
            Monomial next = m * Monomial::variable(n, i);
            if (denom.contains(next)) continue;
            if (kept.insert(next).second) {
                if (static_cast<long long>(kept.size()) > guard) {
                    throw Error(ErrorKind::LengthOverflow, "not finite or guard too small");
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    return static_cast<long long>(kept.size());
}

std::string to_string(const MonomialIdeal& I, const VariableSet& vars) {
    if (I.is_zero()) return "0";
    std::string out = "(";
    for (std::size_t i = 0; i < I.generators().size(); ++i) {
        if (i) out += ", ";
        out += to_string(I.generators()[i], vars);
    }
    return out + ")";
}

std::string to_string(const CoordinatePrime& p, const VariableSet& vars) {
    if (p.vars.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (i) out += ", ";
        out += vars.names[static_cast<std::size_t>(p.vars[i])];
    }
    return out + ")";
}

} // namespace mixmult
