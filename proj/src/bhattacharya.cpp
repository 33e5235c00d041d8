#include "mixmult/bhattacharya.hpp"

#include <algorithm>

#include "mixmult/linalg.hpp"

namespace mixmult {

MixedType::MixedType(std::vector<int> kk, int k0p1) : k(std::move(kk)), k0_plus_1(k0p1) {
    for (int v : k) {
        if (v < 0) throw Error(ErrorKind::UnsupportedInput, "negative entry in mixed type");
    }
    if (k0_plus_1 < 1) throw Error(ErrorKind::UnsupportedInput, "k0+1 must be positive");
}

int MixedType::sum_k() const {
    int t = 0;
    for (int v : k) t += v;
    return t;
}

int MixedType::total() const { return k0() + sum_k(); }

std::string MixedType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(k[i]);
    }
    out += ";" + std::to_string(k0_plus_1);
    return out;
}

int InterpolatedPolynomial::total_degree() const {
    int d = -1;
    for (const auto& [a, c] : coeffs) {
        int t = 0;
        for (int e : a) t += e;
        d = std::max(d, t);
    }
    return d;
}

Rat InterpolatedPolynomial::coefficient(const std::vector<int>& alpha) const {
    auto it = coeffs.find(alpha);
    return it == coeffs.end() ? Rat(0) : it->second;
}

Rat InterpolatedPolynomial::evaluate(const std::vector<long long>& point) const {
    Rat acc(0);
    for (const auto& [a, c] : coeffs) {
        Rat term = c;
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (int e = 0; e < a[i]; ++e) term *= Rat(Int(static_cast<long>(point[i])));
        }
        acc += term;
    }
    return acc;
}

namespace {

void check_family(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                  const MonomialIdeal& H) {
    if (!H.is_proper()) {
        throw Error(ErrorKind::UnsupportedInput, "module kernel is the unit ideal");
    }
    if (!is_m_primary(J) || !J.is_proper()) {
        throw Error(ErrorKind::NotMPrimary, "J must be a proper m-primary ideal");
    }
    if (I_list.empty()) {
        throw Error(ErrorKind::UnsupportedInput, "at least one ideal I_i is required");
    }
    for (const MonomialIdeal& I : I_list) {
        if (I.is_zero() || I.is_unit()) {
            throw Error(ErrorKind::UnsupportedInput, "each I_i must be proper and nonzero");
        }
        if (I.nvars() != J.nvars() || H.nvars() != J.nvars()) {
            throw Error(ErrorKind::DimensionMismatch, "ideals over different variable sets");
        }
    }
}

MonomialIdeal family_product(const std::vector<MonomialIdeal>& I_list) {
    MonomialIdeal I = I_list.front();
    for (std::size_t i = 1; i < I_list.size(); ++i) I = ideal_product(I, I_list[i]);
    return I;
}

// I inside rad(H) iff every minimal prime of H contains I.
bool product_in_radical(const MonomialIdeal& I, const MonomialIdeal& H) {
    if (H.is_zero()) return I.is_zero();
    for (const CoordinatePrime& p : minimal_primes(H)) {
        if (!p.contains(I)) return false;
    }
    return true;
}

// All tuples a in N^arity with |a| <= D, lexicographic.
void simplex_tuples(int arity, int D, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == arity) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int v : cur) used += v;
    for (int v = 0; v + used <= D; ++v) {
        cur.push_back(v);
        simplex_tuples(arity, D, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> simplex(int arity, int D) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    simplex_tuples(arity, D, cur, out);
    return out;
}

} // namespace

AnalysisContext analyze(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                        const MonomialIdeal& H) {
    check_family(J, I_list, H);
    MonomialIdeal I = family_product(I_list);
    if (product_in_radical(I, H)) {
        throw Error(ErrorKind::UnsupportedInput, "product ideal lies in the radical of the module kernel");
    }
    AnalysisContext ctx;
    ctx.s = static_cast<int>(I_list.size());
    ctx.d = dim_quotient(H);
    ctx.q = dim_quotient(saturate(H, I));
    ctx.h = height_in_quotient(I, H);
    if (ctx.h > 0 && ctx.q != ctx.d) {
        throw Error(ErrorKind::Internal, "positive height but saturation changed the dimension");
    }
    return ctx;
}

long long default_offset(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                         const MonomialIdeal& H) {
    int deg = J.max_generator_degree();
    for (const MonomialIdeal& I : I_list) deg = std::max(deg, I.max_generator_degree());
    deg = std::max(deg, H.max_generator_degree());
    return std::max(deg, 1);
}

long long sample_length_function(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                                 const MonomialIdeal& H, const std::vector<long long>& point,
                                 long long guard) {
    check_family(J, I_list, H);
    if (product_in_radical(family_product(I_list), H)) {
        throw Error(ErrorKind::UnsupportedInput, "product ideal lies in the radical of the module kernel");
    }
    if (point.size() != I_list.size() + 1) {
        throw Error(ErrorKind::UnsupportedInput, "sample point arity must be s+1");
    }
    for (long long n : point) {
        if (n < 0) throw Error(ErrorKind::UnsupportedInput, "negative exponent in sample point");
    }
    MonomialIdeal P = ideal_power(J, static_cast<int>(point[0]));
    for (std::size_t i = 0; i < I_list.size(); ++i) {
        P = ideal_product(P, ideal_power(I_list[i], static_cast<int>(point[i + 1])));
    }
    return count_quotient_length(P, ideal_product(J, P), H, guard);
}

InterpolatedPolynomial interpolate(const std::map<std::vector<long long>, long long>& samples,
                                   int D, int arity, long long offset) {
    std::vector<std::vector<int>> alphas = simplex(arity, D);
    if (samples.size() != alphas.size()) {
        throw Error(ErrorKind::Internal, "interpolation wants a full simplex grid of samples");
    }
    std::vector<std::vector<Int>> A;
    std::vector<Int> b;
    for (const auto& [point, value] : samples) {
        if (static_cast<int>(point.size()) != arity) {
            throw Error(ErrorKind::Internal, "sample point arity mismatch");
        }
        std::vector<Int> row;
        row.reserve(alphas.size());
        for (const std::vector<int>& a : alphas) {
            Int cell(1);
            for (int i = 0; i < arity; ++i) {
                Int base(static_cast<long>(point[static_cast<std::size_t>(i)]));
                for (int e = 0; e < a[static_cast<std::size_t>(i)]; ++e) cell *= base;
            }
            row.push_back(std::move(cell));
        }
        A.push_back(std::move(row));
        b.emplace_back(static_cast<long>(value));
    }
    std::vector<Rat> sol = solve_exact(std::move(A), std::move(b));
    InterpolatedPolynomial poly;
    poly.arity = arity;
    poly.offset = offset;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (sol[i] != 0) poly.coeffs.emplace(alphas[i], sol[i]);
    }
    return poly;
}

namespace {

InterpolatedPolynomial interpolate_at_offset(const MonomialIdeal& J,
                                             const std::vector<MonomialIdeal>& I_list,
                                             const MonomialIdeal& H, int D, long long offset,
                                             std::map<std::vector<long long>, long long>& memo,
                                             long long guard) {
    const int arity = static_cast<int>(I_list.size()) + 1;
    std::map<std::vector<long long>, long long> grid;
    for (const std::vector<int>& a : simplex(arity, D)) {
        std::vector<long long> point(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) point[i] = offset + a[i];
        auto it = memo.find(point);
        if (it == memo.end()) {
            it = memo.emplace(point, sample_length_function(J, I_list, H, point, guard)).first;
        }
        grid.emplace(point, it->second);
    }
    return interpolate(grid, D, arity, offset);
}

} // namespace

MixedValue mixed_multiplicity_full(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                                   const MonomialIdeal& H, const MixedType& type,
                                   const BhattacharyaOptions& opts) {
    AnalysisContext ctx = analyze(J, I_list, H);
    if (type.s() != ctx.s) {
        throw Error(ErrorKind::UnsupportedInput, "type arity does not match the number of ideals");
    }
    const int D = ctx.q - 1;
    if (type.total() != D) {
        throw Error(ErrorKind::DegreeMismatch,
                    "type total " + std::to_string(type.total()) + " must equal q-1 = " + std::to_string(D));
    }
    long long N = opts.offset_override.value_or(default_offset(J, I_list, H));
    std::map<std::vector<long long>, long long> memo;
    for (int round = 0;; ++round) {
        InterpolatedPolynomial p0 = interpolate_at_offset(J, I_list, H, D, N, memo, opts.guard);
        InterpolatedPolynomial p1 = interpolate_at_offset(J, I_list, H, D, N + 1, memo, opts.guard);
        if (p0.same_polynomial(p1)) {
            if (p0.total_degree() != D) {
                throw Error(ErrorKind::StabilityFailure,
                            "stable interpolant has total degree " + std::to_string(p0.total_degree()) +
                                ", expected " + std::to_string(D));
            }
            std::vector<int> alpha;
            alpha.push_back(type.k0());
            alpha.insert(alpha.end(), type.k.begin(), type.k.end());
            Rat c = p0.coefficient(alpha);
            Rat e = c;
            for (int f = 2; f <= type.k0(); ++f) e *= f;
            for (int ki : type.k) {
                for (int f = 2; f <= ki; ++f) e *= f;
            }
            e.canonicalize();
            if (e.get_den() != 1 || e < 0) {
                throw Error(ErrorKind::StabilityFailure,
                            "extracted coefficient " + rat_to_string(e) + " is not a non-negative integer");
            }
            MixedValue mv;
            mv.value = static_cast<long long>(e.get_num().get_si());
            mv.degree = D;
            mv.offset = N;
            mv.interpolant = std::move(p0);
            return mv;
        }
        if (round >= opts.max_doublings) {
            throw Error(ErrorKind::StabilityFailure,
                        "interpolants at consecutive offsets disagree after " +
                            std::to_string(opts.max_doublings) + " doublings");
        }
        N *= 2;
    }
}

long long mixed_multiplicity(const MonomialIdeal& J, const std::vector<MonomialIdeal>& I_list,
                             const MonomialIdeal& H, const MixedType& type,
                             const BhattacharyaOptions& opts) {
    return mixed_multiplicity_full(J, I_list, H, type, opts).value;
}

} // namespace mixmult
