#ifndef MIXMULT_GROEBNER_HPP
#define MIXMULT_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <vector>

#include "mixmult/monomial_ideal.hpp"
#include "mixmult/polynomial.hpp"

namespace mixmult {

// Internal working form: terms sorted strictly descending under the active
// order. Public polynomials are order-agnostic; conversion happens at the
// engine boundary.
template <class K>
struct OrdPoly {
    std::vector<std::pair<Monomial, K>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lead_mono() const { return terms.front().first; }
    const K& lead_coeff() const { return terms.front().second; }
};

template <class K>
OrdPoly<K> to_ord_poly(const Polynomial<K>& p, const TermOrder& ord) {
    OrdPoly<K> r;
    r.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(r.terms.begin(), r.terms.end(), [&ord](const auto& a, const auto& b) {
        return ord.compare(a.first, b.first) > 0;
    });
    return r;
}

template <class K>
Polynomial<K> from_ord_poly(const OrdPoly<K>& p, int nvars) {
    Polynomial<K> r(nvars);
    for (const auto& [m, c] : p.terms) r.add_term(m, c);
    return r;
}

// f - c * m * g, merged in one pass; terms of f before `start` are skipped
// (they are already known to be irreducible and moved out by the caller).
template <class K>
OrdPoly<K> subtract_scaled(const OrdPoly<K>& f, const K& c, const Monomial& m,
                           const OrdPoly<K>& g, const TermOrder& ord, std::size_t start = 0) {
    OrdPoly<K> r;
    r.terms.reserve(f.terms.size() - start + g.terms.size());
    std::size_t i = start, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        Monomial gm = g.terms[j].first * m;
        int cmp = ord.compare(f.terms[i].first, gm);
        if (cmp > 0) {
            r.terms.push_back(f.terms[i]);
            ++i;
        } else if (cmp < 0) {
            K nc = -(c * g.terms[j].second);
            if (!is_zero(nc)) r.terms.emplace_back(std::move(gm), std::move(nc));
            ++j;
        } else {
            K nc = f.terms[i].second - c * g.terms[j].second;
            if (!is_zero(nc)) r.terms.emplace_back(f.terms[i].first, std::move(nc));
            ++i;
            ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) {
        K nc = -(c * g.terms[j].second);
        if (!is_zero(nc)) r.terms.emplace_back(g.terms[j].first * m, std::move(nc));
    }
    return r;
}

template <class K>
OrdPoly<K> make_monic(OrdPoly<K> p) {
    if (p.is_zero()) return p;
    K lc = p.lead_coeff();
    if (lc == unit_coeff_like(lc)) return p;
    K inv = unit_coeff_like(lc) / lc;
    for (auto& [m, c] : p.terms) c = c * inv;
    return p;
}

template <class K>
OrdPoly<K> normal_form_ord(OrdPoly<K> p, const std::vector<OrdPoly<K>>& basis,
                           const TermOrder& ord) {
    OrdPoly<K> rem;
    std::size_t head = 0;
    while (head < p.terms.size()) {
        const OrdPoly<K>* red = nullptr;
        for (const OrdPoly<K>& g : basis) {
            if (!g.is_zero() && monomial_divides(g.lead_mono(), p.terms[head].first)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            rem.terms.push_back(std::move(p.terms[head]));
            ++head;
            continue;
        }
        K c = p.terms[head].second / red->lead_coeff();
        Monomial m = monomial_quotient(p.terms[head].first, red->lead_mono());
        p = subtract_scaled(p, c, m, *red, ord, head);
        head = 0;
    }
    return rem;
}

template <class K>
OrdPoly<K> s_poly(const OrdPoly<K>& f, const OrdPoly<K>& g, const TermOrder& ord) {
    Monomial L = monomial_lcm(f.lead_mono(), g.lead_mono());
    K one = unit_coeff_like(f.lead_coeff());
    Monomial mf = monomial_quotient(L, f.lead_mono());
    OrdPoly<K> u;
    u.terms.reserve(f.terms.size());
    K sf = one / f.lead_coeff();
    for (const auto& [m, c] : f.terms) u.terms.emplace_back(m * mf, c * sf);
    K cg = one / g.lead_coeff();
    Monomial mg = monomial_quotient(L, g.lead_mono());
    return subtract_scaled(u, cg, mg, g, ord);
}

// Reduced Groebner basis: monic, autoreduced, elements sorted ascending by
// lead term; unique for the ideal and order.
template <class K>
struct GroebnerBasis {
    TermOrder order;
    std::vector<Polynomial<K>> elements;
    std::vector<OrdPoly<K>> ord_elements;
    std::vector<Monomial> leads;

    bool contains_one() const {
        return elements.size() == 1 && leads.size() == 1 && leads[0].is_one();
    }
};

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const TermOrder& ord) {
    int nvars = 0;
    std::vector<OrdPoly<K>> G;
    for (const Polynomial<K>& f : gens) {
        if (f.is_zero()) continue;
        nvars = f.nvars();
        G.push_back(make_monic(to_ord_poly(f, ord)));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int deg;
    };
    auto pair_after = [&ord](const Pair& a, const Pair& b) {
        // "greater" for the min-heap: process smaller (deg, lcm, i, j) first.
        if (a.deg != b.deg) return a.deg > b.deg;
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c > 0;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    };
    auto pack = [](std::size_t i, std::size_t j) {
        return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
    };

    std::vector<Pair> heap;
    std::unordered_set<std::uint64_t> pending;
    auto push_pairs_for = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            // S-polynomials of two monomials vanish identically.
            if (G[i].terms.size() == 1 && G[n].terms.size() == 1) continue;
            Pair pr{i, n, monomial_lcm(G[i].lead_mono(), G[n].lead_mono()), 0};
            pr.deg = pr.lcm.total_degree();
            pending.insert(pack(i, n));
            heap.push_back(std::move(pr));
            std::push_heap(heap.begin(), heap.end(), pair_after);
        }
    };
    for (std::size_t n = 1; n < G.size(); ++n) push_pairs_for(n);

    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), pair_after);
        Pair pr = std::move(heap.back());
        heap.pop_back();
        pending.erase(pack(pr.i, pr.j));

        const Monomial& li = G[pr.i].lead_mono();
        const Monomial& lj = G[pr.j].lead_mono();
        // Coprime lead terms: S-polynomial reduces to zero.
        if (pr.lcm.total_degree() == li.total_degree() + lj.total_degree() &&
            pr.lcm == li * lj) {
            continue;
        }
        // Chain criterion: some other lead divides the lcm and both side
        // pairs are already handled.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!monomial_divides(G[k].lead_mono(), pr.lcm)) continue;
            std::uint64_t a = pack(std::min(pr.i, k), std::max(pr.i, k));
            std::uint64_t b = pack(std::min(pr.j, k), std::max(pr.j, k));
            if (!pending.count(a) && !pending.count(b)) skip = true;
        }
        if (skip) continue;

        OrdPoly<K> r = normal_form_ord(s_poly(G[pr.i], G[pr.j], ord), G, ord);
        if (r.is_zero()) continue;
        G.push_back(make_monic(std::move(r)));
        push_pairs_for(G.size() - 1);
    }

    // Minimalize lead terms, then tail-reduce for the unique reduced basis.
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = ord.compare(G[a].lead_mono(), G[b].lead_mono());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<OrdPoly<K>> kept;
    for (std::size_t id : idx) {
        bool redundant = false;
        for (const OrdPoly<K>& h : kept) {
            if (monomial_divides(h.lead_mono(), G[id].lead_mono())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(G[id]));
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<OrdPoly<K>> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j != i) others.push_back(kept[j]);
        }
        kept[i] = make_monic(normal_form_ord(std::move(kept[i]), others, ord));
    }

    GroebnerBasis<K> basis;
    basis.order = ord;
    basis.ord_elements = std::move(kept);
    for (const OrdPoly<K>& g : basis.ord_elements) {
        basis.elements.push_back(from_ord_poly(g, nvars));
        basis.leads.push_back(g.lead_mono());
    }
    return basis;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
    OrdPoly<K> r = normal_form_ord(to_ord_poly(f, G.order), G.ord_elements, G.order);
    return from_ord_poly(r, f.nvars());
}

// Finitely generated ideal with a lazily cached Groebner basis for the
// default (grevlex) order. The cache is a single-assignment cell: shared
// across copies, written once.
template <class K>
class PolyIdeal {
public:
    PolyIdeal() : nvars_(0), cache_(std::make_shared<Cache>()) {}
    explicit PolyIdeal(int nvars) : nvars_(nvars), cache_(std::make_shared<Cache>()) {}
    PolyIdeal(int nvars, std::vector<Polynomial<K>> gens)
        : nvars_(nvars), cache_(std::make_shared<Cache>()) {
        for (Polynomial<K>& f : gens) {
            if (f.is_zero()) continue;
            if (f.nvars() != nvars) {
                throw Error(ErrorKind::DimensionMismatch, "generator over a different variable set");
            }
            gens_.push_back(std::move(f));
        }
    }

    int nvars() const { return nvars_; }
    const std::vector<Polynomial<K>>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool is_monomial() const {
        for (const Polynomial<K>& f : gens_) {
            if (f.term_count() != 1) return false;
        }
        return true;
    }

    MonomialIdeal monomial_part() const {
        std::vector<Monomial> ms;
        for (const Polynomial<K>& f : gens_) {
            if (f.term_count() != 1) {
                throw Error(ErrorKind::Internal, "monomial_part of a non-monomial ideal");
            }
            ms.push_back(f.terms().begin()->first);
        }
        return MonomialIdeal(nvars_, std::move(ms));
    }

    const GroebnerBasis<K>& basis() const {
        std::call_once(cache_->once, [this] { cache_->basis = buchberger(gens_, TermOrder::grevlex()); });
        return *cache_->basis;
    }

private:
    struct Cache {
        std::once_flag once;
        std::optional<GroebnerBasis<K>> basis;
    };

    int nvars_;
    std::vector<Polynomial<K>> gens_;
    std::shared_ptr<Cache> cache_;
};

template <class K>
PolyIdeal<K> to_poly_ideal(const MonomialIdeal& I, const K& one_like) {
    K one = unit_coeff_like(one_like);
    std::vector<Polynomial<K>> gens;
    for (const Monomial& m : I.generators()) gens.push_back(Polynomial<K>::from_term(m, one));
    return PolyIdeal<K>(I.nvars(), std::move(gens));
}

template <class K>
PolyIdeal<K> poly_ideal_sum(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
    std::vector<Polynomial<K>> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return PolyIdeal<K>(I.nvars(), std::move(gens));
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const PolyIdeal<K>& I) {
    if (f.is_zero()) return true;
    if (I.is_zero()) return false;
    return normal_form(f, I.basis()).is_zero();
}

template <class K>
bool ideal_equal(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
    for (const Polynomial<K>& f : I.generators()) {
        if (!ideal_member(f, J)) return false;
    }
    for (const Polynomial<K>& g : J.generators()) {
        if (!ideal_member(g, I)) return false;
    }
    return true;
}

namespace detail {

inline Monomial insert_front_var(const Monomial& m, std::int32_t e) {
    std::vector<std::int32_t> v;
    v.reserve(static_cast<std::size_t>(m.nvars()) + 1);
    v.push_back(e);
    v.insert(v.end(), m.exponents().begin(), m.exponents().end());
    return Monomial(std::move(v));
}

inline Monomial drop_front_var(const Monomial& m) {
    std::vector<std::int32_t> v(m.exponents().begin() + 1, m.exponents().end());
    return Monomial(std::move(v));
}

template <class K>
Polynomial<K> lift_front(const Polynomial<K>& f, std::int32_t tag_exp) {
    Polynomial<K> r(f.nvars() + 1);
    for (const auto& [m, c] : f.terms()) r.add_term(insert_front_var(m, tag_exp), c);
    return r;
}

} // namespace detail

// I cap J via a tag variable t placed in front: basis of t*I + (1-t)*J in
// the elimination order, keeping the t-free elements.
template <class K>
PolyIdeal<K> ideal_intersect(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
    if (I.nvars() != J.nvars()) {
        throw Error(ErrorKind::DimensionMismatch, "intersection over different variable sets");
    }
    const int n = I.nvars();
    if (I.is_zero() || J.is_zero()) return PolyIdeal<K>(n);
    std::vector<Polynomial<K>> tagged;
    for (const Polynomial<K>& f : I.generators()) tagged.push_back(detail::lift_front(f, 1));
    for (const Polynomial<K>& g : J.generators()) {
        tagged.push_back(detail::lift_front(g, 0) - detail::lift_front(g, 1));
    }
    GroebnerBasis<K> B = buchberger(tagged, TermOrder::elim_block(1));
    std::vector<Polynomial<K>> kept;
    for (const Polynomial<K>& e : B.elements) {
        bool tag_free = true;
        for (const auto& [m, c] : e.terms()) {
            if (m.exp(0) != 0) {
                tag_free = false;
                break;
            }
        }
        if (!tag_free) continue;
        Polynomial<K> stripped(n);
        for (const auto& [m, c] : e.terms()) stripped.add_term(detail::drop_front_var(m), c);
        kept.push_back(std::move(stripped));
    }
    return PolyIdeal<K>(n, std::move(kept));
}

// Exact division g / f; throws if f does not divide g.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& g, const Polynomial<K>& f) {
    if (f.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
    TermOrder ord = TermOrder::grevlex();
    OrdPoly<K> r = to_ord_poly(g, ord);
    OrdPoly<K> d = to_ord_poly(f, ord);
    Polynomial<K> q(g.nvars());
    while (!r.is_zero()) {
        if (!monomial_divides(d.lead_mono(), r.lead_mono())) {
            throw Error(ErrorKind::Internal, "exact_divide: not divisible");
        }
        K c = r.lead_coeff() / d.lead_coeff();
        Monomial m = monomial_quotient(r.lead_mono(), d.lead_mono());
        q.add_term(m, c);
        r = subtract_scaled(r, c, m, d, ord);
    }
    return q;
}

// I : f via I cap (f) = f * (I : f).
template <class K>
PolyIdeal<K> ideal_colon_poly(const PolyIdeal<K>& I, const Polynomial<K>& f) {
    if (f.is_zero()) {
        throw Error(ErrorKind::UnsupportedInput, "colon by the zero polynomial");
    }
    PolyIdeal<K> principal(I.nvars(), {f});
    PolyIdeal<K> meet = ideal_intersect(I, principal);
    std::vector<Polynomial<K>> gens;
    for (const Polynomial<K>& g : meet.generators()) gens.push_back(exact_divide(g, f));
    return PolyIdeal<K>(I.nvars(), std::move(gens));
}

// I : D for a monomial ideal D (intersection of the single-generator colons).
template <class K>
PolyIdeal<K> ideal_colon(const PolyIdeal<K>& I, const MonomialIdeal& D) {
    if (D.is_zero()) {
        throw Error(ErrorKind::UnsupportedInput, "colon by the zero ideal");
    }
    K one{};
    bool have_unit = false;
    for (const Polynomial<K>& g : I.generators()) {
        if (!g.is_zero()) {
            one = unit_coeff_like(g.terms().begin()->second);
            have_unit = true;
            break;
        }
    }
    if (!have_unit) return PolyIdeal<K>(I.nvars()); // 0 : D = 0
    PolyIdeal<K> acc;
    bool first = true;
    for (const Monomial& g : D.generators()) {
        PolyIdeal<K> part = ideal_colon_poly(I, Polynomial<K>::from_term(g, one));
        acc = first ? part : ideal_intersect(acc, part);
        first = false;
    }
    return acc;
}

// I : D^infinity, iterated colon until stable.
template <class K>
PolyIdeal<K> ideal_saturate(const PolyIdeal<K>& I, const MonomialIdeal& D) {
    if (I.is_zero()) return I;
    if (I.is_monomial()) {
        MonomialIdeal sat = saturate(I.monomial_part(), D);
        K one = unit_coeff_like(I.generators().front().terms().begin()->second);
        return to_poly_ideal(sat, one);
    }
    PolyIdeal<K> cur = I;
    for (int round = 0; round < 256; ++round) {
        PolyIdeal<K> next = ideal_colon(cur, D);
        if (ideal_equal(next, cur)) return cur;
        cur = next;
    }
    throw Error(ErrorKind::Internal, "saturation did not stabilize");
}

template <class K>
MonomialIdeal lead_ideal(const GroebnerBasis<K>& G, int nvars) {
    return MonomialIdeal(nvars, G.leads);
}

// Number of standard monomials; nullopt means infinite.
template <class K>
std::optional<long long> colength(const PolyIdeal<K>& I,
                                  long long guard = kDefaultLengthGuard) {
    if (I.is_zero()) {
        return I.nvars() == 0 ? std::optional<long long>(1) : std::nullopt;
    }
    const GroebnerBasis<K>& B = I.basis();
    if (B.contains_one()) return 0;
    MonomialIdeal L = lead_ideal(B, I.nvars());
    if (!is_m_primary(L)) return std::nullopt;
    return count_quotient_length(MonomialIdeal::unit(I.nvars()), L,
                                 MonomialIdeal::zero(I.nvars()), guard);
}

// dim A/I via the lead-term ideal (dimension is preserved by passage to the
// initial ideal).
template <class K>
int ideal_dimension(const PolyIdeal<K>& I) {
    if (I.is_zero()) return I.nvars();
    const GroebnerBasis<K>& B = I.basis();
    if (B.contains_one()) {
        throw Error(ErrorKind::UnsupportedInput, "dimension of the unit ideal");
    }
    return dim_quotient(lead_ideal(B, I.nvars()));
}

} // namespace mixmult

#endif
