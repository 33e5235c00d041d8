#ifndef MIXMULT_TERM_ORDER_HPP
#define MIXMULT_TERM_ORDER_HPP

#include "mixmult/monomial.hpp"

namespace mixmult {

// Multiplicative well-orders on monomials. Grevlex is the default
// everywhere; the elimination block order (front block compared first,
// grevlex inside each block) drives intersections and colons through a tag
// variable placed at index 0.
struct TermOrder {
    enum class Kind { Grevlex, ElimBlock };

    Kind kind = Kind::Grevlex;
    int block = 0;

    static TermOrder grevlex() { return TermOrder{Kind::Grevlex, 0}; }
    static TermOrder elim_block(int front_block) { return TermOrder{Kind::ElimBlock, front_block}; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.kind == b.kind && (a.kind == Kind::Grevlex || a.block == b.block);
    }
};

} // namespace mixmult

#endif
