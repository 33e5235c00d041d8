#include "mixmult/term_order.hpp"

namespace mixmult {

namespace {

// Grevlex on the coordinate range [lo, hi): total degree first, ties broken
// by the last differing exponent, smaller exponent winning.
int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exp(i);
        db += b.exp(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

} // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) {
        throw Error(ErrorKind::DimensionMismatch, "term comparison across variable sets");
    }
    const int n = a.nvars();
    if (kind == Kind::Grevlex) {
        return grevlex_range(a, b, 0, n);
    }
    int r = grevlex_range(a, b, 0, block);
    if (r != 0) return r;
    return grevlex_range(a, b, block, n);
}

} // namespace mixmult
