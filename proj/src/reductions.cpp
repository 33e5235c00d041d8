#include "mixmult/reductions.hpp"

namespace mixmult {

Window Window::box(long long lo, long long hi, int arity) {
    if (arity < 1 || arity > 8) {
        throw Error(ErrorKind::UnsupportedInput, "window arity out of range");
    }
    if (lo < 0) throw Error(ErrorKind::UnsupportedInput, "window base must be non-negative");
    Window w;
    w.lo = lo;
    w.hi = hi;
    w.arity = arity;
    if (!w.empty()) {
        long long span = hi - lo + 1;
        long long count = 1;
        for (int i = 0; i < arity; ++i) {
            count *= span;
            if (count > 100000) {
                throw Error(ErrorKind::UnsupportedInput, "window has too many tuples");
            }
        }
    }
    return w;
}

std::vector<std::vector<long long>> Window::tuples() const {
    std::vector<std::vector<long long>> out;
    if (empty()) return out;
    std::vector<long long> cur(static_cast<std::size_t>(arity), lo);
    for (;;) {
        out.push_back(cur);
        int pos = arity - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == hi) {
            cur[static_cast<std::size_t>(pos)] = lo;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::string source_name(int source_index) {
    return source_index == 0 ? std::string("J") : "I" + std::to_string(source_index);
}

std::vector<MonomialIdeal> family_with_J(const MonomialIdeal& J,
                                         const std::vector<MonomialIdeal>& I_list) {
    std::vector<MonomialIdeal> family;
    family.push_back(J);
    for (const MonomialIdeal& I : I_list) {
        if (I.nvars() != J.nvars()) {
            throw Error(ErrorKind::DimensionMismatch, "ideals over different variable sets");
        }
        family.push_back(I);
    }
    return family;
}

} // namespace mixmult
