#ifndef MIXMULT_PROBLEM_HPP
#define MIXMULT_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixmult/harness.hpp"

namespace mixmult {

struct FieldDecl {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Prime;
    std::uint32_t modulus = FpField::kDefaultModulus;

    std::string to_string() const;

    friend bool operator==(const FieldDecl& a, const FieldDecl& b) {
        return a.kind == b.kind && (a.kind == Kind::Rationals || a.modulus == b.modulus);
    }
};

struct NamedIdeal {
    std::string name;
    std::vector<Polynomial<Rat>> gens; // exact integer coefficients

    friend bool operator==(const NamedIdeal& a, const NamedIdeal& b) {
        return a.name == b.name && a.gens == b.gens;
    }
};

// Parsed problem file: field and ring declarations, named ideals in
// declaration order, and the module kernel H.
struct ProblemSpec {
    FieldDecl field;
    VariableSet vars;
    std::vector<NamedIdeal> ideals;
    MonomialIdeal H{1};

    const NamedIdeal* find_ideal(const std::string& name) const;

    friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
        return a.field == b.field && a.vars == b.vars && a.ideals == b.ideals && a.H == b.H;
    }
};

// Line-oriented grammar with '#' comments:
//   field Q | field Fp <prime>
//   ring <var> <var> ...
//   ideal <Name> = <gen>, <gen>, ...
//   module H = 0 | <monomial>, ...
// Multi-term generators must be homogeneous.
ProblemSpec parse_input(const std::string& text);
std::string serialize(const ProblemSpec& spec);

// "k1,..,ks;k0+1" (with_j_slot) or "k1,..,ks".
MixedType parse_type_with_j(const std::string& text);
std::vector<int> parse_type_plain(const std::string& text);

// Single-term generators only.
MonomialIdeal to_monomial_ideal(const NamedIdeal& ideal, int nvars);

struct RunRequest {
    ProblemSpec spec;
    bool has_spec = false;
    std::string command;
    std::string type_text;
    std::uint64_t seed = 0;
    bool json = false;
    bool field_check = false;
    std::optional<long long> window;
    std::optional<long long> offset;
    std::optional<std::string> ideal_name;
    int trials = 50;
};

struct RunResult {
    int exit_code = 0; // 0 ok/verified, 1 unequal/unverified, 2 error
    std::string human;
    std::vector<std::string> json_records;
};

RunResult run(const RunRequest& req);

} // namespace mixmult

#endif
