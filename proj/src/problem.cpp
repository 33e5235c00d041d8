#include "mixmult/problem.hpp"

#include <cctype>
#include <sstream>
#include <type_traits>

#include <json.hpp>

namespace mixmult {

using Json = nlohmann::ordered_json;

std::string FieldDecl::to_string() const {
    return kind == Kind::Rationals ? "Q" : "Fp " + std::to_string(modulus);
}

const NamedIdeal* ProblemSpec::find_ideal(const std::string& name) const {
    for (const NamedIdeal& I : ideals) {
        if (I.name == name) return &I;
    }
    return nullptr;
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

// Cursor over one logical line.
struct Cursor {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    int col() const { return static_cast<int>(pos) + 1; }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eol() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) parse_fail(line, col(), "expected '" + std::string(1, c) + "' " + what);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (start == pos || std::isdigit(static_cast<unsigned char>(text[start]))) {
            parse_fail(line, static_cast<int>(start) + 1, "expected an identifier");
        }
        return text.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) parse_fail(line, static_cast<int>(start) + 1, "expected an integer");
        std::string digits = text.substr(start, pos - start);
        if (digits.size() > 15) parse_fail(line, static_cast<int>(start) + 1, "integer literal too large");
        return std::stoll(digits);
    }
};

// poly := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := integer | var ('^' integer)?
Polynomial<Rat> parse_poly(Cursor& cur, const VariableSet& vars) {
    auto parse_term = [&](bool negated) {
        Rat coeff(negated ? -1 : 1);
        Monomial mono(vars.dim());
        bool saw_factor = false;
        for (;;) {
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= Rat(static_cast<long>(cur.integer()));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                int at = cur.col();
                std::string name = cur.ident();
                std::optional<int> vi = vars.index_of(name);
                if (!vi) parse_fail(cur.line, at, "undeclared variable '" + name + "'");
                long long e = 1;
                if (cur.accept('^')) e = cur.integer();
                if (e < 0 || e > 1000000) parse_fail(cur.line, at, "exponent out of range");
                mono = mono * Monomial::variable(vars.dim(), *vi, static_cast<std::int32_t>(e));
            } else {
                parse_fail(cur.line, cur.col(), "expected a coefficient or variable");
            }
            saw_factor = true;
            if (!cur.accept('*')) break;
        }
        if (!saw_factor) parse_fail(cur.line, cur.col(), "empty term");
        return Polynomial<Rat>::from_term(mono, coeff);
    };

    Polynomial<Rat> p(vars.dim());
    bool neg = cur.accept('-');
    p = p + parse_term(neg);
    for (;;) {
        if (cur.accept('+')) {
            p = p + parse_term(false);
        } else if (cur.accept('-')) {
            p = p + parse_term(true);
        } else {
            break;
        }
    }
    return p;
}

std::vector<std::string> logical_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    lines.push_back(cur);
    return lines;
}

} // namespace

ProblemSpec parse_input(const std::string& text) {
    ProblemSpec spec;
    bool have_field = false, have_ring = false, have_module = false;
    std::vector<std::string> lines = logical_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string raw = lines[li];
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        Cursor cur{raw, static_cast<int>(li) + 1};
        if (cur.eol()) continue;
        int kw_col = cur.col();
        std::string kw = cur.ident();
        if (kw == "field") {
            if (have_field) parse_fail(cur.line, kw_col, "duplicate field declaration");
            std::string kind = cur.ident();
            if (kind == "Q") {
                spec.field.kind = FieldDecl::Kind::Rationals;
            } else if (kind == "Fp") {
                int at = cur.col();
                long long p = cur.integer();
                if (p < 2 || p > 2147483647 || !is_prime_u32(static_cast<std::uint32_t>(p))) {
                    parse_fail(cur.line, at, "modulus " + std::to_string(p) + " is not prime");
                }
                spec.field.kind = FieldDecl::Kind::Prime;
                spec.field.modulus = static_cast<std::uint32_t>(p);
            } else {
                parse_fail(cur.line, kw_col, "field must be Q or Fp <prime>");
            }
            have_field = true;
        } else if (kw == "ring") {
            if (have_ring) parse_fail(cur.line, kw_col, "duplicate ring declaration");
            std::vector<std::string> names;
            while (!cur.eol()) names.push_back(cur.ident());
            if (names.empty()) parse_fail(cur.line, cur.col(), "ring needs at least one variable");
            try {
                spec.vars = VariableSet(names);
            } catch (const Error& e) {
                parse_fail(cur.line, kw_col, e.what());
            }
            spec.H = MonomialIdeal::zero(spec.vars.dim());
            have_ring = true;
        } else if (kw == "ideal") {
            if (!have_ring) parse_fail(cur.line, kw_col, "ideal before ring declaration");
            NamedIdeal ideal;
            ideal.name = cur.ident();
            if (spec.find_ideal(ideal.name)) {
                parse_fail(cur.line, kw_col, "duplicate ideal '" + ideal.name + "'");
            }
            cur.expect('=', "after ideal name");
            for (;;) {
                int at = cur.col();
                Polynomial<Rat> g = parse_poly(cur, spec.vars);
                if (g.is_zero()) parse_fail(cur.line, at, "zero generator");
                if (g.term_count() > 1 && !g.is_homogeneous()) {
                    parse_fail(cur.line, at, "polynomial generators must be homogeneous");
                }
                ideal.gens.push_back(std::move(g));
                if (!cur.accept(',')) break;
            }
            if (!cur.eol()) parse_fail(cur.line, cur.col(), "trailing input after generators");
            spec.ideals.push_back(std::move(ideal));
        } else if (kw == "module") {
            if (!have_ring) parse_fail(cur.line, kw_col, "module before ring declaration");
            if (have_module) parse_fail(cur.line, kw_col, "duplicate module declaration");
            std::string name = cur.ident();
            if (name != "H") parse_fail(cur.line, kw_col, "module must be named H");
            cur.expect('=', "after module name");
            if (cur.peek() == '0') {
                cur.accept('0');
                spec.H = MonomialIdeal::zero(spec.vars.dim());
            } else {
                std::vector<Monomial> gens;
                for (;;) {
                    int at = cur.col();
                    Polynomial<Rat> g = parse_poly(cur, spec.vars);
                    if (g.term_count() != 1) parse_fail(cur.line, at, "module kernel generators must be monomials");
                    gens.push_back(g.terms().begin()->first);
                    if (!cur.accept(',')) break;
                }
                spec.H = MonomialIdeal(spec.vars.dim(), std::move(gens));
                if (spec.H.is_unit()) parse_fail(cur.line, kw_col, "module kernel is the unit ideal");
            }
            if (!cur.eol()) parse_fail(cur.line, cur.col(), "trailing input after module");
            have_module = true;
        } else {
            parse_fail(cur.line, kw_col, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_ring) {
        throw Error(ErrorKind::ParseError, "line 1, col 1: missing ring declaration");
    }
    return spec;
}

std::string serialize(const ProblemSpec& spec) {
    std::string out = "field " + spec.field.to_string() + "\n";
    out += "ring";
    for (const std::string& v : spec.vars.names) out += " " + v;
    out += "\n";
    for (const NamedIdeal& I : spec.ideals) {
        out += "ideal " + I.name + " =";
        for (std::size_t i = 0; i < I.gens.size(); ++i) {
            out += (i ? ", " : " ") + to_string(I.gens[i], spec.vars);
        }
        out += "\n";
    }
    out += "module H =";
    if (spec.H.is_zero()) {
        out += " 0";
    } else {
        for (std::size_t i = 0; i < spec.H.generators().size(); ++i) {
            out += (i ? ", " : " ") + to_string(spec.H.generators()[i], spec.vars);
        }
    }
    out += "\n";
    return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Error(ErrorKind::UnsupportedInput, "empty entry in type '" + text + "'");
        out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else {
            throw Error(ErrorKind::UnsupportedInput, "bad character in type '" + text + "'");
        }
    }
    flush();
    return out;
}

} // namespace

MixedType parse_type_with_j(const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos) {
        throw Error(ErrorKind::UnsupportedInput, "type must look like k1,..,ks;k0+1");
    }
    std::vector<int> k = parse_int_list(text.substr(0, semi));
    std::vector<int> j = parse_int_list(text.substr(semi + 1));
    if (j.size() != 1) throw Error(ErrorKind::UnsupportedInput, "exactly one entry after ';'");
    return MixedType(std::move(k), j[0]);
}

std::vector<int> parse_type_plain(const std::string& text) {
    if (text.find(';') != std::string::npos) {
        throw Error(ErrorKind::UnsupportedInput, "this command takes a plain type k1,..,ks");
    }
    return parse_int_list(text);
}

MonomialIdeal to_monomial_ideal(const NamedIdeal& ideal, int nvars) {
    std::vector<Monomial> gens;
    for (const Polynomial<Rat>& g : ideal.gens) {
        if (g.term_count() != 1) {
            throw Error(ErrorKind::UnsupportedInput,
                        "ideal " + ideal.name + " must be a monomial ideal here");
        }
        gens.push_back(g.terms().begin()->first);
    }
    return MonomialIdeal(nvars, std::move(gens));
}

namespace {

template <class F>
Polynomial<typename F::Elem> convert_poly(const Polynomial<Rat>& p, const F& field) {
    Polynomial<typename F::Elem> out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Rat cc = c;
        cc.canonicalize();
        if (cc.get_den() != 1) {
            throw Error(ErrorKind::UnsupportedInput, "generator coefficients must be integers");
        }
        out.add_term(m, field.from_int(cc.get_num().get_si()));
    }
    return out;
}

struct CommandContext {
    const RunRequest& req;
    const ProblemSpec& spec;

    MonomialIdeal J_ideal() const {
        const NamedIdeal* J = spec.find_ideal("J");
        if (!J) throw Error(ErrorKind::UnsupportedInput, "no ideal named J declared");
        return to_monomial_ideal(*J, spec.vars.dim());
    }

    std::vector<MonomialIdeal> I_ideals() const {
        std::vector<MonomialIdeal> out;
        for (const NamedIdeal& I : spec.ideals) {
            if (I.name == "J") continue;
            out.push_back(to_monomial_ideal(I, spec.vars.dim()));
        }
        if (out.empty()) {
            throw Error(ErrorKind::UnsupportedInput, "declare at least one ideal besides J");
        }
        return out;
    }

    std::vector<MonomialIdeal> all_ideals() const {
        std::vector<MonomialIdeal> out;
        for (const NamedIdeal& I : spec.ideals) out.push_back(to_monomial_ideal(I, spec.vars.dim()));
        if (out.empty()) throw Error(ErrorKind::UnsupportedInput, "declare at least one ideal");
        return out;
    }
};

Json context_json(const AnalysisContext& ctx) {
    return Json{{"d", ctx.d}, {"q", ctx.q}, {"h", ctx.h}, {"s", ctx.s}};
}

Json window_json(const Window& w) {
    return Json{{"lo", w.lo}, {"hi", w.hi}, {"arity", w.arity}};
}

template <class K>
Json element_json(const GeneralElement<K>& e, const VariableSet& vars) {
    Json j;
    j["source"] = source_name(e.source_index);
    j["poly"] = to_string(e.poly, vars);
    j["seed"] = e.seed;
    return j;
}

template <class K>
Json superficial_json(const std::vector<SuperficialCertificate<K>>& certs, const VariableSet& vars) {
    Json arr = Json::array();
    for (const auto& c : certs) {
        Json j;
        j["element"] = element_json(c.element, vars);
        j["window"] = window_json(c.window);
        j["fc1"] = c.fc1;
        j["fc2"] = c.fc2;
        if (c.fc3.has_value()) j["fc3"] = *c.fc3;
        if (c.vacuous) j["vacuous"] = true;
        arr.push_back(std::move(j));
    }
    return arr;
}

template <class K>
Json joint_json(const JointReductionCertificate<K>& cert, const VariableSet& vars) {
    Json j;
    Json elems = Json::array();
    for (const auto& e : cert.elements) elems.push_back(element_json(e, vars));
    j["elements"] = std::move(elems);
    Json tally;
    for (std::size_t i = 0; i < cert.tally.size(); ++i) {
        tally[source_name(static_cast<int>(i))] = cert.tally[i];
    }
    j["tally"] = std::move(tally);
    j["window"] = window_json(cert.window);
    j["is_sop"] = cert.is_sop;
    j["verified"] = cert.verified;
    return j;
}

template <class K>
Json report_json(const VerificationReport<K>& rep, const ProblemSpec& spec,
                 const std::string& type_text) {
    Json j;
    j["command"] = rep.command;
    j["status"] = rep.status;
    j["field"] = spec.field.to_string();
    j["type"] = type_text.empty() ? rep.type.to_string() : type_text;
    j["seed"] = rep.seed;
    if (rep.status == "ok" || rep.mixed_value.has_value()) {
        j["context"] = context_json(rep.context);
    }
    if (rep.mixed_value.has_value()) {
        j["offset"] = rep.offset;
        j["degree"] = rep.degree;
        j["mixed"] = *rep.mixed_value;
    }
    if (rep.reduction_value.has_value()) j["reduction"] = *rep.reduction_value;
    if (rep.status == "ok") {
        j["equal"] = rep.equal;
        j["superficial"] = superficial_json(rep.superficial, spec.vars);
        if (rep.joint.has_value()) j["joint_reduction"] = joint_json(*rep.joint, spec.vars);
    } else {
        j["detail"] = rep.detail;
    }
    return j;
}

template <class K>
std::string human_verify(const VerificationReport<K>& rep) {
    std::ostringstream os;
    os << rep.command << ": ";
    if (rep.status != "ok") {
        os << "error " << rep.status << ": " << rep.detail;
        if (rep.mixed_value.has_value()) os << " (advisory mixed = " << *rep.mixed_value << ")";
    } else {
        os << "mixed = " << *rep.mixed_value << ", reduction = " << *rep.reduction_value << " -> "
           << (rep.equal ? "EQUAL" : "UNEQUAL") << " (d=" << rep.context.d << " q=" << rep.context.q
           << " h=" << rep.context.h << ", offset " << rep.offset << ", degree " << rep.degree
           << ") [" << static_cast<long long>(rep.elapsed_ms) << " ms]";
    }
    return os.str();
}

VerifyOptions verify_options(const RunRequest& req) {
    VerifyOptions opts;
    opts.offset_override = req.offset;
    if (req.window.has_value()) opts.window_width = req.window;
    return opts;
}

template <class F>
RunResult run_typed(const RunRequest& req, const F& field) {
    using K = typename F::Elem;
    const ProblemSpec& spec = req.spec;
    CommandContext cc{req, spec};
    RunResult res;
    BhattacharyaOptions bopts;
    bopts.offset_override = req.offset;

    if (req.command == "mixed-mult") {
        MixedType type = parse_type_with_j(req.type_text);
        MonomialIdeal J = cc.J_ideal();
        std::vector<MonomialIdeal> I_list = cc.I_ideals();
        MixedValue mv = mixed_multiplicity_full(J, I_list, spec.H, type, bopts);
        AnalysisContext ctx = analyze(J, I_list, spec.H);
        Json j;
        j["command"] = "mixed-mult";
        j["status"] = "ok";
        j["field"] = spec.field.to_string();
        j["type"] = type.to_string();
        j["seed"] = req.seed;
        j["context"] = context_json(ctx);
        j["offset"] = mv.offset;
        j["degree"] = mv.degree;
        j["value"] = mv.value;
        res.json_records.push_back(j.dump());
        res.human = "mixed multiplicity of type (" + type.to_string() + "): " + std::to_string(mv.value);
        res.exit_code = 0;
        return res;
    }

    if (req.command == "multiplicity") {
        const NamedIdeal* target = nullptr;
        if (req.ideal_name.has_value()) {
            target = spec.find_ideal(*req.ideal_name);
            if (!target) throw Error(ErrorKind::UnsupportedInput, "no ideal named " + *req.ideal_name);
        } else if (spec.ideals.size() == 1) {
            target = &spec.ideals.front();
        } else {
            throw Error(ErrorKind::UnsupportedInput,
                        "several ideals declared; pick one with --ideal <name>");
        }
        std::vector<Polynomial<K>> gens;
        for (const Polynomial<Rat>& g : target->gens) gens.push_back(convert_poly(g, field));
        PolyIdeal<K> q(spec.vars.dim(), std::move(gens));
        MultiplicityOptions mopts;
        mopts.offset_override = req.offset;
        MultiplicityResult r = hilbert_samuel(q, spec.H, mopts);
        Json j;
        j["command"] = "multiplicity";
        j["status"] = "ok";
        j["field"] = spec.field.to_string();
        j["ideal"] = target->name;
        j["value"] = r.value;
        j["method"] = method_name(r.method);
        Json samples = Json::array();
        for (const auto& [n, c] : r.samples) samples.push_back(Json::array({n, c}));
        j["samples"] = std::move(samples);
        res.json_records.push_back(j.dump());
        res.human = "multiplicity e(" + target->name + "; A/H) = " + std::to_string(r.value);
        res.exit_code = 0;
        return res;
    }

    if (req.command == "verify" || req.command == "superficial") {
        MixedType type = parse_type_with_j(req.type_text);
        MonomialIdeal J = cc.J_ideal();
        std::vector<MonomialIdeal> I_list = cc.I_ideals();
        VerificationReport<K> rep =
            req.command == "verify"
                ? verify_main_theorem(J, I_list, spec.H, type, field, req.seed, verify_options(req))
                : verify_superficial_remark(J, I_list, spec.H, type, field, req.seed,
                                            verify_options(req));
        res.json_records.push_back(report_json(rep, spec, type.to_string()).dump());
        res.human = human_verify(rep);
        res.exit_code = rep.status == "ok" ? (rep.equal ? 0 : 1) : 2;
        return res;
    }

    if (req.command == "verify-rees") {
        std::vector<int> k = parse_type_plain(req.type_text);
        std::vector<MonomialIdeal> ideals = cc.all_ideals();
        VerificationReport<K> rep =
            verify_rees_corollary(ideals, spec.H, k, field, req.seed, verify_options(req));
        res.json_records.push_back(report_json(rep, spec, req.type_text).dump());
        res.human = human_verify(rep);
        res.exit_code = rep.status == "ok" ? (rep.equal ? 0 : 1) : 2;
        return res;
    }

    if (req.command == "joint-reduction") {
        MixedType type = parse_type_with_j(req.type_text);
        MonomialIdeal J = cc.J_ideal();
        std::vector<MonomialIdeal> I_list = cc.I_ideals();
        BuildOptions bo;
        bo.offset_override = req.offset;
        if (req.window.has_value()) bo.window_width = *req.window;
        SuperficialSequence<K> seq =
            build_superficial_sequence(J, I_list, spec.H, type, field, req.seed, bo);
        long long base = req.offset.value_or(default_offset(J, I_list, spec.H));
        Window window = Window::box(base, base + bo.window_width, type.arity());
        JointReductionCertificate<K> cert =
            check_joint_reduction(seq.elements, J, I_list, spec.H, window);
        Json j;
        j["command"] = "joint-reduction";
        j["status"] = "ok";
        j["field"] = spec.field.to_string();
        j["type"] = type.to_string();
        j["seed"] = req.seed;
        j["joint_reduction"] = joint_json(cert, spec.vars);
        j["superficial"] = superficial_json(seq.certificates, spec.vars);
        res.json_records.push_back(j.dump());
        res.human = std::string("joint reduction: ") +
                    (cert.verified ? "verified" : "not verified on window") +
                    (cert.is_sop ? ", system of parameters" : ", not a system of parameters");
        res.exit_code = cert.verified && cert.is_sop ? 0 : 1;
        return res;
    }

    if (req.command == "fuzz") {
        FuzzConfig cfg;
        cfg.trials = req.trials;
        FuzzSummary sum = fuzz_campaign(cfg, field, req.seed);
        Json j;
        j["command"] = "fuzz";
        j["status"] = "ok";
        j["field"] = field.name();
        j["seed"] = req.seed;
        j["trials"] = sum.trials;
        j["equal"] = sum.equal_count;
        j["unequal"] = sum.unequal_count;
        j["errors"] = sum.error_count;
        Json repro = Json::array();
        for (const FuzzCase& c : sum.reproducers) {
            ProblemSpec ps;
            ps.field.kind = std::is_same_v<F, RatField> ? FieldDecl::Kind::Rationals
                                                        : FieldDecl::Kind::Prime;
            if constexpr (std::is_same_v<F, FpField>) ps.field.modulus = field.modulus();
            ps.vars = VariableSet(c.vars);
            NamedIdeal nj;
            nj.name = "J";
            for (const Monomial& g : c.J.generators()) {
                nj.gens.push_back(Polynomial<Rat>::from_term(g, Rat(1)));
            }
            ps.ideals.push_back(std::move(nj));
            for (std::size_t i = 0; i < c.I_list.size(); ++i) {
                NamedIdeal ni;
                ni.name = "I" + std::to_string(i + 1);
                for (const Monomial& g : c.I_list[i].generators()) {
                    ni.gens.push_back(Polynomial<Rat>::from_term(g, Rat(1)));
                }
                ps.ideals.push_back(std::move(ni));
            }
            ps.H = c.H;
            Json rj;
            rj["input"] = serialize(ps);
            rj["type"] = c.type.to_string();
            rj["seed"] = c.seed;
            rj["status"] = c.status;
            repro.push_back(std::move(rj));
        }
        j["reproducers"] = std::move(repro);
        res.json_records.push_back(j.dump());
        res.human = "fuzz: " + std::to_string(sum.equal_count) + " equal, " +
                    std::to_string(sum.unequal_count) + " unequal, " +
                    std::to_string(sum.error_count) + " errored of " + std::to_string(sum.trials) +
                    " trials";
        res.exit_code = (sum.unequal_count == 0 && sum.error_count == 0) ? 0 : 1;
        return res;
    }

    throw Error(ErrorKind::UnsupportedInput, "unknown command '" + req.command + "'");
}

// Principal integers of a run, for the rational cross-check.
std::vector<long long> principal_values(const RunResult& res) {
    std::vector<long long> out;
    for (const std::string& rec : res.json_records) {
        Json j = Json::parse(rec);
        for (const char* key : {"value", "mixed", "reduction", "equal", "unequal", "errors"}) {
            if (j.contains(key)) {
                if (j[key].is_boolean()) {
                    out.push_back(j[key].get<bool>() ? 1 : 0);
                } else {
                    out.push_back(j[key].get<long long>());
                }
            }
        }
    }
    return out;
}

} // namespace

RunResult run(const RunRequest& req) {
    try {
        if (req.command != "fuzz" && !req.has_spec) {
            throw Error(ErrorKind::UnsupportedInput, "this command needs an input file");
        }
        RunResult res;
        if (req.spec.field.kind == FieldDecl::Kind::Rationals) {
            res = run_typed(req, RatField{});
        } else {
            res = run_typed(req, FpField(req.spec.field.modulus));
        }
        if (req.field_check && req.spec.field.kind == FieldDecl::Kind::Prime) {
            RunRequest rat_req = req;
            rat_req.field_check = false;
            rat_req.spec.field.kind = FieldDecl::Kind::Rationals;
            RunResult rat_res = run_typed(rat_req, RatField{});
            if (principal_values(res) != principal_values(rat_res)) {
                throw Error(ErrorKind::FieldArtifact,
                            "prime-field result differs from the rational rerun");
            }
            res.human += "\nfield-check: rational rerun agrees";
        }
        return res;
    } catch (const Error& e) {
        RunResult res;
        res.exit_code = 2;
        Json j;
        j["command"] = req.command;
        j["status"] = error_kind_name(e.kind());
        j["detail"] = e.what();
        res.json_records.push_back(j.dump());
        res.human = std::string("error: ") + e.what();
        return res;
    }
}

} // namespace mixmult
