#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixmult/problem.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw mixmult::Error(mixmult::ErrorKind::UnsupportedInput, "cannot open input file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_command(const std::string& command, const std::string& input_path,
                const std::string& type_text, std::uint64_t seed, bool json, bool field_check,
                long long window, long long offset, const std::string& ideal_name, int trials) {
    mixmult::RunRequest req;
    req.command = command;
    req.type_text = type_text;
    req.seed = seed;
    req.json = json;
    req.field_check = field_check;
    if (window >= 0) req.window = window;
    if (offset >= 0) req.offset = offset;
    if (!ideal_name.empty()) req.ideal_name = ideal_name;
    req.trials = trials;
    if (!input_path.empty()) {
        try {
            req.spec = mixmult::parse_input(read_input(input_path));
            req.has_spec = true;
        } catch (const mixmult::Error& e) {
            if (json) {
                std::cout << R"({"command":")" << command << R"(","status":")"
                          << mixmult::error_kind_name(e.kind()) << R"(","detail":")" << e.what()
                          << "\"}" << std::endl;
            } else {
                std::cerr << "error: " << e.what() << std::endl;
            }
            return 2;
        }
    }
    mixmult::RunResult res = mixmult::run(req);
    if (json) {
        for (const std::string& rec : res.json_records) std::cout << rec << "\n";
    } else {
        std::cout << res.human << "\n";
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mixed multiplicities, joint reductions, and superficial sequences"};
    app.require_subcommand(1);

    struct Common {
        std::string input;
        std::string type;
        std::uint64_t seed = 0;
        bool json = false;
        bool field_check = false;
        long long window = -1;
        long long offset = -1;
        std::string ideal;
        int trials = 50;
    };

    auto add_common = [](CLI::App* cmd, Common& c, bool needs_input) {
        if (needs_input) {
            cmd->add_option("input", c.input, "problem file ('-' for stdin)")->required();
        }
        cmd->add_option("--seed", c.seed, "RNG seed (default 0)");
        cmd->add_flag("--json", c.json, "one machine-readable record per line");
        cmd->add_flag("--field-check", c.field_check, "rerun over the rationals and compare");
        cmd->add_option("--window", c.window, "certification window width");
        cmd->add_option("--offset", c.offset, "sampling/window base offset");
    };

    Common mixed, mult, superf, joint, verify, rees, fuzz;

    CLI::App* c_mixed = app.add_subcommand("mixed-mult", "mixed multiplicity of a given type");
    add_common(c_mixed, mixed, true);
    c_mixed->add_option("--type", mixed.type, "k1,..,ks;k0+1")->required();

    CLI::App* c_mult = app.add_subcommand("multiplicity", "Hilbert-Samuel multiplicity of an ideal");
    add_common(c_mult, mult, true);
    c_mult->add_option("--ideal", mult.ideal, "which declared ideal to use");

    CLI::App* c_superf = app.add_subcommand("superficial",
                                            "superficial-sequence route: certify and compare");
    add_common(c_superf, superf, true);
    c_superf->add_option("--type", superf.type, "k1,..,ks;k0+1")->required();

    CLI::App* c_joint = app.add_subcommand("joint-reduction", "build and certify a joint reduction");
    add_common(c_joint, joint, true);
    c_joint->add_option("--type", joint.type, "k1,..,ks;k0+1")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "mixed multiplicity vs joint reduction");
    add_common(c_verify, verify, true);
    c_verify->add_option("--type", verify.type, "k1,..,ks;k0+1")->required();

    CLI::App* c_rees = app.add_subcommand("verify-rees", "m-primary case, type k1,..,ks");
    add_common(c_rees, rees, true);
    c_rees->add_option("--type", rees.type, "k1,..,ks summing to dim")->required();

    CLI::App* c_fuzz = app.add_subcommand("fuzz", "random hypothesis-satisfying instances");
    add_common(c_fuzz, fuzz, false);
    c_fuzz->add_option("--trials", fuzz.trials, "number of trials (<= 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_mixed->parsed()) {
            return run_command("mixed-mult", mixed.input, mixed.type, mixed.seed, mixed.json,
                               mixed.field_check, mixed.window, mixed.offset, "", 0);
        }
        if (c_mult->parsed()) {
            return run_command("multiplicity", mult.input, "", mult.seed, mult.json,
                               mult.field_check, mult.window, mult.offset, mult.ideal, 0);
        }
        if (c_superf->parsed()) {
            return run_command("superficial", superf.input, superf.type, superf.seed, superf.json,
                               superf.field_check, superf.window, superf.offset, "", 0);
        }
        if (c_joint->parsed()) {
            return run_command("joint-reduction", joint.input, joint.type, joint.seed, joint.json,
                               joint.field_check, joint.window, joint.offset, "", 0);
        }
        if (c_verify->parsed()) {
            return run_command("verify", verify.input, verify.type, verify.seed, verify.json,
                               verify.field_check, verify.window, verify.offset, "", 0);
        }
        if (c_rees->parsed()) {
            return run_command("verify-rees", rees.input, rees.type, rees.seed, rees.json,
                               rees.field_check, rees.window, rees.offset, "", 0);
        }
        if (c_fuzz->parsed()) {
            return run_command("fuzz", "", "", fuzz.seed, fuzz.json, fuzz.field_check, fuzz.window,
                               fuzz.offset, "", fuzz.trials);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
