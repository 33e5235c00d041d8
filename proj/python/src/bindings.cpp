#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixmult/problem.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact mixed multiplicities, joint reductions, and Rees superficial sequences";

    m.def(
        "run",
        [](const std::string& text, const std::string& command, const std::string& type,
           std::uint64_t seed, long long window, long long offset, const std::string& ideal,
           int trials, bool field_check) {
            mixmult::RunRequest req;
            req.command = command;
            req.type_text = type;
            req.seed = seed;
            req.field_check = field_check;
            if (window >= 0) req.window = window;
            if (offset >= 0) req.offset = offset;
            if (!ideal.empty()) req.ideal_name = ideal;
            req.trials = trials;
            if (!text.empty()) {
                req.spec = mixmult::parse_input(text);
                req.has_spec = true;
            }
            mixmult::RunResult res = mixmult::run(req);
            return py::make_tuple(res.exit_code, res.json_records, res.human);
        },
        py::arg("text"), py::arg("command"), py::arg("type") = "", py::arg("seed") = 0,
        py::arg("window") = -1, py::arg("offset") = -1, py::arg("ideal") = "",
        py::arg("trials") = 50, py::arg("field_check") = false,
        "Run one command against a problem text; returns (exit_code, json_records, summary).");

    m.attr("__version__") = "0.1.0";
}
