#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sdecomp/classifier.hpp"
#include "sdecomp/cli.hpp"
#include "sdecomp/report.hpp"
#include "sdecomp/search.hpp"
#include "sdecomp/stepanov.hpp"

namespace py = pybind11;
using namespace sdecomp;

namespace {

using Parts = std::vector<std::vector<std::uint32_t>>;

std::string search_json(std::uint64_t q, std::uint32_t d, int arity, std::uint32_t min_size, std::uint64_t budget,
                        unsigned threads, std::size_t max_witnesses) {
    SearchTask t;
    t.q = q;
    t.d = d;
    t.arity = arity;
    t.min_part_size = min_size;
    t.budget = budget;
    t.threads = threads;
    t.max_witnesses = max_witnesses;
    const auto f = make_field_of_order(q);
    py::gil_scoped_release release;
    const auto v = arity == 3 ? search_ternary(f, t) : search_binary(f, t);
    return verdict_json(v, t).dump();
}

}  // namespace

PYBIND11_MODULE(_sdecomp, m) {
    m.doc() = "Bindings for the sdecomp C++ core; results are returned as JSON text.";
    py::register_exception<Error>(m, "SdecompError", PyExc_ValueError);

    m.def("tool_version", &tool_version);

    m.def("lucas_binom", [](std::uint64_t top, std::uint64_t bottom, std::uint32_t p) {
        return lucas_binom(top, bottom, p).residue;
    });

    m.def("field_json", [](std::uint64_t q) { return field_json(*make_field_of_order(q)).dump(); });

    m.def("classify_json", [](std::uint32_t d, std::uint64_t q) { return pair_class_json(classify_pair(d, q)).dump(); });

    m.def("search_json", &search_json, py::arg("q"), py::arg("d"), py::arg("arity") = 2, py::arg("min_size") = 2,
          py::arg("budget") = SearchTask{}.budget, py::arg("threads") = 0,
          py::arg("max_witnesses") = SearchTask{}.max_witnesses);

    m.def("stepanov_json",
          [](std::uint64_t q, std::uint32_t d, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
              const auto f = make_field_of_order(q);
              return certificate_json(build_certificate(FqSubset(f, a), FqSubset(f, b), d)).dump();
          });

    m.def(
        "verify_witness",
        [](std::uint64_t q, std::uint32_t d, const Parts& parts, std::uint32_t min_size) {
            return verify_witness(make_field_of_order(q), parts, d, min_size);
        },
        py::arg("q"), py::arg("d"), py::arg("parts"), py::arg("min_size") = 2);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli_dispatch(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });
}
