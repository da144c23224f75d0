#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "kronx/cg.hpp"
#include "kronx/cli.hpp"
#include "kronx/io.hpp"
#include "kronx/models.hpp"
#include "kronx/verify.hpp"

namespace py = pybind11;
using namespace kronx;

namespace {

// matrices cross the boundary as JSON text in the CLI's matrix form
std::string dump(const io::AnyMatrix& m) {
    return std::visit([](const auto& a) { return io::to_json(a).dump(); }, m);
}

io::AnyMatrix load(const std::string& s) { return io::from_json(io::json::parse(s)); }

Generator gen(const std::string& op) {
    if (op == "j3") return Generator::j3;
    if (op == "jplus") return Generator::plus;
    if (op == "jminus") return Generator::minus;
    throw DomainError("op must be j3, jplus or jminus");
}

}  // namespace

PYBIND11_MODULE(_kronx, m) {
    m.doc() = "Exact sparse Kronecker algebra, SU(2) coupling and small quantum models";

    py::register_exception<Error>(m, "KronxError", PyExc_ValueError);

    m.def(
        "run",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "kronx");
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the kronx CLI in-process; returns (exit_code, stdout, stderr).");

    m.def(
        "su2",
        [](int twoj, const std::string& op) {
            const Irrep rep(twoj);
            if (op == "j3") return dump(j3(rep));
            return dump(generator(rep, gen(op)));
        },
        py::arg("twoj"), py::arg("op") = "jplus");

    m.def(
        "couple",
        [](int a, int b, const std::string& op, bool block) {
            return dump(block ? block_gen(a, b, gen(op)).flat() : product_gen(a, b, gen(op)));
        },
        py::arg("twoj1"), py::arg("twoj2"), py::arg("op") = "jplus", py::arg("block") = false);

    m.def(
        "cg_matrix",
        [](int a, int b) {
            const auto s = build_S(a, b);
            if (s.exact) return dump(s.entries);
            return dump(to_complex(s.values));
        },
        py::arg("twoj1"), py::arg("twoj2"));

    m.def(
        "cg_coefficient",
        [](int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
            const auto c = cg_coefficient(tj1, tm1, tj2, tm2, tj, tm);
            return py::make_tuple(c.sign(), c.radicand().get_num().get_str(), c.radicand().get_den().get_str(),
                                  c.to_double());
        },
        py::arg("twoj1"), py::arg("twom1"), py::arg("twoj2"), py::arg("twom2"), py::arg("twoj"), py::arg("twom"),
        "Returns (sign, radicand numerator, radicand denominator, float value).");

    m.def(
        "kron",
        [](const std::vector<std::string>& factors) {
            if (factors.size() < 2) throw DomainError("kron: need at least two matrices");
            // promote everything to the widest field
            std::vector<io::AnyMatrix> ms;
            std::size_t field = 0;
            for (const auto& f : factors) {
                ms.push_back(load(f));
                field = std::max(field, ms.back().index());
            }
            if (field == 0) {
                std::vector<XSum<Rational>> v;
                for (const auto& x : ms) v.push_back(std::get<0>(x));
                return dump(kron_many(v));
            }
            if (field == 1) {
                std::vector<XSum<SqrtRational>> v;
                for (const auto& x : ms) v.push_back(x.index() == 0 ? convert<SqrtRational>(std::get<0>(x)) : std::get<1>(x));
                return dump(kron_many(v));
            }
            std::vector<XSum<ComplexFloat>> v;
            for (const auto& x : ms) v.push_back(io::as_complex(x));
            return dump(kron_many(v));
        },
        py::arg("factors"));

    m.def(
        "eigenvalues",
        [](const std::string& matrix, double tol) { return diagonalize(io::as_complex(load(matrix)), tol).eigenvalues; },
        py::arg("matrix"), py::arg("tol") = 1e-12, "Ascending eigenvalues of a Hermitian matrix by Jacobi rotations.");

    m.def(
        "heisenberg",
        [](int sites, const std::string& jx, const std::string& jy, const std::string& jz, bool periodic) {
            return dump(heisenberg_h({sites, parse_rational(jx), parse_rational(jy), parse_rational(jz)}, periodic));
        },
        py::arg("sites"), py::arg("jx") = "1", py::arg("jy") = "1", py::arg("jz") = "1", py::arg("periodic") = true);

    m.def(
        "jc_evolution",
        [](double gamma, int cutoff, double t) { return dump(jc_evolution({gamma, cutoff}, t)); },
        py::arg("gamma"), py::arg("cutoff"), py::arg("time"));

    m.def("suite_names", &verify::suite_names);
    m.def(
        "verify",
        [](const std::string& suite, int max_twoj, double tol, unsigned long seed) {
            verify::Options o;
            o.max_twoj = max_twoj;
            o.tol = tol;
            o.seed = seed;
            py::list out;
            for (const auto& c : verify::run_suite(suite, o).checks) out.append(py::make_tuple(c.name, c.detail, c.pass));
            return out;
        },
        py::arg("suite"), py::arg("max_twoj") = 5, py::arg("tol") = 1e-10, py::arg("seed") = 20240601);
}
