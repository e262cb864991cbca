#include "mpa/errors.hpp"
#include "mpa/multiset_algebra.hpp"
#include "mpa/parallel.hpp"
#include "mpa/rsk.hpp"
#include "mpa/schur_weyl.hpp"
#include "mpa/serialize.hpp"
#include "mpa/symmetric_functions.hpp"
#include "mpa/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mpa;

// Structured values cross the boundary as JSON text; python/mpa/__init__.py decodes them.
namespace {

Json parse(const std::string& text, const char* field) { return parse_json_text(text, field); }

std::optional<std::vector<int>> opt_lambda(const std::optional<std::vector<int>>& l) { return l; }

}  // namespace

PYBIND11_MODULE(_mpa, m) {
    m.doc() = "Exact multiset partition algebra kernels";

    static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<InvalidArgument> invalid(m, "InvalidArgument", PyExc_ValueError);
    static py::exception<MalformedDiagram> malformed(m, "MalformedDiagram", PyExc_ValueError);
    static py::exception<ResourceError> resource(m, "ResourceError", PyExc_MemoryError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            parse_error(e.what());
        } catch (const InvalidArgument& e) {
            invalid(e.what());
        } catch (const MalformedDiagram& e) {
            malformed(e.what());
        } catch (const ResourceError& e) {
            resource(e.what());
        } catch (const Error& e) {
            error(e.what());
        }
    });

    m.def("set_threads", [](unsigned n) { set_worker_count(n); }, py::arg("n"));

    m.def("basis", [](const std::vector<int>& lambda) {
        Json out = Json::array();
        for (const auto& g : enumerate_basis(lambda)) out.push_back(to_json(g));
        return out.dump();
    }, py::arg("lam"));

    m.def("multiply", [](const std::string& a, const std::string& b, std::optional<std::vector<int>> lambda) {
        const Json ja = parse(a, "a"), jb = parse(b, "b");
        if (ja.is_object() && ja.contains("k")) {
            const auto x = pa_element_from_json(ja, "a"), y = pa_element_from_json(jb, "b");
            if (x.basis() != y.basis()) throw InvalidArgument("operands are in different bases");
            return to_json(x.basis() == PABasis::Diagram ? multiply_diagram_basis(x, y) : multiply_orbit_basis(x, y)).dump();
        }
        return to_json(multiply(mp_element_from_json(ja, opt_lambda(lambda), "a"), mp_element_from_json(jb, opt_lambda(lambda), "b"))).dump();
    }, py::arg("a"), py::arg("b"), py::arg("lam") = py::none());

    m.def("structure_poly", [](const std::string& g1, const std::string& g2, const std::string& g) {
        return to_json(structure_poly(multiset_diagram_from_json(parse(g1, "g1"), "g1"), multiset_diagram_from_json(parse(g2, "g2"), "g2"),
                                      multiset_diagram_from_json(parse(g, "g"), "g"))).dump();
    }, py::arg("g1"), py::arg("g2"), py::arg("g"));

    m.def("brute_force_count", [](const std::string& g1, const std::string& g2, const std::string& g, int n) {
        return brute_force_structure_count(multiset_diagram_from_json(parse(g1, "g1"), "g1"), multiset_diagram_from_json(parse(g2, "g2"), "g2"),
                                           multiset_diagram_from_json(parse(g, "g"), "g"), n);
    }, py::arg("g1"), py::arg("g2"), py::arg("g"), py::arg("n"));

    m.def("embed", [](const std::string& a, std::optional<std::vector<int>> lambda) {
        return to_json(embed(mp_element_from_json(parse(a, "a"), lambda, "a"))).dump();
    }, py::arg("a"), py::arg("lam") = py::none());

    m.def("idempotent", [](const std::vector<int>& lambda) { return to_json(idempotent_e(lambda)).dump(); }, py::arg("lam"));

    m.def("phi", [](const std::string& a, int n, std::optional<std::vector<int>> lambda, std::size_t cap) {
        return to_json(phi(mp_element_from_json(parse(a, "a"), lambda, "a"), n, cap)).dump();
    }, py::arg("a"), py::arg("n"), py::arg("lam") = py::none(), py::arg("cap") = kDefaultMatrixCap);

    m.def("centralizer_dimension", &centralizer_dimension, py::arg("n"), py::arg("lam"));

    m.def("a_coeff", [](const std::vector<int>& nu, const std::vector<int>& lambda, const std::string& method) {
        const IntegerPartition p(nu);
        if (method == "ssmt") return a_coeff_ssmt(p, lambda);
        if (method == "plethysm") return a_coeff_plethysm(p, lambda);
        throw InvalidArgument("method must be 'ssmt' or 'plethysm'");
    }, py::arg("nu"), py::arg("lam"), py::arg("method") = "ssmt");

    m.def("lambda_set", [](int k, int n) {
        std::vector<std::vector<int>> out;
        for (const auto& p : lambda_set(k, n)) out.push_back(p.parts());
        return out;
    }, py::arg("k"), py::arg("n"));

    m.def("r_coeff", [](const std::vector<int>& lambda, const std::vector<int>& nu) {
        return r_coeff(IntegerPartition(lambda), IntegerPartition(nu));
    }, py::arg("lam"), py::arg("nu"));
    m.def("r_coeff_oracle", [](const std::vector<int>& lambda, const std::vector<int>& nu) {
        return r_coeff_character_oracle(IntegerPartition(lambda), IntegerPartition(nu));
    }, py::arg("lam"), py::arg("nu"));

    m.def("rsk", [](const std::string& d, int n) {
        return to_json(rsk(to_biword(multiset_diagram_from_json(parse(d, "partition"), "partition"), n))).dump();
    }, py::arg("partition"), py::arg("n"));
    m.def("inverse_rsk", [](const std::string& pair, const std::vector<int>& lambda) {
        const auto p = rsk_pair_from_json(parse(pair, "pair"), "pair");
        return to_json(inverse_rsk(p.insertion, p.recording, lambda)).dump();
    }, py::arg("pair"), py::arg("lam"));

    m.def("verify", [](const std::vector<std::string>& suite, const std::string& scale, std::uint64_t seed) {
        VerifyOptions opt;
        for (const auto& s : suite) opt.criteria.push_back(criterion_id(s));
        if (scale != "smoke" && scale != "desk") throw InvalidArgument("scale must be 'smoke' or 'desk'");
        opt.scale = scale == "desk" ? VerifyScale::Desk : VerifyScale::Smoke;
        opt.seed = seed;
        std::vector<CriterionResult> results;
        {
            py::gil_scoped_release release;
            results = run_acceptance(opt);
        }
        py::list out;
        for (const auto& r : results) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["passed"] = r.passed();
            d["checks"] = r.checks;
            d["failures"] = r.failures;
            d["first_failure"] = r.first_failure;
            out.append(d);
        }
        return out;
    }, py::arg("suite") = std::vector<std::string>{}, py::arg("scale") = "smoke", py::arg("seed") = 1);
}
