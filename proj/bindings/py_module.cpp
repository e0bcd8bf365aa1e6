#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "qsf/center.hpp"
#include "qsf/coend.hpp"
#include "qsf/compare.hpp"
#include "qsf/drinfeld_double.hpp"
#include "qsf/modules.hpp"
#include "qsf/qhat.hpp"
#include "qsf/verify.hpp"

namespace py = pybind11;
using namespace qsf;
using json = nlohmann::ordered_json;

namespace {

QConfig make_config(int n, int beta_exp, int nu) {
    QConfig cfg{n, ((beta_exp % 8) + 8) % 8, nu};
    cfg.validate();
    return cfg;
}

json check_to_json(const CheckResult& r) {
    json o;
    o["name"] = r.name;
    o["statement"] = r.statement;
    o["status"] = r.status;
    o["residual_count"] = r.residual_count;
    o["runtime_ms"] = r.runtime_ms;
    if (!r.note.empty()) o["note"] = r.note;
    return o;
}

std::string checks_to_json_string(const std::vector<CheckResult>& rs) {
    json arr = json::array();
    for (auto& r : rs) arr.push_back(check_to_json(r));
    return arr.dump();
}

std::vector<std::vector<std::string>> mat_to_strings(const DenseMat& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_qsf, m) {
    m.doc() = "Exact computational engine for the symplectic fermion "
              "quasi-Hopf algebras Q(N, beta)";

    py::class_<Cyc>(m, "Cyc")
        .def(py::init([](long v) { return Cyc(v); }))
        .def_static("zeta", &Cyc::zeta, "primitive 8th root of unity to a power")
        .def_static("i", &Cyc::i)
        .def_static("sqrt2", &Cyc::sqrt2)
        .def("__add__", [](const Cyc& a, const Cyc& b) { return a + b; })
        .def("__sub__", [](const Cyc& a, const Cyc& b) { return a - b; })
        .def("__mul__", [](const Cyc& a, const Cyc& b) { return a * b; })
        .def("__truediv__", [](const Cyc& a, const Cyc& b) { return a / b; })
        .def("__neg__", [](const Cyc& a) { return -a; })
        .def("__eq__", [](const Cyc& a, const Cyc& b) { return a == b; })
        .def("is_zero", &Cyc::is_zero)
        .def("__repr__", [](const Cyc& a) { return a.str(); });

    m.def("dimension", [](int n) { return make_config(n, n % 2, 1).dim(); },
          py::arg("n"), "dimension 2^(2N+2) of the algebra");

    m.def("center_dimension", [](int n) {
        auto data = compute_center(make_config(n, n % 2, 1));
        return static_cast<int>(data.kernel.size());
    }, py::arg("n"), "dimension of the centre computed by the exact kernel solver");

    m.def("verify", [](int n, int beta_exp, int nu, const std::string& suite,
                       double max_seconds) {
        auto s = build_structures(make_config(n, beta_exp, nu));
        Budget b = max_seconds > 0 ? Budget::seconds(max_seconds) : Budget::none();
        return checks_to_json_string(verify_suite(s, suite, b));
    }, py::arg("n"), py::arg("beta_exp"), py::arg("nu") = 1, py::arg("suite") = "all",
       py::arg("max_seconds") = 0.0,
       "run the axiom suite; returns a JSON string of check results");

    m.def("center_checks", [](int n, int beta_exp, int nu) {
        auto cfg = make_config(n, beta_exp, nu);
        auto data = compute_center(cfg);
        auto s = build_structures(cfg);
        auto rs = data.checks;
        for (auto& r : special_idempotents(s)) rs.push_back(r);
        return checks_to_json_string(rs);
    }, py::arg("n"), py::arg("beta_exp"), py::arg("nu") = 1);

    m.def("module_checks", [](int n, int beta_exp, int nu) {
        auto s = build_structures(make_config(n, beta_exp, nu));
        auto rs = check_characters(s);
        for (auto& r : cartan_and_basic_algebra(s, n <= 2)) rs.push_back(r);
        return checks_to_json_string(rs);
    }, py::arg("n"), py::arg("beta_exp"), py::arg("nu") = 1);

    m.def("sl2z_checks", [](int n, int beta_exp, int nu) {
        auto cfg = make_config(n, beta_exp, nu);
        auto s = build_structures(cfg);
        auto rs = check_integral(s);
        auto act = check_theorem_ST(cfg);
        for (auto& r : act.checks) rs.push_back(r);
        return checks_to_json_string(rs);
    }, py::arg("n"), py::arg("beta_exp"), py::arg("nu") = 1);

    m.def("s_matrix", [](int n, int beta_exp, int nu) {
        return mat_to_strings(check_theorem_ST(make_config(n, beta_exp, nu)).Smat);
    }, py::arg("n"), py::arg("beta_exp"), py::arg("nu") = 1,
       "exact S-matrix on the centre, entries as strings");

    m.def("t_matrix", [](int n, int beta_exp, int nu) {
        return mat_to_strings(check_theorem_ST(make_config(n, beta_exp, nu)).Tmat);
    }, py::arg("n"), py::arg("beta_exp"), py::arg("nu") = 1);

    m.def("qhat_checks", [](int n, int beta_exp, double max_seconds) {
        auto cfg = make_config(n, beta_exp, 1);
        auto s = build_structures(cfg);
        auto h = build_qhat(cfg);
        Budget b = max_seconds > 0 ? Budget::seconds(max_seconds) : Budget::none();
        auto rs = check_qhat_build(s, h);
        for (auto& r : check_twist_equivalence(s, h, b)) rs.push_back(r);
        if (n == 1)
            for (auto& r : check_qhat_axioms(h, b)) rs.push_back(r);
        return checks_to_json_string(rs);
    }, py::arg("n"), py::arg("beta_exp"), py::arg("max_seconds") = 0.0);

    m.def("double_checks", [](int n, int beta_exp) {
        auto s = build_structures(make_config(n, beta_exp, 1));
        DoubleAlgebra D(n);
        auto rs = check_H_hopf(D);
        for (auto& r : check_dual_hopf(D)) rs.push_back(r);
        for (auto& r : check_double_relations(D)) rs.push_back(r);
        if (n <= 2)
            for (auto& r : check_double_quasitriangular(D)) rs.push_back(r);
        for (auto& r : check_psi(s, D)) rs.push_back(r);
        return checks_to_json_string(rs);
    }, py::arg("n"), py::arg("beta_exp"));

    m.def("compare_checks", [](int n) {
        auto data = check_comparison(make_config(n, n, 1));
        return checks_to_json_string(data.checks);
    }, py::arg("n"), "projective comparison of the two modular actions");
}
