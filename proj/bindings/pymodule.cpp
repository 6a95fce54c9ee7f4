/* Python bindings for the main operations. */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "giambelli/gmatrix.hpp"
#include "giambelli/stabeq.hpp"
#include "giambelli/strips.hpp"
#include "giambelli/symfun.hpp"
#include "giambelli/verify.hpp"

namespace py = pybind11;
using namespace giambelli;

namespace {

SkewShape shape_of(const std::string& text) { return SkewShape::parse(text); }

std::vector<Step> steps_of(const std::string& text) {
    std::vector<Step> steps;
    for (char ch : text) {
        if (ch == 'R')
            steps.push_back(Step::Right);
        else if (ch == 'U')
            steps.push_back(Step::Up);
        else
            throw std::invalid_argument("directions must use R and U");
    }
    return steps;
}

OutsideDecomposition decomposition_of(const std::string& shape, const std::string& directions) {
    SkewShape s = shape_of(shape);
    if (directions.empty()) return horizontal_decomposition(s);
    if (directions == "vertical") return vertical_decomposition(s);
    return decomposition_from_cutting_strip(s, steps_of(directions));
}

py::dict poly_dict(const SymPoly& p) {
    py::dict out;
    for (auto& [exps, coeff] : p.terms_sorted()) out[py::tuple(py::cast(exps))] = coeff;
    return out;
}

std::vector<std::vector<std::string>> matrix_labels(const SymMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out[r].push_back(m.at(r, c).label());
    return out;
}

}  // namespace

PYBIND11_MODULE(pygiambelli, m) {
    m.doc() = "Giambelli-type matrices of skew Schur functions: outside decompositions, "
              "twist transformations and stable-equivalence operation logs";

    m.def("conjugate", [](const std::string& text) {
        return Partition::parse(text).conjugate().to_string();
    });
    m.def("boxes", [](const std::string& text) {
        std::vector<std::pair<int, int>> out;
        for (BoxCoord b : shape_of(text).boxes()) out.emplace_back(b.row, b.col);
        return out;
    });
    m.def("diagram", [](const std::string& text) { return shape_of(text).ascii(); });
    m.def("is_connected", [](const std::string& text) {
        return shape_of(text).edgewise_connected();
    });

    m.def(
        "schur_poly",
        [](const std::string& text, int nvars) { return poly_dict(schur_poly(shape_of(text), nvars)); },
        py::arg("shape"), py::arg("nvars"),
        "skew Schur polynomial as a dict mapping exponent tuples to coefficients");
    m.def("complete_h",
          [](int k, int nvars) { return poly_dict(complete_h(k, nvars)); });
    m.def("elementary_e",
          [](int k, int nvars) { return poly_dict(elementary_e(k, nvars)); });
    m.def(
        "check_glue_identity",
        [](const std::string& i, const std::string& j, int nvars) {
            return check_glue_identity(shape_of(i), shape_of(j), nvars);
        },
        py::arg("I"), py::arg("J"), py::arg("nvars"));

    m.def(
        "decomposition",
        [](const std::string& shape, const std::string& directions) {
            OutsideDecomposition pi = decomposition_of(shape, directions);
            py::dict out;
            out["strips"] = pi.bracket_list();
            out["directions"] = pi.cutting().directions_string();
            return out;
        },
        py::arg("shape"), py::arg("directions") = "",
        "outside decomposition; directions '' = horizontal, 'vertical', or a RU... string");
    m.def(
        "twist",
        [](const std::string& shape, const std::string& directions, int at) {
            TwistResult r = twist(decomposition_of(shape, directions), at);
            py::dict out;
            out["strips"] = r.decomposition.bracket_list();
            out["directions"] = r.decomposition.cutting().directions_string();
            out["rule"] = to_string(r.rule);
            out["case"] = to_string(r.tcase);
            return out;
        },
        py::arg("shape"), py::arg("directions"), py::arg("at"));

    m.def(
        "jacobi_trudi",
        [](const std::string& shape) { return matrix_labels(jacobi_trudi(shape_of(shape))); },
        py::arg("shape"));
    m.def(
        "dual_jacobi_trudi",
        [](const std::string& shape) {
            return matrix_labels(dual_jacobi_trudi(shape_of(shape)));
        },
        py::arg("shape"));
    m.def(
        "canonical_matrix",
        [](const std::string& shape, const std::string& directions) {
            return matrix_labels(canonical_form(decomposition_of(shape, directions)).matrix);
        },
        py::arg("shape"), py::arg("directions") = "");
    m.def(
        "giambelli_determinant_check",
        [](const std::string& shape, const std::string& directions) {
            SkewShape s = shape_of(shape);
            OutsideDecomposition pi = decomposition_of(shape, directions);
            int n = std::max(1, s.box_count());
            return determinant(evaluate(giambelli_matrix(pi), n)) == schur_poly(s, n);
        },
        py::arg("shape"), py::arg("directions") = "");

    m.def(
        "chain",
        [](const std::string& shape) {
            OpLog log = chain(shape_of(shape));
            py::list stages;
            for (const ChainStage& st : log.stages) {
                if (!st.canonical) continue;
                py::dict stage;
                stage["note"] = st.note;
                stage["strips"] = st.decomposition.bracket_list();
                stage["matrix"] = matrix_labels(canonical_form(st.decomposition).matrix);
                stages.append(stage);
            }
            py::dict out;
            out["stages"] = stages;
            out["cases"] = log.cases;
            out["ops"] = static_cast<int>(log.ops.size());
            return out;
        },
        py::arg("shape"), "the stable-equivalence chain, stage by stage");
    m.def(
        "verify_chain",
        [](const std::string& shape, int nvars) {
            SkewShape s = shape_of(shape);
            if (nvars == 0) nvars = std::max(1, s.box_count());
            ChainReport report = verify_chain(s, nvars);
            py::dict out;
            out["ok"] = report.ok();
            out["ops"] = static_cast<int>(report.total_ops);
            out["summary"] = report.summary();
            return out;
        },
        py::arg("shape"), py::arg("nvars") = 0);
}
