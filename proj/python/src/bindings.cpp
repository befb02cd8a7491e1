#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vrbridge/complex.hpp"
#include "vrbridge/error.hpp"
#include "vrbridge/homology.hpp"
#include "vrbridge/io.hpp"
#include "vrbridge/pipeline.hpp"
#include "vrbridge/realization.hpp"

namespace py = pybind11;
using namespace vrbridge;

PYBIND11_MODULE(_vrbridge, m)
{
    m.doc() = "Clique complexes of reflexive graphs, homology over GF(2), and sampled-map pipelines";

    static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<CertificateError> certificate_error(m, "CertificateError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const CertificateError& e) {
            py::set_error(certificate_error, e.what());
        } catch (const InputError& e) {
            py::set_error(input_error, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_static(
            "parse",
            [](const std::string& text) {
                std::istringstream in(text);
                return parse_edge_list(in);
            },
            py::arg("text"), "Parses edge-list text.")
        .def_static("read", &read_edge_list, py::arg("path"))
        .def("__len__", &Graph::size)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("labels", &Graph::labels)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("are_adjacent", &Graph::are_adjacent, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges);

    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("octahedron_graph", &octahedron_graph);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_property_readonly("dim_cap", &SimplicialComplex::dim_cap)
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def("counts", &SimplicialComplex::counts)
        .def("simplices", &SimplicialComplex::simplices, py::arg("k"))
        .def("__contains__", &SimplicialComplex::contains)
        .def("to_json", [](const SimplicialComplex& k) { return complex_to_json(k).dump(); });

    m.def("vietoris_rips", &vietoris_rips, py::arg("graph"), py::arg("dim_cap"));
    m.def(
        "barycentric_subdivision",
        [](const SimplicialComplex& k) {
            auto sd = barycentric_subdivision(k);
            return py::make_tuple(sd.complex, sd.carriers);
        },
        py::arg("complex"), "Returns (sd K, carrier of each new vertex).");
    m.def("betti_numbers", &betti_numbers, py::arg("complex"), py::arg("max_k"));
    m.def("euler_characteristic", &euler_characteristic, py::arg("complex"));
    m.def(
        "abelianization_rank",
        [](const SimplicialComplex& k, Vertex base) { return edge_path_presentation(k, base).abelianization_rank(); },
        py::arg("complex"), py::arg("base") = 0);

    m.def(
        "theta",
        [](const Graph& g, std::vector<Vertex> carrier, std::vector<double> coords) {
            return theta_point(g, BaryPoint(std::move(carrier), std::move(coords)));
        },
        py::arg("graph"), py::arg("carrier"), py::arg("coords"));

    m.def(
        "run_pipeline",
        [](const Graph& g, const std::string& domain, const std::string& map, std::size_t subdivisions,
           std::size_t grid, std::uint64_t seed) {
            PipelineOptions o;
            o.domain = domain;
            o.map = map;
            o.extra_subdivisions = subdivisions;
            o.grid = grid;
            o.seed = seed;
            return run_pipeline(g, o).report.dump();
        },
        py::arg("graph"), py::arg("domain") = "circle:64", py::arg("map") = "quarter-arc",
        py::arg("subdivisions") = 0, py::arg("grid") = 50, py::arg("seed") = 0,
        "Pipeline report as a JSON string.");
}
