#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partlayers/boundary.hpp"
#include "partlayers/clique_oracle.hpp"
#include "partlayers/first_occurrence.hpp"
#include "partlayers/restriction.hpp"

namespace py = pybind11;
using namespace partlayers;

namespace {

py::tuple edge_tuple(const Edge& e)
{
    return py::make_tuple(e.lo, e.hi);
}

std::vector<py::tuple> edge_list(const std::vector<Edge>& edges)
{
    std::vector<py::tuple> out;
    for (const Edge& e : edges)
        out.push_back(edge_tuple(e));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Simplex-layer stratification of partition graphs";

    py::enum_<CornerKind>(m, "CornerKind")
        .value("removable", CornerKind::removable)
        .value("addable", CornerKind::addable);

    py::class_<Corner>(m, "Corner")
        .def(py::init([](int row, int col, CornerKind kind) { return Corner{row, col, kind}; }),
             py::arg("row"), py::arg("col"), py::arg("kind"))
        .def_readonly("row", &Corner::row)
        .def_readonly("col", &Corner::col)
        .def_readonly("kind", &Corner::kind)
        .def("__eq__", [](const Corner& a, const Corner& b) { return a == b; })
        .def("__hash__", [](const Corner& c) { return py::hash(py::make_tuple(c.row, c.col, static_cast<int>(c.kind))); })
        .def("__repr__", [](const Corner& c) { return to_string(c); });

    py::class_<Partition>(m, "Partition")
        .def(py::init([](std::vector<int> parts) { return make_partition(std::move(parts)); }), py::arg("parts"))
        .def_static("parse", &Partition::parse)
        .def_property_readonly("parts", &Partition::parts)
        .def_property_readonly("n", &Partition::size)
        .def("__len__", &Partition::length)
        .def("__iter__", [](const Partition& p) { return py::iter(py::cast(p.parts())); })
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
        .def("__lt__", [](const Partition& a, const Partition& b) { return a < b; })
        .def("__hash__", [](const Partition& p) { return PartitionHash{}(p); })
        .def("__str__", &Partition::to_string)
        .def("__repr__", [](const Partition& p) { return "Partition" + p.to_string(); });
    py::implicitly_convertible<py::list, Partition>();
    py::implicitly_convertible<py::tuple, Partition>();

    m.def("enumerate_partitions", &enumerate_partitions, py::arg("n"));
    m.def("conjugate", &conjugate, py::arg("partition"));
    m.def("removable_corners", &removable_corners, py::arg("partition"));
    m.def("addable_corners", &addable_corners, py::arg("partition"));
    m.def("staircase", &staircase, py::arg("r"));
    m.def("staircase_family", [](int r) { return staircase_family(r).members; }, py::arg("r"));

    m.def("apply_transfer", &apply_transfer, py::arg("partition"), py::arg("c"), py::arg("a"));
    m.def("neighbors", &neighbors, py::arg("partition"));
    m.def("are_adjacent", &are_adjacent, py::arg("lam"), py::arg("mu"));

    py::class_<PartitionGraph>(m, "PartitionGraph")
        .def_readonly("n", &PartitionGraph::n)
        .def_readonly("vertices", &PartitionGraph::vertices)
        .def_readonly("adjacency", &PartitionGraph::adjacency)
        .def_property_readonly("edges", [](const PartitionGraph& g) { return edge_list(g.edges); })
        .def("id_of", &PartitionGraph::id_of);
    m.def("build_graph", &build_graph, py::arg("n"), py::arg("jobs") = 1);

    py::class_<CapacityRecord>(m, "CapacityRecord")
        .def_readonly("partition", &CapacityRecord::partition)
        .def_readonly("s", &CapacityRecord::s)
        .def_readonly("t", &CapacityRecord::t)
        .def_readonly("dim_loc", &CapacityRecord::dim_loc)
        .def("__repr__", [](const CapacityRecord& r) {
            return "CapacityRecord(" + r.partition.to_string() + ", s=" + std::to_string(r.s) +
                ", t=" + std::to_string(r.t) + ", dim_loc=" + std::to_string(r.dim_loc) + ")";
        });
    m.def("a_max_set", &a_max_set, py::arg("partition"), py::arg("c"));
    m.def("c_max_set", &c_max_set, py::arg("partition"), py::arg("a"));
    m.def("star_capacity", &star_capacity, py::arg("partition"));
    m.def("top_capacity", &top_capacity, py::arg("partition"));
    m.def("local_dim", &local_dim, py::arg("partition"));
    m.def("capacity_record", &capacity_record, py::arg("partition"));

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("n", &OracleReport::n)
        .def_readonly("checked", &OracleReport::checked)
        .def_property_readonly("mismatches", [](const OracleReport& r) {
            std::vector<py::tuple> out;
            for (const auto& mm : r.mismatches)
                out.push_back(py::make_tuple(mm.partition, mm.formula_dim, mm.oracle_dim));
            return out;
        })
        .def_property_readonly("verified", &OracleReport::verified);
    m.def("omega_loc_bruteforce", &omega_loc_bruteforce, py::arg("partition"), py::arg("graph"));
    m.def("verify_dimension_formula",
          [](int n, unsigned jobs) { return verify_dimension_formula(n, capacity_record, jobs); },
          py::arg("n"), py::arg("jobs") = 1);

    py::class_<LayerProfile>(m, "LayerProfile")
        .def_readonly("n", &LayerProfile::n)
        .def_readonly("counts", &LayerProfile::counts)
        .def_readonly("spectrum", &LayerProfile::spectrum)
        .def_readonly("delta_min", &LayerProfile::delta_min)
        .def_readonly("delta_max", &LayerProfile::delta_max)
        .def_readonly("top_size", &LayerProfile::top_size)
        .def_readonly("p_n", &LayerProfile::p_n)
        .def_readonly("is_interval", &LayerProfile::is_interval)
        .def_readonly("gaps", &LayerProfile::gaps);
    m.def("layer", py::overload_cast<int, int>(&layer), py::arg("n"), py::arg("r"));
    m.def("profile", py::overload_cast<int>(&profile), py::arg("n"));
    m.def("profile_sweep", &profile_sweep, py::arg("n_min"), py::arg("n_max"), py::arg("jobs") = 1);

    py::class_<BoundaryRow>(m, "BoundaryRow")
        .def_readonly("r", &BoundaryRow::r)
        .def_readonly("b_E", &BoundaryRow::b_edges)
        .def_readonly("b_lower", &BoundaryRow::b_lower)
        .def_readonly("b_upper", &BoundaryRow::b_upper)
        .def_readonly("b_V", &BoundaryRow::b_vertices);
    py::class_<BoundaryTable>(m, "BoundaryTable")
        .def_readonly("n", &BoundaryTable::n)
        .def_readonly("rows", &BoundaryTable::rows)
        .def_readonly("max_jump", &BoundaryTable::max_jump)
        .def_readonly("cross_counts", &BoundaryTable::cross_counts)
        .def_readonly("intra_edges", &BoundaryTable::intra_edges)
        .def_readonly("total_edges", &BoundaryTable::total_edges);
    py::class_<BoundarySlice>(m, "BoundarySlice")
        .def_readonly("n", &BoundarySlice::n)
        .def_readonly("r", &BoundarySlice::r)
        .def_property_readonly("edges", [](const BoundarySlice& s) { return edge_list(s.edges); })
        .def_readonly("lower_vertices", &BoundarySlice::lower_vertices)
        .def_readonly("upper_vertices", &BoundarySlice::upper_vertices)
        .def_readonly("vertex_union", &BoundarySlice::vertex_union);
    m.def("cross_layer_edges", [](int n, int r, int s) { return edge_list(cross_layer_edges(n, r, s)); },
          py::arg("n"), py::arg("r"), py::arg("s"));
    m.def("boundary_slice", py::overload_cast<int, int>(&boundary_slice), py::arg("n"), py::arg("r"));
    m.def("boundary_table", py::overload_cast<int, unsigned>(&boundary_table), py::arg("n"), py::arg("jobs") = 1);
    m.def("max_edge_jump", py::overload_cast<int>(&max_edge_jump), py::arg("n"));

    py::class_<FirstOccurrenceRecord>(m, "FirstOccurrenceRecord")
        .def_readonly("r", &FirstOccurrenceRecord::r)
        .def_readonly("n_first", &FirstOccurrenceRecord::n_first)
        .def_readonly("scanned_to", &FirstOccurrenceRecord::scanned_to)
        .def_property_readonly("members", &FirstOccurrenceRecord::member_partitions)
        .def_readonly("staircase_match", &FirstOccurrenceRecord::staircase_match)
        .def_readonly("conjugation_closed", &FirstOccurrenceRecord::conjugation_closed)
        .def_property_readonly("found", &FirstOccurrenceRecord::found);
    m.def("first_occurrence_scan", &first_occurrence_scan, py::arg("r_max"), py::arg("n_max"), py::arg("jobs") = 1);
    m.def("check_staircase_pattern", &check_staircase_pattern, py::arg("record"));
    m.def("representatives_up_to_conjugation", &representatives_up_to_conjugation, py::arg("members"));

    m.def("builtin_regions", [] {
        std::vector<std::string> names;
        for (const auto& r : builtin_regions())
            names.push_back(r.name);
        return names;
    });
    m.def("restricted_layer_counts",
          [](int n, const std::string& region) { return restricted_layer_counts(n, resolve_region(region)); },
          py::arg("n"), py::arg("region"));
    m.def("restricted_boundary_count",
          [](int n, int r, const std::string& region) { return restricted_boundary_count(n, r, resolve_region(region)); },
          py::arg("n"), py::arg("r"), py::arg("region"));
}
