#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trispec/error.hpp"
#include "trispec/io.hpp"
#include "trispec/oracle.hpp"
#include "trispec/scheme_models.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/tensor.hpp"

namespace py = pybind11;
using namespace trispec;

namespace {

py::dict report_dict(const Report& r) {
  py::dict d;
  d["name"] = r.name;
  d["status"] = r.status();
  d["passed"] = r.passed();
  d["violations"] = r.violations;
  d["warnings"] = r.warnings;
  py::dict facts;
  for (const auto& [k, v] : r.facts) facts[py::str(k)] = v;
  d["facts"] = facts;
  return d;
}

std::vector<std::string> point_names(const SpecSpace& s, Mask m) {
  std::vector<std::string> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(s.points()[i]); });
  return out;
}

std::vector<std::string> spectrum_names(const SpectrumSpace& spec, Mask m) {
  std::vector<std::string> out;
  for_each_bit(m, [&](std::size_t p) { out.push_back(spec.point_ids[p]); });
  return out;
}

std::vector<std::string> element_ids(const ThickLattice& lat, const std::vector<std::size_t>& elems) {
  std::vector<std::string> out;
  for (auto e : elems) out.push_back(lat.id(e));
  return out;
}

TensorLattice as_tensor(const py::object& obj) {
  if (py::isinstance<SpecSpace>(obj)) return tensor_lattice(obj.cast<const SpecSpace&>());
  return TensorLattice(obj.cast<const ThickLattice&>());
}

}  // namespace

PYBIND11_MODULE(trispec, m) {
  m.doc() = "Prime thick subcategories and spectra of finite lattice models.";

  auto base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base_error);
  py::register_exception<CapExceeded>(m, "CapExceeded", base_error);
  py::register_exception<ClassificationUnavailable>(m, "ClassificationUnavailable", base_error);

  // ------------------------------------------------------------ spaces
  py::class_<SpecSpace>(m, "Space")
      .def(py::init([](std::vector<std::string> points, std::vector<std::pair<std::string, std::string>> covers,
                       std::string name) { return SpecSpace::from_relations(name, points, covers); }),
           py::arg("points"), py::arg("covers") = std::vector<std::pair<std::string, std::string>>{},
           py::arg("name") = "")
      .def_property_readonly("name", &SpecSpace::name)
      .def_property_readonly("points", &SpecSpace::points)
      .def("__len__", &SpecSpace::size)
      .def("leq", [](const SpecSpace& s, const std::string& x, const std::string& y) {
        return s.leq(s.index_of(x), s.index_of(y));
      })
      .def("covers", [](const SpecSpace& s) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [lo, hi] : s.covers()) out.emplace_back(s.points()[lo], s.points()[hi]);
        return out;
      })
      .def("closure", [](const SpecSpace& s, const std::vector<std::string>& pts) {
        return point_names(s, closure(s, s.mask_of(pts)));
      })
      .def("enumerate_spcl", [](const SpecSpace& s) {
        std::vector<std::vector<std::string>> out;
        for (Mask w : enumerate_spcl(s).members) out.push_back(point_names(s, w));
        return out;
      }, "All specialization-closed subsets in canonical order.")
      .def("count_spcl", &count_spcl)
      .def("prime_spcl", [](const SpecSpace& s) {
        std::map<std::string, std::vector<std::string>> out;
        auto w = prime_spcl(s);
        for (std::size_t x = 0; x < s.size(); ++x) out[s.points()[x]] = point_names(s, w[x]);
        return out;
      }, "x -> W_x")
      .def("is_sober", &SpecSpace::is_sober)
      .def("to_json", [](const SpecSpace& s) { return dump(to_json(s)); })
      .def("to_dot", [](const SpecSpace& s) { return to_dot(s); })
      .def("__eq__", [](const SpecSpace& a, const SpecSpace& b) { return a == b; })
      .def("__repr__", [](const SpecSpace& s) { return "<Space " + s.name() + " " + s.format_set(s.all()) + ">"; });

  m.def("parse_space", &parse_space, py::arg("text"));
  m.def("chain_space", &chain_space, py::arg("n"));
  m.def("discrete_space", &discrete_space, py::arg("n"));
  m.def("star_space", &star_space, py::arg("n"));
  m.def("grid_space", &grid_space, py::arg("rows"), py::arg("cols"));

  // ------------------------------------------------------------ lattices
  py::class_<ThickLattice>(m, "Lattice")
      .def_property_readonly("ids", &ThickLattice::ids)
      .def_property_readonly("bottom", [](const ThickLattice& l) { return l.id(l.bottom()); })
      .def_property_readonly("top", [](const ThickLattice& l) { return l.id(l.top()); })
      .def_property_readonly("origin", [](const ThickLattice& l) { return std::string(origin_name(l.provenance().origin)); })
      .def("__len__", &ThickLattice::size)
      .def("__contains__", [](const ThickLattice& l, const std::string& id) { return l.contains(id); })
      .def("leq", [](const ThickLattice& l, const std::string& a, const std::string& b) {
        return l.leq(l.index_of(a), l.index_of(b));
      })
      .def("join", [](const ThickLattice& l, const std::string& a, const std::string& b) {
        return l.id(l.join(l.index_of(a), l.index_of(b)));
      })
      .def("meet", [](const ThickLattice& l, const std::string& a, const std::string& b) {
        return l.id(l.meet(l.index_of(a), l.index_of(b)));
      })
      .def("objects", [](const ThickLattice& l) { return element_ids(l, l.objects().indices()); })
      .def("primes", [](const ThickLattice& l) { return element_ids(l, primes(l)); })
      .def("radical", [](const ThickLattice& l, const std::string& a) { return l.id(radical(l, l.index_of(a))); })
      .def("to_json", [](const ThickLattice& l) { return dump(to_json(l)); })
      .def("to_dot", [](const ThickLattice& l) { return to_dot(l); })
      .def("__eq__", [](const ThickLattice& a, const ThickLattice& b) { return a == b; })
      .def("__repr__", [](const ThickLattice& l) {
        return "<Lattice " + std::string(origin_name(l.provenance().origin)) + ", " + std::to_string(l.size()) +
               " elements>";
      });

  m.def("lattice_from_json", [](const std::string& text) { return lattice_from_json(parse_document(text)); });
  m.def("from_support_data", [](const SpecSpace& s) { return from_support_data(s); }, py::arg("space"));
  m.def("from_explicit", &from_explicit, py::arg("elements"), py::arg("covers"), py::arg("objects"),
        py::arg("bottom") = std::nullopt, py::arg("top") = std::nullopt);
  m.def("augment", &augment, py::arg("base"), py::arg("labels"));
  m.def("quotient", [](const ThickLattice& l, const std::string& k) { return quotient(l, k).first; },
        py::arg("lattice"), py::arg("k"));
  m.def("transport", [](const ThickLattice& l, const std::map<std::string, std::string>& relabel) {
    return transport(l, relabel).first;
  }, py::arg("lattice"), py::arg("relabel"));

  // ------------------------------------------------------------ spectra
  py::class_<SpectrumSpace>(m, "Spectrum")
      .def_readonly("points", &SpectrumSpace::point_ids)
      .def("__len__", &SpectrumSpace::size)
      .def_property_readonly("witness", [](const SpectrumSpace& s) {
        std::map<std::string, std::optional<std::string>> out;
        for (std::size_t p = 0; p < s.size(); ++p)
          out[s.point_ids[p]] = s.witness[p] ? std::optional<std::string>(s.witness_ids[p]) : std::nullopt;
        return out;
      })
      .def_property_readonly("closed_sets", [](const SpectrumSpace& s) {
        std::vector<std::vector<std::string>> out;
        for (Mask c : s.closed_sets) out.push_back(spectrum_names(s, c));
        return out;
      })
      .def("closure", [](const SpectrumSpace& s, const std::string& p) {
        for (std::size_t i = 0; i < s.size(); ++i)
          if (s.point_ids[i] == p) return spectrum_names(s, point_closure(s, i));
        throw InputError("unknown point '" + p + "'");
      })
      .def("to_json", [](const SpectrumSpace& s) { return dump(to_json(s)); })
      .def("to_dot", [](const SpectrumSpace& s, bool annotate) { return to_dot(s, annotate); },
           py::arg("annotate") = false)
      .def("__repr__", [](const SpectrumSpace& s) { return "<Spectrum " + std::to_string(s.size()) + " points>"; });

  m.def("spectrum", [](const ThickLattice& l) { return spectrum(l); }, py::arg("lattice"));
  m.def("supp", [](const ThickLattice& l, const std::string& a) {
    auto spec = spectrum(l);
    return spectrum_names(spec, supp(l, spec, l.index_of(a)));
  }, py::arg("lattice"), py::arg("element"));
  m.def("verify_cls", [](const ThickLattice& l) { return report_dict(verify_cls(l)); });
  m.def("verify_radicals", [](const ThickLattice& l) { return report_dict(verify_radicals(l)); });
  m.def("rcst_map", [](const SpecSpace& s) {
    auto r = rcst_map(s);
    py::dict d = report_dict(r.report);
    std::map<std::string, std::string> phi;
    for (std::size_t x = 0; x < s.size(); ++x) phi[s.points()[x]] = r.spectrum.point_ids[r.phi[x]];
    d["phi"] = phi;
    return d;
  }, py::arg("space"));
  m.def("induced_immersion", [](const ThickLattice& l, const std::string& k) {
    auto q = induced_immersion(l, l.index_of(k));
    py::dict d = report_dict(q.report);
    d["image"] = spectrum_names(q.ambient_spectrum, q.image);
    return d;
  }, py::arg("lattice"), py::arg("k"));

  // ------------------------------------------------------------ tensor
  m.def("prime_ideals", [](const py::object& obj) {
    auto tl = as_tensor(obj);
    return element_ids(tl.base(), prime_ideals(tl));
  }, py::arg("space_or_lattice"));
  m.def("balmer_spectrum", [](const py::object& obj) { return balmer_spectrum(as_tensor(obj)); },
        py::arg("space_or_lattice"));
  m.def("tensor_radical", [](const py::object& obj, const std::string& a) {
    auto tl = as_tensor(obj);
    return tl.base().id(tensor_radical(tl, tl.base().index_of(a)));
  });
  m.def("verify_tensor", [](const py::object& obj) {
    auto tl = as_tensor(obj);
    py::list out;
    for (const auto& r : {verify_bal(tl), verify_prid(tl), verify_pp_twoprm(tl), verify_int(tl), verify_cl(tl),
                          verify_balmer_points(tl)})
      out.append(report_dict(r));
    return out;
  }, "bal, prid, twoprm, int, cl and balmer-points reports.");

  // ------------------------------------------------------------ models
  py::class_<SchemeModel>(m, "Model")
      .def_readonly("space", &SchemeModel::space)
      .def_readonly("separated", &SchemeModel::separated)
      .def_property_readonly("tags", [](const SchemeModel& md) {
        std::map<std::string, std::string> out;
        for (std::size_t x = 0; x < md.space.size(); ++x) out[md.space.points()[x]] = to_string(md.tags[x]);
        return out;
      })
      .def_property_readonly("gorenstein", &SchemeModel::gorenstein)
      .def("sing_locus", [](const SchemeModel& md) { return point_names(md.space, sing_locus(md)); })
      .def("ci_locus", [](const SchemeModel& md) { return point_names(md.space, ci_locus(md)); })
      .def("hs_locus", [](const SchemeModel& md) { return point_names(md.space, hs_locus(md)); })
      .def("to_json", [](const SchemeModel& md) { return dump(to_json(md)); });

  m.def("model", [](const SpecSpace& s, const std::map<std::string, std::string>& tags, bool separated) {
    SchemeModel md;
    md.space = s;
    md.tags.resize(s.size());
    if (tags.size() != s.size()) throw InputError("every point needs exactly one tag");
    for (const auto& [p, t] : tags) md.tags[s.index_of(p)] = parse_local_type(t);
    md.separated = separated;
    return md;
  }, py::arg("space"), py::arg("tags"), py::arg("separated") = true);
  m.def("model_from_json", [](const std::string& text) { return model_from_json(parse_document(text)); });
  m.def("models_from_catalog", [](const std::string& text) { return models_from_catalog(parse_document(text)); });
  m.def("dsg_model", [](const SchemeModel& md) { return dsg_model(md); });
  m.def("perf_immersion", [](const SchemeModel& md) {
    auto r = perf_immersion(md);
    py::dict d = report_dict(r.report);
    d["homeomorphism"] = r.homeomorphism;
    return d;
  });
  m.def("sg_immersion", [](const SchemeModel& md) {
    auto r = sg_immersion(md);
    py::dict d = report_dict(r.report);
    d["homeomorphism"] = r.homeomorphism;
    return d;
  });
  m.def("locus_prime_predicates", [](const SchemeModel& md, const std::string& x) {
    auto p = locus_prime_predicates(md, md.space.index_of(x));
    py::dict d;
    d["sb_prime"] = p.sb_prime;
    d["sg_prime"] = to_string(p.sg_prime);
    return d;
  });
  m.def("loci_openness_check", [](const SchemeModel& md) { return report_dict(loci_openness_check(md)); });

  // ------------------------------------------------------------ oracles
  m.def("all_posets", &oracle::all_posets, py::arg("n"), py::arg("up_to_iso") = false);
  m.def("scan_primes", [](const ThickLattice& l) { return element_ids(l, oracle::scan_primes(l)); });
  m.def("homeomorphic", [](const SpectrumSpace& a, const SpecSpace& b) {
    return oracle::homeomorphic(a.topology(), topology_of(b)).has_value();
  }, "Whether a spectrum is homeomorphic to a space.");
  m.def("grid_downsets_transfer", &oracle::grid_downsets_transfer);
}
