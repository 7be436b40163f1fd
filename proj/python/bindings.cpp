#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "scat2d/compare.hpp"
#include "scat2d/fronts.hpp"
#include "scat2d/santalo.hpp"
#include "scat2d/scene_io.hpp"
#include "scat2d/spectra.hpp"

namespace py = pybind11;
using namespace scat2d;

namespace {

std::string status_str(SampleStatus st) {
    switch (st) {
        case SampleStatus::Finite: return "finite";
        case SampleStatus::Grazing: return "grazing";
        default: return "cutoff";
    }
}

std::string trajectory_status(const Trajectory& tr) {
    if (tr.exited()) return "exited";
    if (std::holds_alternative<CutoffReflections>(tr.status)) return "cutoff-reflections";
    return "cutoff-time";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exterior billiards in the plane: travelling-time and scattering-length "
              "spectra, the Santalo identity, and convex wavefront tools.";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readonly("x", &Vec2::x)
        .def_readonly("y", &Vec2::y)
        .def("__repr__", [](const Vec2& v) {
            return "Vec2(" + format_double(v.x) + ", " + format_double(v.y) + ")";
        });

    py::class_<Direction>(m, "Direction")
        .def(py::init<double, double>(), py::arg("vx"), py::arg("vy"))
        .def_readonly("vx", &Direction::vx)
        .def_readonly("vy", &Direction::vy)
        .def("angle", &Direction::angle)
        .def("__repr__", [](const Direction& d) {
            return "Direction(" + format_double(d.vx) + ", " + format_double(d.vy) + ")";
        });

    py::class_<Ellipse>(m, "Ellipse")
        .def(py::init<Vec2, double, double, double>(), py::arg("center"),
             py::arg("semi_major"), py::arg("semi_minor"), py::arg("rotation") = 0.0)
        .def(py::init([](double cx, double cy, double a, double b, double rot) {
                 return Ellipse({cx, cy}, a, b, rot);
             }),
             py::arg("cx"), py::arg("cy"), py::arg("semi_major"), py::arg("semi_minor"),
             py::arg("rotation") = 0.0)
        .def_readonly("center", &Ellipse::center)
        .def_readonly("semi_major", &Ellipse::semi_major)
        .def_readonly("semi_minor", &Ellipse::semi_minor)
        .def_readonly("rotation", &Ellipse::rotation);

    py::class_<Scene>(m, "Scene")
        .def(py::init<double, std::vector<Ellipse>>(), py::arg("ball_radius"),
             py::arg("obstacles") = std::vector<Ellipse>{})
        .def_readonly("ball_radius", &Scene::ball_radius)
        .def_readonly("obstacles", &Scene::obstacles);

    py::class_<Caps>(m, "Caps")
        .def(py::init([](int max_reflections, double max_time, double eps_tan) {
                 Caps c;
                 c.max_reflections = max_reflections;
                 c.max_time = max_time;
                 c.eps_tan = eps_tan;
                 return c;
             }),
             py::arg("max_reflections") = 10'000, py::arg("max_time") = 1e6,
             py::arg("eps_tan") = kDefaultEpsTan)
        .def_readwrite("max_reflections", &Caps::max_reflections)
        .def_readwrite("max_time", &Caps::max_time)
        .def_readwrite("eps_tan", &Caps::eps_tan);

    py::class_<PhasePoint>(m, "PhasePoint")
        .def(py::init<Vec2, Direction>(), py::arg("q"), py::arg("v"))
        .def_readonly("q", &PhasePoint::q)
        .def_readonly("v", &PhasePoint::v);

    py::class_<ReflectionEvent>(m, "ReflectionEvent")
        .def_readonly("time", &ReflectionEvent::time)
        .def_readonly("obstacle_index", &ReflectionEvent::obstacle_index)
        .def_readonly("point", &ReflectionEvent::point)
        .def_readonly("cos_incidence", &ReflectionEvent::cos_incidence)
        .def_readonly("tangential", &ReflectionEvent::tangential);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("start", &Trajectory::start)
        .def_readonly("events", &Trajectory::events)
        .def_readonly("interior_time", &Trajectory::interior_time)
        .def_property_readonly("status", &trajectory_status)
        .def_property_readonly("exited", &Trajectory::exited)
        .def_property_readonly("reflections", &Trajectory::reflection_count)
        .def_property_readonly("tangencies", &Trajectory::tangency_count)
        .def_property_readonly("exit",
                               [](const Trajectory& tr) -> py::object {
                                   if (const auto* e = std::get_if<Exited>(&tr.status))
                                       return py::cast(e->exit);
                                   return py::none();
                               })
        .def_property_readonly("itinerary",
                               [](const Trajectory& tr) { return itinerary(tr); });

    py::class_<SpectrumRecord>(m, "SpectrumRecord")
        .def_readonly("psi", &SpectrumRecord::psi)
        .def_readonly("phi", &SpectrumRecord::phi)
        .def_property_readonly("status",
                               [](const SpectrumRecord& r) { return status_str(r.status); })
        .def_readonly("t", &SpectrumRecord::t)
        .def_readonly("reflections", &SpectrumRecord::reflections)
        .def_readonly("tangencies", &SpectrumRecord::tangencies);

    py::class_<SLSRecord>(m, "SLSRecord")
        .def_readonly("omega_angle", &SLSRecord::omega_angle)
        .def_readonly("b", &SLSRecord::b)
        .def_readonly("theta", &SLSRecord::theta)
        .def_readonly("sojourn", &SLSRecord::sojourn)
        .def_readonly("reflections", &SLSRecord::reflections)
        .def_readonly("tangential", &SLSRecord::tangential);

    py::class_<SantaloReport>(m, "SantaloReport")
        .def_readonly("integral", &SantaloReport::integral)
        .def_readonly("phase_volume", &SantaloReport::phase_volume)
        .def_readonly("defect", &SantaloReport::defect)
        .def_readonly("excluded_weight", &SantaloReport::excluded_weight)
        .def_readonly("n_psi", &SantaloReport::n_psi)
        .def_readonly("n_phi", &SantaloReport::n_phi);

    py::class_<FrontState>(m, "FrontState")
        .def(py::init<Vec2, Direction, double>(), py::arg("point"), py::arg("dir"),
             py::arg("kappa") = 0.0)
        .def_readonly("point", &FrontState::point)
        .def_readonly("dir", &FrontState::dir)
        .def_readonly("kappa", &FrontState::kappa);

    py::class_<SampledCurve>(m, "SampledCurve")
        .def_readonly("params", &SampledCurve::params)
        .def_readonly("points", &SampledCurve::points)
        .def_readonly("normals", &SampledCurve::normals)
        .def_readonly("curvatures", &SampledCurve::curvatures)
        .def("__len__", &SampledCurve::size);

    py::class_<DisagreementReport>(m, "DisagreementReport")
        .def_readonly("compared", &DisagreementReport::compared)
        .def_readonly("disagreements", &DisagreementReport::disagreements)
        .def_readonly("status_mismatches", &DisagreementReport::status_mismatches)
        .def_readonly("disagree_fraction", &DisagreementReport::disagree_fraction)
        .def_readonly("max_abs_delta", &DisagreementReport::max_abs_delta)
        .def_property_readonly("witness", [](const DisagreementReport& r) -> py::object {
            if (!r.witness) return py::none();
            return py::make_tuple(r.witness->psi, r.witness->phi, r.witness->t_a,
                                  r.witness->t_b);
        });

    m.def("parse_scene", &parse_scene, py::arg("text"));
    m.def("load_scene", &load_scene, py::arg("path"));
    m.def("serialize_scene", &serialize_scene, py::arg("scene"));
    m.def("validate_scene", [](const Scene& s) {
        std::vector<std::string> issues;
        for (const auto& issue : validate_scene(s).issues) issues.push_back(issue.message);
        return issues;
    });

    m.def("trace", &trace, py::arg("scene"), py::arg("x"), py::arg("caps") = Caps{});
    m.def("boundary_phase_point", &boundary_phase_point, py::arg("a"), py::arg("psi"),
          py::arg("phi"));
    m.def(
        "travelling_time",
        [](const Scene& s, double psi, double phi, const Caps& caps) -> py::object {
            const TravellingTime tt = travelling_time(s, psi, phi, caps);
            if (const auto* f = std::get_if<Finite>(&tt)) return py::float_(f->t);
            if (std::holds_alternative<Grazing>(tt)) return py::float_(0.0);
            return py::none();
        },
        py::arg("scene"), py::arg("psi"), py::arg("phi"), py::arg("caps") = Caps{},
        "Travelling time, 0.0 at grazing, None when a cap tripped");
    m.def("travelling_time_spectrum", &travelling_time_spectrum, py::arg("scene"),
          py::arg("n_psi"), py::arg("n_phi"), py::arg("caps") = Caps{});
    m.def("shoot_from_zline", &shoot_from_zline, py::arg("scene"), py::arg("omega_angle"),
          py::arg("b"), py::arg("caps") = Caps{});
    m.def("sojourn_time", &sojourn_time, py::arg("trajectory"), py::arg("omega"),
          py::arg("theta"), py::arg("a"));
    m.def("sls_sample", &sls_sample, py::arg("scene"), py::arg("n_omega"), py::arg("n_b"),
          py::arg("caps") = Caps{});

    m.def("liouville_integral", &liouville_integral, py::arg("scene"), py::arg("n_psi"),
          py::arg("n_phi"), py::arg("caps") = Caps{},
          "Returns (integral, excluded_weight)");
    m.def("santalo_defect", &santalo_defect, py::arg("scene"), py::arg("n_psi"),
          py::arg("n_phi"), py::arg("caps") = Caps{});
    m.def("trapped_fraction", &trapped_fraction, py::arg("scene"), py::arg("n_samples"),
          py::arg("seed"), py::arg("cutoffs"), py::arg("caps") = Caps{});

    m.def("involute", &involute, py::arg("ellipse"), py::arg("s0"), py::arg("eps0"),
          py::arg("delta"), py::arg("orientation") = 1, py::arg("n_samples") = 64);
    m.def("check_normal_tangency", &check_normal_tangency, py::arg("curve"),
          py::arg("ellipse"));
    m.def("propagate_front", &propagate_front, py::arg("scene"), py::arg("start"),
          py::arg("caps") = Caps{});
    m.def("finite_difference_curvature", &finite_difference_curvature, py::arg("scene"),
          py::arg("start"), py::arg("T"), py::arg("h") = 1e-5, py::arg("caps") = Caps{});
    m.def("perpendicular_hits", &perpendicular_hits, py::arg("y"), py::arg("x_target"),
          py::arg("tol"));

    m.def("compare_spectra", &compare_spectra, py::arg("records_a"), py::arg("records_b"),
          py::arg("tol") = 1e-7);
    m.def(
        "distinguish",
        [](const Scene& a, const Scene& b, int n_psi, int n_phi, const Caps& caps,
           double tol) -> py::object {
            const Verdict v = distinguish(a, b, n_psi, n_phi, caps, tol);
            if (std::holds_alternative<IndistinguishableAtGrid>(v)) return py::none();
            return py::cast(std::get<Different>(v).report);
        },
        py::arg("scene_a"), py::arg("scene_b"), py::arg("n_psi") = 200,
        py::arg("n_phi") = 200, py::arg("caps") = Caps{}, py::arg("tol") = 1e-7,
        "None when indistinguishable at the grid, else the disagreement report");
}
