#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/stl.h>

#include <vector>

#include "jcq/analysis.hpp"
#include "jcq/bath.hpp"
#include "jcq/errors.hpp"
#include "jcq/influence.hpp"
#include "jcq/itm.hpp"
#include "jcq/qubit.hpp"
#include "jcq/units.hpp"

namespace py = pybind11;
using namespace jcq;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

py::dict trajectory_dict(const Trajectory& traj) {
    const auto n = traj.samples.size();
    std::vector<double> t(n), r00(n), r11(n);
    py::array_t<std::complex<double>> r01(n);
    auto r01m = r01.mutable_unchecked<1>();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = traj.samples[i];
        t[i] = s.t;
        r00[i] = s.rho.rho00();
        r11[i] = s.rho.rho11();
        r01m(static_cast<py::ssize_t>(i)) = s.rho.rho01();
    }
    py::dict d;
    d["t_ps"] = to_array(t);
    d["rho00"] = to_array(r00);
    d["rho11"] = to_array(r11);
    d["rho01"] = r01;
    return d;
}

InitialStateKind state_of(const std::string& name) {
    if (name == "plus") return InitialStateKind::plus;
    if (name == "zero") return InitialStateKind::zero;
    if (name == "one") return InitialStateKind::one;
    throw DomainError("unknown initial state '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_jcq, m) {
    m.doc() = "Josephson charge qubit in an Ohmic bath: path-integral propagation and Bloch estimates";

    // DomainError derives from std::invalid_argument and maps to ValueError
    // through pybind11's default translator.
    auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<NoDecayError>(m, "NoDecayError", numerical.ptr());
    py::register_exception<SaturationError>(m, "SaturationError", numerical.ptr());
    py::register_exception<InfiniteTimeError>(m, "InfiniteTimeError", numerical.ptr());
    py::register_exception<InstabilityError>(m, "InstabilityError", PyExc_ArithmeticError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);

    m.attr("HBAR") = units::hbar;
    m.attr("K_B") = units::k_b;
    m.def("thermal_beta", &units::thermal_beta, py::arg("temperature_mk"));

    py::class_<BathModel>(m, "BathModel")
        .def(py::init([](double alpha, double omega_c, double temperature_mk) {
                 BathModel b{BathKind::ohmic, alpha, omega_c, temperature_mk};
                 b.validate();
                 return b;
             }),
             py::arg("alpha") = 5e-6, py::arg("omega_c") = 5.0, py::arg("temperature_mk") = 30.0)
        .def_readwrite("alpha", &BathModel::alpha)
        .def_readwrite("omega_c", &BathModel::omega_c)
        .def_readwrite("temperature_mk", &BathModel::temperature_mk)
        .def_property_readonly("beta", &BathModel::beta)
        .def("__repr__", [](const BathModel& b) {
            return "BathModel(alpha=" + py::repr(py::float_(b.alpha)).cast<std::string>() +
                   ", omega_c=" + py::repr(py::float_(b.omega_c)).cast<std::string>() +
                   ", temperature_mk=" + py::repr(py::float_(b.temperature_mk)).cast<std::string>() + ")";
        });

    py::class_<QubitParameters>(m, "QubitParameters")
        .def(py::init([](double e_j, double e_c, double n_g) {
                 QubitParameters q{e_j, e_c, n_g};
                 q.validate();
                 return q;
             }),
             py::arg("e_j") = 51.8, py::arg("e_c") = 122.0, py::arg("n_g") = 0.5)
        .def_readwrite("e_j", &QubitParameters::e_j)
        .def_readwrite("e_c", &QubitParameters::e_c)
        .def_readwrite("n_g", &QubitParameters::n_g)
        .def_property_readonly("b_x", &QubitParameters::b_x)
        .def_property_readonly("b_z", &QubitParameters::b_z);

    py::class_<ItmSettings>(m, "ItmSettings")
        .def(py::init([](double dt, std::size_t dk_max, double t_max, std::size_t sample_every) {
                 ItmSettings s{dt, dk_max, t_max, sample_every};
                 s.validate();
                 return s;
             }),
             py::arg("dt") = 12.707, py::arg("dk_max") = 1, py::arg("t_max") = 3.0e6, py::arg("sample_every") = 64)
        .def_readwrite("dt", &ItmSettings::dt)
        .def_readwrite("dk_max", &ItmSettings::dk_max)
        .def_readwrite("t_max", &ItmSettings::t_max)
        .def_readwrite("sample_every", &ItmSettings::sample_every)
        .def_property_readonly("n_steps", &ItmSettings::n_steps);

    m.def("spectral_density", &spectral_density, py::arg("bath"), py::arg("omega"));
    m.def("power_spectrum", &power_spectrum, py::arg("bath"), py::arg("omega"));
    m.def("response_function", &response_function, py::arg("bath"), py::arg("t"));
    m.def(
        "response_samples",
        [](const BathModel& bath, double t_max, std::size_t n_intervals) {
            const auto s = response_samples(bath, t_max, n_intervals);
            std::vector<double> t, re, im;
            for (const auto& r : s) {
                t.push_back(r.t);
                re.push_back(r.re_gamma);
                im.push_back(r.im_gamma);
            }
            return py::make_tuple(to_array(t), to_array(re), to_array(im));
        },
        py::arg("bath"), py::arg("t_max") = 50.0, py::arg("n_intervals") = 500,
        "(t_ps, re_gamma, im_gamma) on a uniform grid");
    m.def("memory_time", &memory_time, py::arg("bath"), py::arg("threshold") = 0.02);

    m.def(
        "eta_coefficients",
        [](const BathModel& bath, double dt, std::size_t dk_max) {
            const auto t = eta_coefficients(bath, dt, dk_max, dk_max);
            py::dict d;
            d["self_interior"] = t.self_interior;
            d["self_end"] = t.self_end;
            d["interior"] = t.pair_interior;
            d["end_interior"] = t.pair_end_interior;
            d["end_end"] = t.pair_end_end;
            return d;
        },
        py::arg("bath"), py::arg("dt") = 12.707, py::arg("dk_max") = 1,
        "Influence coefficients; list entry i is separation i + 1");

    m.def(
        "bloch_times",
        [](const QubitParameters& q, const BathModel& b, bool include_cutoff) {
            const auto t = bloch_decoherence_time(q, b, include_cutoff);
            return py::make_tuple(t.tau1_us, t.tau2_us);
        },
        py::arg("qubit"), py::arg("bath"), py::arg("include_cutoff") = true, "(tau1_us, tau2_us)");

    m.def(
        "simulate",
        [](const QubitParameters& q, const BathModel& b, const ItmSettings& s, const std::string& initial) {
            Trajectory traj;
            {
                py::gil_scoped_release release;
                traj = simulate(q, b, initial_state(state_of(initial)), s);
            }
            return trajectory_dict(traj);
        },
        py::arg("qubit"), py::arg("bath"), py::arg("settings") = ItmSettings{}, py::arg("initial_state") = "plus",
        "Dict of numpy arrays t_ps, rho00, rho11, rho01");

    m.def(
        "fit_exponential",
        [](const std::vector<double>& t_ps, const std::vector<double>& y) {
            const auto f = fit_exponential(t_ps, y);
            py::dict d;
            d["tau_us"] = f.tau_us;
            d["c0"] = f.c0;
            d["c_inf"] = f.c_inf;
            d["rms_residual"] = f.rms_residual;
            return d;
        },
        py::arg("t_ps"), py::arg("y"));

    m.def(
        "compare",
        [](const QubitParameters& q, const BathModel& b, const ItmSettings& s, const std::string& initial,
           const std::string& observable, bool include_cutoff) {
            ItmConfig c;
            c.settings = s;
            c.initial_state = state_of(initial);
            c.observable = observable_from_string(observable);
            c.bloch_include_cutoff = include_cutoff;
            ComparisonReport r;
            {
                py::gil_scoped_release release;
                r = compare(q, b, c);
            }
            py::dict d;
            d["tau1_bloch_us"] = r.bloch.tau1_us;
            d["tau2_bloch_us"] = r.tau2_bloch;
            d["tau2_itm_us"] = r.tau2_itm;
            d["ratio"] = r.ratio;
            d["itm_fit_c0"] = r.itm_fit.c0;
            d["itm_fit_c_inf"] = r.itm_fit.c_inf;
            return d;
        },
        py::arg("qubit"), py::arg("bath"), py::arg("settings") = ItmSettings{}, py::arg("initial_state") = "plus",
        py::arg("observable") = "abs_rho01", py::arg("include_cutoff") = true);

    m.def(
        "oracle_deviation",
        [](const QubitParameters& q, const BathModel& b, double dt, std::size_t n_steps, const std::string& initial) {
            return oracle_deviation(q, b, initial_state(state_of(initial)), dt, n_steps);
        },
        py::arg("qubit"), py::arg("bath"), py::arg("dt") = 12.707, py::arg("n_steps") = 4,
        py::arg("initial_state") = "plus");
}
