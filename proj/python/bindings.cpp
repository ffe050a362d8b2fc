#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>

#include "irs_si/algorithms.hpp"
#include "irs_si/analysis.hpp"
#include "irs_si/cli.hpp"
#include "irs_si/errors.hpp"
#include "irs_si/io.hpp"

namespace py = pybind11;
using namespace irs_si;

namespace {

AlgorithmParams make_params(int t_alpha, int t_lambda, int t_g) {
  AlgorithmParams p;
  p.t_alpha = t_alpha;
  p.t_lambda = t_lambda;
  p.t_g = t_g;
  return p;
}

py::dict point_dict(const BoundaryPoint& pt) {
  py::dict d;
  d["r_m_target"] = pt.r_m_target;
  d["r_c_achieved"] = pt.r_c_achieved;
  d["alpha_w"] = pt.alpha;
  d["beta_w"] = pt.beta;
  d["upper_bound"] = pt.upper_bound;
  d["feasible"] = pt.feasible;
  d["scheme"] = to_string(pt.scheme);
  d["phases_rad"] = pt.phase_vector.phases();
  return d;
}

PhaseVector phases_arg(const ChannelSet& ch, const std::vector<double>& phases) {
  if (static_cast<int>(phases.size()) != ch.n()) throw ConfigError("expected one phase per IRS element");
  return PhaseVector::from_phases(phases);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multicast/secrecy rate regions for IRS-assisted service integration";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<ChannelSet>(m, "ChannelSet")
      .def(py::init<>())
      .def_readwrite("g", &ChannelSet::g)
      .def_readwrite("m", &ChannelSet::m)
      .def_readwrite("h", &ChannelSet::h)
      .def_readwrite("sigma2", &ChannelSet::sigma2)
      .def_property_readonly("n", &ChannelSet::n)
      .def_property_readonly("k", &ChannelSet::k)
      .def("validate", &ChannelSet::validate)
      .def("with_legitimate_user", &ChannelSet::with_legitimate_user, py::arg("user"));

  m.def(
      "load_scenario",
      [](const std::string& path) {
        const Scenario sc = load_scenario(path);
        return py::make_tuple(sc.resolve_channels(), sc.power());
      },
      py::arg("path"), "Channels and transmit power (W) from a scenario file.");
  m.def(
      "parse_scenario",
      [](const std::string& text) {
        const Scenario sc = parse_scenario(text);
        return py::make_tuple(sc.resolve_channels(), sc.power());
      },
      py::arg("text"));
  m.def(
      "table_i_channels",
      [](double d1, int n, double kappa, std::uint64_t seed) {
        return generate_channels(table_i_scenario(d1, n, kappa, 1.0, seed));
      },
      py::arg("d1") = 20.0, py::arg("n") = 10, py::arg("kappa") = 10.0, py::arg("seed") = 0);
  m.def(
      "multi_user_channels",
      [](int k, int n, double kappa, std::uint64_t seed) {
        return generate_channels(multi_user_scenario(k, n, kappa, 1.0, seed));
      },
      py::arg("k"), py::arg("n") = 10, py::arg("kappa") = 10.0, py::arg("seed") = 0);

  m.def(
      "secrecy_rate",
      [](const ChannelSet& ch, const std::vector<double>& phases, double alpha) {
        return secrecy_rate(ch, phases_arg(ch, phases), alpha);
      },
      py::arg("channels"), py::arg("phases"), py::arg("alpha"));
  m.def(
      "multicast_rate",
      [](const ChannelSet& ch, const std::vector<double>& phases, double alpha, double beta) {
        return multicast_rate(ch, phases_arg(ch, phases), PowerSplit{alpha, beta});
      },
      py::arg("channels"), py::arg("phases"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "feasibility",
      [](const ChannelSet& ch) {
        const FeasibilityResult f = feasibility_check(ch);
        py::dict d;
        d["verdict"] = f.verdict == Feasibility::Feasible     ? "Feasible"
                       : f.verdict == Feasibility::Infeasible ? "Infeasible"
                                                              : "Undetermined";
        d["certificate_user"] = f.certificate_user ? py::object(py::int_(*f.certificate_user + 1)) : py::none();
        return d;
      },
      py::arg("channels"), "Direct-link feasibility verdict; the certificate user is 1-based.");

  m.def(
      "boundary_point",
      [](const ChannelSet& ch, double p, double r_m, const std::string& scheme, std::uint64_t seed, int t_alpha,
         int t_lambda, int t_g) {
        SweepOptions o;
        o.seed = seed;
        o.pareto_filter = false;
        o.threads = 1;
        o.targets = {r_m};
        py::gil_scoped_release release;
        const RegionBoundary rb =
            sweep_region(ch, p, scheme_from_string(scheme), make_params(t_alpha, t_lambda, t_g), o);
        py::gil_scoped_acquire acquire;
        return point_dict(rb.points.front());
      },
      py::arg("channels"), py::arg("p"), py::arg("r_m"), py::arg("scheme") = "cct", py::arg("seed") = 0,
      py::arg("t_alpha") = 80, py::arg("t_lambda") = 80, py::arg("t_g") = 1000);
  m.def(
      "sweep_region",
      [](const ChannelSet& ch, double p, const std::string& scheme, int grid, std::uint64_t seed, int t_alpha,
         int t_lambda, int t_g, bool pareto) {
        SweepOptions o;
        o.grid_points = grid;
        o.seed = seed;
        o.pareto_filter = pareto;
        RegionBoundary rb;
        {
          py::gil_scoped_release release;
          rb = sweep_region(ch, p, scheme_from_string(scheme), make_params(t_alpha, t_lambda, t_g), o);
        }
        py::list out;
        for (const auto& pt : rb.points) out.append(point_dict(pt));
        return out;
      },
      py::arg("channels"), py::arg("p"), py::arg("scheme") = "cct", py::arg("grid") = 10, py::arg("seed") = 0,
      py::arg("t_alpha") = 80, py::arg("t_lambda") = 80, py::arg("t_g") = 1000, py::arg("pareto_filter") = true);
  m.def(
      "multicast_upper_bound",
      [](const ChannelSet& ch, double p) { return multicast_upper_bound(ch, p).r_m_up; }, py::arg("channels"),
      py::arg("p"));
  m.def(
      "oracle",
      [](const ChannelSet& ch, double p, double r_m, int levels, int alpha_points) {
        const OracleResult o = brute_force_oracle(ch, p, r_m, levels, alpha_points);
        py::dict d;
        d["r_c"] = o.r_c;
        d["alpha_w"] = o.alpha;
        d["feasible"] = o.feasible;
        d["phases_rad"] = o.v.phases();
        return d;
      },
      py::arg("channels"), py::arg("p"), py::arg("r_m"), py::arg("phase_levels") = 64,
      py::arg("alpha_points") = 201);

  m.def("gap_bound_tight", &gap_bound_tight, py::arg("p"), py::arg("n"), py::arg("tr_t1"), py::arg("sigma1_sq"),
        py::arg("t_alpha"));
  m.def(
      "complexity_estimate",
      [](int n, int k, int t_alpha, int t_lambda, int t_g) {
        const ComplexityEstimate c = complexity_estimate(n, k, t_alpha, t_lambda, t_g);
        py::dict d;
        d["n_var"] = c.n_var;
        d["g"] = c.g;
        d["a1"] = c.a1;
        d["a2"] = c.a2;
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("t_alpha") = 80, py::arg("t_lambda") = 80, py::arg("t_g") = 1000);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        py::gil_scoped_release release;
        return run_cli(args, std::cout, std::cerr);
      },
      py::arg("args"), "Run the irs-region command line; returns the exit code.");
}
