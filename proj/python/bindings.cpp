#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "behaviocog/attacks/enumeration.hpp"
#include "behaviocog/attacks/frequency.hpp"
#include "behaviocog/attacks/linearization.hpp"
#include "behaviocog/attacks/report.hpp"
#include "behaviocog/attacks/stats.hpp"
#include "behaviocog/attacks/synthetic.hpp"
#include "behaviocog/biometric/features.hpp"
#include "behaviocog/cognitive/analysis.hpp"
#include "behaviocog/errors.hpp"
#include "behaviocog/sim/simulate.hpp"

namespace py = pybind11;
using namespace behaviocog;

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
namespace {

std::string planted(int d, int k, int l, int n, int rounds, std::uint64_t seed, bool answer_zero) {
  Rng rng(seed);
  const auto p = new_params(d, k, l, n);
  const auto pt = plant_transcript(p, rounds, rng,
                                   answer_zero ? EmptyCasePolicy::answer_zero : EmptyCasePolicy::random_response);
  nlohmann::json j = {{"transcript", to_json(pt.transcript)}, {"secret", pt.secret.objects()}};
  return j.dump();
}

std::string attack(const std::string& name, const std::string& transcript_json, std::uint64_t budget) {
  const auto t = transcript_from_json(nlohmann::json::parse(transcript_json));
  if (name == "bruteforce" || name == "mitm") {
    EnumerationOptions opt;
    if (budget) opt.max_candidates = budget;
    return attack_report(name, name == "mitm" ? mitm_recover(t, opt) : brute_force_recover(t, opt)).dump();
  }
  if (name == "ge" || name == "ge-slack") {
    LinearizationOptions opt;
    if (budget) opt.max_candidates = budget;
    return attack_report(name, name == "ge" ? ge_recover(t, opt) : ge_slack_recover(t, opt)).dump();
  }
  throw ConfigError("unknown attack '" + name + "'");
}

std::string security_rows(double fpr_bar, const std::vector<int>& gammas) {
  const auto rows = reference_rows();
  auto j = nlohmann::json::array();
  for (const auto& r : security_table(rows, fpr_bar, gammas)) j.push_back(to_json(r));
  return j.dump();
}

std::map<std::string, std::vector<double>> features(const std::string& trace_text, bool normalize) {
  const auto fs = extract_features(parse_trace(trace_text), normalize);
  std::map<std::string, std::vector<double>> out;
  for (Feature f : fs.available_features()) out.emplace(feature_name(f), fs.at(f));
  return out;
}

std::string simulate_summary(int d, int k, int l, int n, int gamma, int t, int users, int sessions,
                             double noise, std::uint64_t seed) {
  SimulationSpec spec;
  spec.params = new_params(d, k, l, n, gamma, t);
  spec.users = users;
  spec.sessions = sessions;
  spec.render.noise = noise;
  spec.seed = seed;
  const auto r = simulate(spec);
  nlohmann::json j = {{"sessions", r.sessions}, {"accepted", r.accepted}};
  auto& tr = j["transcripts"] = nlohmann::json::array();
  for (const auto& x : r.transcripts) tr.push_back(to_json(x));
  auto& secrets = j["secrets"] = nlohmann::json::array();
  for (const auto& u : r.users) secrets.push_back(u.secret);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_behaviocog, m) {
  m.doc() = "behaviocog core bindings";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<UnsupportedModulus>(m, "UnsupportedModulus", PyExc_ValueError);
  py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<SchemeParams>(m, "SchemeParams")
      .def(py::init(&new_params), py::arg("d"), py::arg("k"), py::arg("l"), py::arg("n"),
           py::arg("gamma") = 1, py::arg("t") = 1)
      .def_readonly("d", &SchemeParams::d)
      .def_readonly("k", &SchemeParams::k)
      .def_readonly("l", &SchemeParams::l)
      .def_readonly("n", &SchemeParams::n)
      .def_readonly("gamma", &SchemeParams::gamma)
      .def_readonly("t", &SchemeParams::t)
      .def("__repr__", [](const SchemeParams& p) { return "SchemeParams" + to_string(p); });

  m.def("p_empty", &p_empty);
  m.def("hypergeom_pmf", &hypergeom_pmf);
  m.def("p_random_guess", &p_random_guess);
  m.def("info_theoretic_bound", &info_theoretic_bound);
  m.def("expected_surviving_candidates", &expected_surviving_candidates);
  m.def("complexity_bits", [](const SchemeParams& p) {
    const auto c = complexity_bits(p);
    return std::make_pair(c.brute_force, c.meet_in_middle);
  });
  m.def("_ch_attack_estimate", [](const SchemeParams& p, double budget) {
    return to_json(ch_attack_estimate(p, budget)).dump();
  });
  m.def("_security_table", &security_rows, py::arg("fpr_bar"), py::arg("gammas"));
  m.def("combined_security", &combined_security);

  m.def("compute_response",
        [](const SchemeParams& p, std::vector<int> secret, std::vector<int> objects,
           std::vector<int> weights, std::uint64_t seed) {
          Rng rng(seed);
          Challenge c{std::move(objects), std::move(weights)};
          validate(c, p);
          return compute_response(p, Secret(std::move(secret), p), c, rng);
        },
        py::arg("params"), py::arg("secret"), py::arg("objects"), py::arg("weights"), py::arg("seed") = 0);

  m.def("_planted_transcript", &planted, py::arg("d"), py::arg("k"), py::arg("l"), py::arg("n"),
        py::arg("rounds"), py::arg("seed"), py::arg("answer_zero") = false);
  m.def("_attack", &attack, py::arg("name"), py::arg("transcript"), py::arg("budget") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("monte_carlo_full_rank", &monte_carlo_full_rank, py::arg("d"), py::arg("l"), py::arg("n"),
        py::arg("reps"), py::arg("seed"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("binomial_significance", &binomial_significance);
  m.def("chi_square_critical", &chi_square_critical);

  m.def("dtw_distance",
        [](const std::vector<double>& a, const std::vector<double>& b, double radius) {
          return dtw_distance(a, b, radius);
        },
        py::arg("a"), py::arg("b"), py::arg("band_radius") = kDefaultBandRadius);
  m.def("extract_features", &features, py::arg("trace"), py::arg("normalize") = true);
  m.def("_simulate", &simulate_summary, py::arg("d"), py::arg("k"), py::arg("l"), py::arg("n"),
        py::arg("gamma"), py::arg("t"), py::arg("users"), py::arg("sessions"), py::arg("noise"),
        py::arg("seed"), py::call_guard<py::gil_scoped_release>());
}
