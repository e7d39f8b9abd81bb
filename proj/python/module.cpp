#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "robp/hitting.hpp"
#include "robp/io.hpp"
#include "robp/normalize.hpp"
#include "robp/richness.hpp"

namespace py = pybind11;
using robp::io::json;

namespace {

// Programs, formulas and reports cross the boundary as JSON text in the
// interchange formats; the Python package turns them into dicts.

robp::BranchingProgram program(const std::string &text) {
  return robp::io::program_from_json(json::parse(text));
}

robp::BitStringSet to_set(const std::vector<std::string> &members, unsigned n) {
  robp::BitStringSet set(n);
  for (const auto &m : members) {
    const robp::BitString bits = robp::parse_bits(m);
    if (bits.n != n)
      throw robp::Error(robp::ErrorKind::LengthMismatch, "member '" + m + "' does not have length " + std::to_string(n));
    set.insert(bits.word);
  }
  return set;
}

std::vector<std::string> from_set(const robp::BitStringSet &set) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::uint64_t w = 0; w < set.weights()[i]; ++w)
      out.push_back(robp::format_bits(set.members()[i], set.n()));
  return out;
}

std::pair<std::string, std::uint32_t> dyadic(const robp::DyadicRational &d) {
  return {d.numerator().str(), d.exponent()};
}

} // namespace

PYBIND11_MODULE(_robp, m) {
  m.doc() = "Hitting sets for width-3 read-once branching programs";

  py::register_exception<robp::Error>(m, "RobpError", PyExc_ValueError);

  m.def("validate", [](const std::string &bp, std::size_t width) -> std::optional<std::string> {
    if (auto err = robp::validate(program(bp), width))
      return err->message();
    return std::nullopt;
  }, py::arg("bp"), py::arg("width") = robp::default_width);
  m.def("eval", [](const std::string &bp, const std::string &x) { return robp::eval(program(bp), robp::parse_bits(x)); });
  m.def("acceptance_probability", [](const std::string &bp) { return dyadic(robp::acceptance_probability(program(bp))); });
  m.def("brute_force_acceptance", [](const std::string &bp) { return dyadic(robp::brute_force_acceptance(program(bp))); });
  m.def("distributions", [](const std::string &bp) {
    std::vector<std::vector<std::pair<std::string, std::uint32_t>>> out;
    for (const auto &level : robp::distributions(program(bp))) {
      out.emplace_back();
      for (const auto &p : level)
        out.back().push_back(dyadic(p));
    }
    return out;
  });
  m.def("normalize", [](const std::string &bp, bool pad_width) {
    robp::NormalizeOptions opts;
    opts.pad_width = pad_width;
    return robp::io::to_json(robp::normalize(program(bp), opts)).dump();
  }, py::arg("bp"), py::arg("pad_width") = false);
  m.def("random_robp", [](unsigned n, std::size_t width, std::uint64_t seed, bool oblivious) {
    robp::RobpProfile profile;
    profile.order = oblivious ? robp::VariableOrder::Oblivious : robp::VariableOrder::PerNode;
    return robp::io::to_json(robp::random_robp(n, width, seed, profile)).dump();
  }, py::arg("n"), py::arg("width") = 3, py::arg("seed") = 0, py::arg("oblivious") = true);

  m.def("compile_formula", [](const std::string &f) {
    return robp::io::to_json(robp::compile(robp::io::formula_from_json(json::parse(f)))).dump();
  });
  m.def("formula_acceptance", [](const std::string &f) {
    return dyadic(robp::acceptance(robp::io::formula_from_json(json::parse(f))));
  });
  m.def("eval_formula", [](const std::string &f, const std::string &x) {
    return robp::eval_formula(robp::io::formula_from_json(json::parse(f)), robp::parse_bits(x));
  });
  m.def("random_formula", [](unsigned n, const std::string &eps, std::uint64_t seed) {
    return robp::io::to_json(robp::random_formula(n, robp::parse_rational(eps), seed)).dump();
  });

  m.def("irreducible_poly", [](unsigned degree) { return robp::irreducible_poly(degree).bits(); });
  m.def("aghp_powering", [](unsigned n, unsigned degree) {
    return from_set(robp::aghp_powering(n, degree, robp::irreducible_poly(degree)));
  });
  m.def("max_bias", [](const std::vector<std::string> &set, unsigned n) {
    return robp::to_string(robp::max_bias(to_set(set, n)).value);
  });
  m.def("kwise_deviation", [](const std::vector<std::string> &set, unsigned n, unsigned k) {
    return robp::to_string(robp::kwise_deviation(to_set(set, n), k).value);
  });
  m.def("hamming_ball", [](const std::string &center, unsigned radius) {
    return from_set(robp::hamming_ball(robp::parse_bits(center), radius));
  });
  m.def("richness_params", [](const std::string &eps, unsigned n) {
    return robp::io::to_json(robp::richness_params(robp::parse_rational(eps), n)).dump();
  });

  m.def("check_rich", [](const std::vector<std::string> &set, unsigned n, const std::string &eps, bool weak, unsigned max_r) {
    robp::RichnessBudget budget;
    budget.max_r = max_r;
    const auto s = to_set(set, n);
    const auto e = robp::parse_rational(eps);
    const auto verdict = weak ? robp::check_weak_rich(s, e, budget) : robp::check_rich(s, e, budget);
    return robp::io::to_json(verdict, budget, weak).dump();
  }, py::arg("set"), py::arg("n"), py::arg("epsilon"), py::arg("weak") = false, py::arg("max_r") = 3);

  m.def("build_hitting_set", [](unsigned n, const std::string &eps, std::optional<unsigned> degree) {
    robp::BuildMode mode = robp::LiteralMode{};
    if (degree)
      mode = robp::PracticalMode{*degree};
    return from_set(robp::build_hitting_set(n, robp::parse_rational(eps), mode).set);
  }, py::arg("n"), py::arg("epsilon"), py::arg("m") = std::nullopt);
  m.def("hit_check", [](const std::vector<std::string> &set, const std::string &bp, const std::string &eps) {
    const auto p = program(bp);
    return robp::io::to_json(robp::hit_check(to_set(set, p.n), p, robp::parse_rational(eps))).dump();
  });
  m.def("campaign", [](const std::string &config) {
    return robp::io::to_json(robp::campaign(robp::io::campaign_config_from_json(json::parse(config)))).dump();
  });
}
