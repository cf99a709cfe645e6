#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "klnet/cli.hpp"
#include "klnet/defect.hpp"
#include "klnet/factor.hpp"
#include "klnet/json_io.hpp"

namespace py = pybind11;
using namespace klnet;

namespace {

Permutation perm_arg(const std::string& text) { return parse_permutation(text); }

std::vector<Interval> intervals_arg(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Interval> out;
  for (auto [a, b] : pairs) out.push_back(Interval{a, b});
  return out;
}

std::vector<std::pair<int, int>> intervals_out(const std::vector<Interval>& intervals) {
  std::vector<std::pair<int, int>> out;
  for (Interval iv : intervals) out.emplace_back(iv.a, iv.b);
  return out;
}

py::object poly_out(const QPoly& p) {
  py::list coeffs;
  for (const Int& c : p.coeffs()) coeffs.append(py::int_(py::str(c.str())));
  return coeffs;
}

py::dict hecke_out(const HeckeElement& h) {
  py::dict out;
  for (const auto& [v, p] : h.terms()) out[py::str(to_string(v))] = poly_out(p);
  return out;
}

Symmetry symmetry_arg(const std::string& which) {
  if (which == "h-reflect") return Symmetry::kHReflect;
  if (which == "v-reflect") return Symmetry::kVReflect;
  if (which == "rotate") return Symmetry::kRotate;
  throw std::invalid_argument("symmetry must be h-reflect, v-reflect or rotate");
}

PathFamily family_arg(const std::vector<std::vector<int>>& paths) {
  PathFamily fam;
  fam.paths = paths;
  return fam;
}

py::dict family_out(const StarNetwork& f, const PathFamily& fam) {
  py::dict out;
  out["type"] = to_string(family_type(f, fam));
  out["dfct"] = defect_count(f, fam);
  py::list ds;
  for (const Defect& d : defects(f, fam)) ds.append(py::make_tuple(d.i, d.j, d.k));
  out["defects"] = ds;
  out["paths"] = fam.paths;
  return out;
}

py::dict trace_out(const PhiTrace& t) {
  py::dict out;
  out["k"] = t.k;
  out["r"] = t.r;
  out["s"] = t.s;
  out["t"] = t.t;
  out["ell"] = t.ell;
  return out;
}

}  // namespace

PYBIND11_MODULE(_klnet, m) {
  m.doc() = "exact Hecke-algebra computations on star networks";

  // permutations (text-format strings throughout)
  m.def("compose", [](const std::string& u, const std::string& v) {
    return to_string(compose(perm_arg(u), perm_arg(v)));
  });
  m.def("inverse", [](const std::string& w) { return to_string(perm_arg(w).inverse()); });
  m.def("identity", [](int n) { return to_string(Permutation::identity(n)); });
  m.def("length", [](const std::string& w) { return length(perm_arg(w)); });
  m.def("reversal", [](int n, int a, int b) { return to_string(reversal(n, {a, b})); });
  m.def("bruhat_leq", [](const std::string& v, const std::string& w) {
    return bruhat_leq(perm_arg(v), perm_arg(w));
  });
  m.def("below_reversal", [](int n, int a, int b) {
    std::vector<std::string> out;
    for (const Permutation& v : below_reversal(n, {a, b})) out.push_back(to_string(v));
    return out;
  });
  m.def("matches_pattern", [](const std::vector<int>& y, const std::string& u) {
    return matches_pattern(y, perm_arg(u));
  });
  m.def("avoids_pattern", [](const std::string& w, const std::string& u) {
    return avoids_pattern(perm_arg(w), perm_arg(u));
  });
  m.def("gap3412", [](const std::string& w) { return gap3412(perm_arg(w)); });
  m.def("reduced_word", [](const std::string& w) { return reduced_word(perm_arg(w)); });
  m.def("symmetry", [](const std::string& w, const std::string& which) {
    return to_string(symmetry(perm_arg(w), symmetry_arg(which)));
  });

  // q-polynomials (ascending coefficient lists)
  m.def("q_int", [](int p) { return poly_out(q_int(p)); });
  m.def("q_factorial", [](int p) { return poly_out(q_factorial(p)); });
  m.def("poly_str", [](const std::vector<long long>& coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return QPoly(std::move(c)).str();
  });

  // Hecke algebra and the KL oracle
  m.def("kl_polynomial", [](const std::string& v, const std::string& w) {
    return poly_out(kl_polynomial(perm_arg(v), perm_arg(w)));
  });
  m.def("kl_basis_element", [](const std::string& w) { return hecke_out(kl_basis_element(perm_arg(w))); });
  m.def("product_of_reversal_kls", [](int n, const std::vector<std::pair<int, int>>& intervals) {
    return hecke_out(product_of_reversal_kls(n, intervals_arg(intervals)));
  });

  // star networks
  py::class_<StarNetwork>(m, "StarNetwork")
      .def_property_readonly("n", &StarNetwork::n)
      .def_property_readonly("m", &StarNetwork::m)
      .def("mu", &StarNetwork::mu)
      .def("spec", [](const StarNetwork& f) { return network_spec_string(f); })
      .def("render", [](const StarNetwork& f, const std::string& format) {
        return render(f, parse_render_format(format));
      })
      .def("render_family",
           [](const StarNetwork& f, const std::string& format, const std::vector<std::vector<int>>& paths) {
             const PathFamily fam = family_arg(paths);
             return render(f, parse_render_format(format), &fam);
           });

  m.def("build_network", [](int n, const std::vector<std::pair<int, int>>& intervals,
                            const std::vector<bool>& condensed) {
    return StarNetwork::build(n, intervals_arg(intervals), condensed);
  });
  m.def("parse_network", [](const std::string& spec) { return parse_network(spec); });
  m.def("families", [](const StarNetwork& f) {
    py::list out;
    enumerate_families(f, [&](const PathFamily& fam) {
      out.append(family_out(f, fam));
      return true;
    });
    return out;
  });
  m.def("represented_element", [](const StarNetwork& f) { return hecke_out(represented_element(f)); });
  m.def("pi_vd", [](const StarNetwork& f, const std::string& v, int d) {
    py::list out;
    for (const PathFamily& fam : pi_vd(f, perm_arg(v), d)) out.append(family_out(f, fam));
    return out;
  });

  // defect reduction
  m.def("phi", [](const StarNetwork& f, const std::vector<std::vector<int>>& paths, int k) {
    auto [fam, trace] = phi(f, family_arg(paths), k);
    return py::make_tuple(family_out(f, fam), trace_out(trace));
  });
  m.def("reduce_by_one", [](const StarNetwork& f, const std::vector<std::vector<int>>& paths) {
    std::vector<PhiTrace> traces;
    PathFamily fam = reduce_by_one(f, family_arg(paths), &traces);
    py::list tr;
    for (const PhiTrace& t : traces) tr.append(trace_out(t));
    return py::make_tuple(family_out(f, fam), tr);
  });
  m.def("zero_defect_family", [](const StarNetwork& f, const std::string& v) -> py::object {
    auto fam = zero_defect_family(f, perm_arg(v));
    if (!fam) return py::none();
    return family_out(f, *fam);
  });

  // factorization
  m.def("overlap_poly", [](int n, const std::vector<std::pair<int, int>>& intervals) {
    return poly_out(overlap_poly(IntervalSequence{n, intervals_arg(intervals)}));
  });
  m.def("verify", [](const std::string& w, const std::vector<std::pair<int, int>>& intervals) {
    const Permutation p = perm_arg(w);
    return verify(p, IntervalSequence{p.degree(), intervals_arg(intervals)});
  });
  m.def(
      "search",
      [](const std::string& w, int max_factors) {
        const Permutation p = perm_arg(w);
        const int bound = max_factors >= 0 ? max_factors : default_max_factors(p);
        const FactorizationResult res = search(p, bound);
        py::dict out;
        switch (res.status) {
          case SearchStatus::kFound:
            out["status"] = "Found";
            out["intervals"] = intervals_out(res.sequence->intervals);
            out["overlap"] = poly_out(res.overlap);
            break;
          case SearchStatus::kNotFoundWithinBound:
            out["status"] = "NotFoundWithinBound";
            out["bound"] = res.bound;
            break;
          case SearchStatus::kProvedImpossible:
            out["status"] = "ProvedImpossible";
            out["gap"] = res.gap;
            break;
        }
        out["searched"] = res.searched;
        return out;
      },
      py::arg("w"), py::arg("max_factors") = -1);
  m.def("classify", [](const std::string& w) {
    const ClassifyResult cls = classify(perm_arg(w));
    py::dict out;
    out["classification"] = to_string(cls.kind);
    if (cls.kind == Classification::kProvedUnfactorable) out["gap"] = cls.gap;
    return out;
  });
  m.def(
      "singdeg",
      [](const std::string& w, bool brute) -> py::object {
        const auto value = brute ? singdeg_brute(perm_arg(w)) : singdeg(perm_arg(w));
        if (!value) return py::none();
        return py::int_(*value);
      },
      py::arg("w"), py::arg("brute") = false);
  m.def("transfer", [](int n, const std::vector<std::pair<int, int>>& intervals, const std::string& which) {
    return intervals_out(transfer(IntervalSequence{n, intervals_arg(intervals)}, symmetry_arg(which)).intervals);
  });
  m.def("internal_coefficients_check",
        [](const std::string& w, const std::vector<std::pair<int, int>>& intervals) {
          const Permutation p = perm_arg(w);
          return internal_coefficients_check(p, IntervalSequence{p.degree(), intervals_arg(intervals)});
        });

  // the command line, for end-to-end checks
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
