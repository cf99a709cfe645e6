#include "klnet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "klnet/defect.hpp"
#include "klnet/factor.hpp"
#include "klnet/json_io.hpp"
#include "klnet/network.hpp"

namespace klnet {

namespace {

int worker_count() {
  if (const char* env = std::getenv("KL_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Permutation parse_perm_arg(const std::string& text, std::optional<int> n_flag,
                           std::optional<int> context_degree) {
  if (text == "e") {
    if (n_flag) return Permutation::identity(*n_flag);
    if (context_degree) return Permutation::identity(*context_degree);
    throw CLI::ValidationError("'e' needs a degree: pass --n or a second permutation");
  }
  return parse_permutation(text);
}

std::optional<int> degree_of(const std::string& text) {
  if (text == "e") return std::nullopt;
  return parse_permutation(text).degree();
}

json read_json_file(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

StarNetwork network_from_options(const std::string& spec, const std::string& from_json) {
  if (!spec.empty() && !from_json.empty())
    throw CLI::ValidationError("give either --spec or --from-json, not both");
  if (!spec.empty()) return parse_network(spec);
  if (!from_json.empty()) return network_from_json(read_json_file(from_json));
  throw CLI::ValidationError("a network is required: --spec or --from-json");
}

void print_family_line(std::ostream& out, const StarNetwork& f, const PathFamily& fam, long index,
                       bool as_json) {
  if (as_json) {
    json j = family_to_json(f, fam);
    j["index"] = index;
    out << j.dump() << "\n";
    return;
  }
  out << "family " << index << ": type=" << to_string(family_type(f, fam))
      << " dfct=" << defect_count(f, fam) << " defects=[";
  bool first = true;
  for (const Defect& d : defects(f, fam)) {
    if (!first) out << " ";
    first = false;
    out << "(" << d.i << "," << d.j << "," << d.k << ")";
  }
  out << "]\n";
}

void print_reduction(std::ostream& out, const StarNetwork& f, PathFamily fam, bool as_json,
                     const std::string& indent) {
  while (defect_count(f, fam) > 0) {
    std::vector<PhiTrace> traces;
    PathFamily target = reduce_by_one(f, fam, &traces);
    // Replay the schedule step by step for per-application defect counts.
    for (const PhiTrace& t : traces) {
      const int before = defect_count(f, fam);
      fam = phi(f, fam, t.k).first;
      const int after = defect_count(f, fam);
      if (as_json)
        out << indent << phi_trace_to_json(t, before, after).dump() << "\n";
      else
        out << indent << "phi: k=" << t.k << " r=" << t.r << " s=" << t.s << " t=" << t.t
            << " ell=" << t.ell << "  dfct " << before << " -> " << after << "\n";
    }
    if (!(fam == target)) throw std::logic_error("reduction replay diverged");
  }
  if (as_json) {
    json j = family_to_json(f, fam);
    j["reduced"] = true;
    out << indent << j.dump() << "\n";
  } else {
    out << indent << "zero-defect representative: type=" << to_string(family_type(f, fam)) << "\n";
  }
}

struct Table5Row {
  bool ok = true;
  std::string text;
};

Table5Row check_catalog_row(const CatalogRow& row, bool as_json) {
  Table5Row out;
  std::ostringstream os;
  const bool base_ok = verify(row.w, row.sequence) && overlap_poly(row.sequence) == row.prefactor;
  out.ok = base_ok;
  std::vector<std::string> related_checked;
  std::set<Permutation> seen{row.w};
  for (Symmetry sym : {Symmetry::kHReflect, Symmetry::kVReflect, Symmetry::kRotate}) {
    const Permutation image = symmetry(row.w, sym);
    if (!seen.insert(image).second) continue;
    const bool ok = verify(image, transfer(row.sequence, sym));
    out.ok = out.ok && ok;
    related_checked.push_back(to_string(image) + (ok ? "" : "!FAIL"));
  }
  // The catalog's related list must be exactly the distinct symmetry images.
  std::vector<std::string> expected;
  for (const Permutation& rel : row.related) expected.push_back(to_string(rel));
  std::vector<std::string> got = related_checked;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  out.ok = out.ok && expected == got;

  if (as_json) {
    json j{{"w", to_string(row.w)},
           {"intervals", interval_sequence_to_json(row.sequence)},
           {"prefactor", poly_to_json(row.prefactor)},
           {"related", related_checked},
           {"ok", out.ok}};
    os << j.dump();
  } else {
    os << to_string(row.w) << ": " << (out.ok ? "ok" : "FAIL") << "  A = "
       << interval_list_string(row.sequence.intervals) << "  f = " << row.prefactor.str();
    if (!related_checked.empty()) {
      os << "  related:";
      for (const std::string& rel : related_checked) os << " " << rel;
    }
  }
  out.text = os.str();
  return out;
}

int cmd_table5(std::ostream& out, bool as_json) {
  const auto& rows = s5_catalog();
  std::vector<Table5Row> results(rows.size());
  const int workers = std::min<int>(worker_count(), static_cast<int>(rows.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < rows.size(); ++i) results[i] = check_catalog_row(rows[i], as_json);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
          results[i] = check_catalog_row(rows[i], as_json);
      });
    for (std::thread& t : pool) t.join();
  }
  bool all_ok = true;
  for (const Table5Row& row : results) {
    out << row.text << "\n";
    all_ok = all_ok && row.ok;
  }
  if (!as_json) out << (all_ok ? "all rows verified" : "verification failures above") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Hecke-algebra computations on star networks"};
  app.name("kl");
  app.require_subcommand(1);

  // ---- poly ----
  auto* poly_cmd = app.add_subcommand("poly", "Kazhdan-Lusztig polynomial P_{v,w}");
  std::string poly_v, poly_w;
  bool poly_json = false;
  std::optional<int> poly_n;
  poly_cmd->add_option("v", poly_v)->required();
  poly_cmd->add_option("w", poly_w)->required();
  poly_cmd->add_flag("--json", poly_json);
  poly_cmd->add_option("--n", poly_n, "degree, for 'e' arguments");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "check a reversal factorization exactly");
  std::string verify_w, verify_intervals, verify_from_json;
  bool verify_json = false;
  std::optional<int> verify_n;
  verify_cmd->add_option("w", verify_w)->required();
  verify_cmd->add_option("--intervals", verify_intervals, "comma-separated, e.g. 1-2,2-4,1-2");
  verify_cmd->add_option("--from-json", verify_from_json, "interval sequence or factor output, - for stdin");
  verify_cmd->add_flag("--json", verify_json);
  verify_cmd->add_option("--n", verify_n);

  // ---- factor ----
  auto* factor_cmd = app.add_subcommand("factor", "search for a reversal factorization");
  std::string factor_w;
  bool factor_json = false, factor_force = false, factor_conj = false;
  std::optional<int> factor_n, factor_max;
  factor_cmd->add_option("w", factor_w)->required();
  factor_cmd->add_option("--max-factors", factor_max, "bound on the number of reversals (default: length of w)");
  factor_cmd->add_flag("--json", factor_json);
  factor_cmd->add_flag("--force-search", factor_force, "search even when impossibility is proved");
  factor_cmd->add_flag("--assume-conjecture", factor_conj, "skip searching 45312-containing inputs");
  factor_cmd->add_option("--n", factor_n);

  // ---- classify ----
  auto* classify_cmd = app.add_subcommand("classify", "factorability classification by patterns");
  std::string classify_w;
  bool classify_json = false;
  std::optional<int> classify_n;
  classify_cmd->add_option("w", classify_w)->required();
  classify_cmd->add_flag("--json", classify_json);
  classify_cmd->add_option("--n", classify_n);

  // ---- singdeg ----
  auto* singdeg_cmd = app.add_subcommand("singdeg", "least positive degree in P_{e,w}");
  std::string singdeg_w;
  bool singdeg_json = false, singdeg_brute_flag = false;
  std::optional<int> singdeg_n;
  singdeg_cmd->add_option("w", singdeg_w)->required();
  singdeg_cmd->add_flag("--brute", singdeg_brute_flag, "compute from the KL oracle instead of patterns");
  singdeg_cmd->add_flag("--json", singdeg_json);
  singdeg_cmd->add_option("--n", singdeg_n);

  // ---- table5 ----
  auto* table5_cmd = app.add_subcommand("table5", "verify the built-in S_5 factorization catalog");
  bool table5_json = false;
  table5_cmd->add_flag("--json", table5_json);

  // ---- network ----
  auto* network_cmd = app.add_subcommand("network", "build, render and explore a star network");
  std::string network_spec, network_from_json_path, network_render;
  bool network_json = false, network_families = false, network_reduce = false;
  network_cmd->add_option("--spec", network_spec, "e.g. \"n=4; [1,3] * [2,4] * [1,3]\"");
  network_cmd->add_option("--from-json", network_from_json_path);
  network_cmd->add_option("--render", network_render)->check(CLI::IsMember({"ascii", "dot", "tikz", "svg"}));
  network_cmd->add_flag("--families", network_families, "stream covering families with defect data");
  network_cmd->add_flag("--reduce", network_reduce, "with --families: show each family's reduction to zero defects");
  network_cmd->add_flag("--json", network_json);

  // ---- enumerate ----
  auto* enum_cmd = app.add_subcommand("enumerate", "stream covering families with defect counts");
  std::string enum_spec, enum_from_json;
  bool enum_json = false;
  enum_cmd->add_option("--spec", enum_spec);
  enum_cmd->add_option("--from-json", enum_from_json);
  enum_cmd->add_flag("--json", enum_json);

  // ---- reduce ----
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a family to zero defects, emitting phi traces");
  std::string reduce_spec, reduce_from_json, reduce_type;
  long reduce_index = 0;
  bool reduce_json = false;
  reduce_cmd->add_option("--spec", reduce_spec);
  reduce_cmd->add_option("--from-json", reduce_from_json);
  reduce_cmd->add_option("--type", reduce_type, "pick the first family of this type");
  reduce_cmd->add_option("--index", reduce_index, "pick the k-th matching family (enumeration order)");
  reduce_cmd->add_flag("--json", reduce_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 64;
  }

  try {
    if (*poly_cmd) {
      const Permutation w = parse_perm_arg(poly_w, poly_n, degree_of(poly_v));
      const Permutation v = parse_perm_arg(poly_v, poly_n, w.degree());
      const QPoly p = kl_polynomial(v, w);
      if (poly_json)
        out << json{{"v", to_string(v)}, {"w", to_string(w)}, {"poly", poly_to_json(p)}}.dump() << "\n";
      else
        out << p.str() << "\n";
      return 0;
    }

    if (*verify_cmd) {
      IntervalSequence seq;
      std::optional<int> context;
      if (!verify_from_json.empty()) {
        json j = read_json_file(verify_from_json);
        if (j.contains("sequence")) j = j.at("sequence");
        seq = interval_sequence_from_json(j);
        context = seq.n;
      }
      const Permutation w = parse_perm_arg(verify_w, verify_n, context);
      if (verify_from_json.empty()) {
        if (verify_intervals.empty())
          throw CLI::ValidationError("verify needs --intervals or --from-json");
        seq = IntervalSequence{w.degree(), parse_interval_list(verify_intervals)};
      }
      const bool ok = verify(w, seq);
      const QPoly f = overlap_poly(seq);
      if (verify_json)
        out << json{{"w", to_string(w)},
                    {"sequence", interval_sequence_to_json(seq)},
                    {"overlap", poly_to_json(f)},
                    {"verified", ok}}
                   .dump()
            << "\n";
      else
        out << (ok ? "verified" : "does not verify") << "  f = " << f.str() << "\n";
      return ok ? 0 : 1;
    }

    if (*factor_cmd) {
      const Permutation w = parse_perm_arg(factor_w, factor_n, std::nullopt);
      SearchOptions opts;
      opts.use_impossibility_proof = !factor_force;
      opts.assume_conjecture = factor_conj;
      const int bound = factor_max ? *factor_max : default_max_factors(w);
      const FactorizationResult res = search(w, bound, opts);
      if (factor_json) {
        json j = factorization_result_to_json(res);
        j["w"] = to_string(w);
        out << j.dump() << "\n";
      } else {
        switch (res.status) {
          case SearchStatus::kFound:
            out << "Found: " << interval_list_string(res.sequence->intervals)
                << "  f = " << res.overlap.str() << "  (searched " << res.searched << ")\n";
            break;
          case SearchStatus::kNotFoundWithinBound:
            out << "NotFoundWithinBound: no sequence of at most " << res.bound
                << " reversals (searched " << res.searched << "; not a proof of impossibility)\n";
            break;
          case SearchStatus::kProvedImpossible:
            out << "ProvedImpossible: gap " << res.gap << "\n";
            break;
        }
      }
      return res.status == SearchStatus::kFound        ? 0
             : res.status == SearchStatus::kProvedImpossible ? 2
                                                             : 1;
    }

    if (*classify_cmd) {
      const Permutation w = parse_perm_arg(classify_w, classify_n, std::nullopt);
      const ClassifyResult cls = classify(w);
      if (classify_json) {
        json j{{"w", to_string(w)}, {"classification", to_string(cls.kind)}};
        if (cls.kind == Classification::kProvedUnfactorable) j["gap"] = cls.gap;
        out << j.dump() << "\n";
      } else {
        out << to_string(cls.kind);
        if (cls.kind == Classification::kProvedUnfactorable) out << " (gap " << cls.gap << ")";
        out << "\n";
      }
      return cls.kind == Classification::kProvedUnfactorable ? 2 : 0;
    }

    if (*singdeg_cmd) {
      const Permutation w = parse_perm_arg(singdeg_w, singdeg_n, std::nullopt);
      const std::optional<int> value = singdeg_brute_flag ? singdeg_brute(w) : singdeg(w);
      if (singdeg_json) {
        json j{{"w", to_string(w)}};
        if (value)
          j["singdeg"] = *value;
        else
          j["singdeg"] = "infinity";
        out << j.dump() << "\n";
      } else {
        if (value)
          out << *value << "\n";
        else
          out << "infinity\n";
      }
      return 0;
    }

    if (*table5_cmd) return cmd_table5(out, table5_json);

    if (*network_cmd) {
      const StarNetwork f = network_from_options(network_spec, network_from_json_path);
      bool printed = false;
      if (!network_render.empty()) {
        out << render(f, parse_render_format(network_render));
        printed = true;
      }
      if (network_json && !network_families) {
        out << network_to_json(f).dump() << "\n";
        printed = true;
      }
      if (network_families) {
        long index = 0;
        enumerate_families(f, [&](const PathFamily& fam) {
          print_family_line(out, f, fam, index, network_json);
          if (network_reduce && defect_count(f, fam) > 0) print_reduction(out, f, fam, network_json, "  ");
          ++index;
          return true;
        });
        printed = true;
      }
      if (!printed) out << network_spec_string(f) << "\n";
      return 0;
    }

    if (*enum_cmd) {
      const StarNetwork f = network_from_options(enum_spec, enum_from_json);
      long index = 0;
      enumerate_families(f, [&](const PathFamily& fam) {
        print_family_line(out, f, fam, index, enum_json);
        ++index;
        return true;
      });
      return 0;
    }

    if (*reduce_cmd) {
      const StarNetwork f = network_from_options(reduce_spec, reduce_from_json);
      std::optional<Permutation> want;
      if (!reduce_type.empty()) want = parse_permutation(reduce_type);
      std::optional<PathFamily> chosen;
      long seen = 0;
      enumerate_families(f, [&](const PathFamily& fam) {
        if (want && !(family_type(f, fam) == *want)) return true;
        if (seen++ == reduce_index) {
          chosen = fam;
          return false;
        }
        return true;
      });
      if (!chosen) {
        err << "error: no matching family\n";
        return 1;
      }
      print_family_line(out, f, *chosen, reduce_index, reduce_json);
      print_reduction(out, f, *chosen, reduce_json, "");
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 64;
}

}  // namespace klnet
