// atomspec: load order/space/schema/module files, run the analyses, print
// deterministic reports.  Exit codes: 0 ok, 1 verification failure, 2 bad
// input.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "atomspec/errors.hpp"
#include "atomspec/filtration.hpp"
#include "atomspec/finspace.hpp"
#include "atomspec/json_io.hpp"
#include "atomspec/order.hpp"
#include "atomspec/pid_modules.hpp"
#include "atomspec/spectrum.hpp"
#include "atomspec/tailspace.hpp"
#include "atomspec/verify.hpp"
#include "json.hpp"

namespace {

using atomspec::input_error;
using atomspec::filtration::dim_value;
using atomspec::spectrum::atom_ref;
using atomspec::spectrum::atom_space;
using atomspec::tailspace::symbolic_set;
using nlohmann::json;

struct options {
  std::string input;
  std::string builtin;
  std::string check;
  bool json_out = false;
  bool dot = false;
  bool order_only = false;
  bool complete = false;
  bool amin = false;
  bool classify = false;
  bool oracle = false;
  std::size_t max_points = atomspec::finspace::default_max_points;
  std::size_t stage_cap = atomspec::filtration::default_stage_cap;
};

atom_space load_space(const options& o) {
  if (!o.builtin.empty()) {
    if (!o.input.empty()) throw input_error("give either a file or --builtin, not both");
    if (o.builtin == "grmod_kx" || o.builtin == "goodearl") {
      return atom_space::builtin(o.builtin);
    }
    if (o.builtin == "spec_Z") return atomspec::pid::spec_model(atomspec::pid::integer_ring{});
    if (o.builtin == "spec_F2x") return atomspec::pid::spec_model(atomspec::pid::fp_poly_ring(2));
    throw input_error("unknown builtin \"" + o.builtin +
                      "\" (expected grmod_kx, goodearl, spec_Z, or spec_F2x)");
  }
  if (o.input.empty()) throw input_error("provide a model file or --builtin NAME");
  return atomspec::json_io::parse_model(atomspec::json_io::read_file(o.input), o.max_points);
}

// Named points first (already sorted), then one handle for the indexed class.
std::vector<atom_ref> handles(const atom_space& a) {
  std::vector<atom_ref> out;
  for (const auto& n : a.live().named) out.push_back(atom_ref::named_point(n));
  if (!a.live().indexed.empty()) out.push_back(atom_ref::whole_class());
  return out;
}

std::string set_str(const atom_space& a, const symbolic_set& s) {
  if (s.empty()) return "{}";
  return a.set_to_string(s);
}

std::string amin_line(const atom_space& a, const std::string& label, const symbolic_set& o) {
  const auto m = a.amin(o);
  std::string line = "AMin(" + label + ") = " + set_str(a, m);
  if (!m.indexed.is_finite()) line += " (infinite)";
  return line;
}

void print_amin(const atom_space& a) {
  std::cout << amin_line(a, "space", a.live()) << "\n";
  for (const auto& [name, sup] : a.supports()) {
    std::cout << amin_line(a, name, sup.set) << "\n";
  }
}

// Strict relations among the handles, covers only.  The handle list carries
// at most one class entry and nothing strictly precedes itself, so the
// class-to-class comparison the engine refuses to answer is vacuously false.
std::vector<std::pair<atom_ref, atom_ref>> handle_covers(const atom_space& a) {
  const auto hs = handles(a);
  auto less = [&](const atom_ref& p, const atom_ref& q) {
    if (p.k == atom_ref::kind::indexed_class && q.k == atom_ref::kind::indexed_class) return false;
    return a.strictly_less(p, q);
  };
  std::vector<std::pair<atom_ref, atom_ref>> out;
  for (const auto& p : hs) {
    for (const auto& q : hs) {
      if (!less(p, q)) continue;
      bool covered = true;
      for (const auto& r : hs) {
        if (less(p, r) && less(r, q)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(p, q);
    }
  }
  return out;
}

void print_order(const atom_space& a) {
  std::cout << "order:\n";
  const auto covers = handle_covers(a);
  if (covers.empty()) {
    std::cout << "  (discrete)\n";
    return;
  }
  for (const auto& [p, q] : covers) {
    std::cout << "  " << a.display(p) << " < " << a.display(q) << "\n";
  }
}

void print_dot(const atom_space& a) {
  if (!a.symbolic()) {
    std::cout << atomspec::order::to_dot(a.finite_space().specialization_preorder(), "order");
    return;
  }
  std::cout << "digraph \"order\" {\n  rankdir=BT;\n";
  for (const auto& h : handles(a)) {
    std::cout << "  \"" << a.display(h) << "\"";
    if (h.k == atom_ref::kind::indexed_class) std::cout << " [shape=box]";
    std::cout << ";\n";
  }
  for (const auto& [p, q] : handle_covers(a)) {
    std::cout << "  \"" << a.display(p) << "\" -> \"" << a.display(q) << "\";\n";
  }
  std::cout << "}\n";
}

int check_verdict(const atom_space& a, const std::string& what) {
  if (what == "alexandroff") {
    const auto r = a.check_alexandroff();
    if (r.alexandroff) {
      std::cout << "true\n";
    } else if (r.witness_point) {
      std::cout << "false, witness " << *r.witness_point << "\n";
    } else {
      std::cout << "false\n";
    }
    return 0;
  }
  // kolmogorov: hunt for an indistinguishable pair among the handles.
  if (a.is_kolmogorov()) {
    std::cout << "true\n";
    return 0;
  }
  std::vector<atom_ref> pts;
  for (const auto& n : a.live().named) pts.push_back(atom_ref::named_point(n));
  if (a.symbolic()) {
    for (long i : a.probes(a.live().indexed)) pts.push_back(atom_ref::indexed_point(i));
  }
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      if (!(p == q) && a.leq(p, q) && a.leq(q, p)) {
        std::cout << "false, witness " << a.display(p) << " ~ " << a.display(q) << "\n";
        return 0;
      }
    }
  }
  std::cout << "false\n";
  return 0;
}

struct lambda_row {
  std::string point;
  symbolic_set set;
  bool open = false;
};

// The minimal open of an indexed point always contains that point, so no one
// set can stand for the whole class; sample the class at its probe indices.
std::vector<lambda_row> lambda_rows(const atom_space& a) {
  std::vector<lambda_row> rows;
  for (const auto& e : a.lambda_open_report(a.live())) {
    if (e.point.k == atom_ref::kind::indexed_class) {
      for (long i : a.probes(a.live().indexed)) {
        const auto p = atom_ref::indexed_point(i);
        rows.push_back({a.display(p), a.lambda(p), e.open});
      }
    } else {
      rows.push_back({a.display(e.point), a.lambda(e.point), e.open});
    }
  }
  return rows;
}

json lambda_table(const atom_space& a) {
  json rows = json::array();
  for (const auto& r : lambda_rows(a)) {
    rows.push_back({{"point", r.point},
                    {"open", r.open},
                    {"set", json::parse(atomspec::json_io::set_json(a, r.set))}});
  }
  return rows;
}

int run_space(const options& o) {
  auto a = load_space(o);
  if (o.complete) a = a.completed();
  if (!o.check.empty()) return check_verdict(a, o.check);
  if (o.dot) {
    print_dot(a);
    return 0;
  }

  const auto alex = a.check_alexandroff();
  if (o.json_out) {
    json out;
    out["kind"] = a.symbolic() ? "symbolic" : "finite";
    out["live"] = json::parse(atomspec::json_io::set_json(a, a.live()));
    out["kolmogorov"] = a.is_kolmogorov();
    out["alexandroff"] = alex.alexandroff;
    if (alex.witness_point) out["alexandroff_witness"] = *alex.witness_point;
    out["minimal_opens"] = lambda_table(a);
    json covers = json::array();
    for (const auto& [p, q] : handle_covers(a)) {
      covers.push_back({a.display(p), a.display(q)});
    }
    out["order"] = covers;
    json sups = json::object();
    for (const auto& [name, sup] : a.supports()) {
      json row;
      row["set"] = json::parse(atomspec::json_io::set_json(a, sup.set));
      row["noetherian"] = sup.noetherian;
      if (o.amin) row["amin"] = json::parse(atomspec::json_io::set_json(a, a.amin(sup.set)));
      sups[name] = row;
    }
    out["supports"] = sups;
    if (o.amin) out["amin"] = json::parse(atomspec::json_io::set_json(a, a.amin(a.live())));
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (o.order_only) {
    print_order(a);
    return 0;
  }
  std::cout << "space: " << (a.symbolic() ? "symbolic" : "finite") << "\n";
  std::cout << "live: " << set_str(a, a.live()) << "\n";
  print_order(a);
  std::cout << "kolmogorov: " << (a.is_kolmogorov() ? "true" : "false") << "\n";
  std::cout << "alexandroff: " << (alex.alexandroff ? "true" : "false");
  if (alex.witness_point) std::cout << ", witness " << *alex.witness_point;
  std::cout << "\n";
  std::cout << "minimal opens:\n";
  for (const auto& r : lambda_rows(a)) {
    std::cout << "  " << r.point << ": " << set_str(a, r.set)
              << (r.open ? "" : " (not open)") << "\n";
  }
  if (!a.supports().empty()) {
    std::cout << "supports:\n";
    for (const auto& [name, sup] : a.supports()) {
      std::cout << "  " << name << ": " << set_str(a, sup.set)
                << (sup.noetherian ? " (noetherian)" : "") << "\n";
    }
  }
  if (o.amin) print_amin(a);
  return 0;
}

int run_filtration(const options& o) {
  auto a = load_space(o);
  if (o.complete) a = a.completed();
  const auto f = atomspec::filtration::gabriel_filtration(a, o.stage_cap);
  const auto rep = atomspec::filtration::verify_theorems(a, o.stage_cap);

  if (o.json_out) {
    json out;
    out["filtration"] = json::parse(atomspec::json_io::filtration_json(a, f));
    out["theorems"] = json::parse(atomspec::json_io::theorem_json(rep));
    if (o.amin) out["amin"] = json::parse(atomspec::json_io::set_json(a, a.amin(a.live())));
    std::cout << out.dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
  }

  std::cout << "stages:\n";
  for (std::size_t k = 0; k < f.stages.size(); ++k) {
    std::cout << "  " << k << ": " << set_str(a, f.stages[k]) << "\n";
  }
  if (f.stalled()) {
    std::cout << "residual (>= omega): " << set_str(a, f.residual)
              << (f.cap_hit ? " (stage cap hit)" : "") << "\n";
  }

  std::cout << "points:\n";
  for (const auto& h : handles(a)) {
    const auto stage = atomspec::filtration::stage_of(f, h);
    const auto gk = atomspec::filtration::gkdim_point(f, h);
    const std::string dim = stage.is_finite()
                                ? atomspec::filtration::dim_point(a, f, h).str()
                                : dim_value::none().str();
    const auto ad = atomspec::filtration::adim_point(a, h);
    std::cout << "  " << a.display(h) << ": stage " << stage.str() << ", gkdim " << gk.str()
              << ", dim " << dim << ", adim " << ad.str() << "\n";
  }
  if (!a.supports().empty()) {
    std::cout << "supports:\n";
    for (const auto& [name, sup] : a.supports()) {
      std::cout << "  " << name << ": gkdim "
                << atomspec::filtration::gkdim_open(f, sup.set).str() << ", dim "
                << atomspec::filtration::dim_open(a, f, sup.set).str() << ", adim "
                << atomspec::filtration::adim_open(a, sup.set).str() << "\n";
    }
  }
  std::cout << "theorems:\n";
  std::cout << "  kolmogorov: " << (rep.kolmogorov ? "true" : "false") << "\n";
  std::cout << "  alexandroff: " << (rep.alexandroff ? "true" : "false");
  if (rep.alexandroff_witness) std::cout << " (witness " << *rep.alexandroff_witness << ")";
  std::cout << "\n";
  for (const auto& item : rep.items) {
    std::cout << "  " << item.name << ": ";
    if (!item.applicable) {
      std::cout << "n/a";
    } else {
      std::cout << (item.pass ? "pass" : "FAIL");
    }
    if (!item.witnesses.empty()) {
      std::cout << " [";
      for (std::size_t i = 0; i < item.witnesses.size(); ++i) {
        std::cout << (i ? "; " : "") << item.witnesses[i];
      }
      std::cout << "]";
    }
    if (!item.note.empty()) std::cout << " (" << item.note << ")";
    std::cout << "\n";
  }
  if (o.amin) print_amin(a);
  return rep.all_pass() ? 0 : 1;
}

std::string classify_line(const atomspec::pid::module_analysis& a) {
  std::vector<std::string> parts;
  if (a.simple) parts.push_back("simple");
  parts.push_back(a.monoform ? "monoform" : "not monoform");
  parts.push_back(a.compressible ? "compressible" : "not compressible");
  parts.push_back(a.critical ? atomspec::pid::critical_str(a.critical) : "not critical");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

// Brute-force cross-check, where the exhaustive check is defined: finite
// torsion modules over the integers of order <= 256.
int oracle_check(const atomspec::json_io::module_variant& m,
                 const atomspec::pid::module_analysis& a) {
  const auto* zm = std::get_if<atomspec::pid::presented_module<atomspec::pid::integer_ring>>(&m);
  if (!zm) {
    std::cout << "oracle: skipped (exhaustive check is specific to integer modules)\n";
    return 0;
  }
  if (a.free_rank > 0) {
    std::cout << "oracle: skipped (module is not torsion)\n";
    return 0;
  }
  long order = 1;
  for (const auto& t : a.torsion) {
    order *= std::stol(t);
    if (order > 256) {
      std::cout << "oracle: skipped (order exceeds 256)\n";
      return 0;
    }
  }
  const bool brute = atomspec::pid::monoform_bruteforce(*zm);
  if (brute == a.monoform) {
    std::cout << "oracle: agree (monoform " << (brute ? "true" : "false") << ")\n";
    return 0;
  }
  std::cout << "oracle: DISAGREE (classify says " << (a.monoform ? "true" : "false")
            << ", exhaustive check says " << (brute ? "true" : "false") << ")\n";
  return 1;
}

int run_ring(const options& o) {
  if (o.input.empty()) throw input_error("ring needs a module file");
  const auto m = atomspec::json_io::parse_module(atomspec::json_io::read_file(o.input));
  const auto a = std::visit([](const auto& mod) { return atomspec::pid::analyze(mod); }, m);

  if (o.json_out) {
    std::cout << atomspec::json_io::analysis_json(a) << "\n";
    return o.oracle ? oracle_check(m, a) : 0;
  }
  if (o.classify) {
    std::cout << classify_line(a) << "\n";
    return o.oracle ? oracle_check(m, a) : 0;
  }

  std::cout << "ring: " << a.ring_name << "\n";
  std::cout << "generators: " << a.generators << "\n";
  std::cout << "free rank: " << a.free_rank << "\n";
  std::cout << "invariant factors: ";
  if (a.torsion.empty()) {
    std::cout << "(none)";
  } else {
    for (std::size_t i = 0; i < a.torsion.size(); ++i) std::cout << (i ? ", " : "") << a.torsion[i];
  }
  std::cout << "\n";
  std::cout << "zero: " << (a.zero ? "true" : "false") << "\n";
  std::cout << "gkdim: " << a.gkdim << "\n";
  std::cout << "kdim: " << a.kdim << "\n";
  std::cout << "dim: " << a.dim.str() << "\n";
  std::cout << "adim: " << a.adim.str() << "\n";
  std::cout << "asupp: " << a.asupp_str << "\n";
  std::cout << "aass: " << a.aass_str << "\n";
  std::cout << "amin: " << a.amin_str << "\n";
  std::cout << "lambda: " << a.lambda_str << "\n";
  std::cout << "simple: " << (a.simple ? "true" : "false") << "\n";
  std::cout << "monoform: " << (a.monoform ? "true" : "false") << "\n";
  std::cout << "compressible: " << (a.compressible ? "true" : "false") << "\n";
  std::cout << "critical: " << atomspec::pid::critical_str(a.critical) << "\n";
  return o.oracle ? oracle_check(m, a) : 0;
}

int run_verify(const std::string& scope, bool json_out) {
  const auto results = atomspec::verify::run(scope);
  bool all = true;
  if (json_out) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all = all && r.pass;
    }
    std::cout << json({{"criteria", rows}, {"pass", all}}).dump(2) << "\n";
    return all ? 0 : 1;
  }
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
    passed += r.pass ? 1 : 0;
  }
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atom-spectrum toolkit: finite and symbolic spectra, stage filtrations, module analysis"};
  app.require_subcommand(1);

  options space_opts, filt_opts, ring_opts;
  std::string verify_scope = "all";
  bool verify_json = false;

  auto* space = app.add_subcommand("space", "inspect a space: order, verdicts, minimal opens");
  space->add_option("input", space_opts.input, "model file (order, space, or schema JSON)");
  space->add_option("--builtin", space_opts.builtin, "grmod_kx, goodearl, spec_Z, spec_F2x");
  space->add_option("--check", space_opts.check, "print one verdict")
      ->check(CLI::IsMember({"alexandroff", "kolmogorov"}));
  space->add_flag("--json", space_opts.json_out, "JSON report");
  space->add_flag("--dot", space_opts.dot, "DOT graph of the specialization order");
  space->add_flag("--order", space_opts.order_only, "only the specialization order");
  space->add_flag("--complete", space_opts.complete, "Alexandroff-complete the space first");
  space->add_flag("--amin", space_opts.amin, "minimal atoms of the space and each support");
  space->add_option("--max-points", space_opts.max_points, "finite model size limit");

  auto* filt = app.add_subcommand("filtration", "stage peeling, dimensions, theorem verdicts");
  filt->add_option("input", filt_opts.input, "model file (order, space, or schema JSON)");
  filt->add_option("--builtin", filt_opts.builtin, "grmod_kx, goodearl, spec_Z, spec_F2x");
  filt->add_flag("--json", filt_opts.json_out, "JSON report");
  filt->add_flag("--complete", filt_opts.complete, "Alexandroff-complete the space first");
  filt->add_flag("--amin", filt_opts.amin, "minimal atoms of the space and each support");
  filt->add_option("--stage-cap", filt_opts.stage_cap, "peeling stage limit");
  filt->add_option("--max-points", filt_opts.max_points, "finite model size limit");

  auto* ring = app.add_subcommand("ring", "analyze a presented module over Z or Fp[x]");
  ring->add_option("input", ring_opts.input, "module file")->required();
  ring->add_flag("--json", ring_opts.json_out, "JSON report");
  ring->add_flag("--classify", ring_opts.classify, "one-line classification");
  ring->add_flag("--oracle", ring_opts.oracle, "cross-check monoformity exhaustively");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("scope", verify_scope, "all, finite, symbolic, or ring")
      ->check(CLI::IsMember({"all", "finite", "symbolic", "ring"}));
  verify->add_flag("--json", verify_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (space->parsed()) return run_space(space_opts);
    if (filt->parsed()) return run_filtration(filt_opts);
    if (ring->parsed()) return run_ring(ring_opts);
    return run_verify(verify_scope, verify_json);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
