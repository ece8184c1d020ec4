#include "atomspec/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace atomspec::json_io {

using nlohmann::json;
using spectrum::atom_space;
using tailspace::index_domain;
using tailspace::index_set;
using tailspace::symbolic_set;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw input_error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw input_error(std::string(what) + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
  return j.get<long>();
}

order::preorder preorder_of(const json& j, std::size_t max_points) {
  auto points = string_list(field(j, "points"), "\"points\"");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : field(j, "leq")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw input_error("\"leq\" entries must be [\"a\",\"b\"] pairs");
    }
    pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return order::preorder::from_generators(std::move(points), pairs, max_points);
}

finspace::fin_space space_of(const json& j, std::size_t max_points) {
  auto points = string_list(field(j, "points"), "\"points\"");
  std::vector<std::string> names = points;
  auto name_index = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == n) return i;
    }
    throw input_error("\"subbasis\" mentions unknown point " + n);
  };
  std::vector<finspace::subset> subbasis;
  for (const auto& e : field(j, "subbasis")) {
    finspace::subset m = 0;
    for (const auto& n : string_list(e, "subbasis entry")) {
      m |= finspace::subset(1) << name_index(n);
    }
    subbasis.push_back(m);
  }
  return finspace::fin_space::generate(std::move(points), subbasis, max_points);
}

tailspace::tail_schema schema_of(const json& j) {
  auto named = string_list(field(j, "named"), "\"named\"");
  const auto dom_str = field(j, "domain").get<std::string>();
  index_domain dom;
  if (dom_str == "Z") {
    dom = index_domain::integers;
  } else if (dom_str == "N") {
    dom = index_domain::naturals;
  } else {
    throw input_error("\"domain\" must be \"Z\" or \"N\"");
  }
  const auto family = field(j, "family").get<std::string>();
  std::vector<tailspace::descriptor> descriptors;
  for (const auto& d : field(j, "descriptors")) {
    const auto kind = field(d, "kind").get<std::string>();
    tailspace::descriptor out;
    if (kind == "singletons") {
      out.k = tailspace::descriptor::kind::singletons;
    } else if (kind == "tail") {
      out.k = tailspace::descriptor::kind::tail;
      out.point = field(d, "point").get<std::string>();
      const auto dir = field(d, "dir").get<std::string>();
      if (dir == "geq") {
        out.dir = tailspace::tail_dir::up;
      } else if (dir == "leq") {
        out.dir = tailspace::tail_dir::down;
      } else {
        throw input_error("tail \"dir\" must be \"geq\" or \"leq\"");
      }
    } else if (kind == "cone") {
      out.k = tailspace::descriptor::kind::cone;
      out.point = field(d, "point").get<std::string>();
    } else if (kind == "point") {
      out.k = tailspace::descriptor::kind::point;
      out.point = field(d, "point").get<std::string>();
    } else {
      throw input_error("unknown descriptor kind \"" + kind + "\"");
    }
    descriptors.push_back(std::move(out));
  }
  return tailspace::tail_schema::make(std::move(named), dom, family, std::move(descriptors));
}

index_set index_set_of(const json& j, index_domain dom) {
  const auto kind = field(j, "kind").get<std::string>();
  if (kind == "empty") return index_set::empty_set();
  if (kind == "all") return index_set::all(dom);
  if (kind == "finite") {
    std::vector<long> elems;
    for (const auto& v : field(j, "elements")) elems.push_back(integer(v, "\"elements\" entry"));
    return index_set::finite(std::move(elems));
  }
  if (kind == "cofinite") {
    std::vector<long> ex;
    for (const auto& v : field(j, "excluded")) ex.push_back(integer(v, "\"excluded\" entry"));
    return index_set::cofinite(ex, dom);
  }
  if (kind == "tail") {
    const long from = integer(field(j, "from"), "\"from\"");
    const auto dir = field(j, "dir").get<std::string>();
    index_set t;
    if (dir == "geq") {
      t = index_set::up_tail(from);
    } else if (dir == "leq") {
      t = index_set::down_tail(from);
    } else {
      throw input_error("tail \"dir\" must be \"geq\" or \"leq\"");
    }
    if (dom == index_domain::naturals) t = t.intersect(index_set::all(dom));
    return t;
  }
  throw input_error("unknown index set kind \"" + kind + "\"");
}

symbolic_set symbolic_set_of(const json& j, index_domain dom) {
  symbolic_set s;
  if (j.is_array()) {
    // Plain name list, the finite-space form.
    return symbolic_set::of_named(string_list(j, "point set"));
  }
  if (j.contains("named")) s = symbolic_set::of_named(string_list(j.at("named"), "\"named\""));
  if (j.contains("indexed")) s.indexed = index_set_of(j.at("indexed"), dom);
  return s;
}

atom_space::support_list supports_of(const json& j, bool symbolic, index_domain dom) {
  atom_space::support_list out;
  if (!j.is_object()) throw input_error("\"supports\" must be an object");
  for (const auto& [name, entry] : j.items()) {
    atom_space::support_entry e;
    if (symbolic) {
      e.set = symbolic_set_of(field(entry, "set"), dom);
    } else {
      e.set = symbolic_set::of_named(string_list(field(entry, "set"), "support set"));
    }
    if (entry.contains("noetherian")) e.noetherian = entry.at("noetherian").get<bool>();
    out.emplace_back(name, std::move(e));
  }
  return out;
}

}  // namespace

order::preorder parse_preorder(const std::string& text, std::size_t max_points) {
  return preorder_of(parse_text(text), max_points);
}

finspace::fin_space parse_space(const std::string& text, std::size_t max_points) {
  return space_of(parse_text(text), max_points);
}

tailspace::tail_schema parse_schema(const std::string& text) {
  return schema_of(parse_text(text));
}

spectrum::atom_space parse_model(const std::string& text, std::size_t max_points) {
  const json j = parse_text(text);
  if (j.contains("descriptors")) {
    auto schema = schema_of(j);
    atom_space::support_list sup;
    if (j.contains("supports")) sup = supports_of(j.at("supports"), true, schema.domain());
    return atom_space::from_schema(std::move(schema), std::move(sup));
  }
  if (j.contains("subbasis")) {
    auto space = space_of(j, max_points);
    atom_space::support_list sup;
    if (j.contains("supports")) {
      sup = supports_of(j.at("supports"), false, index_domain::naturals);
    }
    return atom_space::from_finite(std::move(space), std::move(sup));
  }
  if (j.contains("leq")) {
    auto space = finspace::fin_space::alexandroff(preorder_of(j, max_points));
    atom_space::support_list sup;
    if (j.contains("supports")) {
      sup = supports_of(j.at("supports"), false, index_domain::naturals);
    }
    return atom_space::from_finite(std::move(space), std::move(sup));
  }
  throw input_error("not a model file: expected \"leq\", \"subbasis\", or \"descriptors\"");
}

module_variant parse_module(const std::string& text) {
  const json j = parse_text(text);
  const auto& ring_j = field(j, "ring");
  const long gens = integer(field(j, "generators"), "\"generators\"");
  if (gens < 0) throw input_error("\"generators\" must be nonnegative");
  const auto& rel = field(j, "relations");
  if (!rel.is_array() || rel.size() != static_cast<std::size_t>(gens)) {
    throw input_error("\"relations\" must have one row per generator");
  }
  std::size_t cols = 0;
  for (const auto& row : rel) {
    if (!row.is_array()) throw input_error("\"relations\" rows must be arrays");
    if (&row == &rel[0]) cols = row.size();
    if (row.size() != cols) throw input_error("\"relations\" rows must have equal length");
  }

  if (ring_j.is_string() && ring_j.get<std::string>() == "Z") {
    const pid::integer_ring ring;
    std::vector<std::vector<mpz_class>> columns(cols, std::vector<mpz_class>(gens));
    for (std::size_t i = 0; i < static_cast<std::size_t>(gens); ++i) {
      for (std::size_t c = 0; c < cols; ++c) {
        columns[c][i] = integer(rel[i][c], "relation entry");
      }
    }
    return pid::presented_module<pid::integer_ring>::make(ring, gens, std::move(columns));
  }
  if (ring_j.is_object() && ring_j.contains("Fp")) {
    const pid::fp_poly_ring ring(integer(ring_j.at("Fp"), "\"Fp\""));
    std::vector<std::vector<pid::fp_poly_ring::elem>> columns(
        cols, std::vector<pid::fp_poly_ring::elem>(gens));
    for (std::size_t i = 0; i < static_cast<std::size_t>(gens); ++i) {
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& e = rel[i][c];
        if (e.is_number_integer()) {
          columns[c][i] = ring.from_long(e.get<long>());
        } else if (e.is_array()) {
          std::vector<long> coeffs;
          for (const auto& v : e) coeffs.push_back(integer(v, "coefficient"));
          columns[c][i] = ring.from_coeffs(std::move(coeffs));
        } else {
          throw input_error("polynomial entries must be integers or coefficient arrays");
        }
      }
    }
    return pid::presented_module<pid::fp_poly_ring>::make(ring, gens, std::move(columns));
  }
  throw input_error("\"ring\" must be \"Z\" or {\"Fp\": p}");
}

namespace {

json index_set_json(const index_set& s, index_domain dom) {
  if (s.empty()) return {{"kind", "empty"}};
  if (s == index_set::all(dom)) return {{"kind", "all"}};
  if (s.is_finite()) return {{"kind", "finite"}, {"elements", s.finite_elements()}};
  const auto comp = s.complement(dom);
  if (comp.is_finite()) return {{"kind", "cofinite"}, {"excluded", comp.finite_elements()}};
  if (const auto hi = s.max_element(); hi && s == index_set::down_tail(*hi)) {
    return {{"kind", "tail"}, {"dir", "leq"}, {"from", *hi}};
  }
  if (const auto lo = s.min_element(); lo && s == index_set::up_tail(*lo)) {
    return {{"kind", "tail"}, {"dir", "geq"}, {"from", *lo}};
  }
  // General normal form: tails on either side of an explicit window.
  json out{{"kind", "pieces"}, {"window", s.window_members()}};
  if (s.eventually_below()) out["below_upto"] = s.window_lo() - 1;
  if (s.eventually_above()) out["above_from"] = s.window_hi() + 1;
  return out;
}

json set_json_impl(const atom_space& a, const symbolic_set& s) {
  if (!a.symbolic()) {
    json names = json::array();
    const auto m = a.mask_of(s);
    for (std::size_t i = 0; i < a.finite_space().size(); ++i) {
      if (m >> i & 1u) names.push_back(a.finite_space().point_name(i));
    }
    return names;
  }
  return {{"named", s.named}, {"indexed", index_set_json(s.indexed, a.schema().domain())}};
}

json dim_json(const filtration::dim_value& d) { return d.str(); }

}  // namespace

std::string set_json(const atom_space& a, const symbolic_set& s) {
  return set_json_impl(a, s).dump(2);
}

std::string filtration_json(const atom_space& a, const filtration::filtration_result& f) {
  json stages = json::array();
  for (const auto& s : f.stages) stages.push_back(set_json_impl(a, s));
  json points = json::array();
  std::vector<spectrum::atom_ref> handles;
  for (const auto& nm : a.live().named) handles.push_back(spectrum::atom_ref::named_point(nm));
  if (a.symbolic() && !a.live().indexed.empty()) {
    handles.push_back(spectrum::atom_ref::whole_class());
  }
  for (const auto& p : handles) {
    const auto st = filtration::stage_of(f, p);
    json row{{"point", a.display(p)},
             {"gkdim", dim_json(st)},
             {"adim", dim_json(filtration::adim_point(a, p))}};
    row["dim"] =
        st.is_finite() ? dim_json(filtration::dim_point(a, f, p)) : json("does-not-exist");
    points.push_back(std::move(row));
  }
  return json{{"stages", stages},
              {"residual", set_json_impl(a, f.residual)},
              {"cap_hit", f.cap_hit},
              {"points", points}}
      .dump(2);
}

std::string theorem_json(const filtration::theorem_report& r) {
  json items = json::array();
  for (const auto& it : r.items) {
    items.push_back({{"name", it.name},
                     {"applicable", it.applicable},
                     {"pass", it.pass},
                     {"note", it.note},
                     {"witnesses", it.witnesses}});
  }
  json out{{"kolmogorov", r.kolmogorov},
           {"alexandroff", r.alexandroff},
           {"items", items},
           {"all_pass", r.all_pass()}};
  if (r.alexandroff_witness) out["alexandroff_witness"] = *r.alexandroff_witness;
  return out.dump(2);
}

std::string analysis_json(const pid::module_analysis& a) {
  json out{{"ring", a.ring_name},
           {"generators", a.generators},
           {"free_rank", a.free_rank},
           {"torsion", a.torsion},
           {"zero", a.zero},
           {"gkdim", a.gkdim},
           {"kdim", a.kdim},
           {"dim", a.dim.str()},
           {"adim", a.adim.str()},
           {"asupp", a.asupp_str},
           {"aass", a.aass_str},
           {"amin", a.amin_str},
           {"lambda", a.lambda_str},
           {"simple", a.simple},
           {"monoform", a.monoform},
           {"compressible", a.compressible}};
  out["critical"] = a.critical ? json(*a.critical) : json(nullptr);
  out["atomic_critical"] = a.atomic_critical ? json(*a.atomic_critical) : json(nullptr);
  return out.dump(2);
}

}  // namespace atomspec::json_io
