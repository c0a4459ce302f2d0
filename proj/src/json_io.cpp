#include "orbitkit/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace orbitkit {

namespace {

constexpr long long kJsonIntMax = 1LL << 53;

}  // namespace

Json int_to_json(const Int& v) {
  if (int_abs(v) < kJsonIntMax) return Json(static_cast<long long>(v));
  return Json(v.str());
}

Json rat_to_json(const Rat& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return int_to_json(boost::multiprecision::numerator(v));
  return Json(to_string(v));
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw JsonFormatError("expected an integer");
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }
  throw JsonFormatError("expected an exact number");
}

Json ring_to_json(const Ring& r) { return Json(r.label()); }

Ring ring_from_json(const Json& j) {
  if (j.is_object() && j.contains("GF")) return Ring::GF(j.at("GF").get<long>());
  if (!j.is_string()) throw JsonFormatError("ring must be \"Z\", \"Q\", or \"GF(p)\"");
  std::string s = j.get<std::string>();
  if (s == "Z") return Ring::Z();
  if (s == "Q") return Ring::Q();
  if (s.rfind("GF(", 0) == 0 && s.back() == ')')
    return Ring::GF(std::stol(s.substr(3, s.size() - 4)));
  throw JsonFormatError("ring must be \"Z\", \"Q\", or \"GF(p)\"");
}

FiniteGroup group_from_json(const Json& j, int order_cap) {
  if (j.contains("order_cap")) order_cap = j.at("order_cap").get<int>();
  if (j.contains("preset")) {
    std::string fam = j.at("preset").get<std::string>();
    if (j.contains("n")) return group_preset(fam, j.at("n").get<int>(), order_cap);
    auto parsed = parse_preset_label(fam);
    if (!parsed) throw JsonFormatError("cannot parse preset label: " + fam);
    return group_preset(parsed->first, parsed->second, order_cap);
  }
  if (!j.contains("degree") || !j.contains("generators"))
    throw JsonFormatError("group needs either a preset or degree + generators");
  std::vector<Perm> gens;
  for (const Json& p : j.at("generators")) gens.push_back(p.get<Perm>());
  FiniteGroup g = group_from_generators(j.at("degree").get<int>(), gens, order_cap);
  if (j.contains("name")) g.name = j.at("name").get<std::string>();
  return g;
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name;
  j["order"] = g.order;
  j["degree"] = g.degree;
  Json gens = Json::array();
  for (int e : g.gen_elems) gens.push_back(g.element_perm[e]);
  j["generators"] = gens;
  return j;
}

Json lattice_to_json(const FiniteGroup& g, const SubgroupLattice& lat) {
  Json j;
  j["group"] = g.name;
  j["order"] = g.order;
  Json subs = Json::array();
  for (size_t s = 0; s < lat.members.size(); ++s) {
    Json e;
    e["index"] = s;
    e["order"] = lat.sub_order[s];
    e["class"] = lat.class_of[s];
    e["members"] = lat.members[s];
    e["normalizer"] = lat.normalizer[s];
    subs.push_back(e);
  }
  j["subgroups"] = subs;
  Json classes = Json::array();
  for (int c = 0; c < lat.num_classes; ++c) {
    Json e;
    e["name"] = lat.class_name[c];
    e["order"] = lat.sub_order[lat.class_rep[c]];
    e["size"] = lat.class_members[c].size();
    e["weyl"] = lat.weyl[c];
    e["representative"] = lat.class_rep[c];
    classes.push_back(e);
  }
  j["classes"] = classes;
  Json mob = Json::array();
  for (size_t s = 0; s < lat.members.size(); ++s)
    for (size_t t = 0; t < lat.members.size(); ++t)
      if (lat.leq[s][t]) mob.push_back(Json::array({s, t, lat.mobius_table[s][t]}));
  j["mobius"] = mob;
  return j;
}

Json marks_to_json(const BurnsideContext& ctx) {
  Json j;
  j["classes"] = ctx.lattice().class_name;
  j["marks"] = ctx.marks();
  return j;
}

namespace {

ConcreteGSet gset_from_act_table(const FiniteGroup& g, const Json& act) {
  ConcreteGSet x;
  auto table = act.get<std::vector<std::vector<int>>>();
  if (table.size() != static_cast<size_t>(g.order))
    throw JsonFormatError("act table needs one row per group element");
  x.size = table.empty() ? 0 : static_cast<int>(table[0].size());
  x.act.reserve(static_cast<size_t>(g.order) * x.size);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != x.size)
      throw JsonFormatError("act table rows must have equal length");
    for (int v : row) x.act.push_back(v);
  }
  validate_gset(g, x);
  return x;
}

}  // namespace

ConcreteGSet gset_from_json(const FiniteGroup& g, const SubgroupLattice& lat, const Json& j) {
  if (j.contains("act")) return gset_from_act_table(g, j.at("act"));
  if (j.contains("orbits")) {
    ConcreteGSet x = trivial_gset(g, 0);
    for (const Json& name : j.at("orbits")) {
      int c = lat.class_by_name(name.get<std::string>());
      if (c < 0) throw JsonFormatError("unknown subgroup class: " + name.get<std::string>());
      x = disjoint_union_gset(g, x, coset_gset(g, lat.members[lat.class_rep[c]]));
    }
    return x;
  }
  throw JsonFormatError("gset needs an act table or an orbit list");
}

Json gset_to_json(const ConcreteGSet& x) {
  Json j;
  Json act = Json::array();
  size_t order = x.size == 0 ? 0 : x.act.size() / x.size;
  for (size_t e = 0; e < order; ++e) {
    Json row = Json::array();
    for (int p = 0; p < x.size; ++p) row.push_back(x.act[e * x.size + p]);
    act.push_back(row);
  }
  j["size"] = x.size;
  j["act"] = act;
  return j;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(rat_to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw JsonFormatError("matrix row count mismatch");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw JsonFormatError("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rat_from_json(row.at(c));
  }
  return m;
}

SpecialComplex complex_from_json(const FiniteGroup& g, const SubgroupLattice& lat, const Json& j) {
  Ring ring = ring_from_json(j.at("ring"));
  bool augmented = j.value("augmented", false);
  std::vector<ConcreteGSet> bases;
  for (const Json& b : j.at("bases")) bases.push_back(gset_from_json(g, lat, b));
  std::vector<RatMatrix> boundaries;
  const Json& bds = j.at("boundaries");
  if (bds.size() + 1 != bases.size())
    throw JsonFormatError("need one boundary matrix per positive degree");
  for (size_t i = 1; i < bases.size(); ++i)
    boundaries.push_back(matrix_from_json(bds.at(i - 1), bases[i - 1].size, bases[i].size));
  return make_special_complex(g, lat, ring, std::move(bases), std::move(boundaries), augmented);
}

Json complex_to_json(const SpecialComplex& c) {
  Json j;
  j["ring"] = ring_to_json(c.ring);
  j["augmented"] = c.augmented;
  Json bases = Json::array();
  for (const ConcreteGSet& b : c.basis) bases.push_back(gset_to_json(b));
  j["bases"] = bases;
  Json bds = Json::array();
  for (const RatMatrix& b : c.boundaries) bds.push_back(matrix_to_json(b));
  j["boundaries"] = bds;
  return j;
}

Json plain_complex_to_json(const PlainComplex& c) {
  Json j;
  j["ring"] = ring_to_json(c.ring);
  j["dims"] = c.dims;
  Json bds = Json::array();
  for (const RatMatrix& b : c.boundaries) bds.push_back(matrix_to_json(b));
  j["boundaries"] = bds;
  return j;
}

Json homology_to_json(const std::vector<HomologySummary>& h) {
  Json out = Json::array();
  for (size_t i = 0; i < h.size(); ++i) {
    Json e;
    e["degree"] = i;
    e["betti"] = h[i].betti;
    Json tor = Json::array();
    for (const Int& t : h[i].torsion) tor.push_back(int_to_json(t));
    e["torsion"] = tor;
    out.push_back(e);
  }
  return out;
}

GSimplicialComplex simplicial_from_json(const FiniteGroup& g, const Json& j) {
  int n = j.at("vertices").get<int>();
  ConcreteGSet verts;
  if (j.contains("act")) {
    verts = gset_from_act_table(g, j.at("act"));
  } else {
    std::vector<Perm> action;
    for (const Json& p : j.at("action")) action.push_back(p.get<Perm>());
    verts = gset_from_generator_action(g, n, action);
  }
  if (verts.size != n) throw JsonFormatError("vertex count does not match the action");
  auto simplices = j.at("simplices").get<std::vector<std::vector<int>>>();
  return make_complex(g, verts, simplices);
}

Json simplicial_to_json(const GSimplicialComplex& k) {
  Json j;
  j["vertices"] = k.vertices.size;
  // the vertex action is emitted for every group element; a round-trip
  // through "action" entries per generator needs the group alongside, so the
  // full table is included for self-containedness
  j["act"] = gset_to_json(k.vertices)["act"];
  Json simplices = Json::array();
  for (int d = 0; d <= k.top_dim(); ++d)
    for (const auto& s : k.simplices[d]) simplices.push_back(s);
  j["simplices"] = simplices;
  return j;
}

Json orbit_module_to_json(const OrbitCategory& cat, const OrbitModule& m) {
  const SubgroupLattice& lat = cat.lattice();
  Json j;
  j["ring"] = ring_to_json(m.ring);
  j["family"] = cat.family().label;
  Json objects = Json::array();
  for (int v = 0; v < cat.objects(); ++v) {
    Json e;
    e["class"] = lat.class_name[cat.object_class(v)];
    e["rank"] = m.rank[v];
    objects.push_back(e);
  }
  j["objects"] = objects;
  Json mors = Json::array();
  for (int v = 0; v < cat.objects(); ++v)
    for (int k = 0; k < cat.objects(); ++k)
      for (int mi = 0; mi < cat.mor_count(v, k); ++mi) {
        Json e;
        e["source"] = lat.class_name[cat.object_class(v)];
        e["target"] = lat.class_name[cat.object_class(k)];
        e["coset_rep"] = cat.mor_reps(v, k)[mi];
        e["matrix"] = matrix_to_json(m.mats[v][k][mi]);
        mors.push_back(e);
      }
  j["morphisms"] = mors;
  return j;
}

Json split_certificate_to_json(const SplitCertificate& cert) {
  Json j;
  Json cb = Json::array(), sec = Json::array();
  for (const IntMatrix& b : cert.cycle_basis) cb.push_back(matrix_to_json(to_rat(b)));
  for (const IntMatrix& s : cert.section) sec.push_back(matrix_to_json(to_rat(s)));
  j["cycle_bases"] = cb;
  j["sections"] = sec;
  return j;
}

Json homotopy_certificate_to_json(const HomotopyCertificate& cert) {
  Json j;
  Json g = Json::array(), s = Json::array(), t = Json::array();
  for (const RatMatrix& m : cert.inverse.maps) g.push_back(matrix_to_json(m));
  for (const RatMatrix& m : cert.s) s.push_back(matrix_to_json(m));
  for (const RatMatrix& m : cert.t) t.push_back(matrix_to_json(m));
  j["inverse"] = g;
  j["s"] = s;
  j["t"] = t;
  return j;
}

Json resolving_certificate_to_json(const SubgroupLattice& lat, const ResolvingCertificate& cert) {
  Json j;
  if (cert.p) j["p"] = *cert.p;
  j["phi"] = class_function_to_json(lat, cert.phi);
  Json div = Json::array();
  for (const DivisibilityRecord& r : cert.divisibility) {
    Json e;
    e["class"] = lat.class_name[r.cls];
    e["value"] = int_to_json(r.value);
    e["modulus"] = r.modulus;
    div.push_back(e);
  }
  j["divisibility"] = div;
  Json van = Json::array();
  for (const VanishingRecord& r : cert.vanishing) {
    Json e;
    e["class"] = lat.class_name[r.cls];
    e["sum"] = int_to_json(r.sum);
    van.push_back(e);
  }
  j["vanishing"] = van;
  return j;
}

BurnsideElement parse_burnside_expr(const SubgroupLattice& lat, const std::string& expr) {
  BurnsideElement x{std::vector<Int>(lat.num_classes, Int(0))};
  size_t i = 0;
  auto skip_space = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  skip_space();
  if (i == expr.size()) throw JsonFormatError("empty Burnside expression");
  if (expr.compare(i, 1, "0") == 0 && i + 1 == expr.size()) return x;
  bool first = true;
  while (true) {
    skip_space();
    if (i == expr.size()) break;
    Int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      if (expr[i] == '-') sign = -1;
      ++i;
      skip_space();
    } else if (!first) {
      throw JsonFormatError("expected + or - between terms");
    }
    Int coeff = 1;
    if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
      size_t start = i;
      while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
      coeff = Int(expr.substr(start, i - start));
      if (i < expr.size() && expr[i] == '*') ++i;
      skip_space();
    }
    if (expr.compare(i, 3, "[G/") != 0)
      throw JsonFormatError("expected a [G/NAME] token in the Burnside expression");
    i += 3;
    size_t close = expr.find(']', i);
    if (close == std::string::npos) throw JsonFormatError("unclosed [G/NAME] token");
    std::string name = expr.substr(i, close - i);
    i = close + 1;
    int c = lat.class_by_name(name);
    if (c < 0) throw JsonFormatError("unknown subgroup class: " + name);
    x.coeff[c] += sign * coeff;
    first = false;
  }
  return x;
}

std::string burnside_to_string(const SubgroupLattice& lat, const BurnsideElement& x) {
  std::string out;
  for (int c = 0; c < lat.num_classes; ++c) {
    if (x.coeff[c] == 0) continue;
    Int a = x.coeff[c];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    Int mag = int_abs(a);
    if (mag != 1) out += mag.str();
    out += "[G/" + lat.class_name[c] + "]";
  }
  return out.empty() ? "0" : out;
}

SuperClassFunction parse_class_function(const SubgroupLattice& lat, const std::string& csv) {
  SuperClassFunction f{std::vector<Int>(lat.num_classes, Int(0))};
  size_t i = 0;
  for (int c = 0; c < lat.num_classes; ++c) {
    size_t comma = csv.find(',', i);
    std::string tok = csv.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char ch) { return std::isspace(ch); }),
              tok.end());
    if (tok.empty()) throw JsonFormatError("class function needs one value per class");
    f.value[c] = Int(tok);
    if (comma == std::string::npos) {
      if (c + 1 != lat.num_classes)
        throw JsonFormatError("class function needs one value per class");
      return f;
    }
    i = comma + 1;
  }
  throw JsonFormatError("too many values in the class function");
}

Json burnside_to_json(const SubgroupLattice& lat, const BurnsideElement& x) {
  Json j;
  j["classes"] = lat.class_name;
  Json coeff = Json::array();
  for (const Int& c : x.coeff) coeff.push_back(int_to_json(c));
  j["coefficients"] = coeff;
  j["expression"] = burnside_to_string(lat, x);
  return j;
}

Json class_function_to_json(const SubgroupLattice& lat, const SuperClassFunction& f) {
  Json j;
  j["classes"] = lat.class_name;
  Json vals = Json::array();
  for (const Int& v : f.value) vals.push_back(int_to_json(v));
  j["values"] = vals;
  return j;
}

}  // namespace orbitkit
