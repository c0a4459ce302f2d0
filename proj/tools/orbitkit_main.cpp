// orbitkit: batch CLI for finite-group Burnside rings, mod-p resolving
// functions, orbit-category modules, and equivariant chain complexes.
//
// Exit codes: 0 success, 1 negative mathematical answer (not in image,
// not realizable, not split, not equivalent), 2 usage or input error,
// 3 internal consistency failure.

#include "orbitkit/classify.hpp"
#include "orbitkit/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>

using namespace orbitkit;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Options {
  std::string preset;
  std::string group_file;
  std::string input_file;
  std::string expr_x, expr_y, values, phi;
  std::string subgroup_name;
  std::string ring_label = "Z";
  long prime = 0;
  long long chi = 0;
  bool json = false;
  bool reduced = false;
  bool augmented = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

struct Session {
  FiniteGroup g;
  SubgroupLattice lat;
  std::optional<BurnsideContext> bc;

  BurnsideContext& burnside() {
    if (!bc) bc.emplace(g, lat);
    return *bc;
  }
};

Session load_session(const Options& opt) {
  Session s;
  if (!opt.preset.empty()) {
    auto parsed = parse_preset_label(opt.preset);
    if (!parsed) throw JsonFormatError("cannot parse preset label: " + opt.preset);
    s.g = group_preset(parsed->first, parsed->second);
  } else if (!opt.group_file.empty()) {
    s.g = group_from_json(read_json_file(opt.group_file));
  } else {
    throw JsonFormatError("a group is required: --preset LABEL or --group FILE");
  }
  s.lat = subgroup_lattice(s.g);
  return s;
}

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int class_index_by_name(const SubgroupLattice& lat, const std::string& name) {
  int c = lat.class_by_name(name);
  if (c < 0) throw JsonFormatError("unknown subgroup class: " + name);
  return c;
}

// ---------------------------------------------------------------------- group

int cmd_group_info(const Options& opt) {
  Session s = load_session(opt);
  Json j = group_to_json(s.g);
  j["subgroups"] = s.lat.members.size();
  j["classes"] = s.lat.num_classes;
  std::string text = "group " + s.g.name + ": order " + std::to_string(s.g.order) + ", " +
                     std::to_string(s.lat.members.size()) + " subgroups in " +
                     std::to_string(s.lat.num_classes) + " classes\n";
  emit(opt, j, text);
  return kOk;
}

int cmd_group_lattice(const Options& opt) {
  Session s = load_session(opt);
  std::string text = "class  order  size  weyl\n";
  for (int c = 0; c < s.lat.num_classes; ++c) {
    text += s.lat.class_name[c] + "  " +
            std::to_string(s.lat.sub_order[s.lat.class_rep[c]]) + "  " +
            std::to_string(s.lat.class_members[c].size()) + "  " +
            std::to_string(s.lat.weyl[c]) + "\n";
  }
  emit(opt, lattice_to_json(s.g, s.lat), text);
  return kOk;
}

int cmd_marks(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  std::string text;
  for (int c = 0; c < bc.classes(); ++c) {
    text += s.lat.class_name[c] + ":";
    for (int d = 0; d < bc.classes(); ++d) text += " " + std::to_string(bc.marks()[c][d]);
    text += "\n";
  }
  emit(opt, marks_to_json(bc), text);
  return kOk;
}

int cmd_classify(const Options& opt) {
  Session s = load_session(opt);
  DressClassification dc = classify_group(s.g, s.lat, opt.prime);
  Json j;
  j["p"] = dc.p;
  Json hypo = Json::array();
  std::string names;
  for (int c : dc.hypoelementary) {
    hypo.push_back(s.lat.class_name[c]);
    names += (names.empty() ? "" : ", ") + s.lat.class_name[c];
  }
  j["hypoelementary_classes"] = hypo;
  j["gpq_primes"] = dc.gpq_primes;
  j["in_gp"] = dc.in_gp;
  std::string text = "p = " + std::to_string(dc.p) + "\nhypoelementary classes: " + names + "\n";
  text += "G_p^q holds for q in {";
  for (size_t i = 0; i < dc.gpq_primes.size(); ++i)
    text += (i ? ", " : "") + std::to_string(dc.gpq_primes[i]);
  text += "}\nin G_p: ";
  text += dc.in_gp ? "yes" : "no";
  text += "\n";
  emit(opt, j, text);
  return kOk;
}

// ------------------------------------------------------------------- burnside

int cmd_burnside_mul(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  BurnsideElement x = parse_burnside_expr(s.lat, opt.expr_x);
  BurnsideElement y = parse_burnside_expr(s.lat, opt.expr_y);
  BurnsideElement z = bc.mul(x, y);
  emit(opt, burnside_to_json(s.lat, z), burnside_to_string(s.lat, z) + "\n");
  return kOk;
}

int cmd_burnside_solve(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  SuperClassFunction v = parse_class_function(s.lat, opt.values);
  auto x = bc.rho_solve(v);
  if (!x) {
    Json j;
    j["in_image"] = false;
    emit(opt, j, "not in the image of the mark homomorphism\n");
    return kNegative;
  }
  Json j = burnside_to_json(s.lat, *x);
  j["in_image"] = true;
  emit(opt, j, burnside_to_string(s.lat, *x) + "\n");
  return kOk;
}

int cmd_burnside_conlon(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  BurnsideElement x = parse_burnside_expr(s.lat, opt.expr_x);
  BurnsideElement y = parse_burnside_expr(s.lat, opt.expr_y);
  bool equal = bc.conlon_equal(x, y, opt.prime);
  Json j;
  j["p"] = opt.prime;
  j["equal"] = equal;
  Json hypo = Json::array();
  for (int c : hypoelementary_classes(s.g, s.lat, opt.prime))
    hypo.push_back(s.lat.class_name[c]);
  j["hypoelementary_classes"] = hypo;
  emit(opt, j,
       equal ? "equal as linearized modules (marks agree on hypoelementary classes)\n"
             : "different linearizations\n");
  return equal ? kOk : kNegative;
}

// ------------------------------------------------------------------ resolving

int cmd_resolving_solve(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  ResolvingLattice l = resolving_lattice(bc, opt.prime);
  Int m_lat = m_p_lattice(bc, opt.prime);
  Int m_closed = m_p_closed_form(bc, opt.prime);
  Json j;
  j["p"] = opt.prime;
  Json basis = Json::array();
  std::string text = "resolving lattice rank " + std::to_string(l.basis.size()) + "\n";
  for (const SuperClassFunction& phi : l.basis) {
    basis.push_back(class_function_to_json(s.lat, phi)["values"]);
    text += "  basis:";
    for (const Int& v : phi.value) text += " " + v.str();
    text += "\n";
  }
  j["basis"] = basis;
  j["m_p"] = int_to_json(m_lat);
  j["m_p_closed_form"] = int_to_json(m_closed);
  text += "m_p = " + m_lat.str() + " (lattice gcd), " + m_closed.str() + " (closed form)\n";
  emit(opt, j, text);
  if (m_lat != m_closed) {
    std::cerr << Json{{"error", "m_p mismatch between lattice and closed form"}}.dump() << "\n";
    return kInternal;
  }
  return kOk;
}

int cmd_resolving_check(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  SuperClassFunction phi = parse_class_function(s.lat, opt.phi);
  auto r = is_resolving(bc, phi, opt.prime);
  if (std::holds_alternative<ResolvingCertificate>(r)) {
    const auto& cert = std::get<ResolvingCertificate>(r);
    if (!verify_certificate(bc, cert)) {
      std::cerr << Json{{"error", "certificate failed re-verification"}}.dump() << "\n";
      return kInternal;
    }
    emit(opt, resolving_certificate_to_json(s.lat, cert), "resolving: yes\n");
    return kOk;
  }
  const auto& f = std::get<ResolvingFailure>(r);
  Json j;
  j["resolving"] = false;
  j["condition"] =
      f.condition == ResolvingFailure::Condition::divisibility ? "divisibility" : "vanishing";
  j["class"] = s.lat.class_name[f.cls];
  j["value"] = int_to_json(f.value);
  std::string text = "resolving: no (";
  text += j["condition"].get<std::string>() + " fails at class " + s.lat.class_name[f.cls] + ")\n";
  emit(opt, j, text);
  return kNegative;
}

int cmd_mp(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  Int m_lat = m_p_lattice(bc, opt.prime);
  Int m_closed = m_p_closed_form(bc, opt.prime);
  Json j;
  j["p"] = opt.prime;
  j["m_p"] = int_to_json(m_lat);
  j["m_p_closed_form"] = int_to_json(m_closed);
  std::string text = "m_" + std::to_string(opt.prime) + "(" + s.g.name + ") = " + m_lat.str() +
                     " (lattice gcd) = " + m_closed.str() + " (closed form)\n";
  emit(opt, j, text);
  if (m_lat != m_closed) {
    std::cerr << Json{{"error", "m_p mismatch between lattice and closed form"}}.dump() << "\n";
    return kInternal;
  }
  return kOk;
}

int cmd_realizable(const Options& opt) {
  Session s = load_session(opt);
  BurnsideContext& bc = s.burnside();
  bool ok = realizable_fixed_euler(bc, opt.prime, Int(opt.chi));
  Json j;
  j["p"] = opt.prime;
  j["chi"] = opt.chi;
  j["m_p"] = int_to_json(m_p_lattice(bc, opt.prime));
  j["realizable"] = ok;
  emit(opt, j, std::string(ok ? "realizable" : "not realizable") + "\n");
  return ok ? kOk : kNegative;
}

// -------------------------------------------------------------------- complex

int cmd_complex_homology(const Options& opt) {
  Session s = load_session(opt);
  Json in = read_json_file(opt.input_file);
  SpecialComplex c = complex_from_json(s.g, s.lat, in);
  PlainComplex p = opt.subgroup_name.empty()
                       ? underlying_complex(c)
                       : fixed_subcomplex(
                             s.g, c,
                             s.lat.members[s.lat.class_rep[class_index_by_name(
                                 s.lat, opt.subgroup_name)]]);
  auto h = homology(p);
  Json j;
  j["homology"] = homology_to_json(h);
  j["acyclic"] = is_acyclic(p, opt.reduced);
  std::string text;
  for (size_t i = 0; i < h.size(); ++i) {
    text += "H_" + std::to_string(i) + ": betti " + std::to_string(h[i].betti);
    if (!h[i].torsion.empty()) {
      text += ", torsion";
      for (const Int& t : h[i].torsion) text += " " + t.str();
    }
    text += "\n";
  }
  emit(opt, j, text);
  return kOk;
}

int cmd_complex_split_check(const Options& opt) {
  Session s = load_session(opt);
  SpecialComplex c = complex_from_json(s.g, s.lat, read_json_file(opt.input_file));
  auto r = g_split_check(s.g, s.lat, c);
  if (std::holds_alternative<SplitFailure>(r)) {
    const auto& f = std::get<SplitFailure>(r);
    Json j;
    j["split"] = false;
    j["degree"] = f.degree;
    j["reason"] = f.reason;
    emit(opt, j, "not G-split: degree " + std::to_string(f.degree) + " (" + f.reason + ")\n");
    return kNegative;
  }
  const auto& cert = std::get<SplitCertificate>(r);
  if (!verify_split_certificate(s.g, c, cert)) {
    std::cerr << Json{{"error", "split certificate failed re-verification"}}.dump() << "\n";
    return kInternal;
  }
  Json j = split_certificate_to_json(cert);
  j["split"] = true;
  emit(opt, j, "G-split: verified sections in all degrees\n");
  return kOk;
}

int cmd_complex_kw_check(const Options& opt) {
  Session s = load_session(opt);
  Json in = read_json_file(opt.input_file);
  Json src_j = in.at("source");
  Json dst_j = in.at("target");
  src_j["ring"] = in.at("ring");
  dst_j["ring"] = in.at("ring");
  SpecialComplex src = complex_from_json(s.g, s.lat, src_j);
  SpecialComplex dst = complex_from_json(s.g, s.lat, dst_j);
  AdmissibleChainMap f;
  int topmax = std::max(src.top(), dst.top());
  const Json& maps = in.at("map");
  if (static_cast<int>(maps.size()) != topmax + 1)
    throw JsonFormatError("map needs one matrix per degree 0..max(top)");
  for (int i = 0; i <= topmax; ++i)
    f.maps.push_back(matrix_from_json(maps.at(i), dst.dim(i), src.dim(i)));
  auto r = kw_equivalence(s.g, s.lat, src, dst, f);
  if (std::holds_alternative<QuasiIsoFailure>(r)) {
    const auto& w = std::get<QuasiIsoFailure>(r);
    Json j;
    j["equivalence"] = false;
    j["class"] = s.lat.class_name[w.cls];
    j["degree"] = w.degree;
    emit(opt, j,
         "not an equivalence: fixed subcomplex at class " + s.lat.class_name[w.cls] +
             " fails in degree " + std::to_string(w.degree) + "\n");
    return kNegative;
  }
  const auto& cert = std::get<HomotopyCertificate>(r);
  Json j = homotopy_certificate_to_json(cert);
  j["equivalence"] = true;
  emit(opt, j, "chain homotopy equivalence: verified certificate\n");
  return kOk;
}

// ------------------------------------------------------------------------ gcw

int cmd_gcw(const Options& opt, const std::string& action) {
  Session s = load_session(opt);
  GSimplicialComplex k = simplicial_from_json(s.g, read_json_file(opt.input_file));
  if (action == "sd") {
    GSimplicialComplex sd = barycentric_subdivision(s.g, k);
    Json j = simplicial_to_json(sd);
    std::string text = "sd:";
    for (int d = 0; d <= sd.top_dim(); ++d)
      text += " " + std::to_string(sd.simplex_count(d));
    emit(opt, j, text + "\n");
    return kOk;
  }
  if (action == "cone") {
    GSimplicialComplex cn = cone(s.g, k);
    Json j = simplicial_to_json(cn);
    std::string text = "cone:";
    for (int d = 0; d <= cn.top_dim(); ++d)
      text += " " + std::to_string(cn.simplex_count(d));
    emit(opt, j, text + "\n");
    return kOk;
  }
  if (action == "fixed") {
    int c = class_index_by_name(s.lat, opt.subgroup_name);
    const std::vector<int>& h = s.lat.members[s.lat.class_rep[c]];
    FixedComplex f = fixed_complex(s.g, k, h);
    Json j;
    j["class"] = s.lat.class_name[c];
    j["vertices"] = f.vertex_count;
    Json simplices = Json::array();
    std::string text = "fixed complex at " + s.lat.class_name[c] + ":";
    for (size_t d = 0; d < f.simplices.size(); ++d) {
      for (const auto& sx : f.simplices[d]) simplices.push_back(sx);
      text += " " + std::to_string(f.simplices[d].size());
    }
    j["simplices"] = simplices;
    long chi = euler_characteristic(s.g, k, h);
    j["euler"] = chi;
    emit(opt, j, text + " (chi = " + std::to_string(chi) + ")\n");
    return kOk;
  }
  if (action == "chain") {
    Ring ring = ring_from_json(Json(opt.ring_label));
    SpecialComplex c = cellular_chain_complex(s.g, s.lat, k, ring, opt.augmented);
    Json j = complex_to_json(c);
    std::string text = "chains:";
    for (int d = 0; d <= c.top(); ++d) text += " " + std::to_string(c.dim(d));
    emit(opt, j, text + "\n");
    return kOk;
  }
  if (action == "quotient") {
    Ring ring = ring_from_json(Json(opt.ring_label));
    SpecialComplex c = cellular_chain_complex(s.g, s.lat, k, ring, false);
    PlainComplex q = quotient_complex(s.g, c);
    Json j = plain_complex_to_json(q);
    j["homology"] = homology_to_json(homology(q));
    j["acyclic"] = is_acyclic(q, opt.reduced);
    std::string text = "quotient dims:";
    for (int d : q.dims) text += " " + std::to_string(d);
    text += is_acyclic(q, opt.reduced) ? " (acyclic)" : " (not acyclic)";
    emit(opt, j, text + "\n");
    return kOk;
  }
  if (action == "class") {
    BurnsideContext& bc = s.burnside();
    BurnsideElement x = burnside_class(bc, k);
    Json j = burnside_to_json(s.lat, x);
    Json marks = Json::array();
    SuperClassFunction v = bc.rho(x);
    for (const Int& m : v.value) marks.push_back(int_to_json(m));
    j["marks"] = marks;
    emit(opt, j, burnside_to_string(s.lat, x) + "\n");
    return kOk;
  }
  throw JsonFormatError("unknown gcw action: " + action);
}

void add_group_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--preset", opt.preset, "preset group label, e.g. S3, C4, D6, Q8, A5, E4");
  cmd->add_option("--group", opt.group_file, "group JSON file");
  cmd->add_flag("--json", opt.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group Burnside rings, resolving functions, and equivariant chains"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* group = app.add_subcommand("group", "group and subgroup lattice queries");
  group->require_subcommand(1);
  CLI::App* group_info = group->add_subcommand("info", "order and class counts");
  add_group_options(group_info, opt);
  CLI::App* group_lattice = group->add_subcommand("lattice", "full subgroup lattice");
  add_group_options(group_lattice, opt);

  CLI::App* marks = app.add_subcommand("marks", "table of marks");
  add_group_options(marks, opt);

  CLI::App* classify = app.add_subcommand("classify", "Dress classes at a prime");
  add_group_options(classify, opt);
  classify->add_option("--prime", opt.prime, "the prime p")->required();

  CLI::App* burnside = app.add_subcommand("burnside", "Burnside ring arithmetic");
  burnside->require_subcommand(1);
  CLI::App* bmul = burnside->add_subcommand("mul", "product of two elements");
  add_group_options(bmul, opt);
  bmul->add_option("--x", opt.expr_x, "left factor, e.g. \"[G/1]+2[G/G]\"")->required();
  bmul->add_option("--y", opt.expr_y, "right factor")->required();
  CLI::App* bsolve = burnside->add_subcommand("solve", "preimage under the mark homomorphism");
  add_group_options(bsolve, opt);
  bsolve->add_option("--values", opt.values, "marks vector, comma separated")->required();
  CLI::App* bconlon = burnside->add_subcommand("conlon", "Conlon equality of linearizations");
  add_group_options(bconlon, opt);
  bconlon->add_option("--prime", opt.prime, "the prime p")->required();
  bconlon->add_option("--x", opt.expr_x, "first element")->required();
  bconlon->add_option("--y", opt.expr_y, "second element")->required();

  CLI::App* resolving = app.add_subcommand("resolving", "mod-p resolving functions");
  resolving->require_subcommand(1);
  CLI::App* rsolve = resolving->add_subcommand("solve", "lattice of resolving functions");
  add_group_options(rsolve, opt);
  rsolve->add_option("--prime", opt.prime, "the prime p")->required();
  CLI::App* rcheck = resolving->add_subcommand("check", "check one super class function");
  add_group_options(rcheck, opt);
  rcheck->add_option("--prime", opt.prime, "the prime p")->required();
  rcheck->add_option("--phi", opt.phi, "values in class order, comma separated")->required();

  CLI::App* mp = app.add_subcommand("mp", "m_p by lattice gcd and closed form");
  add_group_options(mp, opt);
  mp->add_option("--prime", opt.prime, "the prime p")->required();

  CLI::App* realizable = app.add_subcommand("realizable", "chi(F) = 1 mod m_p test");
  add_group_options(realizable, opt);
  realizable->add_option("--prime", opt.prime, "the prime p")->required();
  realizable->add_option("--chi", opt.chi, "Euler characteristic of the fixed set")->required();

  CLI::App* complex = app.add_subcommand("complex", "special complex checks");
  complex->require_subcommand(1);
  CLI::App* chom = complex->add_subcommand("homology", "homology of a complex file");
  add_group_options(chom, opt);
  chom->add_option("--input", opt.input_file, "complex JSON file")->required();
  chom->add_flag("--reduced", opt.reduced, "test reduced acyclicity");
  chom->add_option("--subgroup", opt.subgroup_name, "restrict to an H-fixed subcomplex");
  CLI::App* csplit = complex->add_subcommand("split-check", "G-splitting of an augmented complex");
  add_group_options(csplit, opt);
  csplit->add_option("--input", opt.input_file, "complex JSON file")->required();
  CLI::App* ckw = complex->add_subcommand("kw-check", "chain homotopy equivalence harness");
  add_group_options(ckw, opt);
  ckw->add_option("--input", opt.input_file, "source/target/map JSON file")->required();

  CLI::App* gcw = app.add_subcommand("gcw", "G-simplicial complexes");
  gcw->require_subcommand(1);
  std::vector<std::string> gcw_actions{"sd", "cone", "fixed", "chain", "quotient", "class"};
  std::vector<CLI::App*> gcw_subs;
  for (const std::string& a : gcw_actions) {
    CLI::App* sub = gcw->add_subcommand(a, "gcw " + a);
    add_group_options(sub, opt);
    sub->add_option("--input", opt.input_file, "simplicial JSON file")->required();
    if (a == "fixed") sub->add_option("--subgroup", opt.subgroup_name, "class name")->required();
    if (a == "chain") {
      sub->add_option("--ring", opt.ring_label, "Z, Q, or GF(p)");
      sub->add_flag("--augmented", opt.augmented, "attach the augmentation");
    }
    if (a == "quotient") {
      sub->add_option("--ring", opt.ring_label, "Z, Q, or GF(p)");
      sub->add_flag("--reduced", opt.reduced, "test reduced acyclicity");
    }
    gcw_subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (group_info->parsed()) return cmd_group_info(opt);
    if (group_lattice->parsed()) return cmd_group_lattice(opt);
    if (marks->parsed()) return cmd_marks(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (bmul->parsed()) return cmd_burnside_mul(opt);
    if (bsolve->parsed()) return cmd_burnside_solve(opt);
    if (bconlon->parsed()) return cmd_burnside_conlon(opt);
    if (rsolve->parsed()) return cmd_resolving_solve(opt);
    if (rcheck->parsed()) return cmd_resolving_check(opt);
    if (mp->parsed()) return cmd_mp(opt);
    if (realizable->parsed()) return cmd_realizable(opt);
    if (chom->parsed()) return cmd_complex_homology(opt);
    if (csplit->parsed()) return cmd_complex_split_check(opt);
    if (ckw->parsed()) return cmd_complex_kw_check(opt);
    for (size_t i = 0; i < gcw_subs.size(); ++i)
      if (gcw_subs[i]->parsed()) return cmd_gcw(opt, gcw_actions[i]);
    std::cerr << Json{{"error", "no command"}}.dump() << "\n";
    return kUsage;
  } catch (const ConstructionFailed& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  }
}
