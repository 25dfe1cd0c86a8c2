#include "nalg_cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "nalg/constructions.hpp"
#include "nalg/evaluate.hpp"
#include "nalg/text_format.hpp"
#include "nalg/variety.hpp"

namespace nalg::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::vector<std::string> algebras;
  std::vector<std::string> maps;
  std::vector<std::string> polys;
  std::string variety;
  std::string letters = "x";
  std::string mode;
  std::string format = "text";
  std::string lambda;
  std::string field;
  std::string equation = "first";
  std::optional<std::size_t> degree;
  std::optional<std::uint64_t> budget;
  bool open = false;
};

struct Outcome {
  json body;
  int code = Ok;
};

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {
      "check-identity", "implied",  "reflect",   "kernel",      "cokernel",   "coequalize", "quotient", "ideal",
      "subalgebra",     "product",  "pullback",  "image",       "exact",      "free",       "coproduct", "flat",
      "coherent",       "orzech",   "homog",     "derivations", "commutator", "split-five"};
  return v;
}

// ------------------------------------------------------------------ input

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Algebra load_algebra(const std::string& path) {
  const std::string text = read_file(path);
  return with_path(path, [&] { return parse_algebra(text); });
}

Morphism load_map(const std::string& path, const Algebra& source, const Algebra& target) {
  const std::string text = read_file(path);
  return with_path(path, [&] { return parse_morphism(text, source, target); });
}

std::vector<Algebra> algebras(const Options& o, std::size_t min, std::size_t max, const char* what) {
  if (o.algebras.size() < min || o.algebras.size() > max) {
    throw UsageError(std::string("'") + o.verb + "' expects " + what);
  }
  std::vector<Algebra> out;
  for (const auto& path : o.algebras) out.push_back(load_algebra(path));
  return out;
}

void expect_maps(const Options& o, std::size_t n, const char* what) {
  if (o.maps.size() != n) throw UsageError(std::string("'") + o.verb + "' expects " + what);
}

Field option_field(const Options& o) {
  if (o.field.empty()) return Field::rationals();
  try {
    return Field::parse(o.field);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

IdentitySet load_variety(const Options& o, const Field& field) {
  if (o.variety.empty()) throw UsageError("'" + o.verb + "' needs --variety");
  if (std::filesystem::is_regular_file(o.variety)) {
    const std::string text = read_file(o.variety);
    IdentitySet v = with_path(o.variety, [&] { return parse_variety(text); });
    if (!(v.field == field)) {
      throw UsageError(o.variety + ": variety is over " + v.field.to_string() + ", expected " + field.to_string());
    }
    return v;
  }
  return preset_variety(o.variety, field);
}

Poly option_poly(const std::string& text, const Field& field) {
  try {
    return parse_poly(field, text);
  } catch (const ParseError& e) {
    throw UsageError("--poly '" + text + "': " + e.what());
  }
}

std::vector<Vec> option_elements(const Options& o, const Algebra& a) {
  std::vector<Vec> out;
  for (const auto& text : o.polys) {
    try {
      out.push_back(parse_element(a, text));
    } catch (const ParseError& e) {
      throw UsageError("--poly '" + text + "': " + e.what());
    }
  }
  return out;
}

Budget option_budget(const Options& o) {
  Budget b;
  if (o.budget) {
    b.max_tuples = *o.budget;
    b.max_basis = static_cast<std::size_t>(*o.budget);
  }
  return b;
}

std::size_t option_degree(const Options& o) { return o.degree.value_or(4); }

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
  }
  return out;
}

// Sixteen scalars; a single `...` repeats the value before it to fill the gap.
std::vector<Scalar> option_lambdas(const Options& o, const Field& field) {
  if (o.lambda.empty()) throw UsageError("'orzech' needs --lambda");
  std::vector<std::string> items = split_commas(o.lambda);
  const auto dots = std::find(items.begin(), items.end(), "...");
  if (dots != items.end()) {
    if (dots == items.begin() || std::find(dots + 1, items.end(), "...") != items.end() || items.size() - 1 > 16) {
      throw UsageError("--lambda: '...' must follow a value and appear once");
    }
    const std::string fill = *(dots - 1);
    const std::size_t missing = 16 - (items.size() - 1);
    const auto at = items.erase(dots);
    items.insert(at, missing, fill);
  }
  if (items.size() != 16) throw UsageError("--lambda expects 16 values, got " + std::to_string(items.size()));
  std::vector<Scalar> out;
  for (const auto& s : items) {
    try {
      out.push_back(Scalar::parse(field, s));
    } catch (const ParseError& e) {
      throw UsageError("--lambda '" + s + "': " + e.what());
    }
  }
  return out;
}

// ------------------------------------------------------------ json pieces

json scalars(const Vec& v) {
  json a = json::array();
  for (const Scalar& s : v) a.push_back(s.to_string());
  return a;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(scalars(m.row(r)));
  return rows;
}

json algebra_json(const Algebra& a) {
  json j;
  j["field"] = a.field().to_string();
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a.product_sparse(i, k).empty()) continue;
      products.push_back(a.basis_names()[i] + " * " + a.basis_names()[k] + " = " + a.format_element(a.product(i, k)));
    }
  j["products"] = products;
  return j;
}

json subspace_json(const Algebra& a, const Subspace& s) {
  json j;
  j["dim"] = s.dim();
  json basis = json::array();
  for (const Vec& v : s.basis()) basis.push_back(a.format_element(v));
  j["basis"] = basis;
  return j;
}

json morphism_json(const Morphism& f) {
  json j;
  json images = json::array();
  for (std::size_t i = 0; i < f.source().dim(); ++i) {
    images.push_back(f.source().basis_names()[i] + " -> " + f.target().format_element(f.matrix().column(i)));
  }
  j["images"] = images;
  j["matrix"] = matrix_json(f.matrix());
  return j;
}

json poly_list(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const Poly& p : ps) a.push_back(p.to_string());
  return a;
}

json variety_json(const IdentitySet& v) {
  json j;
  j["name"] = v.name;
  j["field"] = v.field.to_string();
  j["identities"] = poly_list(v.polys);
  return j;
}

json flags_json(const Morphism& f) {
  json j;
  j["injective"] = f.injective();
  j["surjective"] = f.surjective();
  j["isomorphism"] = f.is_isomorphism();
  return j;
}

// ----------------------------------------------------------------- verbs

Outcome check_identity(const Options& o) {
  const Algebra a = algebras(o, 1, 1, "one --algebra")[0];
  std::vector<Poly> ids;
  for (const auto& t : o.polys) ids.push_back(option_poly(t, a.field()));
  if (!o.variety.empty()) {
    const IdentitySet v = load_variety(o, a.field());
    ids.insert(ids.end(), v.polys.begin(), v.polys.end());
  }
  if (ids.empty()) throw UsageError("'check-identity' needs --poly or --variety");
  CheckMode mode = a.field().is_finite() ? CheckMode::Exhaustive : CheckMode::Symbolic;
  if (o.mode == "symbolic") mode = CheckMode::Symbolic;
  if (o.mode == "exhaustive") mode = CheckMode::Exhaustive;

  Outcome out;
  out.body["field"] = a.field().to_string();
  out.body["mode"] = mode == CheckMode::Symbolic ? "symbolic" : "exhaustive";
  json results = json::array();
  bool all = true;
  for (const Poly& p : ids) {
    const IdentityCheck r = identity_holds(a, p, mode, option_budget(o));
    json e;
    e["identity"] = p.to_string();
    e["verdict"] = to_string(r.verdict);
    if (r.mode_unsound) e["warning"] = "symbolic evaluation is not conclusive over " + a.field().to_string() + "; run exhaustive";
    if (r.witness) {
      json w = json::object();
      for (const auto& [var, v] : *r.witness) w[var] = a.format_element(v);
      e["witness"] = w;
      e["value"] = a.format_element(r.witness_value);
    }
    all &= r.holds();
    results.push_back(e);
  }
  out.body["results"] = results;
  out.body["holds"] = all;
  out.code = all ? Ok : PropertyFalse;
  return out;
}

Outcome implied(const Options& o) {
  const IdentitySet v = load_variety(o, option_field(o));
  if (o.polys.empty()) throw UsageError("'implied' needs --poly");
  const std::size_t d = option_degree(o);
  Outcome out;
  out.body["variety"] = variety_json(v);
  out.body["degree"] = d;
  json results = json::array();
  bool all = true;
  for (const auto& t : o.polys) {
    const Poly p = option_poly(t, v.field);
    const Implication r = identity_implied(v, p, d, option_budget(o));
    json e;
    e["identity"] = p.to_string();
    e["implied"] = r.implied;
    if (!r.implied) e["normal_form"] = r.residue.to_string();
    all &= r.implied;
    results.push_back(e);
  }
  out.body["results"] = results;
  out.body["implied"] = all;
  out.code = all ? Ok : PropertyFalse;
  return out;
}

Outcome reflect_verb(const Options& o) {
  const Algebra a = algebras(o, 1, 1, "one --algebra")[0];
  const IdentitySet v = load_variety(o, a.field());
  const Budget b = option_budget(o);
  const Subspace rel = relation_subspace(a, v, b);
  const Reflection r = reflect(a, v, b);
  Outcome out;
  out.body["variety"] = variety_json(v);
  out.body["relation_span"] = subspace_json(a, rel);
  out.body["ideal"] = subspace_json(a, r.ideal);
  out.body["reflection"] = algebra_json(r.quotient.algebra);
  out.body["unit"] = morphism_json(r.quotient.projection);
  return out;
}

Outcome kernel_verb(const Options& o) {
  const auto as = algebras(o, 2, 2, "--algebra A --algebra B");
  expect_maps(o, 1, "one --map A -> B");
  const Morphism f = load_map(o.maps[0], as[0], as[1]);
  const Subobject k = kernel(f);
  Outcome out;
  out.body["map"] = flags_json(f);
  out.body["kernel"] = subspace_json(as[0], f.kernel_subspace());
  out.body["algebra"] = algebra_json(k.algebra);
  out.body["inclusion"] = morphism_json(k.inclusion);
  return out;
}

json quotient_json(const Quotient& q, const Algebra& ambient, const Subspace& ideal) {
  json j;
  j["ideal"] = subspace_json(ambient, ideal);
  j["algebra"] = algebra_json(q.algebra);
  j["projection"] = morphism_json(q.projection);
  return j;
}

Outcome cokernel_verb(const Options& o) {
  const auto as = algebras(o, 2, 2, "--algebra A --algebra B");
  expect_maps(o, 1, "one --map A -> B");
  const Morphism f = load_map(o.maps[0], as[0], as[1]);
  const Quotient q = cokernel(f);
  Outcome out;
  out.body["map"] = flags_json(f);
  out.body["cokernel"] = quotient_json(q, as[1], q.projection.kernel_subspace());
  return out;
}

Outcome coequalize_verb(const Options& o) {
  const auto as = algebras(o, 2, 2, "--algebra A --algebra B");
  expect_maps(o, 2, "two --map A -> B");
  const Morphism f = load_map(o.maps[0], as[0], as[1]);
  const Morphism g = load_map(o.maps[1], as[0], as[1]);
  const Quotient q = coequalizer(f, g);
  Outcome out;
  out.body["coequalizer"] = quotient_json(q, as[1], q.projection.kernel_subspace());
  return out;
}

Outcome quotient_verb(const Options& o) {
  const Algebra a = algebras(o, 1, 1, "one --algebra")[0];
  const Subspace s = Subspace::span(a.field(), a.dim(), option_elements(o, a));
  const Quotient q = quotient(a, s);
  Outcome out;
  out.body["quotient"] = quotient_json(q, a, s);
  return out;
}

Outcome ideal_verb(const Options& o) {
  const Algebra a = algebras(o, 1, 1, "one --algebra")[0];
  const auto gens = option_elements(o, a);
  const Subspace s = Subspace::span(a.field(), a.dim(), gens);
  const Subspace i = generated_ideal(a, gens);
  Outcome out;
  out.body["span"] = subspace_json(a, s);
  out.body["is_subalgebra"] = is_subalgebra(a, s);
  out.body["is_ideal"] = is_ideal(a, s);
  out.body["generated_ideal"] = subspace_json(a, i);
  out.body["cokernel_dim"] = a.dim() - i.dim();
  return out;
}

Outcome subalgebra_verb(const Options& o) {
  const Algebra a = algebras(o, 1, 1, "one --algebra")[0];
  const auto gens = option_elements(o, a);
  const Subspace s = Subspace::span(a.field(), a.dim(), gens);
  const Subspace g = generated_subalgebra(a, gens);
  const Subobject sub = induced_subalgebra(a, g);
  Outcome out;
  out.body["span"] = subspace_json(a, s);
  out.body["is_subalgebra"] = is_subalgebra(a, s);
  out.body["generated_subalgebra"] = subspace_json(a, g);
  out.body["algebra"] = algebra_json(sub.algebra);
  return out;
}

json cone_json(const Cone& c) {
  json j;
  j["algebra"] = algebra_json(c.algebra);
  j["first"] = morphism_json(c.first);
  j["second"] = morphism_json(c.second);
  return j;
}

Outcome product_verb(const Options& o) {
  const auto as = algebras(o, 2, 2, "--algebra A --algebra C");
  Outcome out;
  out.body["product"] = cone_json(product(as[0], as[1]));
  return out;
}

Outcome pullback_verb(const Options& o) {
  const auto as = algebras(o, 3, 3, "--algebra A --algebra B --algebra C");
  expect_maps(o, 2, "--map f: A -> B --map g: C -> B");
  const Morphism f = load_map(o.maps[0], as[0], as[1]);
  const Morphism g = load_map(o.maps[1], as[2], as[1]);
  const Cone p = pullback(f, g);
  Outcome out;
  out.body["pullback"] = cone_json(p);
  out.body["first_surjective"] = p.first.surjective();
  out.body["second_surjective"] = p.second.surjective();
  return out;
}

Outcome image_verb(const Options& o) {
  const auto as = algebras(o, 2, 2, "--algebra A --algebra B");
  expect_maps(o, 1, "one --map A -> B");
  const Morphism f = load_map(o.maps[0], as[0], as[1]);
  const ImageFactorization im = image_factorization(f);
  Outcome out;
  out.body["image"] = subspace_json(as[1], f.image_subspace());
  out.body["algebra"] = algebra_json(im.image);
  out.body["onto"] = morphism_json(im.onto);
  out.body["inclusion"] = morphism_json(im.inclusion);
  return out;
}

Outcome exact_verb(const Options& o) {
  if (o.algebras.size() < 2 || o.maps.size() + 1 != o.algebras.size()) {
    throw UsageError("'exact' expects n+1 --algebra files and n --map files");
  }
  const auto as = algebras(o, 2, o.algebras.size(), "at least two --algebra");
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i < o.maps.size(); ++i) maps.push_back(load_map(o.maps[i], as[i], as[i + 1]));
  const auto joints = is_exact(maps, !o.open);
  Outcome out;
  out.body["zero_ends"] = !o.open;
  json js = json::array();
  bool all = true;
  for (const JointReport& r : joints) {
    json e;
    e["object"] = r.object;
    e["image_dim"] = r.image_dim;
    e["kernel_dim"] = r.kernel_dim;
    e["exact"] = r.exact;
    all &= r.exact;
    js.push_back(e);
  }
  out.body["joints"] = js;
  out.body["exact"] = all;
  out.code = all ? Ok : PropertyFalse;
  return out;
}

json free_json(const TruncatedFreeAlgebra& f) {
  json j;
  j["letters"] = f.letters;
  j["degree"] = f.max_degree;
  j["dim"] = f.carrier.dim();
  j["words_by_degree"] = f.words_by_degree;
  j["relations_by_degree"] = f.relations_by_degree;
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n < f.words_by_degree.size(); ++n) dims.push_back(f.words_by_degree[n] - f.relations_by_degree[n]);
  j["dims_by_degree"] = dims;
  j["algebra"] = algebra_json(f.carrier);
  return j;
}

Outcome free_verb(const Options& o) {
  const IdentitySet v = load_variety(o, option_field(o));
  std::vector<std::string> letters = split_commas(o.letters);
  for (const auto& l : letters) {
    if (l.empty() || !std::isalpha(static_cast<unsigned char>(l[0]))) throw UsageError("--letters: invalid letter '" + l + "'");
  }
  const TruncatedFreeAlgebra f = truncated_free(v, letters, option_degree(o), option_budget(o));
  Outcome out;
  out.body["variety"] = variety_json(v);
  out.body["free"] = free_json(f);
  return out;
}

Outcome coproduct_verb(const Options& o) {
  const auto as = algebras(o, 1, SIZE_MAX, "at least one --algebra");
  const IdentitySet v = load_variety(o, as[0].field());
  const TruncatedCoproduct c = truncated_coproduct(as, v, option_degree(o), option_budget(o));
  Outcome out;
  out.body["variety"] = variety_json(v);
  out.body["letters"] = c.letters;
  out.body["coproduct"] = free_json(c.free);
  json inj = json::array();
  for (const Morphism& m : c.injections) inj.push_back(morphism_json(m));
  out.body["injections"] = inj;
  return out;
}

Outcome flat_verb(const Options& o) {
  const auto as = algebras(o, 2, 2, "--algebra B --algebra X");
  const IdentitySet v = load_variety(o, as[0].field());
  const Flat f = flat(as[0], as[1], v, option_degree(o), option_budget(o));
  Outcome out;
  out.body["variety"] = variety_json(v);
  out.body["degree"] = option_degree(o);
  out.body["coproduct_dim"] = f.coproduct.algebra().dim();
  out.body["flat"] = subspace_json(f.coproduct.algebra(), f.kernel.inclusion.image_subspace());
  out.body["algebra"] = algebra_json(f.kernel.algebra);
  return out;
}

Outcome coherent_verb(const Options& o) {
  const auto as = algebras(o, 3, 3, "--algebra B --algebra X --algebra Y");
  const IdentitySet v = load_variety(o, as[0].field());
  const CoherenceReport r = coherence_probe(as[0], as[1], as[2], v, option_degree(o), option_budget(o));
  Outcome out;
  out.body["variety"] = variety_json(v);
  out.body["degree"] = option_degree(o);
  out.body["flat_x_dim"] = r.flat_x_dim;
  out.body["flat_y_dim"] = r.flat_y_dim;
  out.body["flat_sum_dim"] = r.flat_dim;
  out.body["generated_dim"] = r.generated_dim;
  out.body["coherent"] = r.coherent;
  out.code = r.coherent ? Ok : PropertyFalse;
  return out;
}

Outcome orzech_verb(const Options& o) {
  const IdentitySet v = load_variety(o, option_field(o));
  if (o.equation != "first" && o.equation != "second" && o.equation != "both") {
    throw UsageError("--equation must be first, second or both");
  }
  const OrzechReport r = orzech_check(v, option_lambdas(o, v.field), option_degree(o), option_budget(o));
  Outcome out;
  out.body["variety"] = variety_json(v);
  out.body["degree"] = option_degree(o);
  json eqs = json::array();
  const char* names[2] = {"first", "second"};
  for (std::size_t i = 0; i < 2; ++i) {
    json e;
    e["equation"] = names[i];
    e["polynomial"] = r.polys[i].to_string();
    e["implied"] = r.results[i].implied;
    if (!r.results[i].implied) e["normal_form"] = r.results[i].residue.to_string();
    eqs.push_back(e);
  }
  out.body["equations"] = eqs;
  out.body["checked"] = o.equation;
  const bool holds = o.equation == "first" ? r.first() : o.equation == "second" ? r.second() : r.holds();
  out.body["result"] = holds ? "holds" : "fails";
  out.code = holds ? Ok : PropertyFalse;
  return out;
}

Outcome homog_verb(const Options& o) {
  Outcome out;
  if (!o.variety.empty()) {
    const IdentitySet v = load_variety(o, option_field(o));
    const auto entries = homogeneous_closure_check(v, option_degree(o), option_budget(o));
    out.body["variety"] = variety_json(v);
    out.body["degree"] = option_degree(o);
    json es = json::array();
    bool all = true;
    for (const ClosureEntry& c : entries) {
      json e;
      e["identity"] = v.polys[c.identity].to_string();
      e["type"] = type_to_string(c.type);
      e["component"] = c.component.to_string();
      e["implied"] = c.implied;
      all &= c.implied;
      es.push_back(e);
    }
    out.body["components"] = es;
    out.body["closed"] = all;
    out.code = all ? Ok : PropertyFalse;
    return out;
  }
  if (o.polys.empty()) throw UsageError("'homog' needs --poly or --variety");
  const Field f = option_field(o);
  json ps = json::array();
  for (const auto& t : o.polys) {
    const Poly p = option_poly(t, f);
    json e;
    e["polynomial"] = p.to_string();
    json comps = json::array();
    for (const auto& [type, c] : homogeneous_components(p)) {
      json ce;
      ce["type"] = type_to_string(type);
      ce["component"] = c.to_string();
      comps.push_back(ce);
    }
    e["components"] = comps;
    ps.push_back(e);
  }
  out.body["polynomials"] = ps;
  return out;
}

Outcome derivations_verb(const Options& o) {
  const Algebra a = algebras(o, 1, 1, "one --algebra")[0];
  const Derivations d = derivations(a);
  Outcome out;
  out.body["dim"] = d.lie.dim();
  json ms = json::array();
  for (std::size_t i = 0; i < d.maps.size(); ++i) {
    json e;
    e["name"] = d.lie.basis_names()[i];
    e["matrix"] = matrix_json(d.maps[i]);
    ms.push_back(e);
  }
  out.body["derivations"] = ms;
  out.body["algebra"] = algebra_json(d.lie);
  return out;
}

Outcome commutator_verb(const Options& o) {
  const Algebra a = algebras(o, 1, 1, "one --algebra")[0];
  Outcome out;
  out.body["algebra"] = algebra_json(commutator_algebra(a));
  return out;
}

Outcome split_five_verb(const Options& o) {
  const auto as = algebras(o, 6, 6, "six --algebra files A B C D E F");
  expect_maps(o, 9, "nine --map files f g s k q t alpha beta gamma");
  const auto& [A, B, C, D, E, F] = std::tie(as[0], as[1], as[2], as[3], as[4], as[5]);
  SplitFiveDiagram d{load_map(o.maps[0], A, B), load_map(o.maps[1], B, C), load_map(o.maps[2], C, B),
                     load_map(o.maps[3], D, E), load_map(o.maps[4], E, F), load_map(o.maps[5], F, E),
                     load_map(o.maps[6], A, D), load_map(o.maps[7], B, E), load_map(o.maps[8], C, F)};
  const bool beta_iso = split_short_five_check(d);
  Outcome out;
  out.body["alpha_isomorphism"] = d.alpha.is_isomorphism();
  out.body["gamma_isomorphism"] = d.gamma.is_isomorphism();
  out.body["beta_isomorphism"] = beta_iso;
  out.code = beta_iso ? Ok : PropertyFalse;
  return out;
}

Outcome dispatch(const Options& o) {
  const std::string& v = o.verb;
  if (v == "check-identity") return check_identity(o);
  if (v == "implied") return implied(o);
  if (v == "reflect") return reflect_verb(o);
  if (v == "kernel") return kernel_verb(o);
  if (v == "cokernel") return cokernel_verb(o);
  if (v == "coequalize") return coequalize_verb(o);
  if (v == "quotient") return quotient_verb(o);
  if (v == "ideal") return ideal_verb(o);
  if (v == "subalgebra") return subalgebra_verb(o);
  if (v == "product") return product_verb(o);
  if (v == "pullback") return pullback_verb(o);
  if (v == "image") return image_verb(o);
  if (v == "exact") return exact_verb(o);
  if (v == "free") return free_verb(o);
  if (v == "coproduct") return coproduct_verb(o);
  if (v == "flat") return flat_verb(o);
  if (v == "coherent") return coherent_verb(o);
  if (v == "orzech") return orzech_verb(o);
  if (v == "homog") return homog_verb(o);
  if (v == "derivations") return derivations_verb(o);
  if (v == "commutator") return commutator_verb(o);
  if (v == "split-five") return split_five_verb(o);
  throw UsageError("unknown verb '" + v + "'");
}

// ------------------------------------------------------------ text output

bool is_inline(const json& v) {
  if (v.is_object()) return v.empty();
  if (!v.is_array()) return true;
  for (const json& e : v)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

std::string inline_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) return "{}";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + inline_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

void render_array(const json& a, std::size_t indent, std::string& out);

void render_object(const json& obj, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, val] : obj.items()) {
    if (is_inline(val)) {
      out += pad + key + ": " + inline_text(val) + "\n";
    } else if (val.is_object()) {
      out += pad + key + ":\n";
      render_object(val, indent + 2, out);
    } else {
      out += pad + key + ":\n";
      render_array(val, indent + 2, out);
    }
  }
}

void render_array(const json& a, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  for (const json& e : a) {
    if (is_inline(e)) {
      out += pad + "- " + inline_text(e) + "\n";
    } else if (e.is_object()) {
      std::string block;
      render_object(e, indent + 2, block);
      block[indent] = '-';
      out += block;
    } else {
      out += pad + "-\n";
      render_array(e, indent + 2, out);
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with finite-dimensional non-associative algebras and varieties", "nalg"};
  Options o;
  std::string budget_text;
  app.add_option("verb", o.verb, "Operation to run")->required()->check(CLI::IsMember(verbs()));
  app.add_option("--algebra", o.algebras, "Algebra file (repeatable; order matters)");
  app.add_option("--map", o.maps, "Morphism file (repeatable; order matters)");
  app.add_option("--poly", o.polys, "Polynomial, or element of the algebra (repeatable)");
  app.add_option("--variety", o.variety, "Variety file or preset name");
  app.add_option("--letters", o.letters, "Comma-separated letters for 'free'");
  app.add_option("--degree", o.degree, "Truncation degree (default 4)");
  app.add_option("--mode", o.mode, "Identity check mode")->check(CLI::IsMember({"symbolic", "exhaustive"}));
  app.add_option("--budget", o.budget, "Cap on exhaustive assignments and on truncated basis size");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--lambda", o.lambda, "Sixteen comma-separated scalars for 'orzech'")->allow_extra_args(false);
  app.add_option("--field", o.field, "Field for presets when no algebra is given: Q or GF(p)");
  app.add_option("--equation", o.equation, "Orzech equation(s) to decide: first, second or both");
  app.add_flag("--open", o.open, "'exact': do not add zero objects at the ends");

  // Values such as `--lambda -1,-1,...` start with '-'; bind them explicitly.
  std::vector<std::string> argv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if ((args[i] == "--lambda" || args[i] == "--poly") && i + 1 < args.size()) {
      argv.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      argv.push_back(args[i]);
    }
  }
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }

  Outcome result;
  try {
    result = dispatch(o);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return OverBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }

  json doc;
  if (o.format == "json") doc["schema"] = 1;
  doc["verb"] = o.verb;
  for (const auto& [k, v] : result.body.items()) doc[k] = v;
  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    std::string text;
    render_object(doc, 0, text);
    out << text;
  }
  return result.code;
}

}  // namespace nalg::cli
