#include "msat/serialization.hpp"

#include <sstream>

#include "msat/error.hpp"

namespace msat {

namespace {

Json vec_to_json(const IntVec& v) { return Json(v); }

IntVec vec_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array of integers");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw invalid_input(std::string(what) + " must be integral");
    v.push_back(x.get<Int>());
  }
  return v;
}

Json levi_to_json(const Levi& levi) {
  Json j = Json::array();
  for (int i : levi.indices) j.push_back(i + 1);
  return j;
}

Levi levi_from_json(const Json& j) {
  if (!j.is_array()) throw invalid_input("levi must be an array of 1-based indices");
  std::vector<int> idx;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<Int>() < 1)
      throw invalid_input("levi indices are 1-based positive integers");
    idx.push_back(static_cast<int>(x.get<Int>()) - 1);
  }
  return Levi(idx);
}

Json field_elem_to_json(const FiniteField& f, FiniteField::Elem v) {
  return Json(f.coeffs(v));
}

FiniteField::Elem field_elem_from_json(const FiniteField& f, const Json& j) {
  if (!j.is_array()) throw invalid_input("field elements are coefficient arrays");
  std::vector<uint32_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<Int>() < 0)
      throw invalid_input("field coefficients are non-negative integers");
    c.push_back(static_cast<uint32_t>(x.get<Int>()));
  }
  return f.from_coeffs(c);
}

void append_vec(std::ostringstream& os, const IntVec& v) {
  os << '"';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  os << '"';
}

}  // namespace

Json datum_to_json(const BasedRootDatum& rd) {
  Json j;
  j["name"] = rd.name();
  j["cochar_rank"] = rd.cochar_rank();
  Json roots = Json::array(), coroots = Json::array();
  for (int i = 0; i < rd.num_simple(); ++i) {
    roots.push_back(vec_to_json(rd.simple_root(i)));
    coroots.push_back(vec_to_json(rd.simple_coroot(i)));
  }
  j["simple_roots"] = roots;
  j["simple_coroots"] = coroots;
  return j;
}

DatumPtr datum_from_json(const Json& j) {
  if (!j.is_object()) throw invalid_input("root datum must be a JSON object");
  if (j.contains("family")) {
    if (!j.contains("rank")) throw invalid_input("standard datum needs \"family\" and \"rank\"");
    std::string family = j.at("family").get<std::string>();
    int rank = j.at("rank").get<int>();
    Family fam;
    if (family == "GL")
      fam = Family::GL;
    else if (family == "SL")
      fam = Family::SL;
    else if (family == "PGL")
      fam = Family::PGL;
    else if (family == "Sp")
      fam = Family::Sp;
    else
      throw invalid_input("unknown family: " + family);
    return build_standard(fam, rank);
  }
  for (const char* key : {"name", "cochar_rank", "simple_roots", "simple_coroots"})
    if (!j.contains(key)) throw invalid_input(std::string("root datum is missing \"") + key + "\"");
  IntMat roots, coroots;
  for (const auto& r : j.at("simple_roots")) roots.push_back(vec_from_json(r, "simple root"));
  for (const auto& r : j.at("simple_coroots"))
    coroots.push_back(vec_from_json(r, "simple coroot"));
  return std::make_shared<BasedRootDatum>(j.at("name").get<std::string>(),
                                          j.at("cochar_rank").get<int>(), roots, coroots);
}

namespace {

DatumPtr group_from_json(const Json& j) {
  if (j.is_string()) return build_standard(j.get<std::string>());
  return datum_from_json(j);
}

}  // namespace

Json hecke_to_json(const HeckeElement& f) {
  Json j;
  j["group"] = f.datum->name();
  j["levi"] = levi_to_json(f.levi);
  j["p"] = f.p;
  j["basis"] = f.basis == Basis::Std ? "std" : "ic";
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.coeffs) {
    Json t;
    t["coweight"] = vec_to_json(lambda);
    t["coeff"] = c;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

HeckeElement hecke_from_json(const Json& j) {
  if (!j.is_object()) throw invalid_input("hecke element must be a JSON object");
  for (const char* key : {"group", "p", "basis", "terms"})
    if (!j.contains(key))
      throw invalid_input(std::string("hecke element is missing \"") + key + "\"");
  DatumPtr datum = group_from_json(j.at("group"));
  Levi levi = j.contains("levi") ? levi_from_json(j.at("levi"))
                                 : Levi::full(datum->num_simple());
  std::string basis_name = j.at("basis").get<std::string>();
  Basis basis;
  if (basis_name == "std")
    basis = Basis::Std;
  else if (basis_name == "ic")
    basis = Basis::IC;
  else
    throw invalid_input("basis must be \"std\" or \"ic\"");
  std::vector<std::pair<Coweight, Int>> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("coweight") || !t.contains("coeff"))
      throw invalid_input("each term needs \"coweight\" and \"coeff\"");
    terms.emplace_back(vec_from_json(t.at("coweight"), "coweight"), t.at("coeff").get<Int>());
  }
  return make_hecke(datum, levi, j.at("p").get<Int>(), basis, terms);
}

Json parameter_to_json(const SatakeParameter& chi) {
  Json j;
  j["group"] = chi.datum()->name();
  j["p"] = chi.field()->p();
  j["k"] = chi.field()->k();
  Json vals = Json::array();
  for (const auto& [g, v] : generator_values(chi)) {
    Json entry;
    entry["generator"] = vec_to_json(g);
    entry["value"] = field_elem_to_json(*chi.field(), v);
    vals.push_back(entry);
  }
  j["values"] = vals;
  j["stratum"] = levi_to_json(chi.stratum());
  j["rank"] = chi.rank();
  return j;
}

SatakeParameter parameter_from_json(const Json& j, Int relation_bound) {
  if (!j.is_object()) throw invalid_input("parameter must be a JSON object");
  for (const char* key : {"group", "p", "values"})
    if (!j.contains(key)) throw invalid_input(std::string("parameter is missing \"") + key + "\"");
  DatumPtr datum = group_from_json(j.at("group"));
  Int p = j.at("p").get<Int>();
  int k = j.contains("k") ? j.at("k").get<int>() : 1;
  FieldPtr field = make_field(p, k);
  std::vector<std::pair<Coweight, FiniteField::Elem>> values;
  for (const auto& entry : j.at("values")) {
    if (!entry.contains("generator") || !entry.contains("value"))
      throw invalid_input("each value needs \"generator\" and \"value\"");
    values.emplace_back(vec_from_json(entry.at("generator"), "generator"),
                        field_elem_from_json(*field, entry.at("value")));
  }
  SatakeParameter chi = classify(datum, field, values, relation_bound);
  if (j.contains("stratum")) {
    Levi claimed = levi_from_json(j.at("stratum"));
    if (!(claimed == chi.stratum()))
      throw verification_error("declared stratum does not match the classified one");
  }
  if (j.contains("rank") && j.at("rank").get<int>() != chi.rank())
    throw verification_error("declared rank does not match the classified one");
  return chi;
}

Json monoid_to_json(const AntidominantMonoid& monoid) {
  Json j;
  j["group"] = monoid.datum->name();
  j["side"] = monoid.dominant_side ? "dominant" : "antidominant";
  Json lin = Json::array(), pointed = Json::array(), gens = Json::array();
  for (const auto& v : monoid.lineality_basis) lin.push_back(vec_to_json(v));
  for (const auto& v : monoid.pointed_generators) pointed.push_back(vec_to_json(v));
  for (const auto& v : monoid.generators) gens.push_back(vec_to_json(v));
  j["lineality_basis"] = lin;
  j["pointed_generators"] = pointed;
  j["generators"] = gens;
  return j;
}

Json relations_to_json(const AntidominantMonoid& monoid,
                       const std::vector<BinomialRelation>& relations) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : monoid.generators) gens.push_back(vec_to_json(g));
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& rel : relations) {
    Json r;
    r["left"] = Json(rel.left);
    r["right"] = Json(rel.right);
    r["pretty"] = relation_to_string(rel);
    rels.push_back(r);
  }
  j["relations"] = rels;
  return j;
}

Json strata_to_json(const std::vector<Stratum>& strata) {
  Json j = Json::array();
  for (const auto& s : strata) {
    Json e;
    e["levi"] = levi_to_json(s.levi);
    e["rank"] = s.rank;
    j.push_back(e);
  }
  return j;
}

Json coset_classes_to_json(const std::vector<CosetClass>& classes) {
  Json j = Json::array();
  for (const auto& c : classes) {
    Json e;
    e["representative"] = vec_to_json(c.representative);
    e["label"] = Json(c.label);
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(vec_to_json(m));
    e["members"] = members;
    j.push_back(e);
  }
  return j;
}

Json count_rows_to_json(const std::vector<CountRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["q"] = r.q;
    e["lambda"] = vec_to_json(r.lambda);
    e["nu"] = vec_to_json(r.nu);
    e["raw_count"] = r.raw;
    e["count_mod_p"] = r.mod_p;
    j.push_back(e);
  }
  return j;
}

std::string count_rows_to_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "q,lambda,nu,raw_count,count_mod_p\n";
  for (const auto& r : rows) {
    os << r.q << ',';
    append_vec(os, r.lambda);
    os << ',';
    append_vec(os, r.nu);
    os << ',' << r.raw << ',' << r.mod_p << '\n';
  }
  return os.str();
}

Json convolution_rows_to_json(const std::vector<ConvolutionRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["q"] = r.q;
    e["mu1"] = vec_to_json(r.mu1);
    e["mu2"] = vec_to_json(r.mu2);
    e["lambda"] = vec_to_json(r.lambda);
    e["raw_count"] = r.raw;
    e["count_mod_p"] = r.mod_p;
    j.push_back(e);
  }
  return j;
}

std::string convolution_rows_to_csv(const std::vector<ConvolutionRow>& rows) {
  std::ostringstream os;
  os << "q,mu1,mu2,lambda,raw_count,count_mod_p\n";
  for (const auto& r : rows) {
    os << r.q << ',';
    append_vec(os, r.mu1);
    os << ',';
    append_vec(os, r.mu2);
    os << ',';
    append_vec(os, r.lambda);
    os << ',' << r.raw << ',' << r.mod_p << '\n';
  }
  return os.str();
}

}  // namespace msat
