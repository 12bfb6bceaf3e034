#include "lineadm/io.hpp"

#include <fstream>
#include <utility>

namespace lineadm {

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("parse error in '" + path + "': " + e.what());
  }
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key,
                            const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) throw input_error(context + ": missing '" + key + "'");
  return *it;
}

Json incidence_to_json(const ProjPoint& p, const std::vector<std::size_t>& incident) {
  Json j;
  j["point"] = point_to_json(p);
  j["incident"] = incident;
  j["multiplicity"] = incident.size();
  return j;
}

}  // namespace

Rational rational_from_json(const nlohmann::json& v, const std::string& context) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw input_error(context + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw input_error(context + ": expected a rational string like \"p/q\" or an integer");
}

Arrangement arrangement_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw input_error("arrangement: expected a JSON object");
  const nlohmann::json& lines_json = field(doc, "lines", "arrangement");
  if (!lines_json.is_array() || lines_json.empty()) {
    throw input_error("arrangement: 'lines' must be a non-empty array");
  }

  std::vector<ProjLine> lines;
  std::optional<std::size_t> infinity;
  for (std::size_t i = 0; i < lines_json.size(); ++i) {
    const nlohmann::json& item = lines_json[i];
    const std::string context = "lines[" + std::to_string(i) + "]";
    if (item.is_string()) {
      if (item.get<std::string>() != "infinity") {
        throw input_error(context + ": unrecognized line form '" + item.get<std::string>() + "'");
      }
      if (!infinity) infinity = i;
      lines.push_back(ProjLine::at_infinity());
    } else if (item.is_object() && item.contains("homog")) {
      const nlohmann::json& h = item["homog"];
      if (!h.is_array() || h.size() != 3) {
        throw input_error(context + ": 'homog' must be an array of 3 rationals");
      }
      try {
        lines.push_back(ProjLine::from_coeffs(rational_from_json(h[0], context),
                                              rational_from_json(h[1], context),
                                              rational_from_json(h[2], context)));
      } catch (const std::invalid_argument& e) {
        throw input_error(context + ": " + e.what());
      }
    } else if (item.is_object() && item.contains("affine")) {
      const nlohmann::json& a = item["affine"];
      if (!a.is_object()) throw input_error(context + ": 'affine' must be an object");
      lines.push_back(ProjLine::from_affine(
          rational_from_json(field(a, "slope", context), context + ".slope"),
          rational_from_json(field(a, "intercept", context), context + ".intercept")));
    } else if (item.is_object() && item.contains("vertical")) {
      lines.push_back(
          ProjLine::from_vertical(rational_from_json(item["vertical"], context + ".vertical")));
    } else {
      throw input_error(context + ": unrecognized line form");
    }
  }
  return Arrangement::build(std::move(lines), infinity);
}

LocalSystem local_system_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw input_error("local system: expected a JSON object");
  const nlohmann::json& classes_json = field(doc, "classes", "local system");
  if (!classes_json.is_array()) throw input_error("local system: 'classes' must be an array");
  std::vector<QComplex> classes;
  for (std::size_t i = 0; i < classes_json.size(); ++i) {
    const std::string context = "classes[" + std::to_string(i) + "]";
    const nlohmann::json& item = classes_json[i];
    if (!item.is_object()) throw input_error(context + ": expected an object");
    Rational re = rational_from_json(field(item, "re", context), context + ".re");
    Rational im = item.contains("im") ? rational_from_json(item["im"], context + ".im")
                                      : Rational(0);
    classes.emplace_back(std::move(re), std::move(im));
  }
  return LocalSystem(std::move(classes));
}

Arrangement load_arrangement(const std::string& path) {
  return arrangement_from_json(load_json(path));
}

LocalSystem load_local_system(const std::string& path) {
  return local_system_from_json(load_json(path));
}

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Json qcomplex_to_json(const QComplex& z) {
  Json j;
  j["re"] = z.re.str();
  j["im"] = z.im.str();
  return j;
}

Json point_to_json(const ProjPoint& p) {
  Json j = Json::array();
  for (const Rational& c : p.coords) j.push_back(c.str());
  return j;
}

Json line_to_json(const ProjLine& l, bool is_infinity) {
  if (is_infinity) return Json("infinity");
  Json coeffs = Json::array();
  for (const Rational& c : l.coeffs) coeffs.push_back(c.str());
  Json j;
  j["homog"] = std::move(coeffs);
  return j;
}

Json arrangement_to_json(const Arrangement& arr) {
  Json lines = Json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    lines.push_back(line_to_json(arr.lines()[i], arr.infinity_line() == i));
  }
  Json j;
  j["lines"] = std::move(lines);
  return j;
}

Json local_system_to_json(const LocalSystem& system) {
  Json classes = Json::array();
  for (const QComplex& c : system.classes()) classes.push_back(qcomplex_to_json(c));
  Json j;
  j["classes"] = std::move(classes);
  return j;
}

Json classification_to_json(const CkClassification& c) {
  Json j;
  j["k"] = c.k;
  j["minimal_covers"] = c.minimal_covers;
  j["concurrent"] = c.concurrent_flag;
  return j;
}

Json residue_vector_to_json(const ResidueVector& alpha) {
  Json j = Json::array();
  for (const QComplex& e : alpha.entries()) j.push_back(qcomplex_to_json(e));
  return j;
}

Json point_residue_to_json(const PointResidue& pr) {
  Json j = incidence_to_json(pr.point.point, pr.point.incident);
  j["a"] = qcomplex_to_json(pr.a);
  j["b"] = pr.b.str();
  return j;
}

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["method"] = method_name(cert.method);
  j["cover"] = cert.cover_used;
  j["alpha"] = residue_vector_to_json(cert.alpha);
  Json residues = Json::array();
  for (const PointResidue& pr : cert.point_residues) residues.push_back(point_residue_to_json(pr));
  j["point_residues"] = std::move(residues);
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["verdict"] = v.admissible ? "ADMISSIBLE" : "UNKNOWN";
  if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
  Json attempts = Json::array();
  for (const AttemptNote& a : v.attempts) {
    Json note;
    note["method"] = a.method;
    note["cover"] = a.cover;
    note["reason"] = a.reason;
    attempts.push_back(std::move(note));
  }
  j["attempts"] = std::move(attempts);
  return j;
}

Json analyze_report(const Arrangement& arr) {
  Json lines = Json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Json l;
    l["index"] = i;
    Json coeffs = Json::array();
    for (const Rational& c : arr.lines()[i].coeffs) coeffs.push_back(c.str());
    l["coeffs"] = std::move(coeffs);
    l["infinity"] = arr.infinity_line() == i;
    lines.push_back(std::move(l));
  }
  Json points = Json::array();
  for (const IncidencePoint& ip : arr.points()) {
    points.push_back(incidence_to_json(ip.point, ip.incident));
  }
  Json multiple = Json::array();
  for (const MultiplePoint& mp : arr.multiple_points()) {
    multiple.push_back(incidence_to_json(mp.point, mp.incident));
  }
  Json j;
  j["lines"] = std::move(lines);
  j["points"] = std::move(points);
  j["multiple_points"] = std::move(multiple);
  j["classification"] = classification_to_json(classify(arr));
  return j;
}

Json classify_report(const Arrangement& arr) {
  Json j;
  j["classification"] = classification_to_json(classify(arr));
  return j;
}

Json admissible_report(const Arrangement& arr, const LocalSystem& system, const Verdict& v) {
  Json j;
  j["classification"] = classification_to_json(classify(arr));
  j["system"] = local_system_to_json(system);
  Json verdict = verdict_to_json(v);
  for (auto& [key, value] : verdict.items()) j[key] = std::move(value);
  return j;
}

Json aomoto_report(const Arrangement& arr, std::size_t base, const ResidueVector& alpha,
                   bool alpha_from_certificate, bool admissible, const AomotoResult& r) {
  Json j;
  j["base"] = base;
  j["alpha_source"] = alpha_from_certificate ? "certificate" : "standard_lift";
  j["alpha"] = residue_vector_to_json(alpha);
  j["admissible"] = admissible;
  if (!admissible) {
    j["caveat"] =
        "admissibility undecided; the h-values are the dimensions of the wedge complex only";
  }
  j["h"] = Json::array({r.h0, r.h1, r.h2});
  j["rank_d0"] = r.rank_d0;
  j["rank_d1"] = r.rank_d1;
  j["dim_a2"] = r.dim_a2;
  const auto b = betti(arr, base);
  j["betti"] = Json::array({b[0], b[1], b[2]});
  return j;
}

Json corpus_entry_to_json(const CorpusEntry& e) {
  Json lines = Json::array();
  for (std::size_t i = 0; i < e.lines.size(); ++i) {
    lines.push_back(line_to_json(e.lines[i], e.infinity_line == i));
  }
  Json documented = Json::array();
  for (const CorpusEntry::DocumentedPoint& dp : e.documented_multiple_points) {
    Json d;
    d["label"] = dp.label;
    d["point"] = point_to_json(dp.point);
    d["incident"] = dp.incident;
    documented.push_back(std::move(d));
  }
  Json j;
  j["name"] = e.name;
  j["lines"] = std::move(lines);
  if (e.infinity_line) {
    j["infinity_line"] = *e.infinity_line;
  } else {
    j["infinity_line"] = nullptr;
  }
  j["documented_k"] = e.documented_k;
  j["documented_multiple_points"] = std::move(documented);
  j["notes"] = e.notes;
  return j;
}

}  // namespace lineadm
