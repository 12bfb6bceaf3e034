#pragma once

// JSON input parsing and deterministic report serialization. All rationals
// cross the interface as exact "p/q" strings; plain JSON integers are also
// accepted on input.

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>

#include "lineadm/admissibility.hpp"
#include "lineadm/aomoto.hpp"
#include "lineadm/arrangement.hpp"
#include "lineadm/classify.hpp"
#include "lineadm/corpus.hpp"
#include "lineadm/errors.hpp"
#include "lineadm/local_system.hpp"

namespace lineadm {

using Json = nlohmann::ordered_json;

// Throws input_error with field context on malformed data.
Rational rational_from_json(const nlohmann::json& v, const std::string& context);
Arrangement arrangement_from_json(const nlohmann::json& doc);
LocalSystem local_system_from_json(const nlohmann::json& doc);

// File loaders; parse errors carry byte-offset context.
Arrangement load_arrangement(const std::string& path);
LocalSystem load_local_system(const std::string& path);

Json rational_to_json(const Rational& r);
Json qcomplex_to_json(const QComplex& z);
Json line_to_json(const ProjLine& l, bool is_infinity);
Json point_to_json(const ProjPoint& p);

// Emits the same schema arrangement_from_json consumes.
Json arrangement_to_json(const Arrangement& arr);
Json local_system_to_json(const LocalSystem& system);
Json classification_to_json(const CkClassification& c);
Json residue_vector_to_json(const ResidueVector& alpha);
Json point_residue_to_json(const PointResidue& pr);
Json certificate_to_json(const Certificate& cert);
Json verdict_to_json(const Verdict& v);

// CLI report payloads.
Json analyze_report(const Arrangement& arr);
Json classify_report(const Arrangement& arr);
Json admissible_report(const Arrangement& arr, const LocalSystem& system, const Verdict& v);
Json aomoto_report(const Arrangement& arr, std::size_t base, const ResidueVector& alpha,
                   bool alpha_from_certificate, bool admissible, const AomotoResult& r);
Json corpus_entry_to_json(const CorpusEntry& e);

}  // namespace lineadm
