#pragma once

#include <json.hpp>

#include <string>

#include "plhyp/complex.hpp"
#include "plhyp/fiberprod.hpp"
#include "plhyp/homology.hpp"
#include "plhyp/hypersimplex.hpp"
#include "plhyp/regneigh.hpp"
#include "plhyp/subdivision.hpp"

namespace plhyp {

using json = nlohmann::json;

// Complexes serialize as {"vertices": [...], "simplices": [[...], ...]} with
// maximal simplices only; the loader closes under faces. Ids that look like
// canonical integers round-trip as JSON numbers, everything else as strings.
json complex_to_json(const Complex& c);
Complex complex_from_json(const json& j);

json map_to_json(const SimplicialMap& m);
SimplicialMap map_from_json(const json& j);

// A triangulation of Delta is a complex plus per-vertex "face" labels.
json triangulation_to_json(const TriangulationOfDelta& t);
TriangulationOfDelta triangulation_from_json(const json& j);

json derived_to_json(const DerivedComplex& dc);

json hypersimplex_to_json(const HyperbolizedSimplex& h);
HyperbolizedSimplex hypersimplex_from_json(const json& j);

json result_to_json(const HyperbolizationResult& r);

json validation_report_to_json(const ValidationReport& r);
json pullback_report_to_json(const PullbackReport& r);
json homology_to_json(const HomologyGroups& h);

/// Canonical text form: sorted keys, fixed separators; used for hashing.
std::string canonical_dump(const json& j);
std::string fnv1a_hex(const std::string& data);

/// Subcomplex from a JSON complex whose vertex ids name vertices of `ambient`.
Subcomplex subcomplex_from_json(const ComplexPtr& ambient, const json& j);

/// OFF export with a deterministic spring embedding; coordinates are
/// presentation-only.
std::string export_off(const Complex& c);

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

}  // namespace plhyp
