#pragma once

// JSON (and CSV for count tables) interchange. Key order and number
// formatting are fixed so that equal inputs serialize to identical bytes.
//
// Conventions: Levi subsets and strata are 1-based lists of simple-root
// indices on the wire (0-based internally); field elements travel as their
// little-endian base-p coefficient vectors of length k.

#include <string>
#include <vector>

#include <json.hpp>

#include "msat/hecke.hpp"
#include "msat/mv_oracle.hpp"
#include "msat/root_datum.hpp"
#include "msat/satake_params.hpp"

namespace msat {

using Json = nlohmann::ordered_json;

// {"family": "GL", "rank": 3} or explicit
// {"name", "cochar_rank", "simple_roots", "simple_coroots"}.
Json datum_to_json(const BasedRootDatum& rd);
DatumPtr datum_from_json(const Json& j);

// {"group", "levi", "p", "basis", "terms": [{"coweight", "coeff"}]}.
// "group" is a standard name or an embedded datum object.
Json hecke_to_json(const HeckeElement& f);
HeckeElement hecke_from_json(const Json& j);

// {"group", "p", "k", "values": [{"generator", "value"}], "stratum", "rank"}.
// Reading runs the classifier on the generator values and cross-checks the
// stratum/rank fields when present.
Json parameter_to_json(const SatakeParameter& chi);
SatakeParameter parameter_from_json(const Json& j, Int relation_bound = 6);

Json monoid_to_json(const AntidominantMonoid& monoid);
Json relations_to_json(const AntidominantMonoid& monoid,
                       const std::vector<BinomialRelation>& relations);
Json strata_to_json(const std::vector<Stratum>& strata);
Json coset_classes_to_json(const std::vector<CosetClass>& classes);

Json count_rows_to_json(const std::vector<CountRow>& rows);
std::string count_rows_to_csv(const std::vector<CountRow>& rows);
Json convolution_rows_to_json(const std::vector<ConvolutionRow>& rows);
std::string convolution_rows_to_csv(const std::vector<ConvolutionRow>& rows);

}  // namespace msat
