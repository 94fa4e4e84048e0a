#pragma once

#include <json.hpp>

#include "supersplit/splitting.hpp"

namespace supersplit {

using ordered_json = nlohmann::ordered_json;

// Textual term format {"c":"p/q","x":[e_0..e_n],"theta":[j_1..]} with theta
// strictly increasing; a polynomial is the array of its terms in the
// canonical monomial order, so serialization is byte-stable.
ordered_json poly_to_json(const SuperPoly& p);
SuperPoly poly_from_json(const ordered_json& j, int nvars, int modd);

ordered_json module_to_json(const FreeSupermodule& m);
FreeSupermodule module_from_json(const ordered_json& j);

ordered_json matrix_to_json(const SuperMatrix& f);
SuperMatrix matrix_from_json(const ordered_json& j, SuperSpaceSig sp);

ordered_json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const ordered_json& j);

ordered_json rao_to_json(const RaoTable& table);
ordered_json certificate_to_json(const SplitCertificate& cert);
ordered_json not_stabilized_to_json(const NotStabilized& err);

std::string canonical_dump(const ordered_json& j);

}  // namespace supersplit
