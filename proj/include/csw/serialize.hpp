#pragma once

#include <json.hpp>

#include "csw/hecke.hpp"
#include "csw/root_datum.hpp"
#include "csw/verify.hpp"

namespace csw {

using Json = nlohmann::ordered_json;

/// {"lattice": tag, "terms": [{"exp": [...], "coeff": [[v_power, "num/den"],
/// ...]}, ...]} with terms and coefficient monomials in canonical order.
Json element_to_json(const GroupAlgebraElement& e);

Json cartan_spec_to_json(const CartanSpec& spec);
CartanSpec cartan_spec_from_json(const Json& j);

Json datum_to_json(const RootDatum& d);

Json report_to_json(const VerifyReport& r);

/// Resolve "catalog:NAME" or "file:PATH" (a CartanSpec JSON document).
RootDatum load_datum(const std::string& ref,
                     const std::map<std::size_t, Coord>& mult_overrides = {});

}  // namespace csw
