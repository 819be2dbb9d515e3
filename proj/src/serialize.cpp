#include "csw/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace csw {

Json element_to_json(const GroupAlgebraElement& e) {
    Json terms = Json::array();
    for (const auto& [p, c] : e.terms()) {
        Json coeff = Json::array();
        for (const auto& [k, r] : c.terms())
            coeff.push_back(Json::array({k, rational_to_string(r)}));
        terms.push_back({{"exp", p}, {"coeff", std::move(coeff)}});
    }
    return Json{{"lattice", e.lattice()}, {"terms", std::move(terms)}};
}

Json cartan_spec_to_json(const CartanSpec& spec) {
    Json j;
    j["version"] = 1;
    j["type"] = spec.type;
    switch (spec.lattice.kind) {
        case LatticeChoice::Adjoint:
            j["lattice"] = "adjoint";
            break;
        case LatticeChoice::SimplyConnected:
            j["lattice"] = "sc";
            break;
        case LatticeChoice::Explicit:
            j["lattice"] = Json{{"basis", spec.lattice.basis}};
            break;
    }
    Json mult = Json::object();
    for (const auto& [idx, d] : spec.mult) mult[std::to_string(idx)] = d;
    j["mult"] = std::move(mult);
    j["torus_rank"] = spec.torus_rank;
    return j;
}

CartanSpec cartan_spec_from_json(const Json& j) {
    CartanSpec spec;
    spec.type = j.at("type").get<std::string>();
    if (j.contains("lattice")) {
        const Json& lat = j.at("lattice");
        if (lat.is_string()) {
            auto s = lat.get<std::string>();
            if (s == "adjoint") {
                spec.lattice.kind = LatticeChoice::Adjoint;
            } else if (s == "sc") {
                spec.lattice.kind = LatticeChoice::SimplyConnected;
            } else {
                throw std::invalid_argument("unknown lattice kind '" + s +
                                            "'");
            }
        } else {
            spec.lattice.kind = LatticeChoice::Explicit;
            spec.lattice.basis =
                lat.at("basis").get<std::vector<CoordVec>>();
        }
    }
    if (j.contains("mult"))
        for (const auto& [key, val] : j.at("mult").items())
            spec.mult[std::stoul(key)] = val.get<Coord>();
    if (j.contains("torus_rank"))
        spec.torus_rank = j.at("torus_rank").get<std::size_t>();
    return spec;
}

Json datum_to_json(const RootDatum& d) {
    Json j;
    j["tag"] = d.tag();
    j["rank"] = d.rank();
    j["semisimple_rank"] = d.semisimple_rank();
    j["nonreduced"] = d.nonreduced();
    j["positive_roots"] = d.positive_roots();
    j["positive_coroots"] = d.positive_coroots();
    Json mult = Json::array();
    for (std::size_t i = 0; i < d.positive_roots().size(); ++i)
        mult.push_back(d.mult(i));
    j["mult"] = std::move(mult);
    j["weyl_order"] = d.weyl().size();
    Json rho = Json::array();
    for (const auto& c : d.rho_vee_rational())
        rho.push_back(rational_to_string(c));
    j["rho_vee"] = std::move(rho);
    const auto& dual = d.dual_datum();
    j["dual"] = Json{{"tag", dual.tag},
                     {"rank", dual.rank()},
                     {"positive_roots", dual.positive_roots},
                     {"rho_vee", dual.rho_vee}};
    return j;
}

Json report_to_json(const VerifyReport& r) {
    return Json{{"check", r.check},
                {"datum", r.datum},
                {"cases", r.cases},
                {"failures", r.failures},
                {"elapsed_ms", r.elapsed_ms}};
}

RootDatum load_datum(const std::string& ref,
                     const std::map<std::size_t, Coord>& mult_overrides) {
    CartanSpec spec;
    if (ref.rfind("catalog:", 0) == 0) {
        spec = RootDatum::catalog_spec(ref.substr(8));
    } else if (ref.rfind("file:", 0) == 0) {
        std::ifstream in(ref.substr(5));
        if (!in)
            throw std::invalid_argument("cannot open '" + ref.substr(5) +
                                        "'");
        spec = cartan_spec_from_json(Json::parse(in));
    } else {
        throw std::invalid_argument(
            "datum reference must start with 'catalog:' or 'file:'");
    }
    for (const auto& [idx, d] : mult_overrides) spec.mult[idx] = d;
    return RootDatum::build(spec);
}

}  // namespace csw
