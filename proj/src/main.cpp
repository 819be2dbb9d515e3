#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "csw/serialize.hpp"
#include "csw/verify.hpp"
#include "csw/whittaker.hpp"

using namespace csw;

namespace {

CoordVec parse_coords(const std::string& s) {
    CoordVec out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece = s.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(std::stoll(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

RatVec parse_rationals(const std::string& s) {
    RatVec out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece = s.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(rational_from_string(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::map<std::size_t, Coord> parse_mult(const std::vector<std::string>& kvs) {
    std::map<std::size_t, Coord> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--mult", "expected k=v, got '" + kv +
                                                     "'");
        out[std::stoul(kv.substr(0, eq))] = std::stoll(kv.substr(eq + 1));
    }
    return out;
}

void print_element(const GroupAlgebraElement& e, const std::string& format) {
    if (format == "json")
        std::cout << element_to_json(e).dump(2) << "\n";
    else
        std::cout << e.to_string() << "\n";
}

/// elapsed_ms is zeroed so output is byte-identical across runs.
Json report_json_stable(const VerifyReport& r) {
    auto j = report_to_json(r);
    j["elapsed_ms"] = 0;
    return j;
}

int emit_reports(const std::vector<VerifyReport>& reports,
                 const std::string& format) {
    bool ok = true;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_json_stable(r));
        std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (format != "json") {
            std::cout << r.check << " " << r.datum << " cases=" << r.cases
                      << " failures=" << r.failures.size() << "\n";
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Casselman-Shalika computations for unramified "
                 "root data"};
    app.require_subcommand(1);

    std::string datum_ref = "catalog:A1-adjoint";
    std::string format = "json";
    std::vector<std::string> mult_kvs;
    unsigned seed = 0;
    long long box = 0;
    long long lambda_max = 2;
    std::string mu_str, lambda_str, point_str_, q_str, expr;

    auto add_datum = [&](CLI::App* c) {
        c->add_option("--datum", datum_ref,
                      "catalog:NAME or file:PATH (CartanSpec JSON)");
        c->add_option("--mult", mult_kvs,
                      "override d_alpha, positive-root-index=value");
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    // datum
    auto* datum_cmd = app.add_subcommand("datum", "root datum construction");
    datum_cmd->require_subcommand(1);
    auto* datum_list = datum_cmd->add_subcommand("list", "catalog names");
    add_format(datum_list);
    auto* datum_show = datum_cmd->add_subcommand("show", "datum summary");
    add_datum(datum_show);
    add_format(datum_show);

    // char
    auto* char_cmd = app.add_subcommand("char", "Weyl characters");
    auto* char_eval = char_cmd->add_subcommand("eval", "chV_lambda");
    add_datum(char_eval);
    add_format(char_eval);
    char_eval->add_option("--lambda", lambda_str, "dominant, X_*(A) coords")
        ->required();

    // tensor
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor coefficients");
    auto* tensor_eval =
        tensor_cmd->add_subcommand("eval", "c^eta_{mu,lambda}");
    add_datum(tensor_eval);
    add_format(tensor_eval);
    tensor_eval->add_option("--lambda", lambda_str, "dominant, X_*(A) coords")
        ->required();
    tensor_eval
        ->add_option("--mu", mu_str, "strictly dominant, X_*(A) coords")
        ->required();

    // hecke
    auto* hecke_cmd = app.add_subcommand("hecke", "Iwahori-Hecke algebra");
    auto* hecke_nf = hecke_cmd->add_subcommand(
        "normal-form", "Bernstein normal form of a term expression");
    add_datum(hecke_nf);
    std::string hecke_format = "text";
    hecke_nf->add_option("--format", hecke_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    hecke_nf->add_option("expr", expr, "e.g. \"T[s1]*T[s1]\"")->required();

    // cs
    auto* cs_cmd = app.add_subcommand("cs", "Whittaker values");
    auto* cs_eval = cs_cmd->add_subcommand("eval", "cs_value at mu");
    add_datum(cs_eval);
    add_format(cs_eval);
    cs_eval->add_option("--mu", mu_str, "strictly dominant")->required();
    cs_eval->add_option("--point", point_str_,
                        "Satake point z1,z2,... (with --q: specialize)");
    cs_eval->add_option("--q", q_str, "residue cardinality num/den");
    auto* cs_general = cs_cmd->add_subcommand(
        "general", "general_cs_value through the isogeny decomposition");
    add_datum(cs_general);
    add_format(cs_general);
    cs_general->add_option("--mu", mu_str, "strictly dominant")->required();
    auto* cs_cond = cs_cmd->add_subcommand(
        "conductor-o", "conductor-O value at a dominant lambda");
    add_datum(cs_cond);
    add_format(cs_cond);
    cs_cond->add_option("--lambda", lambda_str, "dominant")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification sweeps");
    verify_cmd->require_subcommand(1);
    long long dim_limit = 500, trials = 100, points = 20;
    std::map<std::string, CLI::App*> checks;
    for (const char* name :
         {"characters", "dual", "commid", "assoc", "savin", "module",
          "recursion", "ratio", "conductor", "uniqueness", "general",
          "schur", "all"}) {
        auto* c = verify_cmd->add_subcommand(name, "");
        add_format(c);
        c->add_option("--seed", seed, "sweep seed");
        if (std::string(name) != "all" && std::string(name) != "schur") {
            add_datum(c);
            c->add_option("--box", box, "box parameter");
            c->add_option("--lambda-max", lambda_max, "lambda bound");
        }
        c->add_option("--dim-limit", dim_limit, "");
        c->add_option("--trials", trials, "");
        c->add_option("--points", points, "");
        checks[name] = c;
    }

    try {
        app.parse(argc, argv);

        auto load = [&]() { return load_datum(datum_ref, parse_mult(mult_kvs)); };

        if (*datum_list) {
            if (format == "json") {
                std::cout << Json(RootDatum::catalog_names()).dump(2) << "\n";
            } else {
                for (const auto& n : RootDatum::catalog_names())
                    std::cout << n << "\n";
            }
        } else if (*datum_show) {
            auto d = load();
            if (format == "json") {
                std::cout << datum_to_json(d).dump(2) << "\n";
            } else {
                std::cout << d.tag() << ": rank " << d.rank() << ", "
                          << d.positive_roots().size()
                          << " positive roots, |W| = " << d.weyl().size()
                          << "\n";
            }
        } else if (*char_eval) {
            auto d = load();
            const auto& dual = d.dual_datum();
            auto ch = weyl_character(
                dual, dual.inc.apply(parse_coords(lambda_str)));
            print_element(ch.element, format);
        } else if (*tensor_eval) {
            auto d = load();
            const auto& dual = d.dual_datum();
            auto tc = tensor_coeffs(dual, parse_coords(lambda_str),
                                    dual.inc.apply(parse_coords(mu_str)));
            Json arr = Json::array();
            for (const auto& [eta, c] : tc.coeffs)
                arr.push_back(
                    {{"eta", eta}, {"c", rational_to_string(Rational(c))}});
            if (format == "json") {
                std::cout << Json{{"mu", tc.mu},
                                  {"lambda", tc.lambda},
                                  {"coeffs", arr}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const auto& t : arr)
                    std::cout << t["c"].get<std::string>() << " * phi"
                              << t["eta"].dump() << "\n";
            }
        } else if (*hecke_nf) {
            auto d = load();
            HeckeAlgebra h(d);
            auto nf = h.to_string(h.parse(expr));
            if (hecke_format == "json")
                std::cout << Json{{"normal_form", nf}}.dump(2) << "\n";
            else
                std::cout << nf << "\n";
        } else if (*cs_eval) {
            auto d = load();
            auto val = cs_value(d, parse_coords(mu_str));
            if (!q_str.empty()) {
                if (point_str_.empty())
                    throw CLI::ValidationError("--q", "requires --point");
                Rational v = specialize(
                    val, {parse_rationals(point_str_),
                          rational_from_string(q_str)});
                if (format == "json")
                    std::cout << Json{{"value", rational_to_string(v)}}.dump(2)
                              << "\n";
                else
                    std::cout << rational_to_string(v) << "\n";
            } else {
                print_element(val, format);
            }
        } else if (*cs_general) {
            auto d = load();
            auto dec = d.isogeny_decomposition();
            print_element(general_cs_value(dec, parse_coords(mu_str)),
                          format);
        } else if (*cs_cond) {
            auto d = load();
            print_element(conductor_O_value(d, parse_coords(lambda_str)),
                          format);
        } else if (*checks["all"]) {
            return emit_reports(verify_all(seed), format);
        } else if (*checks["schur"]) {
            return emit_reports(
                {verify_schur(static_cast<std::size_t>(points), seed)},
                format);
        } else {
            auto d = load();
            VerifyReport r;
            if (*checks["characters"])
                r = verify_characters(d, dim_limit);
            else if (*checks["dual"])
                r = verify_dual(d);
            else if (*checks["commid"])
                r = verify_commid(d, box ? box : 4);
            else if (*checks["assoc"])
                r = verify_split_assoc(d, static_cast<std::size_t>(trials),
                                       seed);
            else if (*checks["savin"])
                r = verify_savin(d, box ? box : 2);
            else if (*checks["module"])
                r = verify_module_iso(d, box ? box : 5);
            else if (*checks["recursion"])
                r = verify_recursion(
                    d, box ? box
                           : static_cast<Coord>(d.semisimple_rank()) + 2,
                    lambda_max);
            else if (*checks["ratio"])
                r = verify_cs_ratio(d, box ? box : 3);
            else if (*checks["conductor"])
                r = verify_conductor(d, box ? box : 4);
            else if (*checks["uniqueness"])
                r = verify_uniqueness(d, box ? box : 6);
            else if (*checks["general"])
                r = verify_general(d, box ? box : 6);
            return emit_reports({r}, format);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
