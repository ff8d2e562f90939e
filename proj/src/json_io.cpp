#include "regzeta/json_io.hpp"

#include <sstream>

#include "regzeta/typecomb.hpp"

namespace regzeta {

namespace {

Json tau_json(const TypeTriple& tau) {
    Json S = Json::array();
    for (const auto& [de, cnt] : tau.S) S.push_back(Json::array({de.first, de.second, cnt}));
    Json T = Json::array();
    for (const auto& [de, cnt] : tau.T) T.push_back(Json::array({de.first, de.second, cnt}));
    Json j;
    j["r"] = tau.r;
    j["S"] = S;
    j["T"] = T;
    return j;
}

Json meta_json(const GroupKind* kind, int n, const std::optional<BigInt>& q, const Fq* F) {
    Json m;
    m["group"] = kind ? Json(kind->name()) : Json(nullptr);
    m["n"] = n;
    m["q"] = q ? Json(q->str()) : Json(nullptr);
    m["p"] = F ? Json(static_cast<int64_t>(F->p())) : Json(nullptr);
    m["k"] = F ? Json(static_cast<int64_t>(F->k())) : Json(nullptr);
    m["convention_notes"] = convention_notes();
    return m;
}

Json dirichlet_json(const std::vector<DirichletTerm>& terms) {
    Json arr = Json::array();
    for (const auto& t : terms) arr.push_back(Json::array({t.m.str(), t.a.str()}));
    return arr;
}

std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string tau_label(const Json& tau) {
    TypeTriple t;
    t.r = tau["r"].get<int>();
    for (const auto& cell : tau["S"])
        t.S[{cell[0].get<int>(), cell[1].get<int>()}] = cell[2].get<int>();
    for (const auto& cell : tau["T"])
        t.T[{cell[0].get<int>(), cell[1].get<int>()}] = cell[2].get<int>();
    return t.str();
}

}  // namespace

const std::vector<std::string>& convention_notes() {
    static const std::vector<std::string> notes = {
        "field elements are lex-rank indices 0..q-1 for the lexicographically least monic "
        "irreducible modulus ordered by descending-power coefficients (F_9 uses t^2 + 1)",
        "gram matrices: sp_2n antidiagonal J[i][2n-1-i] = (-1)^i; so_{2n+1} hyperbolic pairs "
        "[[0,1],[1,0]] plus a final 1; so_2n^+ n hyperbolic pairs; so_2n^- ends in diag(1, -delta) "
        "with delta the least nonsquare, the anisotropic plane x^2 - delta*y^2",
        "sign convention: eps = +1 means Witt index n and group order factor (q^n - 1), eps = -1 "
        "means Witt index n-1 and (q^n + 1); anchored by the exhaustively enumerated orders "
        "|SO_4^+(F_5)| = 14400 and |SO_4^-(F_5)| = 15600",
        "orbit splitting: sp_2n gives two orbits per singular minimal polynomial and one "
        "otherwise; so_{2n+1} always one; so_2n^eps gives two for r = 0 and r >= 2 but one for "
        "r = 1, with centralizer order q^{n-1-w}(q - eps*sigma) prod (q^d + 1)^S (q^d - 1)^T, "
        "sigma = (-1)^{sum e*S_{d,e}}; fixed against the orbit oracle at so_4^{+-}(F_5)",
    };
    return notes;
}

std::vector<TypeRow> type_rows(int n, const std::optional<BigInt>& q) {
    std::vector<TypeRow> rows;
    for (const auto& tau : enumerate_types(n)) {
        TypeRow row;
        row.tau = tau;
        row.mass = type_mass(tau);
        row.core = centralizer_core(tau);
        if (q) {
            row.mass_at = type_mass_at(tau, *q);
            row.core_at = centralizer_core_at(tau, *q);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json types_doc(int n, const std::optional<BigInt>& q, const std::vector<TypeRow>& rows) {
    Json doc;
    doc["schema_version"] = 1;
    doc["meta"] = meta_json(nullptr, n, q, nullptr);
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["tau"] = tau_json(row.tau);
        r["weight"] = row.tau.weight();
        r["singular"] = row.tau.singular();
        r["sign"] = row.tau.sign();
        r["mass_poly"] = row.mass.str();
        r["core_poly"] = row.core.str();
        r["mass_at_q"] = row.mass_at ? Json(row.mass_at->str()) : Json(nullptr);
        r["core_at_q"] = row.core_at ? Json(row.core_at->str()) : Json(nullptr);
        arr.push_back(std::move(r));
    }
    doc["types"] = std::move(arr);
    return doc;
}

Json orbits_doc(const GroupKind& kind, const Fq& F, const std::vector<OrbitFamily>& fams) {
    Json doc;
    doc["schema_version"] = 1;
    doc["meta"] = meta_json(&kind, kind.n, BigInt(F.q()), &F);
    Json arr = Json::array();
    BigInt total = 0;
    for (const auto& fam : fams) {
        Json r;
        r["tau"] = tau_json(fam.tau);
        r["singular"] = fam.singular;
        r["num_polys"] = fam.num_polys.str();
        r["orbits_per_poly"] = fam.orbits_per_poly;
        r["orbit_size"] = fam.orbit_size.str();
        r["centralizer_order"] = fam.centralizer_order.str();
        arr.push_back(std::move(r));
        total += fam.regular_elements();
    }
    doc["families"] = std::move(arr);
    doc["group_order"] = group_order_at(kind, BigInt(F.q())).str();
    doc["regular_total"] = total.str();
    return doc;
}

Json zeta_doc(const GroupKind& kind, const Fq& F, const RegZetaSeries& series,
              const Ledger& ledger, int levels) {
    Json doc;
    doc["schema_version"] = 1;
    doc["meta"] = meta_json(&kind, kind.n, BigInt(F.q()), &F);
    doc["dirichlet"] = dirichlet_json(series.level1.terms);
    Json z;
    z["n"] = kind.n;
    z["alpha"] = series.alpha;
    z["q"] = series.q.str();
    auto ab = abscissa(kind);
    z["abscissa"] = Json::array({ab.first, ab.second});
    z["levels"] = levels;
    doc["zeta"] = std::move(z);
    Json layers = Json::array();
    for (const auto& layer : ledger.layers) layers.push_back(dirichlet_json(layer));
    doc["layers"] = std::move(layers);
    doc["ledger"] = dirichlet_json(ledger.merged);
    return doc;
}

Json verify_doc(const GroupKind& kind, const Fq& F, const CompareReport& rep) {
    Json doc;
    doc["schema_version"] = 1;
    doc["meta"] = meta_json(&kind, kind.n, BigInt(F.q()), &F);
    auto fams = classify(kind, BigInt(F.q()));
    doc["families"] = orbits_doc(kind, F, fams)["families"];
    Json v;
    v["strategy"] = rep.strategy;
    v["group_order"] = rep.group_order.str();
    v["regular_count"] = std::to_string(rep.regular_count);
    v["minpoly_classes"] = static_cast<int64_t>(rep.minpoly_classes);
    v["predicate_mismatches"] = static_cast<int64_t>(rep.predicate_mismatches);
    v["diffs"] = rep.diffs;
    v["ok"] = rep.ok();
    doc["verify"] = std::move(v);
    return doc;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_csv(DocKind kind, const Json& doc) {
    std::ostringstream out;
    switch (kind) {
        case DocKind::Types:
            out << "tau,weight,singular,sign,mass_poly,mass_at_q,core_poly,core_at_q\n";
            for (const auto& r : doc["types"]) {
                out << csv_escape(tau_label(r["tau"])) << ',' << r["weight"].get<int>() << ','
                    << (r["singular"].get<bool>() ? "true" : "false") << ','
                    << r["sign"].get<int>() << ',' << csv_escape(r["mass_poly"].get<std::string>())
                    << ',' << (r["mass_at_q"].is_null() ? "" : r["mass_at_q"].get<std::string>())
                    << ',' << csv_escape(r["core_poly"].get<std::string>()) << ','
                    << (r["core_at_q"].is_null() ? "" : r["core_at_q"].get<std::string>()) << '\n';
            }
            break;
        case DocKind::Orbits:
            out << "tau,singular,num_polys,orbits_per_poly,orbit_size,centralizer_order\n";
            for (const auto& r : doc["families"]) {
                out << csv_escape(tau_label(r["tau"])) << ','
                    << (r["singular"].get<bool>() ? "true" : "false") << ','
                    << r["num_polys"].get<std::string>() << ',' << r["orbits_per_poly"].get<int>()
                    << ',' << r["orbit_size"].get<std::string>() << ','
                    << r["centralizer_order"].get<std::string>() << '\n';
            }
            break;
        case DocKind::Zeta:
            out << "degree,count\n";
            for (const auto& pair : doc["ledger"])
                out << pair[0].get<std::string>() << ',' << pair[1].get<std::string>() << '\n';
            break;
        case DocKind::Verify:
            out << "diff\n";
            for (const auto& d : doc["verify"]["diffs"]) out << csv_escape(d.get<std::string>()) << '\n';
            break;
    }
    return out.str();
}

std::string render_text(DocKind kind, const Json& doc) {
    std::ostringstream out;
    const Json& meta = doc["meta"];
    switch (kind) {
        case DocKind::Types: {
            out << "types X_" << meta["n"].get<int>();
            if (!meta["q"].is_null()) out << " at q = " << meta["q"].get<std::string>();
            out << " (" << doc["types"].size() << " rows)\n";
            for (const auto& r : doc["types"]) {
                out << "  " << tau_label(r["tau"]) << "  sign " << (r["sign"].get<int>() > 0 ? "+" : "-")
                    << "  mass " << r["mass_poly"].get<std::string>();
                if (!r["mass_at_q"].is_null()) out << " = " << r["mass_at_q"].get<std::string>();
                out << "  core " << r["core_poly"].get<std::string>();
                if (!r["core_at_q"].is_null()) out << " = " << r["core_at_q"].get<std::string>();
                out << '\n';
            }
            break;
        }
        case DocKind::Orbits: {
            out << "regular orbit families of " << meta["group"].get<std::string>() << " n = "
                << meta["n"].get<int>() << " q = " << meta["q"].get<std::string>() << '\n';
            out << "group order " << doc["group_order"].get<std::string>() << ", regular elements "
                << doc["regular_total"].get<std::string>() << '\n';
            for (const auto& r : doc["families"]) {
                out << "  " << tau_label(r["tau"]) << "  polys " << r["num_polys"].get<std::string>()
                    << "  orbits/poly " << r["orbits_per_poly"].get<int>() << "  size "
                    << r["orbit_size"].get<std::string>() << "  centralizer "
                    << r["centralizer_order"].get<std::string>() << '\n';
            }
            break;
        }
        case DocKind::Zeta: {
            const Json& z = doc["zeta"];
            out << "regular zeta data for " << meta["group"].get<std::string>() << " n = "
                << meta["n"].get<int>() << " q = " << meta["q"].get<std::string>() << '\n';
            out << "level-1 Dirichlet sum:";
            for (const auto& pair : doc["dirichlet"])
                out << "  " << pair[1].get<std::string>() << " * " << pair[0].get<std::string>()
                    << "^-s";
            out << '\n';
            out << "denominator 1 - q^(n - alpha*s), alpha = " << z["alpha"].get<int>()
                << "; abscissa " << z["abscissa"][0].get<int64_t>() << "/"
                << z["abscissa"][1].get<int64_t>() << '\n';
            out << "degree ledger through level " << z["levels"].get<int>() << ":\n";
            for (const auto& pair : doc["ledger"])
                out << "  degree " << pair[0].get<std::string>() << "  count "
                    << pair[1].get<std::string>() << '\n';
            break;
        }
        case DocKind::Verify: {
            const Json& v = doc["verify"];
            out << "verify " << meta["group"].get<std::string>() << " n = " << meta["n"].get<int>()
                << " q = " << meta["q"].get<std::string>() << " [" << v["strategy"].get<std::string>()
                << "]\n";
            out << "group order " << v["group_order"].get<std::string>() << ", regular elements "
                << v["regular_count"].get<std::string>() << ", minimal-polynomial classes "
                << v["minpoly_classes"].get<int64_t>() << ", predicate mismatches "
                << v["predicate_mismatches"].get<int64_t>() << '\n';
            if (v["ok"].get<bool>()) {
                out << "empty diff: matrix enumeration agrees with the closed formulas\n";
            } else {
                out << "DIFFS:\n";
                for (const auto& d : v["diffs"]) out << "  " << d.get<std::string>() << '\n';
            }
            break;
        }
    }
    return out.str();
}

}  // namespace regzeta
