#pragma once

#include <json.hpp>

#include "powsec/bounds.hpp"
#include "powsec/degeneration.hpp"
#include "powsec/linear_system.hpp"
#include "powsec/secant.hpp"
#include "powsec/toric.hpp"

namespace powsec {

// Machine-readable output. Key order is fixed (insertion order), so a run
// with the same configuration is byte-identical.
using json = nlohmann::ordered_json;

inline json to_json(const BaseComponent& comp) {
    json j;
    if (const auto* v = std::get_if<VeroneseImage>(&comp)) {
        j["type"] = "veronese";
        j["n"] = v->n;
        j["d"] = v->d;
    } else if (const auto* l = std::get_if<LinearSubspace>(&comp)) {
        j["type"] = "linear-subspace";
        j["n"] = l->n;
        j["placement"] = l->placement == SubspacePlacement::Coordinate ? "coordinate" : "random";
    } else if (const auto* p = std::get_if<CoordinatePlanes>(&comp)) {
        j["type"] = "coordinate-planes";
        j["faces"] = p->faces;
    } else if (const auto* f = std::get_if<FatPoint>(&comp)) {
        j["type"] = "fat-point";
        j["multiplicity"] = f->multiplicity;
        switch (f->support.kind) {
            case FatPointSupport::Kind::GeneralAmbient:
                j["support"] = "general";
                break;
            case FatPointSupport::Kind::GeneralOnVeronese:
                j["support"] = "on-veronese";
                j["n"] = f->support.n;
                j["d"] = f->support.d;
                break;
            case FatPointSupport::Kind::CoordinatePoint:
                j["support"] = "coordinate";
                j["index"] = f->support.index;
                break;
        }
    }
    return j;
}

inline json to_json(const DimensionReport& r) {
    json j;
    j["label"] = r.spec.label;
    j["N"] = r.spec.N;
    j["k"] = r.spec.k;
    j["components"] = json::array();
    for (const auto& c : r.spec.components) j["components"].push_back(to_json(c));
    j["computed_dim"] = r.computed_dim;
    j["expected_dim"] = r.expected_dim ? json(*r.expected_dim) : json(nullptr);
    j["virtual_dim"] = r.virtual_dim ? json(*r.virtual_dim) : json(nullptr);
    j["verdict"] = to_string(r.verdict);
    j["seed"] = r.seed;
    j["prime"] = r.prime;
    j["trials"] = r.trials;
    return j;
}

inline json to_json(const SecantReport& r) {
    json j;
    j["label"] = "Sec_" + std::to_string(r.h) + "(V^" + std::to_string(r.k) + "_{" +
                 std::to_string(r.n) + "," + std::to_string(r.d) + "})";
    j["n"] = r.n;
    j["d"] = r.d;
    j["k"] = r.k;
    j["h"] = r.h;
    j["computed_secant_dim"] = r.computed_secant_dim;
    j["expected_secant_dim"] = r.expected_secant_dim;
    j["verdict"] = to_string(r.verdict);
    j["seed"] = r.seed;
    j["prime"] = r.prime;
    j["trials"] = r.trials;
    return j;
}

inline json to_json(const CrossCheckResult& r) {
    json j;
    j["cross_check"] = r.agree;
    j["secant"] = to_json(r.secant);
    j["linear_system"] = to_json(r.linear_system);
    return j;
}

inline json to_json(const Triangulation& t) {
    json j;
    j["n"] = t.n;
    j["d"] = t.d;
    j["simplices"] = json::array();
    for (const auto& s : t.simplices) j["simplices"].push_back(s.vertices);
    j["sink_index"] = t.sink_index;
    return j;
}

inline json to_json(const LedgerEntry& e) {
    json j;
    j["n"] = e.n;
    j["d"] = e.d;
    j["k"] = e.k;
    j["h"] = e.h;
    j["dim_L_P"] = e.dim_L_P.get_str();
    j["dim_hat_P"] = e.dim_hat_P.get_str();
    j["dim_L_F"] = e.dim_L_F.get_str();
    j["dim_hat_F"] = e.dim_hat_F.get_str();
    j["dim_R"] = e.dim_R.get_str();
    j["ledger_total"] = e.ledger_total.get_str();
    j["vdim_general_fiber"] = e.vdim_general_fiber.get_str();
    j["edim_general_fiber"] = e.edim_general_fiber.get_str();
    j["consistent"] = e.consistent;
    return j;
}

inline json to_json(const BruteForceLedgerEntry& e) {
    json j = to_json(e.closed_form);
    j["computed_L_P"] = e.computed_L_P;
    j["computed_hat_P"] = e.computed_hat_P;
    j["computed_L_F"] = e.computed_L_F;
    j["computed_hat_F"] = e.computed_hat_F;
    j["computed_R"] = e.computed_R;
    j["all_match"] = e.all_match;
    j["verified"] = e.verified;
    return j;
}

inline json to_json(const BoundsRow& r) {
    json j;
    j["d"] = r.d;
    j["main_bound"] = r.main_bound.get_str();
    j["thm2_bound"] = r.thm2_bound.get_str();
    j["nenashev_bound"] = r.nenashev_bound.get_str();
    j["generic_rank_num"] = r.generic_rank.get_num().get_str();
    j["generic_rank_den"] = r.generic_rank.get_den().get_str();
    j["fos_bound"] = r.fos_bound.get_str();
    return j;
}

inline json to_json(const ComparisonTable& t) {
    json j;
    j["n"] = t.n;
    j["k"] = t.k;
    j["crossover_d"] = t.crossover_d;
    j["rows"] = json::array();
    for (const auto& r : t.rows) j["rows"].push_back(to_json(r));
    return j;
}

}  // namespace powsec
