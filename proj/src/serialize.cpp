#include <sstream>

#include "wittflag/cli.hpp"

namespace wf {

using json = nlohmann::ordered_json;

namespace {

json generators_json(const std::vector<Generator>& gens) {
    json a = json::array();
    for (const auto& g : gens) a.push_back({{"name", g.name}, {"degree", g.degree}});
    return a;
}

std::string blocks_text(const std::vector<int>& b) {
    std::string s = "(";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

std::string ok(bool b) { return b ? "ok" : "FAIL"; }

}  // namespace

json to_json(const WittPresentation& p) {
    json rels = json::array();
    for (const auto& r : p.relations) rels.push_back(r.str());
    return {
        {"type", to_string(p.type)},
        {"params", {{"m", p.m}, {"blocks", p.blocks}}},
        {"structure", to_string(p.structure)},
        {"scalar_a", p.scalar_a},
        {"generators", generators_json(p.generators)},
        {"relations", rels},
        {"exterior", generators_json(p.exterior)},
        {"ranks", {{"0", p.ranks[0]}, {"-1", p.ranks[1]}, {"-2", p.ranks[2]}, {"-3", p.ranks[3]}}},
        {"checks",
         {{"regularity", p.checks.regularity},
          {"reduction", p.checks.reduction},
          {"dim_match", p.checks.dim_match},
          {"table_match", p.checks.table_match}}},
    };
}

std::string to_text(const WittPresentation& p) {
    std::ostringstream o;
    o << "type " << to_string(p.type);
    if (p.type != WittType::A) o << "  m=" << p.m;
    o << "  blocks=" << blocks_text(p.blocks) << "  n=" << p.n << "\n";
    o << "structure: " << to_string(p.structure) << "  (" << p.clause << ")\n";
    if (p.structure == Structure::Ring) {
        o << "W* = Z2[";
        for (size_t i = 0; i < p.generators.size(); ++i) o << (i ? ", " : "") << p.generators[i].name;
        o << "]";
        if (!p.relations.empty()) o << " / (" << p.relations.size() << " relations)";
        if (!p.exterior.empty()) {
            o << " (x) Lambda(";
            for (size_t i = 0; i < p.exterior.size(); ++i) o << (i ? ", " : "") << p.exterior[i].name;
            o << ")";
        }
        o << "\n";
        for (size_t i = 0; i < p.relations.size(); ++i) o << "  r" << i + 1 << " = " << p.relations[i].str() << "\n";
        for (const auto& g : p.exterior) o << "  " << g.name << " in W^" << g.degree << "\n";
    }
    o << "a = " << p.scalar_a << "\n";
    o << "ranks: W^0=" << p.ranks[0] << " W^-1=" << p.ranks[1] << " W^-2=" << p.ranks[2] << " W^-3=" << p.ranks[3] << "\n";
    o << "checks: regularity=" << ok(p.checks.regularity) << " reduction=" << ok(p.checks.reduction)
      << " dim_match=" << ok(p.checks.dim_match) << " table_match=" << ok(p.checks.table_match) << "\n";
    for (const auto& n : p.checks.notes) o << "note: " << n << "\n";
    return o.str();
}

json to_json(const StarRing& r) {
    json gens = json::array(), inv = json::array();
    for (int i = 0; i < r.size(); ++i) {
        const auto& g = r.gens[i];
        gens.push_back({{"name", g.name}, {"laurent", g.laurent}, {"rank", g.rank}});
        inv.push_back({{"gen", g.name}, {"image_monomial", r.str(r.involution[i])}});
    }
    json j = {{"type", to_string(r.type)}, {"m", r.m}, {"blocks", r.blocks}, {"generators", gens}, {"involution", inv}};
    if (!r.relation.empty()) j["relation"] = r.relation;
    return j;
}

}  // namespace wf
