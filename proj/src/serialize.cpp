#include "csf/serialize.hpp"

namespace csf {

using nlohmann::json;

json to_json(const ShurReport& r) {
    json j;
    j["closed_walk"] = r.closed_walk;
    if (r.forbidden_factor) {
        j["forbidden_factor"] = {{"factor", r.forbidden_factor->factor},
                                 {"position", r.forbidden_factor->position}};
    }
    if (r.wxyw) {
        j["wxyw"] = {{"w", r.wxyw->w},
                     {"x", std::string(1, r.wxyw->x)},
                     {"y", std::string(1, r.wxyw->y)},
                     {"position", r.wxyw->position}};
    }
    j["pass"] = r.pass();
    return j;
}

json to_json(const LinkReport& r) {
    json j;
    j["frame"] = r.frame;
    j["conditions"] = {{"closed_walk", r.closed_walk},
                       {"no_h_factor", r.no_h_factor},
                       {"no_vxyv", r.no_vxyv},
                       {"t_boundary", r.t_boundary},
                       {"no_adjacent_square", r.no_adjacent_square},
                       {"no_prefix_match", r.no_prefix_match},
                       {"no_suffix_match", r.no_suffix_match}};
    if (r.h_factor) {
        j["h_factor"] = {{"position", r.h_factor->first}, {"mu", r.h_factor->second}};
    }
    if (r.vxyv) {
        j["vxyv"] = {{"w", r.vxyv->w},
                     {"x", std::string(1, r.vxyv->x)},
                     {"y", std::string(1, r.vxyv->y)},
                     {"position", r.vxyv->position}};
    }
    if (r.prefix_match) j["prefix_match"] = *r.prefix_match;
    if (r.suffix_match) j["suffix_match"] = *r.suffix_match;
    j["pass"] = r.pass();
    return j;
}

json to_json(const BuildCertificate& c) {
    json recipe;
    switch (c.recipe.kind) {
        case BuildRecipe::Kind::BruteForce:
            recipe = {{"type", "brute-force"}};
            break;
        case BuildRecipe::Kind::TableEntry:
            recipe = {{"type", "table-entry"}, {"u", c.recipe.u}};
            break;
        case BuildRecipe::Kind::Composite:
            recipe = {{"type", "composite"}, {"v", c.recipe.v}, {"s", c.recipe.s}};
            break;
    }
    return json{{"n", c.n},
                {"word", c.word.canonical()},
                {"recipe", recipe},
                {"level", c.level},
                {"circular_square_free", c.circular_square_free}};
}

BuildCertificate certificate_from_json(const json& j) {
    BuildCertificate c;
    c.n = j.at("n").get<std::size_t>();
    c.word = CircularWord(j.at("word").get<std::string>());
    const json& recipe = j.at("recipe");
    const std::string type = recipe.at("type").get<std::string>();
    if (type == "brute-force") {
        c.recipe.kind = BuildRecipe::Kind::BruteForce;
    } else if (type == "table-entry") {
        c.recipe.kind = BuildRecipe::Kind::TableEntry;
        c.recipe.u = recipe.at("u").get<std::string>();
    } else if (type == "composite") {
        c.recipe.kind = BuildRecipe::Kind::Composite;
        c.recipe.v = recipe.at("v").get<std::string>();
        c.recipe.s = recipe.at("s").get<std::string>();
    } else {
        throw DomainError("unknown recipe type: " + type);
    }
    c.level = j.at("level").get<bool>();
    c.circular_square_free = j.at("circular_square_free").get<bool>();
    return c;
}

}  // namespace csf
