#include "kaplansky/json_io.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace kaplansky {

nlohmann::json laurent_to_json(const Laurent& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : f.terms())
        out.push_back({t.exp.i, t.exp.j, t.exp.k, t.coeff});
    return out;
}

Laurent laurent_from_json(const nlohmann::json& j, PrimeChar d) {
    if (!j.is_array())
        throw std::invalid_argument("term list must be a JSON array");
    std::vector<std::pair<ExpVec, std::int64_t>> entries;
    entries.reserve(j.size());
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 4)
            throw std::invalid_argument("each term must be an array [i, j, k, c]");
        for (const auto& v : t)
            if (!v.is_number_integer())
                throw std::invalid_argument("term entries must be integers");
        const auto i = t[0].get<std::int64_t>(), jj = t[1].get<std::int64_t>(),
                   k = t[2].get<std::int64_t>();
        if (i < -exp_limit || i > exp_limit || jj < -exp_limit || jj > exp_limit ||
            k < -exp_limit || k > exp_limit)
            throw std::invalid_argument("term exponent out of range");
        entries.emplace_back(ExpVec{static_cast<std::int32_t>(i), static_cast<std::int32_t>(jj),
                                    static_cast<std::int32_t>(k)},
                             t[3].get<std::int64_t>());
    }
    return Laurent::make(d, entries);
}

nlohmann::json element_to_json(const GroupRingElem& u) {
    return {{"characteristic", u.characteristic().value()},
            {"p", laurent_to_json(u.p())},
            {"q", laurent_to_json(u.q())},
            {"r", laurent_to_json(u.r())},
            {"s", laurent_to_json(u.s())}};
}

GroupRingElem element_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("element must be a JSON object");
    if (!j.contains("characteristic") || !j["characteristic"].is_number_integer())
        throw std::invalid_argument("element needs an integer \"characteristic\" field");
    const auto dval = j["characteristic"].get<std::int64_t>();
    if (dval < 2 || dval > 0x7fffffff)
        throw std::invalid_argument("characteristic out of range");
    const PrimeChar d(static_cast<std::uint32_t>(dval));
    const auto comp = [&](const char* name) {
        if (!j.contains(name))
            throw std::invalid_argument(std::string("element needs a \"") + name + "\" field");
        return laurent_from_json(j[name], d);
    };
    return GroupRingElem(comp("p"), comp("q"), comp("r"), comp("s"));
}

std::string element_to_text(const GroupRingElem& u) {
    std::string out = "characteristic " + std::to_string(u.characteristic().value()) + "\n";
    out += "p  = " + u.p().str() + "\n";
    out += "q  = " + u.q().str() + "\n";
    out += "r  = " + u.r().str() + "\n";
    out += "s  = " + u.s().str() + "\n";
    return out;
}

nlohmann::json search_result_to_json(const SearchResult& result, const SearchBox& box) {
    nlohmann::json hits = nlohmann::json::array();
    for (const auto& hit : result.hits)
        hits.push_back(element_to_json(hit.element));
    return {{"meta",
             {{"characteristic", box.characteristic.value()},
              {"box",
               {{"xmin", box.xmin},
                {"xmax", box.xmax},
                {"ymin", box.ymin},
                {"ymax", box.ymax},
                {"zmin", box.zmin},
                {"zmax", box.zmax}}},
              {"strategy", box.strategy == SearchStrategy::full ? "full" : "ansatz"},
              {"hit_count", result.hits.size()}}},
            {"hits", std::move(hits)}};
}

} // namespace kaplansky
