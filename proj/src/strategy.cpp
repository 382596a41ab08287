#include "gsearch/strategy.hpp"

#include <nlohmann/json.hpp>

namespace gsearch {

static nlohmann::json setToJson(const Digraph& g, const VertexSet& s) {
    nlohmann::json a = nlohmann::json::array();
    s.forEach([&](std::size_t v) { a.push_back(g.label(v)); });
    return a;
}

std::string verdictToJson(const Digraph& g, const Verdict& v) {
    nlohmann::json j;
    j["winner"] = v.winner == Winner::Cops ? "cops" : "robber";
    j["peakCops"] = v.peakCops;
    j["monotoneOk"] = v.monotoneOk;
    j["statesExplored"] = v.statesExplored;
    nlohmann::json trace = nlohmann::json::array();
    for (const TraceStep& t : v.trace) {
        nlohmann::json step;
        step["actor"] = t.actor;
        step["move"] = setToJson(g, t.move);
        if (!t.note.empty()) step["note"] = t.note;
        trace.push_back(step);
    }
    j["trace"] = trace;
    return j.dump();
}

}  // namespace gsearch
