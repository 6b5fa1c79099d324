#include "pargoid/report.hpp"

#include <sstream>

namespace pargoid {

using nlohmann::json;

json toJson(const LawReport& r) {
    json cs = json::array();
    for (const auto& c : r.counterexamples)
        cs.push_back({{"instance", c.instance}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return {{"law", std::string(toString(r.law))},
            {"instances", r.instances},
            {"true", r.trueCount},
            {"false", r.falseCount},
            {"unknown", r.unknownCount},
            {"counterexamples", cs}};
}

json toJson(const SweepEntry& e) {
    json j{{"candidate", print(e.candidate)}, {"status", e.status}};
    j["eliminatedBy"] = e.eliminatedBy.empty() ? json(nullptr) : json(e.eliminatedBy);
    j["instance"] = e.instance.empty() ? json(nullptr) : json(e.instance);
    if (!e.detail.empty())
        j["detail"] = e.detail;
    return j;
}

json toJson(const CompletenessReport& r) {
    json laws = json::array();
    for (const auto& l : r.lawChecks)
        laws.push_back(toJson(l));
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"polynomial", f.polynomial},
                            {"witness", f.witness},
                            {"instance", f.instance},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs}});
    return {{"passed", r.passed()},   {"lawsHold", r.lawsHold},     {"lawChecks", laws},
            {"total", r.total},       {"polynomials", r.polynomials}, {"emptyDomain", r.emptyDomain},
            {"tuples", r.tuples},     {"unknown", r.unknown},       {"failures", failures},
            {"nullaryDefined", r.nullaryDefined}, {"nullaryEmpty", r.nullaryEmpty}};
}

namespace {

json stepsJson(const std::vector<Step>& steps) {
    json out = json::array();
    for (const auto& s : steps)
        out.push_back({{"position", toString(s.position)}, {"rule", std::string(toString(s.rule))},
                       {"result", print(s.result)}});
    return out;
}

} // namespace

json toJson(const Certificate& c) {
    json j{{"kind", std::string(c.kind())}, {"start", print(c.subject())}};
    if (const auto* l = std::get_if<LoCycle>(&c.body)) {
        j["steps"] = stepsJson(l->trace);
        j["repeatIndex"] = l->repeatIndex;
    } else if (const auto* r = std::get_if<RegistryChain>(&c.body)) {
        j["steps"] = stepsJson(r->path);
        j["at"] = toString(r->at);
        j["entry"] = print(r->entry);
        j["provenance"] = r->provenance;
    } else {
        const auto& d = std::get<ClosedDivergentReduct>(c.body);
        j["steps"] = stepsJson(d.path);
        j["inner"] = toJson(*d.inner);
    }
    return j;
}

std::string describe(const LawReport& r) {
    std::ostringstream out;
    out << "law " << toString(r.law) << ": " << r.instances << " instances, " << r.trueCount << " true, "
        << r.falseCount << " false, " << r.unknownCount << " unknown";
    for (const auto& c : r.counterexamples) {
        out << "\n  counterexample (";
        for (std::size_t i = 0; i < c.instance.size(); ++i)
            out << (i ? ", " : "") << c.instance[i];
        out << "): " << c.lhs << " vs " << c.rhs;
    }
    return out.str();
}

} // namespace pargoid
