#include "pargoid/divergence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pargoid {

const Term& Certificate::subject() const {
    return std::visit([](const auto& c) -> const Term& { return c.start; }, body);
}

std::string_view Certificate::kind() const {
    switch (body.index()) {
    case 0:
        return "lo-cycle";
    case 1:
        return "registry-chain";
    default:
        return "closed-reduct";
    }
}

DivergenceRegistry DivergenceRegistry::seeded() {
    const Term w = terms::omega();
    DivergenceRegistry r;
    r.add(Term::app(w, w), "seed: omega omega has no normal form");
    r.add(Term::apply(w, w, w), "seed: omega omega omega reduces to itself");
    r.add(Term::apply(Term::s(), w, terms::i(), w), "seed: s omega i omega reduces to omega omega omega");
    return r;
}

void DivergenceRegistry::add(Term t, std::string justification) {
    if (!t.closed())
        throw std::invalid_argument("registry entries must be closed terms: " + print(t));
    if (justification.empty())
        throw std::invalid_argument("registry entries need a justification");
    if (lookup(t) == nullptr)
        entries_.push_back({std::move(t), std::move(justification)});
}

const DivergenceRegistry::Entry* DivergenceRegistry::lookup(const Term& t) const {
    if (!t.closed())
        return nullptr;
    for (const auto& e : entries_)
        if (e.term == t)
            return &e;
    return nullptr;
}

std::optional<Position> rigidRegistryOccurrence(const Term& t, const DivergenceRegistry& registry) {
    if (registry.lookup(t))
        return Position{};
    // Descend while exactly one child holds redexes and the node itself is
    // not one; the candidates are the right children passed on the way.
    Position at;
    Term cur = t;
    while (cur.containsRedex() && !rootRedex(cur)) {
        const bool l = cur.left().containsRedex();
        const bool r = cur.right().containsRedex();
        if (l && r)
            break;
        at.path.push_back(l ? Side::Left : Side::Right);
        cur = l ? cur.left() : cur.right();
        if (!l && registry.lookup(cur))
            return at;
    }
    return std::nullopt;
}

std::shared_ptr<const Certificate> registryChain(const Term& t, const Budget& budget,
                                                  const DivergenceRegistry& registry) {
    if (registry.entries().empty())
        return nullptr;
    auto g = reachable(t, budget.nodes, budget.maxTermSize,
                       [&](const Term& n) { return rigidRegistryOccurrence(n, registry).has_value(); });
    for (std::size_t i = g.nodes().size(); i-- > 0;) {
        if (auto at = rigidRegistryOccurrence(g.nodes()[i], registry)) {
            const auto* entry = registry.lookup(*subtermAt(g.nodes()[i], *at));
            return std::make_shared<Certificate>(
                Certificate{RegistryChain{t, g.pathTo(i), entry->term, entry->provenance, *at}});
        }
    }
    return nullptr;
}

std::shared_ptr<const Certificate> certifyDivergence(const Term& t, const Budget& budget,
                                                      const DivergenceRegistry& registry) {
    if (const auto* entry = registry.lookup(t)) {
        return std::make_shared<Certificate>(Certificate{RegistryChain{t, {}, entry->term, entry->provenance}});
    }
    auto outcome = normalize(t, budget);
    if (auto* d = std::get_if<Divergent>(&outcome))
        return d->certificate;
    if (isDefined(outcome))
        return nullptr;
    return registryChain(t, budget, registry);
}

namespace {

bool replay(const Term& start, const std::vector<Step>& path, Term& end) {
    Term cur = start;
    for (const Step& s : path) {
        auto sub = subtermAt(cur, s.position);
        if (!sub)
            return false;
        auto rule = rootRedex(*sub);
        if (!rule || *rule != s.rule)
            return false;
        Term next = stepAt(cur, s.position);
        if (next != s.result)
            return false;
        cur = std::move(next);
    }
    end = cur;
    return true;
}

} // namespace

bool verifyCertificate(const Certificate& cert, const DivergenceRegistry& registry) {
    if (const auto* c = std::get_if<LoCycle>(&cert.body)) {
        if (c->trace.empty() || c->repeatIndex >= c->trace.size())
            return false;
        // Every step must be the leftmost-outermost one.
        Term cur = c->start;
        std::vector<Term> seq{cur};
        for (const Step& s : c->trace) {
            auto lo = strategyStep(cur, Strategy::LeftmostOutermost);
            if (!lo || lo->position != s.position || lo->rule != s.rule || lo->result != s.result)
                return false;
            cur = s.result;
            seq.push_back(cur);
        }
        return seq.back() == seq[c->repeatIndex];
    }
    if (const auto* c = std::get_if<RegistryChain>(&cert.body)) {
        Term end = c->start;
        if (!replay(c->start, c->path, end))
            return false;
        if (registry.lookup(c->entry) == nullptr)
            return false;
        auto sub = subtermAt(end, c->at);
        if (!sub || *sub != c->entry)
            return false;
        if (c->at.isRoot())
            return true;
        if (c->at.path.back() != Side::Right)
            return false;
        for (const auto& r : redexes(end)) {
            const auto& p = r.position.path;
            if (p.size() < c->at.path.size() || !std::equal(c->at.path.begin(), c->at.path.end(), p.begin()))
                return false;
        }
        return true;
    }
    const auto& c = std::get<ClosedDivergentReduct>(cert.body);
    Term end = c.start;
    if (!c.inner || !replay(c.start, c.path, end) || !end.closed())
        return false;
    return c.inner->subject() == end && verifyCertificate(*c.inner, registry);
}

namespace {

void writeSteps(std::ostringstream& out, const std::vector<Step>& steps) {
    for (const Step& s : steps)
        out << toString(s.position) << '\t' << toString(s.rule) << '\t' << print(s.result) << '\n';
}

void writeCertificate(std::ostringstream& out, const Certificate& cert) {
    out << cert.kind() << '\n';
    out << "start\t" << print(cert.subject()) << '\n';
    if (const auto* c = std::get_if<LoCycle>(&cert.body)) {
        writeSteps(out, c->trace);
        out << "repeat\t" << c->repeatIndex << '\n';
    } else if (const auto* c = std::get_if<RegistryChain>(&cert.body)) {
        writeSteps(out, c->path);
        if (!c->at.isRoot())
            out << "at\t" << toString(c->at) << '\n';
        out << "entry\t" << print(c->entry) << '\t' << c->provenance << '\n';
    } else {
        const auto& r = std::get<ClosedDivergentReduct>(cert.body);
        writeSteps(out, r.path);
        out << "inner\n";
        writeCertificate(out, *r.inner);
        out << "end\n";
    }
}

} // namespace

std::string serialize(const Certificate& cert) {
    std::ostringstream out;
    writeCertificate(out, cert);
    return out.str();
}

} // namespace pargoid
