#include "pargoid/model.hpp"

#include <algorithm>

#include "pargoid/errors.hpp"

namespace pargoid {

std::vector<Element> PargoidModel::universe() const {
    throw NotFinite(name() + " is not a finite model");
}

std::optional<Element> PargoidModel::constant(const std::string& handle) const {
    Element e = Term::elem(handle);
    if (contains(e) == Truth3::True)
        return e;
    return std::nullopt;
}

std::optional<Term> PargoidModel::constantTerm(const Element& e) const {
    if (e.kind() == TermKind::Elem)
        return e;
    return std::nullopt;
}

std::string PargoidModel::show(const Element& e) const {
    if (e.kind() == TermKind::Elem)
        return e.name();
    return print(e);
}

// ---------------------------------------------------------------------------
// Polynomial evaluation

PartialValue<Element> evalPoly(const PargoidModel& m, const Term& p, const Assignment& asg, const Budget& budget) {
    switch (p.kind()) {
    case TermKind::Var: {
        auto it = asg.find(p.name());
        if (it == asg.end())
            throw UnboundVariable("no value assigned to " + p.name());
        return PartialValue<Element>::present(it->second);
    }
    case TermKind::S:
    case TermKind::K: {
        auto e = p.kind() == TermKind::S ? m.sElem() : m.kElem();
        if (!e)
            throw NoDesignatedCombinators(m.name() + " has no designated " + (p.kind() == TermKind::S ? "s" : "k"));
        return PartialValue<Element>::present(*e);
    }
    case TermKind::Elem: {
        auto e = m.constant(p.name());
        if (!e)
            throw UnknownConstant("#" + p.name() + " is not an element of " + m.name());
        return PartialValue<Element>::present(*e);
    }
    case TermKind::App:
        break;
    }
    auto f = evalPoly(m, p.left(), asg, budget);
    if (f.isAbsent())
        return f;
    auto a = evalPoly(m, p.right(), asg, budget);
    if (a.isAbsent())
        return a;
    if (f.isIndeterminate())
        return f;
    if (a.isIndeterminate())
        return a;
    return m.apply(f.value(), a.value(), budget);
}

PartialValue<Element> evalPoly(const PargoidModel& m, const PolyTerm& p, const Assignment& asg, const Budget& budget) {
    for (const auto& x : p.params)
        if (asg.count(x) == 0)
            throw UnboundVariable("no value assigned to parameter " + x);
    return evalPoly(m, p.body, asg, budget);
}

PartialValue<Element> applyChain(const PargoidModel& m, const PartialValue<Element>& head,
                                 const std::vector<Element>& args, const Budget& budget) {
    auto cur = head;
    for (const auto& b : args) {
        if (!cur.isPresent())
            return cur;
        cur = m.apply(cur.value(), b, budget);
    }
    return cur;
}

PolyTerm emptyPolynomial(const PargoidModel& m, std::size_t arity, const Element& a1, const Element& a2,
                         const Budget& budget) {
    auto product = m.apply(a1, a2, budget);
    if (!product.isAbsent())
        throw WitnessNotUndefined(m.show(a1) + " " + m.show(a2) + " is not certainly undefined");
    auto c1 = m.constantTerm(a1);
    auto c2 = m.constantTerm(a2);
    if (!c1 || !c2)
        throw UnknownConstant("witness elements cannot be written as constants of " + m.name());
    PolyTerm p{Term::app(*c1, *c2), {}};
    for (std::size_t i = 1; i <= arity; ++i)
        p.params.push_back("x" + std::to_string(i));
    return p;
}

bool isLeftPassiveExhaustive(const PargoidModel& m, const Element& a, const Budget& budget) {
    if (!m.isFinite())
        throw NotFinite(m.name() + " is not a finite model");
    for (const auto& x : m.universe())
        if (!m.apply(a, x, budget).isAbsent())
            return false;
    return true;
}

std::shared_ptr<const Certificate> leftPassiveCertificate(const PargoidModel& m, const Element& a,
                                                          const Budget& budget,
                                                          const DivergenceRegistry& registry) {
    auto term = m.elementToTerm(a);
    if (!term)
        return nullptr;
    const Term x = Term::var(freshVar(vars(*term)));
    const Term start = Term::app(*term, x);

    auto wrap = [&](const ReductionGraph& g, std::size_t index, std::shared_ptr<const Certificate> inner) {
        return std::make_shared<Certificate>(
            Certificate{ClosedDivergentReduct{start, g.pathTo(index), std::move(inner)}});
    };

    // Closed registry members first; they are cheap to recognise.
    auto g = reachable(start, budget.nodes, budget.maxTermSize,
                       [&](const Term& n) { return registry.lookup(n) != nullptr; });
    for (std::size_t i = g.nodes().size(); i-- > 0;) {
        const Term& u = g.nodes()[i];
        if (const auto* entry = registry.lookup(u))
            return wrap(g, i, std::make_shared<Certificate>(Certificate{RegistryChain{u, {}, entry->term, entry->provenance}}));
    }
    // Otherwise try full certification on the first few closed reducts.
    constexpr std::size_t kClosedAttempts = 8;
    std::size_t attempts = 0;
    for (std::size_t i = 0; i < g.nodes().size() && attempts < kClosedAttempts; ++i) {
        const Term& u = g.nodes()[i];
        if (!u.closed())
            continue;
        ++attempts;
        if (auto cert = certifyDivergence(u, budget, registry))
            return wrap(g, i, std::move(cert));
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Relative substructures

namespace {

class RestrictedModel final : public PargoidModel {
public:
    RestrictedModel(ModelPtr base, Membership membership, std::string name)
        : base_(std::move(base)), membership_(std::move(membership)), name_(std::move(name)) {}

    std::string name() const override { return name_; }
    bool isFinite() const override { return base_->isFinite(); }

    std::vector<Element> universe() const override {
        std::vector<Element> out;
        for (const auto& e : base_->universe())
            if (membership_(e) == Truth3::True)
                out.push_back(e);
        return out;
    }

    std::vector<Element> probeElements() const override {
        std::vector<Element> out;
        for (const auto& e : base_->probeElements())
            if (membership_(e) == Truth3::True)
                out.push_back(e);
        return out;
    }

    Element sample(std::mt19937_64& rng) const override {
        for (int attempt = 0; attempt < 256; ++attempt) {
            Element e = base_->sample(rng);
            if (membership_(e) == Truth3::True)
                return e;
        }
        auto probes = probeElements();
        if (probes.empty())
            throw Error("cannot sample a member of " + name_);
        return probes[rng() % probes.size()];
    }

    Truth3 contains(const Element& e) const override { return base_->contains(e) && membership_(e); }

    PartialValue<Element> apply(const Element& a, const Element& b, const Budget& budget) const override {
        auto r = base_->apply(a, b, budget);
        if (!r.isPresent())
            return r;
        return hoare(r, membership_(r.value()), "product " + base_->show(r.value()) + " lies outside " + name_);
    }

    std::optional<Element> sElem() const override { return base_->sElem(); }
    std::optional<Element> kElem() const override { return base_->kElem(); }
    std::optional<Element> constant(const std::string& handle) const override {
        auto e = base_->constant(handle);
        if (e && membership_(*e) == Truth3::True)
            return e;
        return std::nullopt;
    }
    std::optional<Term> constantTerm(const Element& e) const override { return base_->constantTerm(e); }
    std::optional<Term> elementToTerm(const Element& e) const override { return base_->elementToTerm(e); }
    std::string show(const Element& e) const override { return base_->show(e); }

private:
    ModelPtr base_;
    Membership membership_;
    std::string name_;
};

} // namespace

ModelPtr restrict(ModelPtr base, Membership membership, std::string name) {
    if (name.empty())
        name = base->name() + "|restricted";
    return std::make_shared<RestrictedModel>(std::move(base), std::move(membership), std::move(name));
}

// ---------------------------------------------------------------------------
// Laws

std::string_view toString(Law law) {
    switch (law) {
    case Law::Law0:
        return "0";
    case Law::Law1:
        return "1";
    case Law::Law2:
        break;
    }
    return "2";
}

std::optional<Law> parseLaw(std::string_view text) {
    if (text == "0" || text == "law0")
        return Law::Law0;
    if (text == "1" || text == "law1")
        return Law::Law1;
    if (text == "2" || text == "law2")
        return Law::Law2;
    return std::nullopt;
}

std::size_t arity(Law law) { return law == Law::Law1 ? 3 : 2; }

namespace {

void allTuples(const std::vector<Element>& pool, std::size_t n, std::vector<Element>& cur,
               std::vector<std::vector<Element>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (const auto& e : pool) {
        cur.push_back(e);
        allTuples(pool, n, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<Element>> lawInstances(const PargoidModel& m, std::size_t n, const InstanceSpec& spec) {
    std::vector<std::vector<Element>> out;
    std::vector<Element> cur;
    if (spec.exhaustive) {
        allTuples(m.universe(), n, cur, out);
        return out;
    }
    std::mt19937_64 rng(spec.seed);
    allTuples(m.probeElements(), n, cur, out);
    std::shuffle(out.begin(), out.end(), rng);
    if (out.size() > spec.samples)
        out.resize(spec.samples);
    while (out.size() < spec.samples) {
        std::vector<Element> tuple;
        for (std::size_t i = 0; i < n; ++i)
            tuple.push_back(m.sample(rng));
        out.push_back(std::move(tuple));
    }
    return out;
}

Truth3 checkLawInstance(const PargoidModel& m, Law law, const std::vector<Element>& instance, const Budget& budget,
                        std::string* lhsOut, std::string* rhsOut) {
    if (!m.sElem() || !m.kElem())
        throw NoDesignatedCombinators(m.name() + " has no designated s and k");
    auto describe = [&](const PartialValue<Element>& v) -> std::string {
        if (v.isPresent())
            return m.show(v.value());
        if (v.isAbsent())
            return "undefined (" + v.absence().reason + ")";
        return "unknown (" + v.indeterminacy().info + ")";
    };
    static const Term x = Term::var("x");
    static const Term y = Term::var("y");
    static const Term z = Term::var("z");
    Assignment asg{{"x", instance.at(0)}, {"y", instance.at(1)}};
    if (law == Law::Law1)
        asg.emplace("z", instance.at(2));

    if (law == Law::Law0) {
        auto v = evalPoly(m, Term::apply(Term::s(), x, y), asg, budget);
        if (lhsOut)
            *lhsOut = describe(v);
        if (rhsOut)
            *rhsOut = "defined";
        if (v.isPresent())
            return Truth3::True;
        return v.isAbsent() ? Truth3::False : Truth3::Unknown;
    }
    Term lhs = law == Law::Law1 ? Term::apply(Term::s(), x, y, z) : Term::apply(Term::k(), x, y);
    Term rhs = law == Law::Law1 ? Term::apply(x, z, Term::app(y, z)) : x;
    auto l = evalPoly(m, lhs, asg, budget);
    auto r = evalPoly(m, rhs, asg, budget);
    if (lhsOut)
        *lhsOut = describe(l);
    if (rhsOut)
        *rhsOut = describe(r);
    return kleeneEqual(l, r);
}

LawReport checkLaw(const PargoidModel& m, Law law, const InstanceSpec& spec, const Budget& budget) {
    if (!m.sElem() || !m.kElem())
        throw NoDesignatedCombinators(m.name() + " has no designated s and k");
    LawReport report;
    report.law = law;
    for (const auto& inst : lawInstances(m, arity(law), spec)) {
        std::string lhs, rhs;
        Truth3 t = checkLawInstance(m, law, inst, budget, &lhs, &rhs);
        ++report.instances;
        switch (t) {
        case Truth3::True:
            ++report.trueCount;
            break;
        case Truth3::Unknown:
            ++report.unknownCount;
            break;
        case Truth3::False: {
            ++report.falseCount;
            Counterexample c;
            for (const auto& e : inst)
                c.instance.push_back(m.show(e));
            c.lhs = std::move(lhs);
            c.rhs = std::move(rhs);
            report.counterexamples.push_back(std::move(c));
            break;
        }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Term enumeration

namespace {

std::vector<std::vector<Term>> termsBySize(const std::vector<Term>& leaves, std::size_t maxSize) {
    std::vector<std::vector<Term>> bySize(maxSize + 1);
    if (maxSize == 0)
        return bySize;
    bySize[1] = leaves;
    for (std::size_t n = 2; n <= maxSize; ++n)
        for (std::size_t l = 1; l < n; ++l)
            for (const auto& a : bySize[l])
                for (const auto& b : bySize[n - l])
                    bySize[n].push_back(Term::app(a, b));
    return bySize;
}

} // namespace

std::vector<Term> enumerateTermsOfSize(const std::vector<Term>& leaves, std::size_t size) {
    return termsBySize(leaves, size)[size];
}

std::vector<Term> enumerateTerms(const std::vector<Term>& leaves, std::size_t maxSize) {
    std::vector<Term> out;
    for (auto& v : termsBySize(leaves, maxSize))
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace pargoid
