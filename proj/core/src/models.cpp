#include "pargoid/models.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "pargoid/errors.hpp"

namespace pargoid {

// ---------------------------------------------------------------------------
// Finite tables

FiniteTableModel::FiniteTableModel(std::vector<std::string> elements,
                                   std::map<std::pair<std::string, std::string>, std::string> table,
                                   std::optional<std::string> s, std::optional<std::string> k, std::string name)
    : elements_(std::move(elements)), s_(std::move(s)), k_(std::move(k)), name_(std::move(name)) {
    if (elements_.empty())
        throw ParseError("a pargoid needs at least one element");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        Term::elem(elements_[i]); // validates the handle
        if (!index_.emplace(elements_[i], i).second)
            throw DuplicateEntry("element '" + elements_[i] + "' listed twice");
    }
    auto lookup = [&](const std::string& e) {
        auto it = index_.find(e);
        if (it == index_.end())
            throw UnknownElementName("unknown element '" + e + "'");
        return it->second;
    };
    if (s_)
        lookup(*s_);
    if (k_)
        lookup(*k_);
    const std::size_t n = elements_.size();
    cells_.assign(n * n, std::nullopt);
    for (const auto& [key, value] : table)
        cells_[lookup(key.first) * n + lookup(key.second)] = lookup(value);
}

std::vector<Element> FiniteTableModel::universe() const {
    std::vector<Element> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_)
        out.push_back(Term::elem(e));
    return out;
}

Element FiniteTableModel::sample(std::mt19937_64& rng) const {
    return Term::elem(elements_[rng() % elements_.size()]);
}

std::optional<std::size_t> FiniteTableModel::indexOf(const Element& e) const {
    if (e.kind() != TermKind::Elem)
        return std::nullopt;
    auto it = index_.find(e.name());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Truth3 FiniteTableModel::contains(const Element& e) const { return truth(indexOf(e).has_value()); }

PartialValue<Element> FiniteTableModel::apply(const Element& a, const Element& b, const Budget&) const {
    auto i = indexOf(a);
    auto j = indexOf(b);
    if (!i || !j)
        throw UnknownElementName("operands are not elements of " + name_);
    if (auto cell = cells_[*i * elements_.size() + *j])
        return PartialValue<Element>::present(Term::elem(elements_[*cell]));
    return PartialValue<Element>::absent("table hole at (" + a.name() + ", " + b.name() + ")");
}

std::optional<Element> FiniteTableModel::sElem() const {
    if (!s_)
        return std::nullopt;
    return Term::elem(*s_);
}

std::optional<Element> FiniteTableModel::kElem() const {
    if (!k_)
        return std::nullopt;
    return Term::elem(*k_);
}

bool FiniteTableModel::isTotal() const {
    for (const auto& c : cells_)
        if (!c)
            return false;
    return true;
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

} // namespace

FiniteTableModel parseFiniteTable(std::string_view text, std::string name) {
    std::optional<std::vector<std::string>> elements;
    std::set<std::string> declared;
    std::optional<std::string> s, k;
    std::map<std::pair<std::string, std::string>, std::string> table;
    std::set<std::string> rowsSeen;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineNo = 0;
    auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineNo) + ": " + msg); };
    auto known = [&](const std::string& e) {
        if (declared.count(e) == 0)
            throw UnknownElementName("line " + std::to_string(lineNo) + ": unknown element '" + e + "'");
    };

    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        if (line.rfind("elements:", 0) == 0) {
            if (elements)
                fail("duplicate elements line");
            elements = words(std::string_view(line).substr(9));
            if (elements->empty())
                fail("no elements declared");
            for (const auto& e : *elements) {
                if (e == "-")
                    fail("'-' is reserved for holes");
                if (!declared.insert(e).second)
                    throw DuplicateEntry("line " + std::to_string(lineNo) + ": element '" + e + "' listed twice");
            }
            continue;
        }
        if (!elements)
            fail("expected 'elements:' first");
        if (line[0] == '@') {
            auto w = words(line);
            if (w.size() != 2 || (w[0] != "@s" && w[0] != "@k"))
                fail("expected '@s name' or '@k name'");
            known(w[1]);
            auto& slot = w[0] == "@s" ? s : k;
            if (slot)
                throw DuplicateEntry("line " + std::to_string(lineNo) + ": " + w[0] + " given twice");
            slot = w[1];
            continue;
        }
        if (line.rfind("row ", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                fail("expected 'row name: ...'");
            std::string row = trim(std::string_view(line).substr(4, colon - 4));
            known(row);
            if (!rowsSeen.insert(row).second)
                throw DuplicateEntry("line " + std::to_string(lineNo) + ": row '" + row + "' given twice");
            auto cells = words(std::string_view(line).substr(colon + 1));
            if (cells.size() != elements->size())
                fail("row '" + row + "' has " + std::to_string(cells.size()) + " entries, expected " +
                     std::to_string(elements->size()));
            for (std::size_t j = 0; j < cells.size(); ++j) {
                if (cells[j] == "-")
                    continue;
                known(cells[j]);
                table[{row, (*elements)[j]}] = cells[j];
            }
            continue;
        }
        fail("unrecognised line '" + line + "'");
    }
    if (!elements)
        throw ParseError("missing 'elements:' line");
    for (const auto& e : *elements)
        if (rowsSeen.count(e) == 0)
            throw ParseError("missing row for element '" + e + "'");
    return FiniteTableModel(*elements, std::move(table), s, k, std::move(name));
}

FiniteTableModel loadFiniteTable(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parseFiniteTable(buf.str(), "finite:" + path.string());
}

// ---------------------------------------------------------------------------
// The normal-form model

namespace terms {

Term d() {
    static const Term t = Term::apply(Term::s(), Term::app(Term::k(), omega()), Term::app(Term::k(), omega()));
    return t;
}

Term sOmegaI() {
    static const Term t = Term::apply(Term::s(), omega(), i());
    return t;
}

Term killer() {
    static const Term t =
        Term::apply(Term::s(), Term::app(Term::k(), sOmegaI()), Term::app(Term::k(), omega()));
    return t;
}

} // namespace terms

NormalFormModel::NormalFormModel(Budget budget, std::shared_ptr<const DivergenceRegistry> registry)
    : budget_(budget), registry_(std::move(registry)) {
    if (!registry_)
        registry_ = std::make_shared<DivergenceRegistry>();
}

std::vector<Element> NormalFormModel::probeElements() const {
    const Term w = terms::omega();
    const Term k = Term::k();
    return {Term::s(),
            k,
            terms::i(),
            w,
            Term::app(k, w),
            terms::sOmegaI(),
            Term::app(k, terms::sOmegaI()),
            terms::d(),
            Term::var("x"),
            Term::var("y")};
}

Element NormalFormModel::sample(std::mt19937_64& rng) const {
    static const std::vector<Term> leaves{Term::s(), Term::k(), Term::var("x"), Term::var("y"), Term::var("z")};
    Budget small;
    small.steps = 200;
    small.maxTermSize = 64;
    std::function<Term(std::size_t)> gen = [&](std::size_t size) -> Term {
        if (size <= 1)
            return leaves[rng() % leaves.size()];
        std::size_t l = 1 + rng() % (size - 1);
        return Term::app(gen(l), gen(size - l));
    };
    while (true) {
        Term t = gen(1 + rng() % 7);
        auto out = normalizeWith(t, Strategy::LeftmostOutermost, small);
        if (auto* d = std::get_if<Defined>(&out); d && d->normalForm.size() <= 24)
            return d->normalForm;
    }
}

Truth3 NormalFormModel::contains(const Element& e) const { return truth(!e.hasElem() && !hasRedex(e)); }

std::optional<Term> NormalFormModel::constantTerm(const Element& e) const {
    // A closed normal form evaluates to itself when read as a polynomial.
    if (e.closed() && !e.hasElem() && !hasRedex(e))
        return e;
    return std::nullopt;
}

PartialValue<Term> NormalFormModel::evaluate(const Term& t, const Budget& budget) const {
    // A short pass first: most products either normalize quickly or reach a
    // registry member within a few steps. Neither answer can change with a
    // bigger budget, so this only saves time.
    Budget quick = budget;
    quick.steps = std::min<std::size_t>(budget.steps, 256);
    quick.nodes = std::min<std::size_t>(budget.nodes, 256);
    for (const Budget* b : std::array<const Budget*, 2>{&quick, &budget}) {
        auto outcome = normalize(t, *b);
        if (auto* d = std::get_if<Defined>(&outcome))
            return PartialValue<Term>::present(d->normalForm);
        if (auto* d = std::get_if<Divergent>(&outcome))
            return PartialValue<Term>::absent("no normal form (leftmost-outermost cycle)", d->certificate);
        if (auto cert = registryChain(t, *b, *registry_))
            return PartialValue<Term>::absent("no normal form (reduces to a registered divergent term)", cert);
        if (b == &budget) {
            const auto& ex = std::get<Exhausted>(outcome);
            return PartialValue<Term>::indeterminate("normalization exhausted (" + ex.reason + " " +
                                                     std::to_string(ex.budget) + ")");
        }
    }
    return PartialValue<Term>::indeterminate("normalization exhausted");
}

PartialValue<Element> NormalFormModel::apply(const Element& a, const Element& b, const Budget& budget) const {
    Term t = Term::app(a, b);
    // Cache key mixes in the budget so results stay a function of (a, b, budget).
    Term key = Term::apply(t, Term::elem("b" + std::to_string(budget.steps) + "_" + std::to_string(budget.nodes) +
                                         "_" + std::to_string(budget.maxTermSize)));
    {
        std::lock_guard lock(cacheMutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    auto r = evaluate(t, budget);
    std::lock_guard lock(cacheMutex_);
    cache_.emplace(std::move(key), r);
    return r;
}

std::shared_ptr<const NormalFormModel> modelN(Budget budget) { return std::make_shared<NormalFormModel>(budget); }

Truth3 lMembership(const NormalFormModel& n, const Term& t, const Budget& budget) {
    if (n.contains(t) != Truth3::True)
        throw NotANormalForm(print(t) + " is not a CL normal form");
    const Term x = Term::var(freshVar(vars(t)));
    auto r = n.apply(t, x, budget);
    if (r.isPresent())
        return Truth3::True;
    return r.isAbsent() ? Truth3::False : Truth3::Unknown;
}

Truth3 lMembership(const Term& t, const Budget& budget) {
    static const NormalFormModel shared;
    return lMembership(shared, t, budget);
}

ModelPtr modelNPrime(Budget budget) { return modelNPrime(modelN(budget)); }

ModelPtr modelNPrime(std::shared_ptr<const NormalFormModel> base) {
    struct MembershipCache {
        std::mutex mutex;
        std::unordered_map<Term, Truth3> known;
    };
    auto cache = std::make_shared<MembershipCache>();
    const NormalFormModel* n = base.get();
    Membership membership = [n, cache](const Element& e) -> Truth3 {
        if (e == terms::d())
            return Truth3::True;
        if (n->contains(e) != Truth3::True)
            return Truth3::False;
        {
            std::lock_guard lock(cache->mutex);
            if (auto it = cache->known.find(e); it != cache->known.end())
                return it->second;
        }
        Truth3 r = lMembership(*n, e, n->budget());
        std::lock_guard lock(cache->mutex);
        cache->known.emplace(e, r);
        return r;
    };
    return restrict(std::move(base), std::move(membership), "N'");
}

} // namespace pargoid
