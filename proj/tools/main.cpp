// pargoid: command-line front end.
//
// Exit codes: 0 success, 1 a checked claim or law failed, 2 usage or input
// error, 3 divergent, 4 budget exhausted.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pargoid/abstraction.hpp"
#include "pargoid/errors.hpp"
#include "pargoid/kleene.hpp"
#include "pargoid/pipeline.hpp"
#include "pargoid/report.hpp"

namespace {

using namespace pargoid;
using nlohmann::json;

enum Exit { Ok = 0, Failed = 1, BadInput = 2, Diverges = 3, OutOfBudget = 4 };

struct Config {
    std::size_t steps = Budget{}.steps;
    std::size_t nodes = Budget{}.nodes;
    std::size_t maxTermSize = Budget{}.maxTermSize;
    bool json = false;

    Budget budget() const { return {steps, nodes, maxTermSize}; }
};

void addBudgetFlags(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--budget", cfg.steps, "Step budget")->check(CLI::PositiveNumber);
    cmd->add_option("--node-budget", cfg.nodes, "Node budget for reduction-graph searches")->check(CLI::PositiveNumber);
    cmd->add_option("--max-term-size", cfg.maxTermSize, "Largest term (in leaves) kept during reduction")
        ->check(CLI::PositiveNumber);
}

void printJson(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmdNormalize(const std::string& text, const Config& cfg, bool useRegistry) {
    const Term t = parse(text);
    const Budget budget = cfg.budget();
    auto outcome = normalize(t, budget);
    if (auto* d = std::get_if<Defined>(&outcome)) {
        if (cfg.json)
            printJson({{"outcome", "defined"}, {"normalForm", print(d->normalForm)}, {"steps", d->steps}});
        else
            std::cout << "defined: " << print(d->normalForm) << "\nsteps: " << d->steps << '\n';
        return Ok;
    }
    std::shared_ptr<const Certificate> cert;
    std::string via;
    if (auto* d = std::get_if<Divergent>(&outcome)) {
        cert = d->certificate;
        via = "cycle";
    } else if (useRegistry) {
        cert = registryChain(t, budget, DivergenceRegistry::seeded());
        via = "registry";
    }
    if (cert) {
        if (cfg.json)
            printJson({{"outcome", "divergent"}, {"via", via}, {"certificate", toJson(*cert)}});
        else
            std::cout << "divergent (" << via << ")\n" << serialize(*cert);
        return Diverges;
    }
    const auto& ex = std::get<Exhausted>(outcome);
    const std::string what = ex.reason == "step budget" ? "budget" : "term size limit";
    if (cfg.json)
        printJson({{"outcome", "exhausted"}, {"reason", ex.reason}, {"budget", ex.budget}});
    else
        std::cout << "exhausted (" << what << ' ' << ex.budget << ")\n";
    return OutOfBudget;
}

int cmdAbstract(const std::string& var, const std::string& text, bool trace, const Config& cfg) {
    if (!isIdentifier(var))
        throw ParseError("'" + var + "' is not a variable name");
    auto r = lambdaStar(var, parse(text));
    if (cfg.json) {
        json clauses = json::array();
        for (auto c : r.clauseTrace)
            clauses.push_back(std::string(toString(c)));
        printJson({{"result", print(r.result)}, {"clauses", clauses}});
        return Ok;
    }
    std::cout << print(r.result) << '\n';
    if (trace) {
        for (std::size_t i = 0; i < r.clauseTrace.size(); ++i)
            std::cout << (i ? " " : "") << toString(r.clauseTrace[i]);
        std::cout << '\n';
    }
    return Ok;
}

ModelPtr selectModel(const std::string& selector, const Config& cfg, std::optional<std::size_t> kleeneSteps) {
    if (selector == "n")
        return modelN(cfg.budget());
    if (selector == "nprime")
        return modelNPrime(cfg.budget());
    if (selector == "kleene") {
        kleene::RunBudget rb;
        if (kleeneSteps)
            rb.steps = *kleeneSteps;
        return kleene::kleenePargoid(rb);
    }
    if (selector.rfind("finite:", 0) == 0)
        return std::make_shared<FiniteTableModel>(loadFiniteTable(selector.substr(7)));
    throw ParseError("unknown model '" + selector + "' (expected n, nprime, kleene or finite:PATH)");
}

int runLaws(const PargoidModel& m, const std::vector<std::string>& lawNames, std::size_t samples, std::uint64_t seed,
            bool exhaustive, const Config& cfg) {
    std::vector<Law> laws;
    for (const auto& name : lawNames) {
        auto law = parseLaw(name);
        if (!law)
            throw ParseError("unknown law '" + name + "' (expected 0, 1 or 2)");
        laws.push_back(*law);
    }
    if (laws.empty())
        laws = {Law::Law0, Law::Law1, Law::Law2};
    InstanceSpec spec{exhaustive || m.isFinite(), samples, seed};
    bool anyFalse = false;
    json reports = json::array();
    for (Law law : laws) {
        auto rep = checkLaw(m, law, spec, cfg.budget());
        anyFalse = anyFalse || rep.falseCount > 0;
        if (cfg.json)
            reports.push_back(toJson(rep));
        else
            std::cout << describe(rep) << '\n';
    }
    if (cfg.json)
        printJson({{"model", m.name()}, {"reports", reports}});
    return anyFalse ? Failed : Ok;
}

int cmdCounterexample(std::size_t sizeBound, std::size_t samples, std::uint64_t seed, const Config& cfg) {
    CounterexampleConfig c{cfg.budget(), sizeBound, samples, seed};
    auto report = runCounterexample(c);
    if (cfg.json)
        printJson(toJson(report));
    else
        std::cout << describe(report);
    return report.allConfirmed() ? Ok : Failed;
}

int cmdSweep(std::size_t sizeBound, const Config& cfg) {
    auto report = prop53Search(sizeBound, cfg.budget());
    for (const auto& e : report.entries)
        std::cout << toJson(e).dump() << '\n';
    return report.count("survivor") > 0 ? Failed : Ok;
}

int cmdComplete(const std::string& path, std::size_t size, std::size_t arity, const std::string& leftPassive,
                const Config& cfg) {
    auto m = loadFiniteTable(path);
    std::optional<Element> lp;
    if (!leftPassive.empty())
        lp = Term::elem(leftPassive);
    auto report = completenessCheckFinite(m, size, arity, cfg.budget(), lp);
    if (cfg.json) {
        printJson(toJson(report));
    } else {
        std::cout << "laws (1), (2) exhaustively: " << (report.lawsHold ? "hold" : "FAIL") << '\n'
                  << "total: " << (report.total ? "yes" : "no") << '\n'
                  << "polynomials: " << report.polynomials << " (" << report.emptyDomain << " with empty domain)\n"
                  << "tuples checked: " << report.tuples << ", failures: " << report.failures.size()
                  << ", unknown: " << report.unknown << '\n'
                  << "nullary: " << report.nullaryDefined << " defined, " << report.nullaryEmpty << " empty\n";
        for (const auto& f : report.failures) {
            std::cout << "  failure: " << f.polynomial << " witness " << f.witness << " at (";
            for (std::size_t i = 0; i < f.instance.size(); ++i)
                std::cout << (i ? ", " : "") << f.instance[i];
            std::cout << "): " << f.lhs << " vs " << f.rhs << '\n';
        }
    }
    return report.passed() ? Ok : Failed;
}

kleene::Nat parseNat(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("'" + text + "' is not a natural number");
    return kleene::Nat(text);
}

int cmdKleeneRun(const std::string& code, const std::string& input, std::size_t steps, const Config& cfg) {
    kleene::RunBudget rb;
    rb.steps = steps;
    auto r = kleene::run(parseNat(code), parseNat(input), rb);
    if (r.isPresent()) {
        if (cfg.json)
            printJson({{"outcome", "defined"}, {"value", r.value().str()}});
        else
            std::cout << "defined: " << r.value().str() << '\n';
        return Ok;
    }
    if (cfg.json)
        printJson({{"outcome", "indeterminate"}, {"reason", r.indeterminacy().info}});
    else
        std::cout << "indeterminate (" << r.indeterminacy().info << ")\n";
    return OutOfBudget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial applicative structures: CL normal forms, finite tables and a Kleene-style model"};
    app.require_subcommand(1);
    Config cfg;

    std::string term, var;
    bool useRegistry = false, trace = false;
    auto* normalizeCmd = app.add_subcommand("normalize", "Normalize a CL term (leftmost-outermost)");
    normalizeCmd->add_option("term", term, "Term, e.g. \"s k k x\"")->required();
    normalizeCmd->add_flag("--use-registry", useRegistry, "Consult the divergence registry when the budget runs out");
    normalizeCmd->add_flag("--json", cfg.json, "JSON output");
    addBudgetFlags(normalizeCmd, cfg);

    auto* abstractCmd = app.add_subcommand("abstract", "Bracket abstraction of a variable from a term");
    abstractCmd->add_option("var", var, "Variable")->required();
    abstractCmd->add_option("term", term, "Term")->required();
    abstractCmd->add_flag("--trace", trace, "Print the clause used at each node");
    abstractCmd->add_flag("--json", cfg.json, "JSON output");

    std::string model = "n";
    std::vector<std::string> laws;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    std::optional<std::size_t> kleeneSteps;
    auto* lawsCmd = app.add_subcommand("laws", "Check laws (0) s x y, (1) s x y z = x z (y z), (2) k x y = x");
    lawsCmd->add_option("--model", model, "n, nprime, kleene or finite:PATH")->capture_default_str();
    lawsCmd->add_option("--law", laws, "0, 1 or 2 (repeatable; default all)");
    lawsCmd->add_option("--samples", samples, "Sampled instances per law")->capture_default_str();
    lawsCmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    lawsCmd->add_flag("--exhaustive", exhaustive, "Every instance (finite models always are)");
    lawsCmd->add_option("--kleene-budget", kleeneSteps, "Step budget of the Kleene evaluator (default 100000)");
    lawsCmd->add_flag("--json", cfg.json, "JSON output");
    addBudgetFlags(lawsCmd, cfg);

    std::size_t sizeBound = 7;
    auto* cexCmd = app.add_subcommand("counterexample", "Check the claims about N, N' and the search for s in N'");
    cexCmd->add_option("--size-bound", sizeBound, "Largest candidate (in leaves) for the search")->capture_default_str();
    cexCmd->add_option("--samples", samples, "Sampled instances per law on N'")->capture_default_str();
    cexCmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    cexCmd->add_flag("--json", cfg.json, "JSON output");
    addBudgetFlags(cexCmd, cfg);

    auto* sweepCmd = app.add_subcommand("sweep", "Search for s-like elements of N', one JSON line per candidate");
    sweepCmd->add_option("--size-bound", sizeBound, "Largest candidate (in leaves)")->capture_default_str();
    addBudgetFlags(sweepCmd, cfg);

    std::string tablePath, leftPassive;
    std::size_t polySize = 4, arity = 2;
    auto* completeCmd = app.add_subcommand("complete", "Combinatory completeness check of a finite table");
    completeCmd->add_option("table", tablePath, "Table file")->required()->check(CLI::ExistingFile);
    completeCmd->add_option("--size", polySize, "Largest polynomial (in leaves)")->capture_default_str();
    completeCmd->add_option("--arity", arity, "Largest arity")->capture_default_str();
    completeCmd->add_option("--left-passive", leftPassive, "Left-passive element (required for partial tables)");
    completeCmd->add_flag("--json", cfg.json, "JSON output");

    auto* kleeneCmd = app.add_subcommand("kleene", "The numeric model: programs coded by naturals");
    kleeneCmd->require_subcommand(1);
    std::string code, input;
    std::size_t runSteps = kleene::RunBudget{}.steps;
    auto* kRun = kleeneCmd->add_subcommand("run", "Run the program coded by CODE on INPUT");
    kRun->add_option("code", code)->required();
    kRun->add_option("input", input)->required();
    kRun->add_option("--budget", runSteps, "Step budget")->capture_default_str()->check(CLI::PositiveNumber);
    kRun->add_flag("--json", cfg.json, "JSON output");
    auto* kLaws = kleeneCmd->add_subcommand("laws", "Check laws (0), (1), (2) on sampled instances");
    kLaws->add_option("--samples", samples, "Sampled instances per law")->capture_default_str();
    kLaws->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    kLaws->add_option("--budget", runSteps, "Step budget")->capture_default_str()->check(CLI::PositiveNumber);
    kLaws->add_flag("--json", cfg.json, "JSON output");
    auto* kDecode = kleeneCmd->add_subcommand("decode", "Print the program coded by CODE");
    kDecode->add_option("code", code)->required();
    auto* kCodes = kleeneCmd->add_subcommand("codes", "Print the codes of s and k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }

    try {
        if (*normalizeCmd)
            return cmdNormalize(term, cfg, useRegistry);
        if (*abstractCmd)
            return cmdAbstract(var, term, trace, cfg);
        if (*lawsCmd)
            return runLaws(*selectModel(model, cfg, kleeneSteps), laws, samples, seed, exhaustive, cfg);
        if (*cexCmd)
            return cmdCounterexample(sizeBound, samples, seed, cfg);
        if (*sweepCmd)
            return cmdSweep(sizeBound, cfg);
        if (*completeCmd)
            return cmdComplete(tablePath, polySize, arity, leftPassive, cfg);
        if (*kRun)
            return cmdKleeneRun(code, input, runSteps, cfg);
        if (*kLaws) {
            kleene::RunBudget rb;
            rb.steps = runSteps;
            return runLaws(*kleene::kleenePargoid(rb), {}, samples, seed, false, cfg);
        }
        if (*kDecode) {
            std::cout << kleene::show(*kleene::decode(parseNat(code))) << '\n';
            return Ok;
        }
        if (*kCodes) {
            std::cout << "s " << kleene::encode(*kleene::sProgram()) << "\nk " << kleene::encode(*kleene::kProgram())
                      << '\n';
            return Ok;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return BadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    }
    return BadInput;
}
