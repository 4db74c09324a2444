// mtab: decomposition, tableau enumeration, identity checks and invariant
// ring queries for C[X_{n x m}; Theta_{n x m'}] as an S_n module.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "mtab/fillings.hpp"
#include "mtab/invariants.hpp"
#include "mtab/symfunc.hpp"
#include "mtab/tableaux.hpp"
#include "mtab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace mtab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = -1;
    int m = -1;
    int m_bar = -1;
    std::string alpha_text;
    std::string beta_text;
    std::vector<int> alpha;
    std::vector<int> beta;
    std::string format = "text";
    long long cap = kDefaultBasisCap;
    int jobs = 1;

    bool as_json() const { return format == "json"; }

    void resolve(bool need_n = true)
    {
        alpha = parse_int_list(alpha_text);
        beta = parse_int_list(beta_text);
        if (m >= 0 && static_cast<int>(alpha.size()) != m) {
            if (!alpha.empty())
                throw UsageError("alpha has " + std::to_string(alpha.size()) + " entries but m = " + std::to_string(m));
            alpha.assign(m, 0);
        }
        if (m_bar >= 0 && static_cast<int>(beta.size()) != m_bar) {
            if (!beta.empty())
                throw UsageError("beta has " + std::to_string(beta.size()) + " entries but m' = " +
                                 std::to_string(m_bar));
            beta.assign(m_bar, 0);
        }
        m = static_cast<int>(alpha.size());
        m_bar = static_cast<int>(beta.size());
        for (int v : alpha)
            if (v < 0)
                throw UsageError("alpha entries must be non-negative");
        for (int v : beta)
            if (v < 0)
                throw UsageError("beta entries must be non-negative");
        if (need_n && n < 0)
            throw UsageError("--n is required");
        if (cap <= 0)
            throw UsageError("--cap must be positive");
    }

    json component() const { return {{"n", n}, {"alpha", alpha}, {"beta", beta}}; }
};

json symfunc_json(const SymFunc& f)
{
    json out = json::array();
    for (const auto& [idx, c] : f.terms())
        out.push_back({{"basis", std::string(1, basis_char(f.basis()))},
                       {"index", idx.parts()},
                       {"numerator", c.get_num().get_str()},
                       {"denominator", c.get_den().get_str()}});
    return out;
}

json tableau_json(const MultisetTableau& t)
{
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& cell : row)
            r.push_back(cell.str());
        rows.push_back(r);
    }
    return {{"shape", t.shape.parts()}, {"rows", rows}};
}

MultisetTableau tableau_from_json(const json& j)
{
    MultisetTableau t;
    t.shape = Partition(j.at("shape").get<std::vector<int>>());
    for (const auto& row : j.at("rows")) {
        std::vector<Multiset> r;
        for (const auto& cell : row) {
            const auto s = cell.get<std::string>();
            r.push_back(s.empty() || s == "." ? Multiset{} : parse_multiset(s));
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

std::string cells_str(const std::vector<Cell>& cells)
{
    std::string s;
    for (const auto& c : cells)
        s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    return s;
}

// ------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string method = "tableaux";
    bool check = false;
    std::string shape;
    std::string entries;
};

int cmd_decompose(RunConfig cfg, const DecomposeArgs& args)
{
    cfg.resolve();
    const int n = cfg.n;

    if (!args.entries.empty()) {
        if (args.shape.empty())
            throw UsageError("--entries needs --shape");
        const Partition shape = parse_partition(args.shape);
        const MultisetPartition pi = parse_multiset_partition(args.entries);
        if (shape.size() != n)
            throw UsageError("shape " + shape.str() + " is not a partition of n = " + std::to_string(n));
        const Integer count = count_with_entry_multiset(shape, pi, n);
        const auto [me, mo] = m_tilde(pi);
        if (cfg.as_json())
            std::cout << json{{"n", n},
                              {"shape", shape.parts()},
                              {"entries", pi.str()},
                              {"m_even", me.parts()},
                              {"m_odd", mo.parts()},
                              {"count", count.get_str()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << shape.str() << " " << pi.str() << ": " << count.get_str() << "\n";
        return kOk;
    }

    std::vector<Partition> shapes;
    if (!args.shape.empty()) {
        shapes.push_back(parse_partition(args.shape));
        if (shapes[0].size() != n)
            throw UsageError("shape " + shapes[0].str() + " is not a partition of n = " + std::to_string(n));
    } else {
        shapes = enumerate_partitions(n);
    }

    std::vector<std::string> methods;
    if (args.check)
        methods = {"tableaux", "symbolic", "brute"};
    else if (args.method == "tableaux" || args.method == "symbolic" || args.method == "brute")
        methods = {args.method};
    else
        throw UsageError("unknown method " + args.method);

    const Integer dim = component_dimension(n, cfg.alpha, cfg.beta);
    if (std::find(methods.begin(), methods.end(), "brute") != methods.end() && dim > Integer(std::to_string(cfg.cap))) {
        if (!args.check)
            throw UsageError("component dimension " + dim.get_str() + " exceeds the cap " + std::to_string(cfg.cap));
        std::cerr << "warning: component dimension " << dim.get_str() << " exceeds the cap; skipping brute force\n";
        methods.pop_back();
    }

    std::map<std::string, std::vector<std::string>> table;
    SymFunc frob(Basis::s);
    for (const auto& method : methods) {
        auto& col = table[method];
        if (method == "tableaux") {
            for (const auto& lambda : shapes)
                col.push_back(multiplicity(lambda, cfg.alpha, cfg.beta, n).get_str());
        } else if (method == "symbolic") {
            frob = module_frobenius(n, cfg.alpha, cfg.beta);
            for (const auto& lambda : shapes)
                col.push_back(frob.coeff(lambda).get_str());
        } else {
            const auto traces = trace_table(n, cfg.alpha, cfg.beta, cfg.cap);
            for (const auto& lambda : shapes)
                col.push_back(multiplicity_from_traces(lambda, traces).get_str());
        }
    }

    std::vector<std::string> disagreements;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (const auto& method : methods)
            if (table[method][i] != table[methods[0]][i]) {
                std::string d = shapes[i].str() + ":";
                for (const auto& mm : methods)
                    d += " " + mm + "=" + table[mm][i];
                disagreements.push_back(d);
                break;
            }

    if (cfg.as_json()) {
        json rows = json::array();
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            json row{{"lambda", shapes[i].parts()}};
            for (const auto& method : methods)
                row[method] = table[method][i];
            rows.push_back(row);
        }
        json out{{"component", cfg.component()}, {"dimension", dim.get_str()}, {"methods", methods}, {"multiplicities", rows}};
        if (std::find(methods.begin(), methods.end(), "symbolic") != methods.end())
            out["frobenius"] = symfunc_json(frob);
        if (args.check)
            out["agree"] = disagreements.empty();
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            std::cout << shapes[i].str() << ":";
            for (const auto& method : methods)
                std::cout << " " << (methods.size() > 1 ? method + "=" : "") << table[method][i];
            std::cout << "\n";
        }
        for (const auto& d : disagreements)
            std::cerr << "mismatch " << d << "\n";
    }
    return disagreements.empty() ? kOk : kFailed;
}

// -------------------------------------------------------------- tableaux

struct TableauxArgs {
    std::string shape;
    bool count_only = false;
    std::string validate_file;
};

int cmd_tableaux(RunConfig cfg, const TableauxArgs& args)
{
    if (!args.validate_file.empty()) {
        std::ifstream in(args.validate_file);
        if (!in)
            throw UsageError("cannot read " + args.validate_file);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad tableau file: ") + e.what());
        }
        const MultisetTableau t = tableau_from_json(j);
        const ValidationReport rep = validate(t);
        if (cfg.as_json())
            std::cout << json{{"ok", rep.ok},
                              {"condition", rep.condition},
                              {"cells", [&] {
                                   json c = json::array();
                                   for (const auto& cell : rep.cells)
                                       c.push_back({cell.row, cell.col});
                                   return c;
                               }()},
                              {"message", rep.message}}
                             .dump(2)
                      << "\n";
        else if (rep.ok)
            std::cout << "ok\n" << render_text(t);
        else
            std::cout << "violates condition " << rep.condition << " at " << cells_str(rep.cells) << ": "
                      << rep.message << "\n";
        return rep.ok ? kOk : kFailed;
    }

    if (args.shape.empty())
        throw UsageError("--shape is required");
    const Partition shape = parse_partition(args.shape);
    if (cfg.n < 0)
        cfg.n = shape.size();
    cfg.resolve();
    if (shape.size() != cfg.n)
        throw UsageError("shape " + shape.str() + " is not a partition of n = " + std::to_string(cfg.n));

    if (args.count_only) {
        const Integer c = multiplicity(shape, cfg.alpha, cfg.beta, cfg.n);
        if (cfg.as_json())
            std::cout << json{{"component", cfg.component()}, {"shape", shape.parts()}, {"count", c.get_str()}}.dump(2)
                      << "\n";
        else
            std::cout << c.get_str() << "\n";
        return kOk;
    }

    const auto ts = enumerate_tableaux(shape, {cfg.alpha, cfg.beta});
    if (cfg.as_json()) {
        json list = json::array();
        for (const auto& t : ts)
            list.push_back(tableau_json(t));
        std::cout << json{{"component", cfg.component()}, {"shape", shape.parts()}, {"count", ts.size()}, {"tableaux", list}}
                         .dump(2)
                  << "\n";
    } else {
        for (std::size_t i = 0; i < ts.size(); ++i)
            std::cout << (i ? "\n" : "") << render_text(ts[i]);
        std::cout << ts.size() << " tableau" << (ts.size() == 1 ? "" : "x") << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, VerifyOptions opts)
{
    opts.jobs = cfg.jobs;
    opts.cap = cfg.cap;
    VerifyReport rep;
    try {
        rep = run_verification(opts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.as_json()) {
        json suites = json::array();
        for (const auto& s : rep.suites)
            suites.push_back({{"suite", s.name}, {"cases", s.cases}, {"failed", s.failed}, {"failures", s.failures}});
        std::cout << json{{"ok", rep.ok()}, {"suites", suites}}.dump(2) << "\n";
    } else {
        for (const auto& s : rep.suites) {
            std::cout << (s.failed ? "FAIL " : "pass ") << s.name << ": " << s.cases - s.failed << "/" << s.cases
                      << "\n";
            for (const auto& f : s.failures)
                std::cout << "  " << f << "\n";
        }
    }
    return rep.ok() ? kOk : kFailed;
}

// ------------------------------------------------------------ invariants

struct InvariantArgs {
    std::string S;
    int max_size = 3;
};

int cmd_inv_count(RunConfig cfg)
{
    cfg.resolve();
    const Integer c = count_invariants(cfg.n, cfg.alpha, cfg.beta);
    if (cfg.as_json())
        std::cout << json{{"component", cfg.component()}, {"count", c.get_str()}}.dump(2) << "\n";
    else
        std::cout << c.get_str() << "\n";
    return kOk;
}

int cmd_inv_span(RunConfig cfg)
{
    cfg.resolve();
    const SpanReport rep = verify_spanning(cfg.n, cfg.alpha, cfg.beta, cfg.cap);
    if (cfg.as_json())
        std::cout << json{{"component", cfg.component()},
                          {"count", rep.count},
                          {"dimension", rep.dimension},
                          {"rank", rep.basis_rank},
                          {"generator_rank", rep.generator_rank},
                          {"generators_used", rep.generators_used},
                          {"reductions_applied", rep.reductions_applied},
                          {"ok", rep.ok}}
                         .dump(2)
                  << "\n";
    else
        std::cout << (rep.ok ? "ok" : "FAIL") << ": count " << rep.count << ", dimension " << rep.dimension
                  << ", rank " << rep.basis_rank << ", generator rank " << rep.generator_rank << " from "
                  << rep.generators_used << " products" << (rep.ok ? "" : " (" + rep.message + ")") << "\n";
    return rep.ok ? kOk : kFailed;
}

int cmd_inv_reduce(RunConfig cfg, const InvariantArgs& args)
{
    if (cfg.n < 0)
        throw UsageError("--n is required");
    if (args.S.empty())
        throw UsageError("--S is required");
    const Multiset s = parse_multiset(args.S);
    if (s.size() <= cfg.n)
        throw UsageError("|S| = " + std::to_string(s.size()) + " does not exceed n = " + std::to_string(cfg.n) +
                         "; no rewrite applies");
    long reductions = 0;
    const PExpression r = reduce_pS(s, cfg.n, &reductions);
    const RingDims dims{cfg.n, s.max_unbarred(), s.max_barred()};
    const bool realized = r.realize(dims) == power_sum(s, dims);
    if (cfg.as_json()) {
        json terms = json::array();
        for (const auto& [pi, c] : r.terms())
            terms.push_back({{"factors", pi.str()},
                             {"numerator", c.get_num().get_str()},
                             {"denominator", c.get_den().get_str()}});
        std::cout << json{{"n", cfg.n},
                          {"S", s.str()},
                          {"expression", r.str()},
                          {"terms", terms},
                          {"reductions_applied", reductions},
                          {"realization_matches", realized}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "p" << s.str() << " = " << r.str() << "\n";
    }
    return realized ? kOk : kFailed;
}

int cmd_inv_relations(RunConfig cfg, const InvariantArgs& args)
{
    if (cfg.n < 0)
        throw UsageError("--n is required");
    cfg.resolve(false);
    if (cfg.m < 0 || cfg.m_bar < 0)
        throw UsageError("--m and --m-bar are required");
    const RelationsReport rep = check_relations({cfg.n, cfg.m, cfg.m_bar}, args.max_size);
    if (cfg.as_json())
        std::cout << json{{"n", cfg.n},
                          {"m", cfg.m},
                          {"m_bar", cfg.m_bar},
                          {"pairs_checked", rep.pairs_checked},
                          {"squares_checked", rep.squares_checked},
                          {"failures", rep.failures},
                          {"ok", rep.ok()}}
                         .dump(2)
                  << "\n";
    else {
        std::cout << (rep.ok() ? "ok" : "FAIL") << ": " << rep.pairs_checked << " pairs, " << rep.squares_checked
                  << " squares\n";
        for (const auto& f : rep.failures)
            std::cout << "  " << f << "\n";
    }
    return rep.ok() ? kOk : kFailed;
}

void add_component_options(CLI::App* app, RunConfig& cfg)
{
    app->add_option("--n", cfg.n, "number of rows (S_n acts on them)");
    app->add_option("--m", cfg.m, "number of commuting columns");
    app->add_option("--m-bar", cfg.m_bar, "number of anticommuting columns");
    app->add_option("--alpha", cfg.alpha_text, "x degrees per column, e.g. [2,0]");
    app->add_option("--beta", cfg.beta_text, "theta degrees per column, e.g. [1]");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multiset tableaux and the S_n module C[X; Theta]"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "read options from a TOML/INI file (flags override)");

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", cfg.cap, "largest component dimension for brute force");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

    DecomposeArgs dec;
    auto* decompose = app.add_subcommand("decompose", "multiplicity of every irreducible in one component");
    add_component_options(decompose, cfg);
    decompose->add_option("--method", dec.method, "tableaux, symbolic or brute")
        ->check(CLI::IsMember({"tableaux", "symbolic", "brute"}));
    decompose->add_flag("--check", dec.check, "run all methods and compare");
    decompose->add_option("--shape", dec.shape, "only this lambda");
    decompose->add_option("--entries", dec.entries, "count tableaux with these nonblank labels, e.g. {{1,3}^5,{1'}}");

    TableauxArgs tab;
    auto* tableaux = app.add_subcommand("tableaux", "enumerate or validate multiset tableaux");
    add_component_options(tableaux, cfg);
    tableaux->add_option("--shape", tab.shape, "shape, e.g. [3,1]");
    tableaux->add_flag("--count-only", tab.count_only);
    tableaux->add_option("--validate", tab.validate_file, "JSON file {shape, rows} with rows bottom first");

    VerifyOptions vopts;
    std::vector<std::string> suites;
    auto* verify = app.add_subcommand("verify", "check the identities over a grid");
    verify->add_option("--n-max", vopts.n_max);
    verify->add_option("--m-max", vopts.m_max);
    verify->add_option("--m-bar-max", vopts.m_bar_max);
    verify->add_option("--degree-max", vopts.degree_max, "largest |alpha|+|beta|");
    verify->add_option("--k-max", vopts.k_max, "largest |mu| for the filling identities");
    verify->add_option("--inv-n-max", vopts.inv_n_max, "largest n for the invariant ring checks");
    verify->add_option("--suite", suites, "restrict to these suites")->check(CLI::IsMember(suite_names()));
    verify->add_flag("--inject-sign-bug", vopts.inject_sign_bug, "drop trace signs (negative control)");

    InvariantArgs inv;
    auto* invariants = app.add_subcommand("invariants", "the ring of S_n invariants");
    invariants->require_subcommand(1);
    auto* inv_count = invariants->add_subcommand("count", "number of invariants of one degree");
    auto* inv_span = invariants->add_subcommand("span", "rank checks for the power sum basis and generators");
    auto* inv_reduce = invariants->add_subcommand("reduce", "rewrite p_S with |S| > n");
    auto* inv_rel = invariants->add_subcommand("relations", "sign relations among power sums");
    for (auto* sub : {inv_count, inv_span, inv_reduce, inv_rel})
        add_component_options(sub, cfg);
    inv_reduce->add_option("--S", inv.S, "multiset, e.g. {1,1,2'}");
    inv_rel->add_option("--max-size", inv.max_size, "largest |S| sampled");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*decompose)
            return cmd_decompose(cfg, dec);
        if (*tableaux)
            return cmd_tableaux(cfg, tab);
        if (*verify) {
            vopts.suites = suites;
            return cmd_verify(cfg, vopts);
        }
        if (*inv_count)
            return cmd_inv_count(cfg);
        if (*inv_span)
            return cmd_inv_span(cfg);
        if (*inv_reduce)
            return cmd_inv_reduce(cfg, inv);
        if (*inv_rel)
            return cmd_inv_relations(cfg, inv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
