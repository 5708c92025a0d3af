// Command-line front end: classify, expand, table, verify, limits, identities.
//
// Exit codes: 0 success, 1 usage error, 2 negative mathematical result,
// 3 internal bound failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "meixner/verify.hpp"

namespace {

using namespace meixner;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;
constexpr int kBound = 3;

struct RunConfig {
    std::string lambda = "0";
    std::string k2;
    std::string kappa = "0";
    std::string l1 = "0";
    std::string family;
    std::size_t n_max = 20;
    std::size_t order = 0;
    std::string format;
    std::string out;
    double tol = 1e-10;
    bool all = false;
    std::string edge;
    int decades = 6;
    std::vector<std::string> xs;
    std::uint64_t seed = 1934;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& flag, const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": malformed rational '" + text + "'");
    }
}

std::size_t series_order(RunConfig& cfg) {
    const std::size_t need = 2 * cfg.n_max + 2;
    if (cfg.order == 0) return need;
    if (cfg.order < need) {
        std::cerr << "warning: --order " << cfg.order << " raised to " << need << "\n";
        cfg.order = need;
    }
    return cfg.order;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path path(cfg.out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("MEIXNER_OUT_DIR"); dir != nullptr && *dir != '\0') path = dir / path;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RecurrenceSpec spec_from_flags(const RunConfig& cfg) {
    if (cfg.k2.empty()) throw UsageError("--k2 is required");
    return {parse_rat("--lambda", cfg.lambda), parse_rat("--k2", cfg.k2), parse_rat("--kappa", cfg.kappa),
            parse_rat("--l1", cfg.l1)};
}

FamilyInstance family_from_flags(const RunConfig& cfg) {
    try {
        return parse_family(cfg.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--family: ") + e.what());
    }
}

/// Pair from --family (closed form) or from recurrence flags (classified).
ShefferPair pair_from_flags(RunConfig& cfg) {
    const std::size_t order = series_order(cfg);
    if (!cfg.family.empty()) {
        const GeneratingFunction gf = generating_function_of(family_from_flags(cfg), order);
        return {gf.f, gf.u};
    }
    return classify(spec_from_flags(cfg), order).pair;
}

int cmd_classify(RunConfig& cfg) {
    const RecurrenceSpec spec = spec_from_flags(cfg);
    const ClassificationResult r = classify(spec, series_order(cfg));
    emit(cfg, dump(to_json(r)));
    return r.case_tag == CaseTag::NotOrthogonal ? kNegative : kOk;
}

int cmd_expand(RunConfig& cfg) {
    const PolySequence seq = expand(pair_from_flags(cfg), cfg.n_max);
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    if (fmt == "csv") {
        emit(cfg, sequence_csv(seq));
    } else if (fmt == "latex") {
        emit(cfg, sequence_latex(seq));
    } else {
        Json j;
        j["polynomials"] = sequence_json(seq);
        emit(cfg, dump(j));
    }
    return kOk;
}

int cmd_table(RunConfig& cfg) {
    const PolySequence seq = expand(pair_from_flags(cfg), cfg.n_max);
    std::vector<Rat> xs;
    for (const auto& s : cfg.xs) xs.push_back(parse_rat("--x", s));
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    if (xs.empty()) {
        if (fmt == "json") {
            Json j;
            j["polynomials"] = sequence_json(seq);
            emit(cfg, dump(j));
        } else {
            emit(cfg, fmt == "latex" ? sequence_latex(seq) : sequence_csv(seq));
        }
        return kOk;
    }
    if (fmt == "json") {
        Json rows = Json::array();
        for (std::size_t n = 0; n < seq.size(); ++n) {
            Json row;
            row["n"] = n;
            Json vals = Json::array();
            for (const auto& x : xs) vals.push_back(seq[n](x).str());
            row["values"] = std::move(vals);
            rows.push_back(std::move(row));
        }
        Json j;
        Json xj = Json::array();
        for (const auto& x : xs) xj.push_back(x.str());
        j["x"] = std::move(xj);
        j["rows"] = std::move(rows);
        emit(cfg, dump(j));
        return kOk;
    }
    std::ostringstream os;
    os << "n,x,value\n";
    for (std::size_t n = 0; n < seq.size(); ++n)
        for (const auto& x : xs) os << n << ',' << x.str() << ',' << seq[n](x).str() << '\n';
    emit(cfg, os.str());
    return kOk;
}

int cmd_verify(RunConfig& cfg) {
    VerifyOptions opt;
    opt.n_max = cfg.n_max;
    opt.order = cfg.order == 0 ? 0 : series_order(cfg);
    opt.tol = cfg.tol;
    opt.seed = cfg.seed;
    std::vector<VerifyReport> reports;
    if (cfg.all) {
        for (const auto& fam : reference_families()) reports.push_back(verify_family(fam, opt));
        reports.push_back(verify_identities(opt));
        reports.push_back(verify_limits(opt));
    } else if (!cfg.family.empty()) {
        reports.push_back(verify_family(family_from_flags(cfg), opt));
    } else {
        throw UsageError("verify needs --family or --all");
    }
    Json j;
    Json arr = Json::array();
    bool ok = true;
    bool bound = false;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        ok = ok && r.passed();
        bound = bound || r.bound_failure();
    }
    j["reports"] = std::move(arr);
    j["passed"] = ok;
    emit(cfg, dump(j));
    if (bound) return kBound;
    return ok ? kOk : kNegative;
}

int cmd_limits(RunConfig& cfg) {
    std::vector<LimitEdge> edges;
    if (cfg.edge.empty()) {
        edges = all_limit_edges();
    } else {
        try {
            edges.push_back(parse_limit_edge(cfg.edge));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--edge: ") + e.what());
        }
    }
    std::vector<Rat> xs;
    for (const auto& s : cfg.xs) xs.push_back(parse_rat("--x", s));
    if (xs.empty()) xs = {Rat(0), Rat(1, 2), Rat(1)};
    if (cfg.decades < 2) throw UsageError("--eps-decades must be at least 2");
    std::vector<LimitRecord> recs;
    bool ok = true;
    for (auto e : edges) {
        for (const auto& x : xs) {
            recs.push_back(limit_transition(e, static_cast<long>(cfg.n_max), x, cfg.decades));
            ok = ok && recs.back().passed();
        }
    }
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    if (fmt == "json") {
        Json j;
        Json arr = Json::array();
        for (const auto& r : recs) arr.push_back(to_json(r));
        j["records"] = std::move(arr);
        j["passed"] = ok;
        emit(cfg, dump(j));
    } else {
        emit(cfg, limits_csv(recs));
    }
    return ok ? kOk : kNegative;
}

int cmd_identities(RunConfig& cfg) {
    VerifyOptions opt;
    opt.tol = cfg.tol;
    opt.seed = cfg.seed;
    const VerifyReport r = verify_identities(opt);
    emit(cfg, dump(r.to_json()));
    if (r.bound_failure()) return kBound;
    return r.passed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal Sheffer polynomials: classification, expansion and verification"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_spec = [&cfg](CLI::App* sub) {
        sub->add_option("--lambda", cfg.lambda, "recurrence lambda (rational)");
        sub->add_option("--k2", cfg.k2, "recurrence k2 (rational)");
        sub->add_option("--kappa", cfg.kappa, "recurrence kappa (rational)");
        sub->add_option("--l1", cfg.l1, "recurrence shift l1 (rational)");
    };
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("-n,--n-max", cfg.n_max, "highest degree");
        sub->add_option("--order", cfg.order, "series order (default 2 n + 2)");
        sub->add_option("--format", cfg.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
        sub->add_option("--out", cfg.out, "output file (relative paths go under MEIXNER_OUT_DIR)");
        sub->add_option("--tol", cfg.tol, "tolerance for numeric checks");
    };

    auto* classify_cmd = app.add_subcommand("classify", "classify a recurrence (lambda, k2, kappa, l1)");
    add_spec(classify_cmd);
    add_common(classify_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "monic polynomials P_0..P_n");
    add_spec(expand_cmd);
    add_common(expand_cmd);
    expand_cmd->add_option("--family", cfg.family, "e.g. meixner:beta=3/2,c=1/4");

    auto* table_cmd = app.add_subcommand("table", "coefficient or value table");
    add_spec(table_cmd);
    add_common(table_cmd);
    table_cmd->add_option("--family", cfg.family, "e.g. charlier:a=1");
    table_cmd->add_option("--x", cfg.xs, "evaluation points (rationals)")->delimiter(',');

    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    add_common(verify_cmd);
    verify_cmd->add_option("--family", cfg.family, "family to verify");
    verify_cmd->add_flag("--all", cfg.all, "all reference families, identities and limits");
    verify_cmd->add_option("--seed", cfg.seed, "seed for random instances");

    auto* limits_cmd = app.add_subcommand("limits", "limit transitions of the Meixner scheme");
    add_common(limits_cmd);
    limits_cmd->add_option("--edge", cfg.edge, "edge name, e.g. charlier-hermite (default: all)");
    limits_cmd->add_option("--eps-decades", cfg.decades, "eps = 10^-1 .. 10^-decades");
    limits_cmd->add_option("--x", cfg.xs, "evaluation points (rationals)")->delimiter(',');

    auto* ident_cmd = app.add_subcommand("identities", "Krawtchouk-Meixner and Meixner-Pollaczek-Meixner identities");
    add_common(ident_cmd);
    ident_cmd->add_option("--seed", cfg.seed, "seed for random instances");

    // default n for limits is small; the other commands use 20
    limits_cmd->preparse_callback([&cfg](std::size_t) { cfg.n_max = 2; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(cfg);
        if (expand_cmd->parsed()) return cmd_expand(cfg);
        if (table_cmd->parsed()) return cmd_table(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
        if (limits_cmd->parsed()) return cmd_limits(cfg);
        if (ident_cmd->parsed()) return cmd_identities(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBound;
    }
    return kUsage;
}
