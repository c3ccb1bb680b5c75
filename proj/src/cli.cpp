#include "bordism/cli.hpp"

#include "bordism/errors.hpp"
#include "bordism/fgl.hpp"
#include "bordism/json_io.hpp"
#include "bordism/parallel.hpp"
#include "bordism/realizability.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bordism {

namespace {

struct Config {
    int r = 1;
    int N = 6;
    int D = 5;
    std::string input = "json";   // json | sexpr
    std::string output = "text";  // text | json
    std::string expr;
    std::string file;
    bool force_limits = false;
    int threads = 0;
    bool serial = false;
    std::string basis = "mischenko"; // mischenko | aij
};

void check_limits(const Config& cfg) {
    int max_d = 10;
    if (const char* env = std::getenv("BORDISM_MAX_DEGREE")) max_d = std::max(max_d, std::atoi(env));
    if (cfg.force_limits) return;
    if (cfg.r < 1 || cfg.r > 3)
        throw PreconditionError("rank r = " + std::to_string(cfg.r) + " outside [1,3]; pass --force-limits to override");
    if (cfg.N < 1 || cfg.N > RingContext::kDefaultMaxN)
        throw PreconditionError("N = " + std::to_string(cfg.N) + " outside [1,12]; pass --force-limits to override");
    if (cfg.D < 0 || cfg.D > max_d)
        throw PreconditionError("D = " + std::to_string(cfg.D) +
                                " outside [0," + std::to_string(max_d) +
                                "]; raise BORDISM_MAX_DEGREE or pass --force-limits");
}

std::string read_input(const Config& cfg) {
    if (!cfg.expr.empty()) return cfg.expr;
    if (!cfg.file.empty()) {
        std::ifstream in(cfg.file);
        if (!in) throw ParseError("cannot open file '" + cfg.file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

ContextPtr make_ctx(const Config& cfg) {
    return RingContext::make(cfg.N, cfg.force_limits ? cfg.N : RingContext::kDefaultMaxN);
}

ManifoldExpr parse_manifold(const Config& cfg) {
    std::string text = read_input(cfg);
    if (cfg.input == "sexpr") return manifold_from_sexpr(text);
    return manifold_from_json(Json::parse(text));
}

FixedDatum parse_fixed(const Config& cfg, const ContextPtr& ctx) {
    std::string text = read_input(cfg);
    return fixed_from_json(Json::parse(text), ctx, cfg.r);
}

int cmd_fgl(const Config& cfg, int nser, std::ostream& out) {
    auto ctx = make_ctx(cfg);
    int D = cfg.D;
    BorelSeries x = BorelSeries::variable(ctx, 2, D, 1);
    BorelSeries y = BorelSeries::variable(ctx, 2, D, 2);
    BorelSeries F = fgl_add(x, y);
    BorelSeries nx = n_series(nser, x);
    BorelSeries inv = formal_inverse(x);
    if (cfg.output == "json") {
        out << Json{{"F", to_json(F)}, {"n", nser}, {"n_series", to_json(nx)}, {"inverse", to_json(inv)}}.dump(2)
            << "\n";
    } else {
        auto rename = [](std::string s) {
            for (std::size_t p; (p = s.find("C1")) != std::string::npos;) s.replace(p, 2, "x");
            for (std::size_t p; (p = s.find("C2")) != std::string::npos;) s.replace(p, 2, "y");
            return s;
        };
        out << "F(x,y)   = " << rename(F.str()) << "\n";
        out << "[" << nser << "]_F x = " << rename(nx.str()) << "\n";
        out << "[-1]_F x = " << rename(inv.str()) << "\n";
    }
    return 0;
}

int cmd_euler(const Config& cfg, const std::string& mu, std::ostream& out) {
    auto ctx = make_ctx(cfg);
    Weight w = Weight::parse(mu);
    if (w.rank() != cfg.r)
        throw PreconditionError("weight " + w.str() + " has rank " + std::to_string(w.rank()) +
                                ", expected r = " + std::to_string(cfg.r));
    BorelSeries e = euler_class(ctx, w, cfg.D);
    out << (cfg.output == "json" ? to_json(e).dump(2) : e.str()) << "\n";
    return 0;
}

int cmd_phi(const Config& cfg, std::ostream& out) {
    auto ctx = make_ctx(cfg);
    ManifoldExpr m = parse_manifold(cfg);
    FixedDatum d = phi_omega(ctx, m);
    out << (cfg.output == "json" ? to_json(d).dump(2) : d.str()) << "\n";
    return 0;
}

int cmd_antipode(const Config& cfg, std::ostream& out) {
    auto ctx = make_ctx(cfg);
    FixedDatum x = parse_fixed(cfg, ctx);
    FixedDatum ix = antipode(x);
    out << (cfg.output == "json" ? to_json(ix).dump(2) : ix.str()) << "\n";
    return 0;
}

int cmd_localize(const Config& cfg, std::ostream& out) {
    auto ctx = make_ctx(cfg);
    FixedDatum x = parse_fixed(cfg, ctx);
    LocalizedBorel l = localize(x, cfg.D, cfg.r);
    out << (cfg.output == "json" ? to_json(l).dump(2) : l.str()) << "\n";
    return 0;
}

int cmd_realizable(const Config& cfg, std::ostream& out) {
    auto ctx = make_ctx(cfg);
    FixedDatum x = parse_fixed(cfg, ctx);
    Verdict v = realizable(x, cfg.D, cfg.r);
    if (cfg.output == "json") {
        Json j = to_json(v);
        if (v.constant_term && cfg.basis == "aij") j["constant_term_aij"] = ctx->aij_string(*v.constant_term);
        out << j.dump(2) << "\n";
    } else {
        out << v.str() << "\n";
        if (v.constant_term && cfg.basis == "aij")
            out << "  constant term [a_ij basis]: " << ctx->aij_string(*v.constant_term) << "\n";
    }
    return v.realizable() ? 0 : 1;
}

int cmd_verify_catalog(const Config& cfg, std::ostream& out) {
    auto ctx = make_ctx(cfg);
    auto cat = catalog(cfg.r);
    if (cfg.threads > 0) set_threads(cfg.threads);

    struct Row {
        bool cone = false, integral = false, augmentation = false;
        std::string note;
    };
    std::vector<Row> rows(cat.size());
    parallel_for(static_cast<long>(cat.size()), !cfg.serial, [&](long i) {
        const ManifoldExpr& m = cat[static_cast<std::size_t>(i)];
        Row& row = rows[static_cast<std::size_t>(i)];
        try {
            FixedDatum image = phi_omega(ctx, m);
            row.cone = image.in_cone();
            Verdict v = realizable(image, cfg.D, cfg.r);
            row.integral = v.integrality_ok;
            row.augmentation =
                v.constant_term && *v.constant_term == underlying_class(ctx, m);
            if (v.witness) row.note = v.witness->str();
        } catch (const std::exception& e) {
            row.note = e.what();
        }
    });

    std::size_t cone_pass = 0, int_pass = 0, aug_pass = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        cone_pass += rows[i].cone;
        int_pass += rows[i].integral;
        aug_pass += rows[i].augmentation;
        if (!(rows[i].cone && rows[i].integral && rows[i].augmentation))
            out << "FAIL " << cat[i].str() << (rows[i].note.empty() ? "" : "  [" + rows[i].note + "]") << "\n";
    }
    bool ok = cone_pass == rows.size() && int_pass == rows.size() && aug_pass == rows.size();
    out << "catalog r=" << cfg.r << " N=" << cfg.N << " D=" << cfg.D << ": " << rows.size() << " manifolds; cone "
        << cone_pass << "/" << rows.size() << ", integrality " << int_pass << "/" << rows.size() << ", augmentation "
        << aug_pass << "/" << rows.size() << (ok ? "  PASS" : "  FAIL") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact realizability engine for torus-equivariant bordism data"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--r", cfg.r, "torus rank");
    app.add_option("--N", cfg.N, "coefficient truncation half-degree");
    app.add_option("--D", cfg.D, "Borel series truncation degree");
    app.add_option("--input", cfg.input, "input format: json|sexpr")->check(CLI::IsMember({"json", "sexpr"}));
    app.add_option("--output", cfg.output, "output format: text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--expr", cfg.expr, "inline expression");
    app.add_option("--file", cfg.file, "read the expression from a file");
    app.add_option("--basis", cfg.basis, "coefficient rendering: mischenko|aij")
        ->check(CLI::IsMember({"mischenko", "aij"}));
    app.add_option("--threads", cfg.threads, "worker threads for catalog verification");
    app.add_flag("--serial", cfg.serial, "use the serial reference driver");
    app.add_flag("--force-limits", cfg.force_limits, "acknowledge and override the default limits");

    int nser = 2;
    auto* fgl = app.add_subcommand("fgl", "print F(x,y), an n-series and the formal inverse");
    fgl->add_option("--n", nser, "which n-series to print");
    std::string mu = "(1)";
    auto* euler = app.add_subcommand("euler", "print the Euler class e(V) of a weight");
    euler->add_option("--mu", mu, "weight, e.g. (1,-2)");
    auto* phi = app.add_subcommand("phi", "evaluate the fixed point map on a manifold expression");
    auto* anti = app.add_subcommand("antipode", "apply the involution iota to a fixed-point datum");
    auto* loc = app.add_subcommand("localize", "localized Borel image of a fixed-point datum");
    auto* real = app.add_subcommand("realizable", "decide realizability of a fixed-point datum");
    auto* verify = app.add_subcommand("verify-catalog", "run the manifold catalog through every check");
    for (auto* sub : {fgl, euler, phi, anti, loc, real, verify}) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        check_limits(cfg);
        if (fgl->parsed()) return cmd_fgl(cfg, nser, out);
        if (euler->parsed()) return cmd_euler(cfg, mu, out);
        if (phi->parsed()) return cmd_phi(cfg, out);
        if (anti->parsed()) return cmd_antipode(cfg, out);
        if (loc->parsed()) return cmd_localize(cfg, out);
        if (real->parsed()) return cmd_realizable(cfg, out);
        if (verify->parsed()) return cmd_verify_catalog(cfg, out);
        err << "no command\n";
        return 2;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace bordism
