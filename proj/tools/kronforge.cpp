// kronforge: command-line front end for the character, Kronecker and
// staircase-square machinery. Every command prints one JSON document (or a
// plain-text rendering with --output table) on stdout.
//
// Exit status: 0 ok, 2 parse error, 3 precondition, 4 feasibility bound,
// 5 internal consistency failure.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kronforge/engine.hpp"
#include "kronforge/error.hpp"
#include "kronforge/kronecker.hpp"
#include "kronforge/report.hpp"
#include "kronforge/saxl.hpp"
#include "kronforge/table_cache.hpp"

using namespace kronforge;

namespace {

std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("KRONFORGE_CACHE"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "kronforge";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "kronforge";
    return {};
}

Partition arg_partition(const std::string& text) { return Partition::parse(text); }

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact symmetric-group characters, Kronecker coefficients and staircase-square certificates"};
    app.require_subcommand(1);

    RunConfig config;
    std::string cache_dir;
    std::string output = "json";
    bool no_cache = false;
    app.add_option("--n-max", config.n_max, "Feasibility bound on n (1..21)")->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "Character table cache directory (default: $KRONFORGE_CACHE or ~/.cache/kronforge)");
    app.add_flag("--no-cache", no_cache, "Keep character tables in memory only");
    app.add_option("--threads", config.threads, "Worker threads, 0 = automatic")->capture_default_str();
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    bool no_confirm = false;
    app.add_flag("--no-confirm", no_confirm, "Skip brute-force confirmation of certificates");

    std::string a1, a2, a3;
    int i1 = 0, i2 = 0;

    auto* kron = app.add_subcommand("kron", "Kronecker coefficient g(alpha, beta, nu)");
    kron->add_option("alpha", a1)->required();
    kron->add_option("beta", a2)->required();
    kron->add_option("nu", a3)->required();

    auto* square = app.add_subcommand("square", "Decomposition of the Kronecker square of alpha");
    square->add_option("alpha", a1)->required();

    auto* saxl = app.add_subcommand("saxl", "Check that the square of the staircase rho_k contains every partition");
    saxl->add_option("k", i1)->required();

    auto* table = app.add_subcommand("table", "Build or load the character table of S_n and verify it");
    table->add_option("n", i1)->required();

    auto* blocks = app.add_subcommand("blocks", "Combinatorial and linked t-blocks of S_n");
    blocks->add_option("n", i1)->required();
    blocks->add_option("t", i2)->required();

    auto* goodpairs = app.add_subcommand("goodpairs", "All (k, m)-good pairs");
    goodpairs->add_option("k", i1)->required();
    goodpairs->add_option("m", i2)->required();

    auto* telescopic = app.add_subcommand("telescopic", "Telescopic partitions of k(k+1)/2 with certificates");
    telescopic->add_option("k", i1)->required();

    auto* cor16 = app.add_subcommand("cor16", "Doubling-chain constituents for every good pair of (k, 2^floor(log2 k))");
    cor16->add_option("k", i1)->required();

    auto* hook = app.add_subcommand("hook", "Hook constituent of the square of alpha");
    hook->add_option("alpha", a1)->required();

    auto* dichotomy = app.add_subcommand("dichotomy", "Block dichotomy witness for g(xi, beta, alpha) != 0");
    dichotomy->add_option("xi", a1)->required();
    dichotomy->add_option("beta", a2)->required();
    dichotomy->add_option("alpha", a3)->required();
    dichotomy->add_option("t", i1)->required();

    auto* blockcheck = app.add_subcommand("blockcheck", "Dichotomy witnesses for every constituent of the square of rho_k");
    blockcheck->add_option("k", i1)->required();
    blockcheck->add_option("t", i2)->required();

    auto* tcore = app.add_subcommand("tcore", "t-core and t-weight of lambda");
    tcore->add_option("lambda", a1)->required();
    tcore->add_option("t", i1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config.confirm = !no_confirm;
        if (!no_cache)
            config.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
        Engine engine(config);
        Json out;

        if (kron->parsed()) {
            const Partition a = arg_partition(a1), b = arg_partition(a2), c = arg_partition(a3);
            if (a.size() != b.size() || a.size() != c.size())
                fail(ErrorKind::domain, "partitions have different sizes");
            out["value"] = std::to_string(kronecker_coefficient(engine, a, b, c));
        } else if (square->parsed()) {
            const Partition a = arg_partition(a1);
            out["alpha"] = a.str();
            out["terms"] = decomposition_json(kron_square(engine, a));
        } else if (saxl->parsed()) {
            out = saxl_json(saxl_verify(engine, i1));
        } else if (table->parsed()) {
            const auto t = engine.table(i1);
            out = table_report_json(*t, check_table(*t, engine.threads()), table_checksum(*t));
        } else if (blocks->parsed()) {
            out = blocks_report_json(combinatorial_blocks(engine, i1, i2), linked_blocks(engine, i1, i2));
        } else if (goodpairs->parsed()) {
            out = good_pairs_json(i1, i2, good_pairs(i1, i2));
        } else if (telescopic->parsed()) {
            out = telescopic_json(telescopic_partitions(engine, i1));
        } else if (cor16->parsed()) {
            out = doubling_json(i1, doubling_partitions(engine, i1));
        } else if (hook->parsed()) {
            const Partition a = arg_partition(a1);
            const Partition h = hook_constituent(engine, a);
            out["alpha"] = a.str();
            out["hook"] = h.str();
            out["d"] = h.length() - 1;
            out["coefficient"] = std::to_string(kronecker_coefficient(engine, a, a, h));
        } else if (dichotomy->parsed()) {
            const Partition xi = arg_partition(a1), beta = arg_partition(a2), alpha = arg_partition(a3);
            out["xi"] = xi.str();
            out["beta"] = beta.str();
            out["alpha"] = alpha.str();
            out["t"] = i1;
            out.update(witness_json(block_dichotomy_witness(engine, xi, beta, alpha, i1)));
        } else if (blockcheck->parsed()) {
            out = block_check_json(kron_block_check(engine, i1, i2));
        } else if (tcore->parsed()) {
            out = core_json(t_core(arg_partition(a1), i1));
        }

        std::cout << (output == "table" ? render_text(out) : dump_json(out));
        return 0;
    } catch (const Error& e) {
        std::cerr << "kronforge: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "kronforge: internal error: " << e.what() << '\n';
        return 5;
    }
}
