#include <CLI11.hpp>
#include <iostream>

#include "stabmod/fitting.hpp"
#include "stabmod/scenarios.hpp"

using namespace stabmod;

namespace {

/// Splitting context for a deserialized module's group; the catalog groups
/// carry their canonical Sylow splittings.
homalg::SplitContext context_for(const grp::GroupPtr& g) {
    if (g->order() % 3 != 0) return homalg::semisimple_context(g);
    if (g->order() == 24) return homalg::g24_context();
    for (int k = 1; k <= 4; ++k) {
        long zk = 1;
        for (int t = 0; t < k; ++t) zk *= 3;
        if (g->order() == 24 * zk) return homalg::n_level_context(k);
    }
    throw std::invalid_argument(
        "no registered Sylow splitting for a group of order " + std::to_string(g->order()) +
        "; decompose/resolve support the catalog groups");
}

int run_verify(const scenarios::ScenarioConfig& cfg) {
    scenarios::Report report = scenarios::run(cfg);
    std::cout << scenarios::report_to_text(report);
    std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
    if (!cfg.out_path.empty()) std::cerr << "report written to " << cfg.out_path << "\n";
    return report.overall ? 0 : 1;
}

int run_decompose(const std::string& path, uint64_t seed, const std::string& out) {
    rep::RepModule m = io::module_from_json(io::json::parse(io::read_text_file(path)));
    homalg::SplitContext ctx = context_for(m.group());
    homalg::DecompositionReport rep = homalg::ks_decompose(m, ctx, seed, 3);
    std::cout << "module of rank " << m.rank() << " over " << m.ring().describe() << ": "
              << rep.summands.size() << " summand type(s)\n";
    for (const auto& [desc, mult] : rep.summands)
        std::cout << "  " << mult << " x (" << desc.label(ctx) << ")\n";
    std::cout << (rep.stable ? "stable under random basis change\n"
                             : "UNSTABLE at this precision\n");
    if (!out.empty()) {
        io::json j;
        j["rank"] = m.rank();
        j["precision"] = rep.precision;
        j["seed"] = rep.seed;
        j["stable"] = rep.stable;
        io::json s = io::json::array();
        for (const auto& [desc, mult] : rep.summands) {
            io::json one;
            one["label"] = desc.label(ctx);
            one["rank"] = desc.rank;
            one["multiplicity"] = mult;
            s.push_back(std::move(one));
        }
        j["summands"] = std::move(s);
        io::write_text_file(out, j.dump(2) + "\n");
    }
    return rep.stable ? 0 : 1;
}

int run_resolve(const std::string& path, long length, const std::string& out) {
    rep::RepModule m = io::module_from_json(io::json::parse(io::read_text_file(path)));
    homalg::SplitContext ctx = context_for(m.group());
    homalg::ResolutionPrefix res = homalg::minimal_resolution(m, length, ctx);
    std::cout << "minimal resolution multiplicities (rows r = 0.." << length << "):\n";
    std::cout << "  simples:";
    for (const auto& n : res.table.simple_names) std::cout << " " << n;
    std::cout << "\n";
    for (size_t r = 0; r < res.table.rows.size(); ++r) {
        std::cout << "  r=" << r << ":";
        for (long v : res.table.rows[r]) std::cout << " " << v;
        std::cout << "\n";
    }
    if (!out.empty()) {
        io::json j;
        j["simples"] = res.table.simple_names;
        j["rows"] = res.table.rows;
        io::write_text_file(out, j.dump(2) + "\n");
    }
    return 0;
}

int run_check(const std::string& path, const std::string& out) {
    homalg::ChainComplex c = io::complex_from_json(io::json::parse(io::read_text_file(path)));
    homalg::ExactnessCertificate cert = homalg::check_exact(c);
    std::cout << cert.describe() << "\n";
    if (!out.empty()) {
        io::json j;
        j["exact"] = cert.exact;
        j["first_failure"] = cert.first_failure;
        io::json reports = io::json::array();
        for (const auto& r : cert.reports) {
            io::json one;
            one["free_rank"] = r.free_rank;
            one["torsion"] = r.torsion;
            reports.push_back(std::move(one));
        }
        j["positions"] = std::move(reports);
        io::write_text_file(out, j.dump(2) + "\n");
    }
    return cert.exact ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of permutation-module complexes for the height-2 "
                 "stabilizer groups at p = 3"};
    app.require_subcommand(1);

    scenarios::ScenarioConfig cfg;
    auto* verify = app.add_subcommand("verify", "run a registered scenario");
    verify->add_option("scenario", cfg.name, "one of: " + [] {
                          std::string s;
                          for (const auto& n : scenarios::scenario_names())
                              s += (s.empty() ? "" : ", ") + n;
                          return s;
                      }())
        ->required();
    verify->add_option("--p", cfg.p, "prime (default 3)");
    verify->add_option("--precision", cfg.precision, "truncation exponent m (default 8)");
    verify->add_option("--tower-max-k", cfg.tower_max_k, "tower depth (default 3, max 4)");
    verify->add_option("--max-degree", cfg.max_degree, "ledger degree bound (default 6)");
    verify->add_option("--seed", cfg.seed, "random seed (default 12345)");
    verify->add_option("--out", cfg.out_path, "write the JSON report here");

    std::string module_path, out_path;
    uint64_t seed = 12345;
    auto* decompose = app.add_subcommand("decompose", "Krull-Schmidt decomposition of a module file");
    decompose->add_option("module-file", module_path)->required()->check(CLI::ExistingFile);
    decompose->add_option("--seed", seed);
    decompose->add_option("--out", out_path);

    std::string resolve_path, resolve_out;
    long length = 4;
    auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of a module file");
    resolve->add_option("module-file", resolve_path)->required()->check(CLI::ExistingFile);
    resolve->add_option("--length", length, "resolution length (default 4)");
    resolve->add_option("--out", resolve_out);

    std::string check_path, check_out;
    auto* check = app.add_subcommand("check", "exactness certificate for a complex file");
    check->add_option("complex-file", check_path)->required()->check(CLI::ExistingFile);
    check->add_option("--out", check_out);

    CLI11_PARSE(app, argc, argv);
    try {
        if (verify->parsed()) return run_verify(cfg);
        if (decompose->parsed()) return run_decompose(module_path, seed, out_path);
        if (resolve->parsed()) return run_resolve(resolve_path, length, resolve_out);
        if (check->parsed()) return run_check(check_path, check_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
