#include "wreath/cli.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "wreath/finite_group.hpp"
#include "wreath/normalizer.hpp"
#include "wreath/oracle.hpp"
#include "wreath/perm.hpp"
#include "wreath/stabilizer_chain.hpp"
#include "wreath/wreath_tower.hpp"

namespace wreath::cli {

namespace {

WreathTower make_tower(const RunConfig& cfg) {
    return WreathTower::build(group_from_spec(cfg.group_spec), cfg.level, cfg.max_degree);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
    return f;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    const WreathTower tower = make_tower(cfg);
    const StabilizerChain chain = StabilizerChain::build(tower.top_gens());
    out << "group: " << cfg.group_spec << "\n";
    out << "level: " << tower.levels() << "\n";
    out << "degree: " << tower.degree() << "\n";
    out << "order: " << chain.order() << "\n";
    for (const Perm& g : tower.top_gens()) out << "gen: " << to_cycle_string(g) << "\n";
    return 0;
}

int cmd_order(const RunConfig& cfg, std::ostream& out) {
    const WreathTower tower = make_tower(cfg);
    out << StabilizerChain::build(tower.top_gens()).order() << "\n";
    return 0;
}

int cmd_normalizer(const RunConfig& cfg, std::ostream& out) {
    const WreathTower tower = make_tower(cfg);
    const NormalizerComplement comp = NormalizerComplement::build(tower, cfg.max_aut_order);
    out << "group: " << cfg.group_spec << "\n";
    out << "level: " << tower.levels() << "\n";
    out << "degree: " << tower.degree() << "\n";
    out << "aut-order: " << comp.aut_order() << "\n";
    out << "predicted-order: "
        << predicted_normalizer_order(comp.aut_order(), tower.group().order(), tower.levels())
        << "\n";
    for (const ComplementGen& g : comp.gens()) out << "gen: " << to_cycle_string(g.perm) << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const WreathTower tower = make_tower(cfg);
    const NormalizerComplement comp = NormalizerComplement::build(tower, cfg.max_aut_order);
    const NormalizerReport report = verify_normalizer(tower, comp);
    out << "tower-order: " << report.tower_order << "\n";
    out << "complement-order: " << report.complement_order << "\n";
    out << "combined-order: " << report.combined_order << "\n";
    out << "predicted-order: " << report.predicted_order << "\n";
    render_report(out, report);
    const bool pass = report.all_pass();
    out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_brute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const WreathTower tower = make_tower(cfg);
    const OracleResult result =
        brute_force_normalizer(tower.top_gens(), tower.degree(), cfg.workers);
    err << "scanned " << factorial(tower.degree()) << " permutations of degree " << tower.degree()
        << " in " << result.elapsed_seconds << "s\n";
    out << "degree: " << result.degree << "\n";
    out << "order: " << result.normalizer_order << "\n";
    if (!cfg.out_path.empty()) {
        std::ofstream f = open_out(cfg.out_path);
        write_oracle_manifest(f, result);
        err << "wrote oracle manifest to " << cfg.out_path << "\n";
    }
    if (!cfg.compare) return 0;

    const NormalizerComplement comp = NormalizerComplement::build(tower, cfg.max_aut_order);
    const BigInt predicted =
        predicted_normalizer_order(comp.aut_order(), tower.group().order(), tower.levels());
    out << "predicted: " << predicted << "\n";
    std::vector<Perm> all = comp.perms();
    all.insert(all.end(), tower.top_gens().begin(), tower.top_gens().end());
    const StabilizerChain combined = StabilizerChain::build(all);
    bool match = result.normalizer_order == predicted && combined.order() == predicted;
    for (std::size_t i = 0; match && i < result.elements.size(); ++i)
        match = combined.contains(result.elements[i]);
    out << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? 0 : 1;
}

int cmd_sylow(const RunConfig& cfg, std::ostream& out) {
    const FiniteGroup G = group_from_spec(cfg.group_spec);
    const bool pass = sylow_check(G.order(), cfg.level);
    out << "p: " << G.order() << "\n";
    out << "level: " << cfg.level << "\n";
    out << "sylow-check: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_export(const RunConfig& cfg, std::ostream& err) {
    const WreathTower tower = make_tower(cfg);
    std::ofstream f = open_out(cfg.out_path);
    write_tower_manifest(f, tower, cfg.group_spec);
    err << "wrote tower manifest to " << cfg.out_path << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"iterated wreath products and their normalizers"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--group", cfg.group_spec,
                        "group spec: name, name:param, or @cayley-table-file")
            ->required();
        sub->add_option("--level", cfg.level, "tower height (0 = trivial group on one point)")
            ->required()
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--max-degree", cfg.max_degree, "tower degree cap")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    auto add_aut_cap = [&cfg](CLI::App* sub) {
        sub->add_option("--max-aut-order", cfg.max_aut_order,
                        "largest group order accepted for automorphism search")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* build = app.add_subcommand("build", "construct a tower and print its summary");
    add_common(build);
    CLI::App* order = app.add_subcommand("order", "print the tower group order");
    add_common(order);
    CLI::App* normalizer =
        app.add_subcommand("normalizer", "print the normalizer complement generators");
    add_common(normalizer);
    add_aut_cap(normalizer);
    CLI::App* verify =
        app.add_subcommand("verify", "check the semidirect normalizer decomposition");
    add_common(verify);
    add_aut_cap(verify);
    CLI::App* brute =
        app.add_subcommand("brute", "brute-force the normalizer by scanning the symmetric group");
    add_common(brute);
    add_aut_cap(brute);
    brute->add_flag("--compare", cfg.compare,
                    "also check the oracle against the constructed normalizer");
    brute->add_option("--workers", cfg.workers, "scan worker count (0 = runtime default)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    brute->add_option("--out", cfg.out_path, "write the oracle manifest to this file");
    CLI::App* sylow = app.add_subcommand(
        "sylow", "check the tower order against the p-part of the symmetric group order");
    add_common(sylow);
    CLI::App* exp = app.add_subcommand("export", "write the tower manifest to a file");
    add_common(exp);
    exp->add_option("--out", cfg.out_path, "manifest destination")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(build)) return cmd_build(cfg, out);
        if (app.got_subcommand(order)) return cmd_order(cfg, out);
        if (app.got_subcommand(normalizer)) return cmd_normalizer(cfg, out);
        if (app.got_subcommand(verify)) return cmd_verify(cfg, out);
        if (app.got_subcommand(brute)) return cmd_brute(cfg, out, err);
        if (app.got_subcommand(sylow)) return cmd_sylow(cfg, out);
        if (app.got_subcommand(exp)) return cmd_export(cfg, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace wreath::cli
