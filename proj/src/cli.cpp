#include "detcount/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"

#include "detcount/counting.hpp"
#include "detcount/error.hpp"
#include "detcount/literals.hpp"
#include "detcount/number_theory.hpp"
#include "detcount/oracle.hpp"
#include "detcount/serialize.hpp"

namespace detcount {
namespace {

std::uint64_t resolve_budget(const CliConfig& cfg) {
    if (cfg.budget) return *cfg.budget;
    if (const char* env = std::getenv("DETCOUNT_BUDGET"); env != nullptr && *env != '\0') {
        return parse_unsigned(env, "DETCOUNT_BUDGET");
    }
    return kDefaultBudget;
}

Count gl_order(const RingDescriptor& ring, unsigned n) {
    if (ring.is_chain()) return count_gl(ring.chain().q(), ring.chain().nilpotency(), n);
    Count out = 1;
    for (const auto& c : ring.product().components()) out *= count_gl(c.q(), c.nilpotency(), n);
    return out;
}

void emit_count(const CliConfig& cfg, const RingDescriptor& ring, const std::string& key, const Count& value,
                std::ostream& out) {
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["ring"] = ring.spec_string();
        j["n"] = cfg.n;
        if (!cfg.det.empty()) j["det"] = cfg.det;
        j[key] = value.str();
        out << j.dump() << '\n';
    } else {
        out << value << '\n';
    }
}

int cmd_count(const CliConfig& cfg, std::ostream& out) {
    const auto ring = parse_ring_spec(cfg.ring);
    const auto det = parse_element(ring, cfg.det);
    const Count value = ring.is_chain() ? count_det(ring.chain(), std::get<Element>(det), cfg.n)
                                        : count_det_product(ring.product(), std::get<ProductElement>(det), cfg.n);
    emit_count(cfg, ring, "count", value, out);
    return kExitOk;
}

int cmd_gl(const CliConfig& cfg, std::ostream& out) {
    const auto ring = parse_ring_spec(cfg.ring);
    emit_count(cfg, ring, "gl_order", gl_order(ring, cfg.n), out);
    return kExitOk;
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
    const auto ring = parse_ring_spec(cfg.ring);
    auto table = ring.is_chain() ? full_table(ring.chain(), cfg.n) : full_table(ring.product(), cfg.n);
    table.ring = ring.spec_string();
    if (cfg.format == "json") {
        out << to_json(table).dump() << '\n';
    } else if (cfg.format == "csv") {
        out << to_csv(table);
    } else {
        out << to_text(table);
    }
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto ring = parse_ring_spec(cfg.ring);
    VerifyOptions options;
    options.mode = cfg.mode == "sampled" ? TallyMode::Sampled : TallyMode::Exhaustive;
    options.samples = cfg.samples;
    options.seed = cfg.seed;
    options.enumeration.budget = resolve_budget(cfg);
    options.enumeration.threads = cfg.threads;
    VerifyReport report;
    if (ring.integer_modulus) {
        report = verify_integers_mod(*ring.integer_modulus, cfg.n, options);
    } else if (ring.is_chain()) {
        report = verify_ring(ring.chain(), cfg.n, options);
    } else {
        report = verify_ring(ring.product(), cfg.n, options);
    }
    if (cfg.format == "json") {
        out << to_json(report).dump() << '\n';
    } else {
        out << to_text(report);
    }
    err << "wall time " << report.wall_seconds << " s\n";
    return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_factor(const CliConfig& cfg, std::ostream& out) {
    const auto ring = crt_factor_integer(cfg.m);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["m"] = std::to_string(cfg.m);
        auto comps = nlohmann::ordered_json::array();
        for (const auto& c : ring.components()) {
            nlohmann::ordered_json cj;
            cj["p"] = std::to_string(c.characteristic_prime());
            cj["e"] = c.nilpotency();
            cj["ring"] = c.spec_string();
            cj["name"] = c.name();
            comps.push_back(std::move(cj));
        }
        j["components"] = std::move(comps);
        j["spec"] = ring.spec_string();
        out << j.dump() << '\n';
    } else {
        out << ring.name() << '\n';
    }
    return kExitOk;
}

int cmd_det(const CliConfig& cfg, std::ostream& out) {
    const auto ring = parse_ring_spec(cfg.ring);
    const auto matrix = parse_matrix(ring, cfg.matrix);
    const AnyElement det = std::visit([](const auto& m) -> AnyElement { return determinant(m); }, matrix);
    const auto literal = format_element(ring, det);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["ring"] = ring.spec_string();
        j["matrix"] = cfg.matrix;
        j["det"] = literal;
        out << j.dump() << '\n';
    } else {
        out << literal << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Exact counts of matrices with a given determinant over finite chain rings and principal ideal rings",
                 "detcount"};
    app.require_subcommand(1);

    const std::vector<std::string> formats_tj{"text", "json"};
    auto ring_opt = [&](CLI::App* sub) { sub->add_option("--ring", cfg.ring, "ring spec, e.g. zpe:2^3, fqu:4,2, z:12")->required(); };
    auto n_opt = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::Range(1u, 1000u));
    };

    auto* count_cmd = app.add_subcommand("count", "number of n x n matrices with determinant D");
    ring_opt(count_cmd);
    n_opt(count_cmd);
    count_cmd->add_option("--det", cfg.det, "determinant literal")->required();
    count_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats_tj));

    auto* table = app.add_subcommand("table", "per-valuation-class counts");
    ring_opt(table);
    n_opt(table);
    table->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "compare closed forms against a brute-force tally");
    ring_opt(verify);
    n_opt(verify);
    verify->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", cfg.samples)->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--budget", cfg.budget, "maximum matrices to enumerate");
    verify->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
    verify->add_option("--format", cfg.format)->check(CLI::IsMember(formats_tj));

    auto* factor = app.add_subcommand("factor", "chain-ring decomposition of Z_M");
    factor->add_option("--m", cfg.m)->required();
    factor->add_option("--format", cfg.format)->check(CLI::IsMember(formats_tj));

    auto* gl = app.add_subcommand("gl", "order of GL_n");
    ring_opt(gl);
    n_opt(gl);
    gl->add_option("--format", cfg.format)->check(CLI::IsMember(formats_tj));

    auto* det = app.add_subcommand("det", "determinant of a matrix literal");
    ring_opt(det);
    det->add_option("--matrix", cfg.matrix, "rows separated by ';', entries by ','")->required();
    det->add_option("--format", cfg.format)->check(CLI::IsMember(formats_tj));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (cfg.subcommand == "count") return cmd_count(cfg, out);
        if (cfg.subcommand == "table") return cmd_table(cfg, out);
        if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
        if (cfg.subcommand == "factor") return cmd_factor(cfg, out);
        if (cfg.subcommand == "gl") return cmd_gl(cfg, out);
        if (cfg.subcommand == "det") return cmd_det(cfg, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "; use --mode sampled or raise --budget\n";
        return kExitBudget;
    } catch (const ExactnessError& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace detcount
