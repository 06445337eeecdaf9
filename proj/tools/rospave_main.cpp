#include "rospave/rospave.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace rospave;

struct RunConfig {
    std::string matrix_path;
    std::string map_path;
    std::string family_path;
    std::string intervals_path;
    std::string partition_path;
    std::string set_path;
    std::string blocks_path;
    std::string epsilon_text;
    std::uint64_t l = 0;
    std::uint64_t t = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 42;
    std::uint64_t limit = kDefaultOracleLimit;
    bool absolute = false;
    std::string format = "json";
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json jwrap(const std::string& serialized) { return json::parse(serialized); }

void emit(const json& doc, const RunConfig& cfg) {
    if (cfg.format == "json") {
        std::cout << doc.dump(1) << '\n';
    }
}

// Relative epsilon scales by the row-sum norm; --absolute passes the
// threshold through untouched.
struct Scaled {
    Rational norm;
    Rational threshold; // what certificates are checked against
    Rational relative;  // what the paving algorithm receives
};

Scaled scale_epsilon(const NonnegativeMatrix& m, const Rational& eps, bool absolute) {
    Scaled s;
    s.norm = norm_inf(m);
    if (absolute) {
        s.threshold = eps;
        s.relative = s.norm > 0 ? Rational(eps / s.norm) : Rational(1);
    } else {
        s.threshold = eps * s.norm;
        s.relative = eps;
    }
    return s;
}

Rational require_epsilon(const RunConfig& cfg, bool allow_zero) {
    if (cfg.epsilon_text.empty()) {
        throw ParseError("--epsilon is required for this command");
    }
    Rational eps = parse_rational(cfg.epsilon_text);
    if (eps < 0 || (!allow_zero && eps == 0)) {
        throw NonPositiveEpsilon("epsilon must be " + std::string(allow_zero ? ">= 0" : "> 0") +
                                 ", got " + format_rational(eps));
    }
    return eps;
}

int cmd_pave(const RunConfig& cfg) {
    const NonnegativeMatrix m = parse_matrix(read_input(cfg.matrix_path));
    const Rational eps = require_epsilon(cfg, false);
    const Scaled sc = scale_epsilon(m, eps, cfg.absolute);

    IndexPartition part = cfg.l > 0 ? pave_with_arity(m, sc.relative, cfg.l)
                                    : pave(m, sc.relative);
    unsigned long long budget = 1;
    if (sc.relative < 1) {
        budget = cfg.l > 0 ? cfg.l * cfg.l : block_budget(sc.relative);
    }

    bool all_fragmented = true;
    json certs = json::array();
    for (const IndexSet& block : part.blocks()) {
        FragmentationCertificate c = check_fragmentation(m, block, sc.threshold);
        all_fragmented = all_fragmented && c.fragmented();
        certs.push_back(jwrap(serialize_certificate(c)));
    }

    json doc;
    doc["command"] = "pave";
    doc["epsilon"] = format_rational(eps);
    doc["absolute"] = cfg.absolute;
    doc["norm_inf"] = format_rational(sc.norm);
    doc["threshold"] = format_rational(sc.threshold);
    doc["budget"] = budget;
    doc["block_count"] = part.block_count();
    doc["partition"] = jwrap(serialize_partition(part));
    doc["certificates"] = std::move(certs);
    doc["all_fragmented"] = all_fragmented;
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << "pave: n=" << m.dim() << " norm_inf=" << format_rational(sc.norm)
                  << " threshold=" << format_rational(sc.threshold) << " budget=" << budget
                  << "\nblocks: " << part.block_count()
                  << (all_fragmented ? " (all certified)" : " (CERTIFICATION FAILED)") << '\n';
        for (std::size_t b = 0; b < part.block_count(); ++b) {
            std::cout << "  block " << b << " size " << part.blocks()[b].size() << '\n';
        }
    }
    return all_fragmented ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    const NonnegativeMatrix m = parse_matrix(read_input(cfg.matrix_path));
    const Rational eps = require_epsilon(cfg, true);
    const Scaled sc = scale_epsilon(m, eps, cfg.absolute);
    if (cfg.partition_path.empty() == cfg.set_path.empty()) {
        throw ParseError("verify needs exactly one of --partition or --set");
    }

    json doc;
    doc["command"] = "verify";
    doc["epsilon"] = format_rational(eps);
    doc["threshold"] = format_rational(sc.threshold);
    bool ok = true;
    if (!cfg.partition_path.empty()) {
        const IndexPartition part = parse_partition(read_input(cfg.partition_path));
        if (part.ambient_dim() != m.dim()) {
            throw DimensionMismatch("partition ambient " + std::to_string(part.ambient_dim()) +
                                    " does not match matrix dimension " +
                                    std::to_string(m.dim()));
        }
        json certs = json::array();
        for (const IndexSet& block : part.blocks()) {
            FragmentationCertificate c = check_fragmentation(m, block, sc.threshold);
            ok = ok && c.fragmented();
            certs.push_back(jwrap(serialize_certificate(c)));
        }
        doc["block_count"] = part.block_count();
        doc["certificates"] = std::move(certs);
    } else {
        const IndexSet set = parse_index_set(read_input(cfg.set_path));
        FragmentationCertificate c = check_fragmentation(m, set, sc.threshold);
        ok = c.fragmented();
        doc["certificate"] = jwrap(serialize_certificate(c));
    }
    doc["all_fragmented"] = ok;
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << "verify: threshold=" << format_rational(sc.threshold) << ' '
                  << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_minpave(const RunConfig& cfg) {
    const NonnegativeMatrix m = parse_matrix(read_input(cfg.matrix_path));
    const Rational eps = require_epsilon(cfg, true);
    const Scaled sc = scale_epsilon(m, eps, cfg.absolute);
    const OptimalPaving best = min_paving_number(m, sc.threshold, cfg.limit);

    json doc;
    doc["command"] = "minpave";
    doc["epsilon"] = format_rational(sc.threshold);
    doc["min_blocks"] = best.min_blocks;
    doc["witness"] = jwrap(serialize_partition(best.witness));
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << best.min_blocks << '\n';
    }
    return 0;
}

int cmd_minfree(const RunConfig& cfg) {
    const FixedPointFreeMap f = parse_map(read_input(cfg.map_path));
    const OptimalFreePartition best = min_free_partition_number(f, cfg.limit);

    json doc;
    doc["command"] = "minfree";
    doc["min_blocks"] = best.min_blocks;
    doc["witness"] = jwrap(serialize_partition(best.witness));
    doc["exhaustive"] = best.exhaustive;
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << best.min_blocks << '\n';
    }
    return 0;
}

int cmd_freeset(const RunConfig& cfg) {
    const FixedPointFreeMap f = parse_map(read_input(cfg.map_path));
    const IndexPartition part = pave_free(f);
    bool all_free = true;
    json free_flags = json::array();
    for (const IndexSet& block : part.blocks()) {
        const bool fr = is_free(f, block);
        all_free = all_free && fr;
        free_flags.push_back(fr);
    }

    json doc;
    doc["command"] = "freeset";
    doc["block_count"] = part.block_count();
    doc["partition"] = jwrap(serialize_partition(part));
    doc["blocks_free"] = std::move(free_flags);
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << "freeset: " << part.block_count() << " blocks, "
                  << (all_free ? "all free" : "NOT ALL FREE") << '\n';
    }
    return all_free ? 0 : 1;
}

int cmd_split(const RunConfig& cfg) {
    const SetFamily family = parse_family(read_input(cfg.family_path));
    const auto found = find_splitter(family, cfg.t);

    json doc;
    doc["command"] = "split";
    doc["t"] = cfg.t;
    if (!found) {
        doc["result"] = "unsplittable";
        emit(doc, cfg);
        if (cfg.format == "text") {
            std::cout << "unsplittable\n";
        }
        return 0;
    }
    json counts = json::array();
    for (const IndexSet& f : family.sets()) {
        std::size_t inside = 0;
        for (std::size_t e : f.members()) {
            inside += found->contains(e) ? 1 : 0;
        }
        counts.push_back(json{{"in", inside}, {"out", f.size() - inside}});
    }
    doc["result"] = "found";
    doc["set"] = jwrap(serialize_index_set(*found));
    doc["counts"] = std::move(counts);
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << "splitter of size " << found->size() << '\n';
    }
    return 0;
}

int cmd_blocks(const RunConfig& cfg) {
    const SetFamily family = parse_family(read_input(cfg.family_path));
    const auto found = build_disjoint_blocks(family, cfg.m, cfg.t);

    json doc;
    doc["command"] = "blocks";
    doc["m"] = cfg.m;
    doc["t"] = cfg.t;
    if (!found) {
        doc["result"] = "infeasible";
        emit(doc, cfg);
        if (cfg.format == "text") {
            std::cout << "infeasible\n";
        }
        return 0;
    }
    json leftover = json::array();
    for (const IndexSet& f : family.sets()) {
        std::size_t remaining = 0;
        for (std::size_t e : f.members()) {
            bool taken = false;
            for (const IndexSet& b : *found) {
                if (b.contains(e)) {
                    taken = true;
                    break;
                }
            }
            remaining += taken ? 0 : 1;
        }
        leftover.push_back(remaining);
    }
    doc["result"] = "found";
    doc["blocks"] = jwrap(serialize_block_list(family.ambient_dim(), *found));
    doc["leftover_counts"] = std::move(leftover);
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << found->size() << " blocks\n";
    }
    return 0;
}

int cmd_cover(const RunConfig& cfg) {
    const SetFamily family = parse_family(read_input(cfg.family_path));
    auto [ambient, blocks] = parse_block_list(read_input(cfg.blocks_path));
    if (ambient != family.ambient_dim()) {
        throw DimensionMismatch("blocks ambient " + std::to_string(ambient) +
                                " does not match family ambient " +
                                std::to_string(family.ambient_dim()));
    }
    const FixedPointFreeMap f = covering_map(family, blocks);

    json image_ok = json::array();
    for (const IndexSet& member : family.sets()) {
        std::vector<char> hit(blocks.size(), 0);
        for (std::size_t e : member.members()) {
            if (f(e) < blocks.size()) {
                hit[f(e)] = 1;
            }
        }
        bool covers = true;
        for (char h : hit) {
            covers = covers && h;
        }
        image_ok.push_back(covers);
    }

    json doc;
    doc["command"] = "cover";
    doc["map"] = jwrap(serialize_map(f));
    doc["covers_prefix"] = blocks.size();
    doc["image_check"] = std::move(image_ok);
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << "covering map over [0, " << blocks.size() << ")\n";
    }
    return 0;
}

int cmd_c0frag(const RunConfig& cfg) {
    const NonnegativeMatrix raw = parse_matrix(read_input(cfg.matrix_path));
    const NonnegativeMatrix m = zero_diagonal(raw);
    const Rational eps = require_epsilon(cfg, false);
    const C0FragmentResult result = c0_fragment_set(m, eps);

    json doc;
    doc["command"] = "c0frag";
    doc["epsilon"] = format_rational(eps);
    doc["set"] = jwrap(serialize_index_set(result.set));
    doc["certificate"] = jwrap(serialize_certificate(result.certificate));
    doc["column_cutoffs"] = json(c0_column_cutoffs(m, eps));
    doc["tail_cutoffs"] = json(c0_tail_cutoffs(m, eps));
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << "set of size " << result.set.size() << ", "
                  << (result.certificate.fragmented() ? "fragmented" : "NOT FRAGMENTED") << '\n';
    }
    return result.certificate.fragmented() ? 0 : 1;
}

int cmd_witness(const RunConfig& cfg) {
    const SetFamily family = parse_family(read_input(cfg.family_path));
    const FixedPointFreeMap g = parse_map(read_input(cfg.map_path));
    const IntervalPartition intervals = parse_intervals(read_input(cfg.intervals_path));
    const FiniteToOneWitness w = finite_to_one_witness(family, g, intervals);

    json doc;
    doc["command"] = "witness";
    doc["map"] = jwrap(serialize_map(w.map));
    doc["preimage_bound"] = w.preimage_bound;
    doc["single_piece_hit"] = json(w.single_piece_hit);
    emit(doc, cfg);
    if (cfg.format == "text") {
        std::cout << "witness map, preimage bound " << w.preimage_bound << '\n';
    }
    return 0;
}

// Seeded instance generators for the benchmark suites. Power-of-two
// denominators keep rational arithmetic lean.
NonnegativeMatrix random_dense_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<unsigned long> num(0, 255);
    std::vector<NonnegativeMatrix::Entry> entries;
    entries.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            const unsigned long v = num(rng);
            if (v != 0) {
                Rational r(v, 256);
                r.canonicalize();
                entries.push_back({k, j, std::move(r)});
            }
        }
    }
    return NonnegativeMatrix::from_triplets(n, std::move(entries));
}

FixedPointFreeMap random_fixed_point_free_map(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 2);
    std::vector<std::size_t> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t v = pick(rng);
        f[i] = v >= i ? v + 1 : v;
    }
    return FixedPointFreeMap(std::move(f));
}

int cmd_bench(const RunConfig& cfg) {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(cfg.seed);
    json doc;
    doc["command"] = "bench";
    doc["seed"] = cfg.seed;

    const std::vector<std::pair<const char*, Rational>> epsilons = {
        {"1/2", Rational(1, 2)}, {"1/5", Rational(1, 5)}, {"1/10", Rational(1, 10)}};
    json pave_rows = json::array();
    if (cfg.format == "text") {
        std::cout << "pave (5 instances per row, seed " << cfg.seed << ")\n"
                  << "   n  epsilon  mean_ms  max_blocks  budget\n";
    }
    for (std::size_t n : {50, 100, 200}) {
        for (const auto& [name, eps] : epsilons) {
            double total_ms = 0;
            std::size_t max_blocks = 0;
            const int instances = 5;
            for (int i = 0; i < instances; ++i) {
                const NonnegativeMatrix m = random_dense_matrix(rng, n);
                const auto start = clock::now();
                const IndexPartition p = pave(m, eps);
                total_ms += std::chrono::duration<double, std::milli>(clock::now() - start).count();
                max_blocks = std::max(max_blocks, p.block_count());
            }
            const double mean_ms = total_ms / instances;
            const auto budget = block_budget(eps);
            pave_rows.push_back(json{{"n", n},
                                     {"epsilon", name},
                                     {"instances", instances},
                                     {"mean_ms", mean_ms},
                                     {"max_blocks", max_blocks},
                                     {"budget", budget}});
            if (cfg.format == "text") {
                std::printf("%4zu  %7s  %7.2f  %10zu  %6llu\n", n, name, mean_ms, max_blocks,
                            budget);
            }
        }
    }
    doc["pave"] = std::move(pave_rows);

    // Optimality gap of the greedy paver on oracle-sized instances.
    json gap_rows = json::array();
    if (cfg.format == "text") {
        std::cout << "greedy vs exact (n=10, epsilon=1/2)\n"
                  << "  instance  greedy  exact\n";
    }
    for (int i = 0; i < 10; ++i) {
        const NonnegativeMatrix m = random_dense_matrix(rng, 10);
        const Rational eps(1, 2);
        const Rational threshold = eps * norm_inf(m);
        const IndexPartition greedy = pave(m, eps);
        const OptimalPaving best = min_paving_number(m, threshold, 12);
        gap_rows.push_back(json{{"instance", i},
                                {"greedy_blocks", greedy.block_count()},
                                {"min_blocks", best.min_blocks}});
        if (cfg.format == "text") {
            std::printf("  %8d  %6zu  %5zu\n", i, greedy.block_count(), best.min_blocks);
        }
    }
    doc["greedy_vs_exact"] = std::move(gap_rows);

    json free_rows = json::array();
    if (cfg.format == "text") {
        std::cout << "pave_free\n       n     ms\n";
    }
    for (std::size_t n : {1000, 10000, 100000}) {
        const FixedPointFreeMap f = random_fixed_point_free_map(rng, n);
        const auto start = clock::now();
        const IndexPartition p = pave_free(f);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        free_rows.push_back(json{{"n", n}, {"ms", ms}, {"blocks", p.block_count()}});
        if (cfg.format == "text") {
            std::printf("%8zu  %6.2f\n", n, ms);
        }
    }
    doc["pave_free"] = std::move(free_rows);

    emit(doc, cfg);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fragmentation certificates, greedy pavings and the finite splitter "
                 "constructions for nonnegative matrices"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("--matrix", cfg.matrix_path, "matrix document (JSON triplets or CSV); - for stdin")
            ->required();
    };
    const auto add_epsilon = [&](CLI::App* sub) {
        sub->add_option("--epsilon", cfg.epsilon_text, "exact rational, e.g. 1/2 or 0.25")
            ->required();
    };
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json (default) or text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    const auto add_map = [&](CLI::App* sub) {
        sub->add_option("--map", cfg.map_path, "fixed-point-free map document; - for stdin")
            ->required();
    };
    const auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family_path, "set family document; - for stdin")
            ->required();
    };

    CLI::App* pave_cmd = app.add_subcommand(
        "pave", "partition the index range so every block fragments the matrix");
    add_matrix(pave_cmd);
    add_epsilon(pave_cmd);
    add_format(pave_cmd);
    pave_cmd->add_flag("--absolute", cfg.absolute,
                       "treat epsilon as an absolute threshold instead of a multiple of norm_inf");
    pave_cmd->add_option("--l", cfg.l, "override the per-half color count (must satisfy 2/l < epsilon)");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "re-check fragmentation certificates; exit 1 on failure");
    add_matrix(verify_cmd);
    add_epsilon(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->add_flag("--absolute", cfg.absolute,
                         "treat epsilon as an absolute threshold instead of a multiple of norm_inf");
    verify_cmd->add_option("--partition", cfg.partition_path,
                           "partition document (pave output is accepted directly)");
    verify_cmd->add_option("--set", cfg.set_path, "single index-set document");

    CLI::App* minpave_cmd =
        app.add_subcommand("minpave", "exact minimum paving size by exhaustive search");
    add_matrix(minpave_cmd);
    add_epsilon(minpave_cmd);
    add_format(minpave_cmd);
    minpave_cmd->add_flag("--absolute", cfg.absolute,
                          "treat epsilon as an absolute threshold instead of a multiple of norm_inf");
    minpave_cmd->add_option("--limit", cfg.limit, "exhaustive search size cap (default 12)");

    CLI::App* minfree_cmd = app.add_subcommand(
        "minfree", "exact minimum free partition size (structural past the limit)");
    add_map(minfree_cmd);
    add_format(minfree_cmd);
    minfree_cmd->add_option("--limit", cfg.limit, "exhaustive search size cap (default 12)");

    CLI::App* freeset_cmd =
        app.add_subcommand("freeset", "partition the domain into at most 3 free blocks");
    add_map(freeset_cmd);
    add_format(freeset_cmd);

    CLI::App* split_cmd =
        app.add_subcommand("split", "find a set splitting every family member with margin t");
    add_family(split_cmd);
    add_format(split_cmd);
    split_cmd->add_option("--t", cfg.t, "two-sided threshold")->required();

    CLI::App* blocks_cmd = app.add_subcommand(
        "blocks", "build m disjoint blocks, each meeting every family member in >= t points");
    add_family(blocks_cmd);
    add_format(blocks_cmd);
    blocks_cmd->add_option("--m", cfg.m, "number of blocks")->required();
    blocks_cmd->add_option("--t", cfg.t, "per-block threshold")->required();

    CLI::App* cover_cmd = app.add_subcommand(
        "cover", "build the fixed-point-free map sending every family member onto [0, m)");
    add_family(cover_cmd);
    add_format(cover_cmd);
    cover_cmd->add_option("--blocks", cfg.blocks_path, "disjoint block list document")->required();

    CLI::App* c0frag_cmd = app.add_subcommand(
        "c0frag", "greedy single fragmenting set for a column-decaying matrix (diagonal dropped)");
    add_matrix(c0frag_cmd);
    add_epsilon(c0frag_cmd);
    add_format(c0frag_cmd);

    CLI::App* witness_cmd = app.add_subcommand(
        "witness", "finite-to-one map agreeing with g on interval-co-located pairs");
    add_family(witness_cmd);
    add_map(witness_cmd);
    add_format(witness_cmd);
    witness_cmd->add_option("--intervals", cfg.intervals_path, "interval partition document")
        ->required();

    CLI::App* bench_cmd = app.add_subcommand("bench", "seeded timing and budget-utilization suites");
    add_format(bench_cmd);
    bench_cmd->add_option("--seed", cfg.seed, "random seed (default 42)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pave_cmd->parsed()) {
            return cmd_pave(cfg);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(cfg);
        }
        if (minpave_cmd->parsed()) {
            return cmd_minpave(cfg);
        }
        if (minfree_cmd->parsed()) {
            return cmd_minfree(cfg);
        }
        if (freeset_cmd->parsed()) {
            return cmd_freeset(cfg);
        }
        if (split_cmd->parsed()) {
            return cmd_split(cfg);
        }
        if (blocks_cmd->parsed()) {
            return cmd_blocks(cfg);
        }
        if (cover_cmd->parsed()) {
            return cmd_cover(cfg);
        }
        if (c0frag_cmd->parsed()) {
            return cmd_c0frag(cfg);
        }
        if (witness_cmd->parsed()) {
            return cmd_witness(cfg);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(cfg);
        }
        std::cerr << "error: no command\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
