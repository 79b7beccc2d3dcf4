// Command line front end: scan, verify, combinatorics, predict, crosscheck.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubrank/errors.hpp"
#include "cubrank/harness.hpp"
#include "cubrank/heuristics.hpp"
#include "cubrank/linkage.hpp"

namespace {

using cubrank::CharSumMode;

int run_scan(const cubrank::ScanConfig& cfg) {
    cubrank::ScanResult result = cubrank::scan(cfg);
    if (!result.complete) {
        std::cerr << "scan stopped before completion; resume with the same checkpoint\n";
        return 3;
    }
    const cubrank::MomentReport& rep = result.report;
    std::cout << cubrank::report_to_json(rep);
    std::cerr << "scanned " << rep.field_count << " fields with conductor <= " << rep.max_conductor
              << " in " << rep.wall_time_sec << "s\n";
    return 0;
}

void print_verify(const cubrank::VerifySummary& summary) {
    std::cout << summary.kind << ": " << (summary.cases - summary.failures) << "/" << summary.cases
              << " cases passed\n";
    for (const std::string& d : summary.failure_details) std::cout << "  FAIL " << d << "\n";
}

int run_predict(int p, int kmax, int smax) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json densities = nlohmann::ordered_json::object();
    for (int s = 0; s <= smax; ++s) densities[std::to_string(s)] = cubrank::predicted_density(s, p);
    j["p"] = p;
    j["density"] = std::move(densities);
    nlohmann::ordered_json moments = nlohmann::ordered_json::object();
    nlohmann::ordered_json size_moments = nlohmann::ordered_json::object();
    for (int k = 1; k <= kmax; ++k) {
        cubrank::PredictedMoment m = cubrank::predicted_moment(k, p);
        moments[std::to_string(k)] = m.p_rank_moment.str();
        size_moments[std::to_string(k)] = m.size_moment.convert_to<double>();
    }
    j["moment"] = std::move(moments);
    j["size_moment"] = std::move(size_moments);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank statistics of cyclic cubic class groups"};
    app.require_subcommand(1);

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "enumerate fields and aggregate rank statistics");
    cubrank::ScanConfig cfg;
    scan_cmd->add_option("--max-conductor", cfg.max_conductor, "largest conductor (inclusive)")
        ->required();
    scan_cmd->add_option("--kmax", cfg.k_max, "highest moment to accumulate")->default_val(1);
    scan_cmd->add_option("--shards", cfg.shard_count, "number of worker shards")->default_val(1);
    scan_cmd->add_option("--out", cfg.output_path, "report JSON path")->required();
    scan_cmd->add_option("--checkpoint", cfg.checkpoint_path, "checkpoint path for resumable runs");
    scan_cmd->add_flag("--per-field", cfg.emit_per_field, "also write a per-field CSV");
    scan_cmd->add_option("--per-field-out", cfg.per_field_path,
                         "per-field CSV path (default: <out>.fields.csv)");
    scan_cmd->add_option("--limit-conductors", cfg.limit_conductors,
                         "stop after this many conductor candidates (testing hook)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run an exact verification suite");
    verify_cmd->require_subcommand(1);

    auto* vid = verify_cmd->add_subcommand("identity", "character-sum identity over admissible D");
    std::uint64_t id_dmax = 200;
    int id_k = 1, id_maxomega = 0;
    bool id_exhaustive = false;
    vid->add_option("--dmax", id_dmax, "largest D");
    vid->add_option("--k", id_k, "moment order");
    vid->add_option("--max-omega", id_maxomega, "restrict number of prime factors (0 = all)");
    vid->add_flag("--exhaustive", id_exhaustive, "sum over all character tuples, no orbit folding");

    auto* vcomb = verify_cmd->add_subcommand("combinatorics", "unlinked-set enumerations vs closed form");
    int vc_p = 3, vc_k = 1;
    vcomb->add_option("--p", vc_p, "prime p");
    vcomb->add_option("--k", vc_k, "parameter k");

    auto* vrec = verify_cmd->add_subcommand("reciprocity", "cubic reciprocity on random prime pairs");
    int vr_pairs = 1000;
    std::uint64_t vr_seed = 7, vr_maxnorm = 100000;
    vrec->add_option("--pairs", vr_pairs, "number of random pairs");
    vrec->add_option("--seed", vr_seed, "RNG seed");
    vrec->add_option("--max-norm", vr_maxnorm, "norm bound for the sampled primes");

    // combinatorics
    auto* comb_cmd = app.add_subcommand("combinatorics", "maximal unlinked set counts");
    int cb_p = 3, cb_k = 1;
    bool cb_enumerate = false;
    comb_cmd->add_option("--p", cb_p, "prime p")->required();
    comb_cmd->add_option("--k", cb_k, "parameter k")->required();
    comb_cmd->add_flag("--enumerate", cb_enumerate, "also print the sets");

    // predict
    auto* pred_cmd = app.add_subcommand("predict", "closed-form densities and moments");
    int pr_p = 3, pr_kmax = 3, pr_smax = 8;
    pred_cmd->add_option("--p", pr_p, "prime p")->required();
    pred_cmd->add_option("--kmax", pr_kmax, "largest moment order");
    pred_cmd->add_option("--smax", pr_smax, "largest rank");

    // crosscheck
    auto* cc_cmd = app.add_subcommand("crosscheck", "compare ranks against a reference table");
    std::string cc_table;
    std::uint64_t cc_max = 4000;
    cc_cmd->add_option("--table", cc_table, "reference CSV")->required();
    cc_cmd->add_option("--max-conductor", cc_max, "largest conductor to check")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*scan_cmd) return run_scan(cfg);
        if (*vid) {
            cubrank::VerifySummary s = cubrank::verify_identity(
                id_dmax, id_k, id_maxomega,
                id_exhaustive ? CharSumMode::exhaustive_tuples : CharSumMode::orbit_representatives);
            print_verify(s);
            return s.passed() ? 0 : 1;
        }
        if (*vcomb) {
            cubrank::VerifySummary s = cubrank::verify_combinatorics(vc_p, vc_k);
            print_verify(s);
            return s.passed() ? 0 : 1;
        }
        if (*vrec) {
            cubrank::VerifySummary s = cubrank::verify_reciprocity(vr_pairs, vr_seed, vr_maxnorm);
            print_verify(s);
            return s.passed() ? 0 : 1;
        }
        if (*comb_cmd) {
            cubrank::BigInt u = cubrank::count_maximal_unlinked(cb_p, cb_k);
            std::cout << "U = " << u << "\n";
            std::cout << "N(k)   = " << cubrank::count_subspaces(cb_k, cb_p) << "\n";
            std::cout << "N(k+1) = " << cubrank::count_subspaces(cb_k + 1, cb_p) << "\n";
            if (cb_enumerate) {
                auto sets = cubrank::enumerate_maximal_unlinked_sets(
                    cb_p, cb_k, cubrank::UnlinkedEnumMethod::subspace);
                for (const auto& set : sets) {
                    for (std::size_t i = 0; i < set.size(); ++i)
                        std::cout << (i ? " " : "") << set[i];
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (*pred_cmd) return run_predict(pr_p, pr_kmax, pr_smax);
        if (*cc_cmd) {
            cubrank::CrosscheckReport rep = cubrank::crosscheck(cc_table, cc_max);
            std::cout << "checked " << rep.fields << " fields over " << rep.conductors
                      << " conductors (" << rep.rows << " reference rows)\n";
            for (const auto& mm : rep.mismatches) {
                std::cout << "MISMATCH conductor " << mm.conductor << ": " << mm.detail << "\n";
            }
            std::cout << (rep.passed() ? "all ranks match\n" : "mismatches found\n");
            return rep.passed() ? 0 : 1;
        }
    } catch (const cubrank::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
