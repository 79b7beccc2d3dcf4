#include "cubrank/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cubrank/eisenstein.hpp"
#include "cubrank/errors.hpp"
#include "cubrank/heuristics.hpp"
#include "cubrank/linkage.hpp"

namespace cubrank {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string config_hash(const ScanConfig& cfg) {
    std::ostringstream os;
    os << cfg.max_conductor << "|" << cfg.k_max << "|" << cfg.shard_count << "|"
       << (cfg.emit_per_field ? 1 : 0);
    return fnv1a_hex(os.str());
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw IoError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw IoError("rename failed for " + path);
    }
}

struct ShardState {
    std::uint64_t lo = 0, hi = 0;  // inclusive conductor range
    std::uint64_t next = 0;        // next conductor to process
    std::uint64_t field_count = 0;
    std::map<int, std::uint64_t> histogram;
    std::map<int, BigInt> moment_sums;
    std::vector<std::string> per_field_rows;

    bool done() const { return next > hi; }
};

ordered_json shard_to_json(const ShardState& s, bool with_rows) {
    ordered_json j;
    j["lo"] = s.lo;
    j["hi"] = s.hi;
    j["next"] = s.next;
    j["field_count"] = s.field_count;
    ordered_json hist = ordered_json::object();
    for (const auto& [k, v] : s.histogram) hist[std::to_string(k)] = v;
    j["histogram"] = std::move(hist);
    ordered_json sums = ordered_json::object();
    for (const auto& [k, v] : s.moment_sums) sums[std::to_string(k)] = v.str();
    j["moment_sums"] = std::move(sums);
    if (with_rows) j["per_field_rows"] = s.per_field_rows;
    return j;
}

ShardState shard_from_json(const ordered_json& j) {
    ShardState s;
    s.lo = j.at("lo").get<std::uint64_t>();
    s.hi = j.at("hi").get<std::uint64_t>();
    s.next = j.at("next").get<std::uint64_t>();
    s.field_count = j.at("field_count").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("histogram").items()) {
        s.histogram[std::stoi(key)] = value.get<std::uint64_t>();
    }
    for (const auto& [key, value] : j.at("moment_sums").items()) {
        s.moment_sums[std::stoi(key)] = BigInt(value.get<std::string>());
    }
    if (j.contains("per_field_rows")) {
        s.per_field_rows = j.at("per_field_rows").get<std::vector<std::string>>();
    }
    return s;
}

// Balanced contiguous ranges: each shard gets roughly the same number of
// admissible conductors.
std::vector<std::pair<std::uint64_t, std::uint64_t>> shard_ranges(const ConductorTable& table,
                                                                  std::uint64_t max_conductor,
                                                                  int shard_count) {
    std::vector<std::uint64_t> admissible;
    for_each_conductor(table, 7, max_conductor, [&](const Conductor& c) {
        admissible.push_back(c.value);
        return true;
    });
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::size_t n = admissible.size();
    std::uint64_t prev_lo = 7;
    for (int i = 0; i < shard_count; ++i) {
        std::size_t end_idx = n * (i + 1) / shard_count;  // exclusive
        std::uint64_t hi;
        if (i == shard_count - 1) {
            hi = max_conductor;
        } else if (end_idx == 0) {
            hi = prev_lo > 0 ? prev_lo - 1 : 0;  // empty range
        } else {
            hi = admissible[end_idx - 1];
        }
        if (hi < prev_lo && i < shard_count - 1) hi = prev_lo - 1;
        ranges.emplace_back(prev_lo, hi);
        prev_lo = hi + 1;
    }
    return ranges;
}

void process_conductor(const Conductor& cond, int k_max, bool emit_rows, ShardState& state) {
    for (const CyclicCubicField& field : fields_for_conductor(cond)) {
        RankRecord rec = rank_record(field);
        ++state.field_count;
        ++state.histogram[rec.s];
        for (int k = 1; k <= k_max; ++k) {
            state.moment_sums[k] += bigint_pow(BigInt(3), static_cast<unsigned>(k * rec.s));
        }
        if (emit_rows) {
            std::ostringstream row;
            row << rec.conductor << "," << rec.char_signature << "," << rec.r << "," << rec.m << ","
                << rec.s;
            state.per_field_rows.push_back(row.str());
        }
    }
}

MomentReport finalize_report(std::uint64_t max_conductor, int k_max,
                             const std::vector<ShardState>& shards) {
    MomentReport rep;
    rep.max_conductor = max_conductor;
    for (int k = 1; k <= k_max; ++k) rep.moment_sums[k] = 0;
    for (const ShardState& s : shards) {
        rep.field_count += s.field_count;
        for (const auto& [sv, cnt] : s.histogram) rep.histogram[sv] += cnt;
        for (const auto& [k, sum] : s.moment_sums) rep.moment_sums[k] += sum;
    }
    if (rep.field_count > 0) {
        for (const auto& [sv, cnt] : rep.histogram) {
            rep.empirical_density[sv] =
                BigRational(BigInt(cnt), BigInt(rep.field_count)).convert_to<double>();
            rep.predicted_density[sv] = predicted_density(sv, 3);
            rep.delta_density[sv] = rep.empirical_density[sv] - rep.predicted_density[sv];
        }
        for (const auto& [k, sum] : rep.moment_sums) {
            rep.empirical_moment[k] = BigRational(sum, BigInt(rep.field_count)).convert_to<double>();
            rep.predicted_moment[k] = predicted_moment(k, 3).size_moment.convert_to<double>();
            rep.delta_moment[k] = rep.empirical_moment[k] - rep.predicted_moment[k];
        }
    }
    return rep;
}

}  // namespace

bool operator==(const MomentReport& a, const MomentReport& b) {
    return a.field_count == b.field_count && a.max_conductor == b.max_conductor &&
           a.histogram == b.histogram && a.empirical_density == b.empirical_density &&
           a.empirical_moment == b.empirical_moment && a.predicted_density == b.predicted_density &&
           a.predicted_moment == b.predicted_moment && a.delta_density == b.delta_density &&
           a.delta_moment == b.delta_moment;
}

std::string report_to_json(const MomentReport& report) {
    ordered_json j;
    j["field_count"] = report.field_count;
    j["max_conductor"] = report.max_conductor;
    auto emit_map = [](const auto& m) {
        ordered_json out = ordered_json::object();
        for (const auto& [k, v] : m) out[std::to_string(k)] = v;
        return out;
    };
    j["histogram"] = emit_map(report.histogram);
    j["empirical_density"] = emit_map(report.empirical_density);
    j["empirical_moment"] = emit_map(report.empirical_moment);
    j["predicted_density"] = emit_map(report.predicted_density);
    j["predicted_moment"] = emit_map(report.predicted_moment);
    ordered_json delta;
    delta["density"] = emit_map(report.delta_density);
    delta["moment"] = emit_map(report.delta_moment);
    j["delta"] = std::move(delta);
    return j.dump(2) + "\n";
}

MomentReport report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("report JSON: ") + e.what(), 0);
    }
    MomentReport rep;
    try {
        rep.field_count = j.at("field_count").get<std::uint64_t>();
        rep.max_conductor = j.at("max_conductor").get<std::uint64_t>();
        for (const auto& [k, v] : j.at("histogram").items())
            rep.histogram[std::stoi(k)] = v.get<std::uint64_t>();
        auto read_map = [&j](const char* key, std::map<int, double>& out) {
            for (const auto& [k, v] : j.at(key).items()) out[std::stoi(k)] = v.get<double>();
        };
        read_map("empirical_density", rep.empirical_density);
        read_map("empirical_moment", rep.empirical_moment);
        read_map("predicted_density", rep.predicted_density);
        read_map("predicted_moment", rep.predicted_moment);
        for (const auto& [k, v] : j.at("delta").at("density").items())
            rep.delta_density[std::stoi(k)] = v.get<double>();
        for (const auto& [k, v] : j.at("delta").at("moment").items())
            rep.delta_moment[std::stoi(k)] = v.get<double>();
    } catch (const std::exception& e) {
        throw ParseError(std::string("report JSON: ") + e.what(), 0);
    }
    return rep;
}

ScanResult scan(const ScanConfig& cfg) {
    if (cfg.max_conductor < 7) throw IoError("scan: max_conductor must be >= 7");
    if (cfg.k_max < 1) throw IoError("scan: k_max must be >= 1");
    if (cfg.shard_count < 1) throw IoError("scan: shard_count must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    ConductorTable table(cfg.max_conductor);
    auto ranges = shard_ranges(table, cfg.max_conductor, cfg.shard_count);

    std::vector<ShardState> shards(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        shards[i].lo = ranges[i].first;
        shards[i].hi = ranges[i].second;
        shards[i].next = ranges[i].first;
        for (int k = 1; k <= cfg.k_max; ++k) shards[i].moment_sums[k] = 0;
    }

    const std::string hash = config_hash(cfg);

    // Resume from an existing checkpoint when the configuration matches.
    if (!cfg.checkpoint_path.empty()) {
        std::ifstream in(cfg.checkpoint_path, std::ios::binary);
        if (in) {
            ordered_json j;
            std::string stored_hash;
            try {
                j = ordered_json::parse(in);
                stored_hash = j.at("config_hash").get<std::string>();
            } catch (const std::exception& e) {
                throw ParseError(std::string("checkpoint: ") + e.what(), 0);
            }
            if (stored_hash != hash) {
                throw IoError("checkpoint at " + cfg.checkpoint_path +
                              " was written by a different configuration");
            }
            if (!j.contains("shards") || !j["shards"].is_array()) {
                throw ParseError("checkpoint: missing shards array", 0);
            }
            const auto& js = j["shards"];
            if (js.size() != shards.size()) {
                throw IoError("checkpoint shard count does not match configuration");
            }
            for (std::size_t i = 0; i < shards.size(); ++i) {
                ShardState loaded;
                try {
                    loaded = shard_from_json(js[i]);
                } catch (const std::exception& e) {
                    throw ParseError(std::string("checkpoint: ") + e.what(), 0);
                }
                if (loaded.lo != shards[i].lo || loaded.hi != shards[i].hi) {
                    throw IoError("checkpoint shard ranges do not match configuration");
                }
                for (int k = 1; k <= cfg.k_max; ++k) loaded.moment_sums.try_emplace(k, 0);
                shards[i] = std::move(loaded);
            }
        }
    }

    // `shards` holds the published states; workers mutate private copies and
    // publish under the mutex, so checkpoint snapshots are always consistent.
    std::mutex publish_mutex;
    auto write_checkpoint_locked = [&]() {
        if (cfg.checkpoint_path.empty()) return;
        ordered_json j;
        j["config_hash"] = hash;
        ordered_json js = ordered_json::array();
        for (const ShardState& s : shards) js.push_back(shard_to_json(s, cfg.emit_per_field));
        j["shards"] = std::move(js);
        write_file_atomic(cfg.checkpoint_path, j.dump() + "\n");
    };

    std::atomic<std::uint64_t> budget{cfg.limit_conductors == 0
                                          ? std::numeric_limits<std::uint64_t>::max()
                                          : cfg.limit_conductors};
    auto take_budget = [&]() {
        std::uint64_t cur = budget.load(std::memory_order_relaxed);
        while (cur > 0) {
            if (budget.compare_exchange_weak(cur, cur - 1, std::memory_order_relaxed)) return true;
        }
        return false;
    };

    std::atomic<bool> failed{false};
    std::string failure_message;

    auto run_shard = [&](std::size_t idx) {
        ShardState local;
        {
            std::lock_guard<std::mutex> lock(publish_mutex);
            local = shards[idx];
            local.per_field_rows.clear();  // rows live in the published state
        }
        std::vector<std::string> pending_rows;
        auto publish = [&](bool checkpoint) {
            std::lock_guard<std::mutex> lock(publish_mutex);
            ShardState& pub = shards[idx];
            pub.next = local.next;
            pub.field_count = local.field_count;
            pub.histogram = local.histogram;
            pub.moment_sums = local.moment_sums;
            pub.per_field_rows.insert(pub.per_field_rows.end(),
                                      std::make_move_iterator(pending_rows.begin()),
                                      std::make_move_iterator(pending_rows.end()));
            pending_rows.clear();
            if (checkpoint) write_checkpoint_locked();
        };

        std::vector<std::uint64_t> primes;
        std::uint64_t since_publish = 0;
        try {
            while (local.next <= local.hi && !failed.load(std::memory_order_relaxed)) {
                if (!take_budget()) break;
                std::uint64_t f = local.next;
                if (table.admissible(f, primes)) {
                    Conductor cond;
                    cond.value = f;
                    cond.ramified_primes = primes;
                    process_conductor(cond, cfg.k_max, cfg.emit_per_field, local);
                }
                local.next = f + 1;
                if (++since_publish >= cfg.checkpoint_interval) {
                    since_publish = 0;
                    pending_rows.swap(local.per_field_rows);
                    publish(true);
                }
            }
            pending_rows.swap(local.per_field_rows);
            publish(false);
        } catch (const std::exception& e) {
            failed = true;
            std::lock_guard<std::mutex> lock(publish_mutex);
            if (failure_message.empty()) failure_message = e.what();
        }
    };

    std::vector<std::thread> workers;
    workers.reserve(shards.size());
    for (std::size_t i = 0; i < shards.size(); ++i) workers.emplace_back(run_shard, i);
    for (auto& w : workers) w.join();

    if (failed) throw InternalInvariantError("scan: " + failure_message);

    {
        std::lock_guard<std::mutex> lock(publish_mutex);
        write_checkpoint_locked();
    }

    ScanResult result;
    result.complete = std::all_of(shards.begin(), shards.end(),
                                  [](const ShardState& s) { return s.done(); });
    if (!result.complete) return result;

    result.report = finalize_report(cfg.max_conductor, cfg.k_max, shards);
    result.report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!cfg.output_path.empty()) {
        write_file_atomic(cfg.output_path, report_to_json(result.report));
    }
    if (cfg.emit_per_field) {
        std::string path = cfg.per_field_path.empty() ? cfg.output_path + ".fields.csv"
                                                      : cfg.per_field_path;
        if (path == ".fields.csv") throw IoError("scan: per-field output needs an output path");
        std::ostringstream csv;
        csv << "conductor,char_signature,r,m,s\n";
        for (const ShardState& s : shards) {
            for (const std::string& row : s.per_field_rows) csv << row << "\n";
        }
        write_file_atomic(path, csv.str());
    }
    return result;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    }
    return out;
}

}  // namespace

CrosscheckReport crosscheck(const std::string& table_path, std::uint64_t max_conductor) {
    std::ifstream in(table_path, std::ios::binary);
    if (!in) throw IoError("crosscheck: cannot open " + table_path);

    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError("crosscheck: empty table", 1);
    ++lineno;
    {
        auto hdr = split_csv_line(line);
        if (hdr.size() != 3 || hdr[0] != "conductor" || hdr[1] != "field_index" ||
            hdr[2] != "rk3_class_group") {
            throw ParseError("crosscheck: header must be conductor,field_index,rk3_class_group",
                             lineno);
        }
    }

    // conductor -> (field_index -> rk3)
    std::map<std::uint64_t, std::map<long long, int>> table;
    CrosscheckReport report;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (cells.size() != 3) throw ParseError("crosscheck: expected 3 columns", lineno);
        std::uint64_t cond;
        long long index;
        int rk3;
        try {
            cond = std::stoull(cells[0]);
            index = std::stoll(cells[1]);
            rk3 = std::stoi(cells[2]);
        } catch (const std::exception&) {
            throw ParseError("crosscheck: non-numeric cell", lineno);
        }
        if (cond > max_conductor) continue;
        ++report.rows;
        auto [it, inserted] = table[cond].try_emplace(index, rk3);
        if (!inserted) {
            throw AmbiguousMatchError("crosscheck: duplicate field_index " + std::to_string(index) +
                                      " for conductor " + std::to_string(cond) + " at line " +
                                      std::to_string(lineno));
        }
    }

    ConductorTable sieve(max_conductor);
    std::vector<std::uint64_t> primes;
    for (const auto& [cond, rows] : table) {
        ++report.conductors;
        if (!sieve.admissible(cond, primes)) {
            report.mismatches.push_back({cond, "not an admissible conductor"});
            continue;
        }
        Conductor c;
        c.value = cond;
        c.ramified_primes = primes;
        const int r = c.num_ramified();

        std::vector<int> ours;
        for (const CyclicCubicField& field : fields_for_conductor(c)) {
            ours.push_back(rank_im_phi(field) + (r - 1));
            ++report.fields;
        }
        std::vector<int> theirs;
        for (const auto& [idx, rk3] : rows) theirs.push_back(rk3);
        std::sort(ours.begin(), ours.end());
        std::sort(theirs.begin(), theirs.end());
        if (ours.size() != theirs.size()) {
            report.mismatches.push_back(
                {cond, "reference has " + std::to_string(theirs.size()) + " rows, expected " +
                           std::to_string(ours.size())});
            continue;
        }
        if (ours != theirs) {
            std::ostringstream os;
            os << "rank multiset mismatch: computed {";
            for (int v : ours) os << " " << v;
            os << " } reference {";
            for (int v : theirs) os << " " << v;
            os << " }";
            report.mismatches.push_back({cond, os.str()});
        }
    }
    return report;
}

namespace {

// Admissible D: squarefree product of primes = 1 mod 3 and/or the prime 3.
bool admissible_radical(std::uint64_t d, int* omega_out) {
    if (d <= 1) return false;
    int omega = 0;
    std::uint64_t n = d;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e != 1 || (p != 3 && p % 3 != 1)) return false;
        ++omega;
    }
    if (n > 1) {
        if (n != 3 && n % 3 != 1) return false;
        ++omega;
    }
    if (omega_out) *omega_out = omega;
    return true;
}

}  // namespace

VerifySummary verify_identity(std::uint64_t d_max, int k, int max_omega, CharSumMode mode) {
    VerifySummary summary;
    summary.kind = "identity";
    for (std::uint64_t d = 3; d <= d_max; ++d) {
        int omega = 0;
        if (!admissible_radical(d, &omega)) continue;
        if (max_omega > 0 && omega > max_omega) continue;
        ++summary.cases;
        if (!verify_character_sum_identity(d, k, mode)) {
            ++summary.failures;
            summary.failure_details.push_back("D = " + std::to_string(d) +
                                              ", k = " + std::to_string(k));
        }
    }
    return summary;
}

VerifySummary verify_combinatorics(int p, int k) {
    VerifySummary summary;
    summary.kind = "combinatorics";
    BigInt expected = count_maximal_unlinked(p, k);
    BigInt via_counts = count_subspaces(k + 1, p) - count_subspaces(k, p);
    ++summary.cases;
    if (expected != via_counts) {
        ++summary.failures;
        summary.failure_details.push_back("closed forms disagree");
    }

    long long total = 1;
    for (int i = 0; i < 2 * k; ++i) total *= p;
    auto sub = enumerate_maximal_unlinked_sets(p, k, UnlinkedEnumMethod::subspace);
    ++summary.cases;
    if (BigInt(sub.size()) != expected) {
        ++summary.failures;
        summary.failure_details.push_back("subspace enumeration count mismatch");
    }
    if (total <= 729) {
        auto brute = enumerate_maximal_unlinked_sets(p, k, UnlinkedEnumMethod::brute);
        ++summary.cases;
        if (brute != sub) {
            ++summary.failures;
            summary.failure_details.push_back("brute and subspace enumerations disagree");
        }
    }
    long long want_size = 1;
    for (int i = 0; i < k; ++i) want_size *= p;
    ++summary.cases;
    for (const auto& s : sub) {
        if (static_cast<long long>(s.size()) != want_size) {
            ++summary.failures;
            summary.failure_details.push_back("set of wrong cardinality");
            break;
        }
    }
    return summary;
}

VerifySummary verify_reciprocity(int pairs, std::uint64_t seed, std::uint64_t max_norm) {
    VerifySummary summary;
    summary.kind = "reciprocity";
    std::vector<std::uint64_t> split_primes;
    for (std::uint64_t l = 7; l < max_norm; ++l) {
        if (l % 3 == 1 && is_prime_u64(l)) split_primes.push_back(l);
    }
    if (split_primes.size() < 2) throw TooLargeError("verify_reciprocity: need max_norm > 13");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, split_primes.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int i = 0; i < pairs; ++i) {
        std::size_t a = pick(rng), b = pick(rng);
        while (b == a) b = pick(rng);
        EisensteinInt pu = factor_split_prime(split_primes[a]);
        EisensteinInt pv = factor_split_prime(split_primes[b]);
        if (coin(rng)) pu = primary_associate(pu.conj());
        if (coin(rng)) pv = primary_associate(pv.conj());

        ++summary.cases;
        bool ok = cubic_residue_symbol(pu, pv) == cubic_residue_symbol(pv, pu);
        if (ok) {
            // norm chain: (N(u)/v)(N(v)/u) = (conj(u)/conj(v))
            EisensteinInt nu(pu.norm(), BigInt(0));
            EisensteinInt nv(pv.norm(), BigInt(0));
            CubeRoot lhs = cubic_residue_symbol(nu, pv) * cubic_residue_symbol(nv, pu);
            CubeRoot rhs = cubic_residue_symbol(pu.conj(), pv.conj());
            ok = (lhs == rhs);
        }
        if (!ok) {
            ++summary.failures;
            summary.failure_details.push_back("pair (" + pu.str() + ", " + pv.str() + ")");
        }
    }
    return summary;
}

}  // namespace cubrank
