#include "knodel/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace knodel::scan {

using nlohmann::json;

namespace {

// Certifying a translated candidate is O(n * degree); past this size only the
// exact search could decide, and that has its own ceiling.
constexpr i64 kTranslationCertifyLimit = i64{1} << 22;

// Translate the closed-form block pattern built for the largest even multiple
// n2 <= n onto Z_n and look for an offset that dominates. This is the
// heuristic reading of the paper's "translated by the remainder" remark; a
// hit is a genuine certificate, a miss proves nothing.
std::optional<VertexSet> translated_candidate(const KnodelGraph& g, i64 block, i64 target) {
    const i64 n = g.vertex_count();
    const i64 n2 = block * (n / block);
    if (n2 < block || n2 < 6) return std::nullopt;
    std::vector<i64> base;
    for (i64 x = 0; x < n2; x += block) base.push_back(x);
    for (i64 x = block - 1; x < n2; x += block) base.push_back(x);
    for (i64 delta = 0; delta < block; ++delta) {
        VertexSet cand(n);
        for (i64 x : base) cand.add((x + delta) % n);
        if (cand.size() <= target && verify::certify(g, cand).dominating) return cand;
    }
    return std::nullopt;
}

ConjectureOutcome run_conjecture(i64 n, u64 p, int k, i64 target, i64 pattern_block,
                                 const exact::Budget& budget) {
    ConjectureOutcome out;
    out.p = p;
    out.k = k;
    out.target = target;

    if (n <= kTranslationCertifyLimit) {
        const KnodelGraph g = KnodelGraph::build(n);
        if (auto cand = translated_candidate(g, pattern_block, target)) {
            out.verdict = Verdict::Supported;
            out.via_translated_set = true;
            return out;
        }
        const i64 ceiling = budget.ceiling > 0 ? budget.ceiling : exact::kDefaultBranchBoundCeiling;
        if (n <= ceiling) {
            exact::Decision d = exact::exists_dominating_of_size(g, target, budget);
            out.nodes = d.nodes;
            switch (d.answer) {
                case exact::Answer::Yes: out.verdict = Verdict::Supported; break;
                case exact::Answer::No: out.verdict = Verdict::Refuted; break;
                case exact::Answer::Inconclusive: out.verdict = Verdict::Inconclusive; break;
            }
            return out;
        }
    }
    out.verdict = Verdict::Inconclusive;  // beyond the oracle ceiling, no witness found
    return out;
}

Verdict overall(const std::vector<ConjectureOutcome>& v) {
    if (v.empty()) return Verdict::NotApplicable;
    bool inconclusive = false;
    for (const auto& o : v) {
        if (o.verdict == Verdict::Refuted) return Verdict::Refuted;
        if (o.verdict == Verdict::Inconclusive) inconclusive = true;
    }
    return inconclusive ? Verdict::Inconclusive : Verdict::Supported;
}

i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Supported: return "supported";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::NotApplicable: return "n/a";
    }
    return "?";
}

Verdict ScanRecord::conj1_overall() const { return overall(conj1); }
Verdict ScanRecord::conj2_overall() const { return overall(conj2); }

ConjectureOutcome test_conjecture1(i64 n, u64 p, const exact::Budget& budget) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("test_conjecture1: n must be even, >= 6");
    if (p < 3 || p % 2 == 0 || !nt::is_prime(p))
        throw std::invalid_argument("test_conjecture1: p must be an odd prime");
    if (p > static_cast<u64>(nt::ceil_log2(static_cast<u64>(n))))
        throw std::invalid_argument("test_conjecture1: requires p <= ceil(log2 n)");
    if (!nt::is_primitive_root(2, p))
        throw std::invalid_argument("test_conjecture1: requires 2 primitive mod p");
    const i64 pp = static_cast<i64>(p);
    return run_conjecture(n, p, 1, ceil_div(n, pp), 2 * pp, budget);
}

ConjectureOutcome test_conjecture2(i64 n, u64 p, int k, const exact::Budget& budget) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("test_conjecture2: n must be even, >= 6");
    if (p < 3 || p % 2 == 0 || !nt::is_prime(p))
        throw std::invalid_argument("test_conjecture2: p must be an odd prime");
    if (k < 2) throw std::invalid_argument("test_conjecture2: k must be >= 2");
    u64 q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (nt::totient(q) >= static_cast<u64>(nt::ceil_log2(static_cast<u64>(n))))
        throw std::invalid_argument("test_conjecture2: requires totient(p^k) < ceil(log2 n)");
    if (!nt::is_primitive_root(2, q))
        throw std::invalid_argument("test_conjecture2: requires 2 primitive mod p^k");
    const i64 qq = static_cast<i64>(q);
    return run_conjecture(n, p, k, ceil_div(2 * n, qq), qq, budget);
}

ScanRecord scan_one(i64 n, const ScanOptions& options) {
    ScanRecord rec;
    rec.n = n;
    try {
        rec.degree = nt::floor_log2(static_cast<u64>(n));
        rec.factorization = nt::factorize(static_cast<u64>(n)).to_string();
        rec.thm1_witnesses = construct::thm1_witnesses(n);
        rec.thm2_witnesses = construct::thm2_witnesses(n);
        rec.bounds = construct::best_bound(n);

        exact::Budget budget = options.budget;
        if (budget.ceiling == 0) budget.ceiling = options.oracle_ceiling;

        if (n <= options.oracle_ceiling) {
            rec.oracle_ran = true;
            exact::SolveResult res = exact::exact_gamma(KnodelGraph::build(n), budget);
            if (res.status == exact::Status::Solved) {
                rec.gamma = res.gamma;
                rec.bounds.gamma_exact = res.gamma;
                rec.conj3_slack = res.gamma - rec.bounds.lower_berge;
                rec.sandwich_violation = !rec.bounds.sandwich_ok();
            } else {
                rec.oracle_inconclusive = true;
                rec.oracle_lower = res.lower_bound;
                rec.oracle_upper = res.upper_bound;
            }
        }

        if (options.run_conjectures) {
            const u64 log_ceil = static_cast<u64>(nt::ceil_log2(static_cast<u64>(n)));
            for (u64 p : nt::primes_below(log_ceil + 1)) {
                if (p < 3) continue;
                if (nt::is_primitive_root(2, p))
                    rec.conj1.push_back(test_conjecture1(n, p, budget));
                u64 q = p * p;
                for (int k = 2; nt::totient(q) < log_ceil; ++k, q *= p)
                    if (nt::is_primitive_root(2, q))
                        rec.conj2.push_back(test_conjecture2(n, p, k, budget));
            }
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

std::vector<ScanRecord> scan_range(i64 lo, i64 hi, const ScanOptions& options,
                                   const std::function<void(const ScanRecord&)>& sink) {
    if (lo % 2 != 0 || hi % 2 != 0)
        throw std::invalid_argument("scan_range: lo and hi must be even");
    if (lo < 6 || lo > hi) throw std::invalid_argument("scan_range: requires 6 <= lo <= hi");

    std::vector<i64> ns;
    for (i64 n = lo; n <= hi; n += 2) ns.push_back(n);
    std::vector<ScanRecord> records(ns.size());

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < ns.size(); ++i) records[i] = scan_one(ns[i], options);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= ns.size()) return;
                records[i] = scan_one(ns[i], options);
            }
        };
        std::vector<std::thread> pool;
        const int threads = std::min<int>(jobs, static_cast<int>(ns.size()));
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (sink)
        for (const auto& r : records) sink(r);
    return records;
}

Summary summarize(std::span<const ScanRecord> records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");
    Summary s;
    s.records = static_cast<i64>(records.size());
    double slack_sum = 0.0;
    i64 slack_count = 0;
    for (const auto& r : records) {
        if (!r.thm1_witnesses.empty() || !r.thm2_witnesses.empty()) ++s.with_theorem_witness;
        if (r.gamma) ++s.solved;
        if (r.oracle_inconclusive) ++s.inconclusive;
        if (r.conj1_overall() == Verdict::Refuted) ++s.refuted_conj1;
        if (r.conj2_overall() == Verdict::Refuted) ++s.refuted_conj2;
        if (r.sandwich_violation) ++s.sandwich_violations;
        if (r.conj3_slack) {
            s.max_slack = std::max(s.max_slack, *r.conj3_slack);
            slack_sum += static_cast<double>(*r.conj3_slack);
            ++slack_count;
            const double ratio =
                static_cast<double>(*r.conj3_slack) / std::log2(static_cast<double>(r.n));
            s.max_slack_over_log2 = std::max(s.max_slack_over_log2, ratio);
        }
    }
    if (slack_count > 0) s.mean_slack = slack_sum / static_cast<double>(slack_count);
    return s;
}

std::string format_summary(const Summary& s) {
    std::ostringstream os;
    os << "records: " << s.records << "\n"
       << "with theorem witness: " << s.with_theorem_witness << " ("
       << 100.0 * s.witness_fraction() << "%)\n"
       << "oracle solved: " << s.solved << ", inconclusive: " << s.inconclusive << "\n"
       << "refuted verdicts: conj1 = " << s.refuted_conj1 << ", conj2 = " << s.refuted_conj2
       << "\n"
       << "conjecture-3 slack: max = " << s.max_slack << ", mean = " << s.mean_slack
       << ", max slack/log2(n) = " << s.max_slack_over_log2 << "\n"
       << "sandwich violations: " << s.sandwich_violations << "\n";
    return os.str();
}

namespace {

json witness_to_json(const nt::PrimePowerWitness& w) {
    return json{{"p", w.prime},
                {"e", w.exponent},
                {"value", w.value},
                {"order_of_two", w.order_of_two},
                {"is_primitive", w.is_primitive}};
}

nt::PrimePowerWitness witness_from_json(const json& j) {
    nt::PrimePowerWitness w;
    w.prime = j.at("p").get<u64>();
    w.exponent = j.at("e").get<int>();
    w.value = j.at("value").get<u64>();
    w.order_of_two = j.at("order_of_two").get<u64>();
    w.is_primitive = j.at("is_primitive").get<bool>();
    return w;
}

json outcome_to_json(const ConjectureOutcome& o) {
    return json{{"p", o.p},          {"k", o.k},
                {"target", o.target}, {"verdict", to_string(o.verdict)},
                {"translated", o.via_translated_set}, {"nodes", o.nodes}};
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "supported") return Verdict::Supported;
    if (s == "refuted") return Verdict::Refuted;
    if (s == "inconclusive") return Verdict::Inconclusive;
    return Verdict::NotApplicable;
}

ConjectureOutcome outcome_from_json(const json& j) {
    ConjectureOutcome o;
    o.p = j.at("p").get<u64>();
    o.k = j.at("k").get<int>();
    o.target = j.at("target").get<i64>();
    o.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    o.via_translated_set = j.at("translated").get<bool>();
    o.nodes = j.at("nodes").get<u64>();
    return o;
}

verify::BoundSource source_from_string(const std::string& s) {
    if (s == "thm1") return verify::BoundSource::Thm1;
    if (s == "thm2") return verify::BoundSource::Thm2;
    if (s == "n/4") return verify::BoundSource::QuarterN;
    return verify::BoundSource::HalfN;
}

json bounds_to_json(const verify::BoundReport& b) {
    json uppers = json::array();
    for (const auto& ub : b.uppers) {
        json e{{"value", ub.value}, {"source", verify::to_string(ub.source)}};
        if (ub.witness) e["witness"] = witness_to_json(*ub.witness);
        uppers.push_back(e);
    }
    json j{{"n", b.n},
           {"degree", b.degree},
           {"lower_berge", b.lower_berge},
           {"uppers", uppers}};
    j["lower_prop2"] = b.lower_prop2 ? json(*b.lower_prop2) : json(nullptr);
    j["gamma_exact"] = b.gamma_exact ? json(*b.gamma_exact) : json(nullptr);
    return j;
}

verify::BoundReport bounds_from_json(const json& j) {
    verify::BoundReport b;
    b.n = j.at("n").get<i64>();
    b.degree = j.at("degree").get<int>();
    b.lower_berge = j.at("lower_berge").get<i64>();
    if (!j.at("lower_prop2").is_null()) b.lower_prop2 = j.at("lower_prop2").get<i64>();
    if (!j.at("gamma_exact").is_null()) b.gamma_exact = j.at("gamma_exact").get<i64>();
    for (const auto& e : j.at("uppers")) {
        verify::UpperBound ub;
        ub.value = e.at("value").get<i64>();
        ub.source = source_from_string(e.at("source").get<std::string>());
        if (e.contains("witness")) ub.witness = witness_from_json(e.at("witness"));
        b.uppers.push_back(ub);
    }
    return b;
}

json record_to_json(const ScanRecord& r) {
    json j{{"n", r.n},
           {"degree", r.degree},
           {"factorization", r.factorization},
           {"bounds", bounds_to_json(r.bounds)},
           {"oracle_ran", r.oracle_ran},
           {"oracle_inconclusive", r.oracle_inconclusive},
           {"sandwich_violation", r.sandwich_violation},
           {"error", r.error}};
    json t1 = json::array(), t2 = json::array();
    for (const auto& w : r.thm1_witnesses) t1.push_back(witness_to_json(w));
    for (const auto& w : r.thm2_witnesses) t2.push_back(witness_to_json(w));
    j["thm1_witnesses"] = t1;
    j["thm2_witnesses"] = t2;
    j["gamma"] = r.gamma ? json(*r.gamma) : json(nullptr);
    j["oracle_lower"] = r.oracle_lower ? json(*r.oracle_lower) : json(nullptr);
    j["oracle_upper"] = r.oracle_upper ? json(*r.oracle_upper) : json(nullptr);
    j["conj3_slack"] = r.conj3_slack ? json(*r.conj3_slack) : json(nullptr);
    json c1 = json::array(), c2 = json::array();
    for (const auto& o : r.conj1) c1.push_back(outcome_to_json(o));
    for (const auto& o : r.conj2) c2.push_back(outcome_to_json(o));
    j["conj1"] = c1;
    j["conj2"] = c2;
    return j;
}

ScanRecord record_from_json(const json& j) {
    ScanRecord r;
    r.n = j.at("n").get<i64>();
    r.degree = j.at("degree").get<int>();
    r.factorization = j.at("factorization").get<std::string>();
    r.bounds = bounds_from_json(j.at("bounds"));
    r.oracle_ran = j.at("oracle_ran").get<bool>();
    r.oracle_inconclusive = j.at("oracle_inconclusive").get<bool>();
    r.sandwich_violation = j.at("sandwich_violation").get<bool>();
    r.error = j.at("error").get<std::string>();
    for (const auto& w : j.at("thm1_witnesses")) r.thm1_witnesses.push_back(witness_from_json(w));
    for (const auto& w : j.at("thm2_witnesses")) r.thm2_witnesses.push_back(witness_from_json(w));
    if (!j.at("gamma").is_null()) r.gamma = j.at("gamma").get<i64>();
    if (!j.at("oracle_lower").is_null()) r.oracle_lower = j.at("oracle_lower").get<i64>();
    if (!j.at("oracle_upper").is_null()) r.oracle_upper = j.at("oracle_upper").get<i64>();
    if (!j.at("conj3_slack").is_null()) r.conj3_slack = j.at("conj3_slack").get<i64>();
    for (const auto& o : j.at("conj1")) r.conj1.push_back(outcome_from_json(o));
    for (const auto& o : j.at("conj2")) r.conj2.push_back(outcome_from_json(o));
    return r;
}

// Conclusiveness score for merge: exact gamma beats bounds, error-free beats
// errored, conclusive conjecture verdicts count.
int record_score(const ScanRecord& r) {
    int score = 0;
    if (r.error.empty()) score += 1000;
    if (r.gamma) score += 100;
    for (const auto& o : r.conj1)
        if (o.verdict == Verdict::Supported || o.verdict == Verdict::Refuted) ++score;
    for (const auto& o : r.conj2)
        if (o.verdict == Verdict::Supported || o.verdict == Verdict::Refuted) ++score;
    return score;
}

}  // namespace

void write_records(std::ostream& os, std::span<const ScanRecord> records) {
    os << json{{"schema", kRecordSchema}}.dump() << '\n';
    for (const auto& r : records) os << record_to_json(r).dump() << '\n';
}

std::vector<ScanRecord> read_records(std::istream& is) {
    std::vector<ScanRecord> out;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (!saw_header) {
            saw_header = true;
            if (j.contains("schema")) {
                if (j.at("schema").get<std::string>() != kRecordSchema)
                    throw std::runtime_error("read_records: unsupported schema");
                continue;
            }
        }
        out.push_back(record_from_json(j));
    }
    return out;
}

std::vector<ScanRecord> merge_records(std::vector<ScanRecord> existing,
                                      std::vector<ScanRecord> fresh) {
    std::map<i64, ScanRecord> by_n;
    for (auto& r : existing) by_n.emplace(r.n, std::move(r));
    for (auto& r : fresh) {
        auto it = by_n.find(r.n);
        if (it == by_n.end() || record_score(r) >= record_score(it->second))
            by_n.insert_or_assign(r.n, std::move(r));
    }
    std::vector<ScanRecord> out;
    out.reserve(by_n.size());
    for (auto& [n, r] : by_n) out.push_back(std::move(r));
    return out;
}

void write_table(std::ostream& os, std::span<const ScanRecord> records) {
    os << "# knodel-scan table " << kRecordSchema << '\n';
    os << "# columns: n degree witness lb_berge lb_prop2 ub_best ub_src gamma conj1 conj2 slack\n";
    auto opt = [](const std::optional<i64>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    for (const auto& r : records) {
        if (r.bounds.uppers.empty()) {  // record errored before bounds were assembled
            os << r.n << " - - - - - - - - - -\n";
            continue;
        }
        std::string witness = "-";
        const auto& best = r.bounds.best_upper();
        if (best.witness) witness = best.provenance();
        std::string conj1 = r.conj1.empty() ? "-" : to_string(r.conj1_overall());
        std::string conj2 = r.conj2.empty() ? "-" : to_string(r.conj2_overall());
        os << r.n << ' ' << r.degree << ' ' << witness << ' ' << r.bounds.lower_berge << ' '
           << opt(r.bounds.lower_prop2) << ' ' << best.value << ' ' << best.provenance() << ' '
           << opt(r.gamma) << ' ' << conj1 << ' ' << conj2 << ' ' << opt(r.conj3_slack) << '\n';
    }
}

}  // namespace knodel::scan
