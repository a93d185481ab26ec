#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knodel/construct.hpp"
#include "knodel/exact.hpp"
#include "knodel/verify.hpp"

// Range-scan driver: per even n, assemble witnesses, bounds, optional exact
// gamma and conjecture verdicts; persist as line-delimited records or a flat
// table and summarize.

namespace knodel::scan {

inline constexpr const char* kRecordSchema = "knodel-scan/1";

enum class Verdict { Supported, Refuted, Inconclusive, NotApplicable };
const char* to_string(Verdict v);

struct ConjectureOutcome {
    u64 p = 0;
    int k = 1;            // 1 for conjecture 1, >= 2 for conjecture 2
    i64 target = 0;       // ceil(n/p) resp. ceil(2n/p^k)
    Verdict verdict = Verdict::NotApplicable;
    bool via_translated_set = false;  // witnessed by the translated-set heuristic
    u64 nodes = 0;
};

struct ScanOptions {
    i64 oracle_ceiling = 128;  // exact gamma attempted for n <= ceiling
    bool run_conjectures = false;
    exact::Budget budget{};
    int jobs = 1;
};

struct ScanRecord {
    i64 n = 0;
    int degree = 0;
    std::string factorization;
    std::vector<nt::PrimePowerWitness> thm1_witnesses;
    std::vector<nt::PrimePowerWitness> thm2_witnesses;
    verify::BoundReport bounds;
    std::optional<i64> gamma;
    bool oracle_ran = false;
    bool oracle_inconclusive = false;
    std::optional<i64> oracle_lower;  // carried when inconclusive
    std::optional<i64> oracle_upper;
    std::vector<ConjectureOutcome> conj1;
    std::vector<ConjectureOutcome> conj2;
    std::optional<i64> conj3_slack;  // gamma - berge lower bound
    bool sandwich_violation = false;
    std::string error;  // per-record failure; the scan itself never aborts

    Verdict conj1_overall() const;
    Verdict conj2_overall() const;
};

// Conjecture 1: gamma(KG_n) <= ceil(n/p) for odd prime p <= ceil(log2 n) with
// 2 a primitive root mod p (divisibility of n by p not required). Tries the
// translated theorem-1 set first, then the exact decision search. Refuted
// only on a completed search.
ConjectureOutcome test_conjecture1(i64 n, u64 p, const exact::Budget& budget = {});

// Conjecture 2: gamma(KG_n) <= ceil(2n/p^k) for totient(p^k) < ceil(log2 n)
// and 2 a primitive root mod p^k.
ConjectureOutcome test_conjecture2(i64 n, u64 p, int k, const exact::Budget& budget = {});

ScanRecord scan_one(i64 n, const ScanOptions& options = {});

// One record per even n in [lo, hi]; lo and hi must be even, lo >= 6. The
// sink (optional) is invoked in ascending n order after all workers finish.
std::vector<ScanRecord> scan_range(i64 lo, i64 hi, const ScanOptions& options = {},
                                   const std::function<void(const ScanRecord&)>& sink = nullptr);

struct Summary {
    i64 records = 0;
    i64 with_theorem_witness = 0;
    i64 solved = 0;
    i64 inconclusive = 0;
    i64 refuted_conj1 = 0;
    i64 refuted_conj2 = 0;
    i64 max_slack = 0;
    double mean_slack = 0.0;
    double max_slack_over_log2 = 0.0;
    i64 sandwich_violations = 0;

    double witness_fraction() const {
        return records ? static_cast<double>(with_theorem_witness) / static_cast<double>(records)
                       : 0.0;
    }
};
Summary summarize(std::span<const ScanRecord> records);
std::string format_summary(const Summary& s);

// Line-delimited records with a schema header line; merge prefers conclusive
// rows (exact gamma present, fewer inconclusive verdicts) per n.
void write_records(std::ostream& os, std::span<const ScanRecord> records);
std::vector<ScanRecord> read_records(std::istream& is);
std::vector<ScanRecord> merge_records(std::vector<ScanRecord> existing,
                                      std::vector<ScanRecord> fresh);

// Fixed-column table: n degree witness lb_berge lb_prop2 ub_best ub_src gamma
// conj1 conj2 slack.
void write_table(std::ostream& os, std::span<const ScanRecord> records);

}  // namespace knodel::scan
