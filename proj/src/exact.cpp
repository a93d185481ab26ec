#include "knodel/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "knodel/construct.hpp"
#include "knodel/verify.hpp"

namespace knodel::exact {

namespace {

using clock_type = std::chrono::steady_clock;

template <int W>
struct Bits {
    std::array<u64, W> w{};

    void set(int i) { w[i >> 6] |= u64{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    int pop() const {
        int c = 0;
        for (int i = 0; i < W; ++i) c += std::popcount(w[i]);
        return c;
    }
    Bits andnot(const Bits& b) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~b.w[i];
        return r;
    }
    bool none() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return false;
        return true;
    }
    bool intersects(const Bits& b) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & b.w[i]) return true;
        return false;
    }
    Bits& operator|=(const Bits& b) {
        for (int i = 0; i < W; ++i) w[i] |= b.w[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    bool operator==(const Bits&) const = default;
};

// Branch-and-bound cover search with a fixed size cap. Branches on an
// uncovered vertex with the fewest remaining candidate dominators, one branch
// per candidate; candidates already tried at a node are excluded from the
// rest of its subtree. Prunes with the coverage bound ceil(u / (k+1)) and a
// greedy packing of uncovered vertices with disjoint candidate sets.
template <int W>
class Searcher {
public:
    struct Candidate {
        int neg_gain;
        std::int32_t vertex;
        Bits<W> fresh;
    };
    struct Entry {
        Bits<W> cand;
        std::int32_t vertex;
        std::int32_t count;
    };

    Searcher(const Instance& inst, u64 node_budget, clock_type::time_point deadline)
        : n_(static_cast<int>(inst.n)),
          max_closed_(inst.max_closed),
          node_budget_(node_budget),
          deadline_(deadline) {
        closed_.resize(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            for (auto u : inst.closed[static_cast<size_t>(v)])
                closed_[static_cast<size_t>(v)].set(u);
            full_.set(v);
        }
        closed_list_ = &inst.closed;
        branch_buf_.resize(static_cast<size_t>(n_) + 1);
        for (auto& b : branch_buf_) b.reserve(static_cast<size_t>(max_closed_));
        if (inst.regular_bipartite && inst.knodel_translations) {
            // Index parity is the bipartition; enables the parity counting bound.
            parity_degree_ = inst.regular_degree;
            for (int v = 0; v < n_; v += 2) evens_.set(v);
        }
        scratch_.reserve(static_cast<size_t>(n_));
        bucket_counts_.assign(static_cast<size_t>(max_closed_) + 2, 0);
    }

    bool find(i64 cap, std::span<const std::int32_t> preset, const Bits<W>& preset_excluded) {
        cap_ = cap;
        chosen_.assign(preset.begin(), preset.end());
        if (static_cast<i64>(chosen_.size()) > cap) return false;
        Bits<W> covered;
        for (auto v : preset) covered |= closed_[static_cast<size_t>(v)];
        return grow(covered, preset_excluded);
    }

    bool exhausted() const { return exhausted_; }
    u64 nodes() const { return nodes_; }
    const std::vector<std::int32_t>& solution() const { return solution_; }

private:
    bool grow(Bits<W> covered, Bits<W> excluded) {
        if (covered == full_) {
            solution_ = chosen_;
            return true;
        }
        if (static_cast<i64>(chosen_.size()) >= cap_) return false;
        if (exhausted_) return false;
        if (++nodes_ >= node_budget_) {
            exhausted_ = true;
            return false;
        }
        if ((nodes_ & 0x1fff) == 0 && clock_type::now() > deadline_) {
            exhausted_ = true;
            return false;
        }

        const i64 rem = cap_ - static_cast<i64>(chosen_.size());

        // Pass over uncovered vertices: infeasibility, fail-first branch
        // vertex, candidate sets for the packing bound.
        int best_v = -1;
        int best_c = std::numeric_limits<int>::max();
        i64 uncovered = 0;
        scratch_.clear();
        std::fill(bucket_counts_.begin(), bucket_counts_.end(), 0);
        for (int wi = 0; wi < W; ++wi) {
            u64 um = full_.w[wi] & ~covered.w[wi];
            while (um) {
                const int v = wi * 64 + std::countr_zero(um);
                um &= um - 1;
                ++uncovered;
                const Bits<W> cand = closed_[static_cast<size_t>(v)].andnot(excluded);
                const int c = cand.pop();
                if (c == 0) return false;  // v can no longer be dominated
                if (c < best_c) {
                    best_c = c;
                    best_v = v;
                }
                scratch_.push_back({cand, v, c});
                ++bucket_counts_[static_cast<size_t>(c)];
            }
        }

        // Coverage and parity counting bounds.
        i64 lb = (uncovered + max_closed_ - 1) / max_closed_;
        if (parity_degree_ >= 2) {
            i64 u_even = 0;
            for (int wi = 0; wi < W; ++wi)
                u_even += std::popcount(full_.w[wi] & ~covered.w[wi] & evens_.w[wi]);
            const i64 u_odd = uncovered - u_even;
            // a dominator covers at most one uncovered vertex of its own
            // parity and at most `degree` of the other
            lb = std::max(lb, (std::max(u_even, u_odd) + parity_degree_ - 1) / parity_degree_);
        }
        if (lb > rem) return false;

        // Greedy packing of disjoint candidate sets, tightest vertices first:
        // each packed vertex needs its own dominator.
        {
            std::partial_sum(bucket_counts_.begin(), bucket_counts_.end(), bucket_counts_.begin());
            auto& ordered = order_buf_;
            ordered.resize(scratch_.size());
            for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it)
                ordered[static_cast<size_t>(--bucket_counts_[static_cast<size_t>(it->count)])] = &*it;
            Bits<W> marked;
            i64 pack = 0;
            for (const auto* e : ordered) {
                if (e->cand.intersects(marked)) continue;
                ++pack;
                if (pack > rem) return false;
                marked |= e->cand;
            }
        }

        // Candidates for best_v, by descending fresh coverage, then index.
        auto& cands = branch_buf_[chosen_.size()];
        cands.clear();
        for (auto u : (*closed_list_)[static_cast<size_t>(best_v)]) {
            if (excluded.test(u)) continue;
            const Bits<W> fresh = closed_[static_cast<size_t>(u)].andnot(covered);
            cands.push_back({-fresh.pop(), u, fresh});
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            return a.neg_gain != b.neg_gain ? a.neg_gain < b.neg_gain : a.vertex < b.vertex;
        });

        for (size_t i = 0; i < cands.size(); ++i) {
            const auto& [neg_gain, u, fresh] = cands[i];
            // Not enough coverage capacity left after this pick.
            if ((rem - 1) * max_closed_ < uncovered + neg_gain) {
                excluded.set(u);
                continue;
            }
            // A candidate whose fresh coverage is contained in an earlier
            // (not weaker) candidate's is dominated: any solution through it
            // maps to one through the dominator, which this node also tries.
            bool dominated = false;
            for (size_t j = 0; j < i && !dominated; ++j)
                dominated = fresh.andnot(cands[j].fresh).none();
            if (dominated) {
                excluded.set(u);
                continue;
            }
            chosen_.push_back(u);
            if (grow(covered | closed_[static_cast<size_t>(u)], excluded)) return true;
            chosen_.pop_back();
            if (exhausted_) return false;
            excluded.set(u);
        }
        return false;
    }

    int n_;
    int max_closed_;
    u64 node_budget_;
    clock_type::time_point deadline_;
    Bits<W> full_;
    std::vector<Bits<W>> closed_;
    const std::vector<std::vector<std::int32_t>>* closed_list_ = nullptr;
    std::vector<std::vector<Candidate>> branch_buf_;
    std::vector<Entry> scratch_;
    std::vector<const Entry*> order_buf_;
    std::vector<int> bucket_counts_;
    Bits<W> evens_;
    int parity_degree_ = 0;
    std::vector<std::int32_t> chosen_;
    std::vector<std::int32_t> solution_;
    i64 cap_ = 0;
    u64 nodes_ = 0;
    bool exhausted_ = false;
};

template <typename F>
decltype(auto) dispatch_words(i64 n, F&& f) {
    const int words = static_cast<int>((n + 63) / 64);
    switch (words) {
        case 1: return f(std::integral_constant<int, 1>{});
        case 2: return f(std::integral_constant<int, 2>{});
        case 3: return f(std::integral_constant<int, 3>{});
        default: return f(std::integral_constant<int, 4>{});
    }
}

i64 instance_lower_bound(const Instance& inst) {
    i64 lb = (inst.n + inst.max_closed - 1) / inst.max_closed;  // Berge
    if (inst.regular_bipartite && inst.n % 2 == 0 && inst.regular_degree >= 2) {
        const int k = inst.regular_degree;
        if (auto p2 = verify::prop2_lower(inst.n, k); p2 && *p2 > lb) lb = *p2;
        // A gamma-set meeting an integral n/(k+1) must have even size, so an
        // odd quotient pushes the bound up by one.
        if (inst.n % (k + 1) == 0 && (inst.n / (k + 1)) % 2 == 1)
            lb = std::max(lb, inst.n / (k + 1) + 1);
    }
    return lb;
}

bool covers_all(const Instance& inst, std::span<const i64> set) {
    std::vector<char> covered(static_cast<size_t>(inst.n), 0);
    for (i64 v : set)
        for (auto u : inst.closed[static_cast<size_t>(v)]) covered[static_cast<size_t>(u)] = 1;
    return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

i64 effective_ceiling(const Budget& budget, Method method) {
    i64 c = budget.ceiling > 0
                ? budget.ceiling
                : (method == Method::BranchBound ? kDefaultBranchBoundCeiling
                                                 : kDefaultExhaustiveCeiling);
    return std::min<i64>(c, kMaxSolverVertices);
}

void check_instance(const Instance& inst, const Budget& budget, Method method) {
    if (inst.n < 1 || inst.n > kMaxSolverVertices)
        throw std::invalid_argument("exact: instance size out of range");
    const i64 ceiling = effective_ceiling(budget, method);
    if (inst.n > ceiling)
        throw std::invalid_argument("exact: n = " + std::to_string(inst.n) +
                                    " exceeds the configured ceiling " + std::to_string(ceiling));
}

// Complete decision search (no greedy shortcut); answers No only when both
// symmetry branches ran to completion.
Decision decision_core(const Instance& inst, i64 s, u64 node_budget,
                       clock_type::time_point deadline) {
    return dispatch_words(inst.n, [&](auto words) -> Decision {
        constexpr int W = decltype(words)::value;
        Searcher<W> searcher(inst, node_budget, deadline);
        Decision d;
        bool found = false;
        if (inst.knodel_translations && inst.n >= 2 && s >= 1) {
            // The maps x -> x + 2c (mod n) on evens combined with x -> x - 2c
            // on odds, and the parity swap 2j <-> 2j+1, are automorphisms.
            // They act transitively enough that every dominating set has a
            // translate containing vertex 0, so the search anchors there.
            const std::array<std::int32_t, 1> zero{0};
            found = searcher.find(s, zero, Bits<W>{});
        } else {
            found = searcher.find(s, {}, Bits<W>{});
        }
        d.nodes = searcher.nodes();
        if (found) {
            d.answer = Answer::Yes;
            std::vector<i64> vs(searcher.solution().begin(), searcher.solution().end());
            d.witness = VertexSet::from_indices(inst.n, vs);
        } else {
            d.answer = searcher.exhausted() ? Answer::Inconclusive : Answer::No;
        }
        return d;
    });
}

SolveResult solve_exhaustive(const Instance& inst, const Budget& budget) {
    const auto t0 = clock_type::now();
    const auto deadline = t0 + std::chrono::milliseconds(budget.max_millis);
    SolveResult res;
    res.method = Method::Exhaustive;
    res.lower_bound = 1;
    res.upper_bound = inst.n;

    return dispatch_words(inst.n, [&](auto words) -> SolveResult {
        constexpr int W = decltype(words)::value;
        std::vector<Bits<W>> closed(static_cast<size_t>(inst.n));
        Bits<W> full;
        for (int v = 0; v < inst.n; ++v) {
            for (auto u : inst.closed[static_cast<size_t>(v)])
                closed[static_cast<size_t>(v)].set(u);
            full.set(v);
        }
        const int n = static_cast<int>(inst.n);
        for (int s = 1; s <= n; ++s) {
            std::vector<int> idx(static_cast<size_t>(s));
            for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
            while (true) {
                ++res.nodes;
                if (res.nodes >= budget.max_nodes ||
                    ((res.nodes & 0x1fff) == 0 && clock_type::now() > deadline)) {
                    res.status = Status::Inconclusive;
                    res.lower_bound = s;  // all smaller sizes were refuted
                    res.witness = VertexSet(inst.n);
                    res.time_ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
                    return res;
                }
                Bits<W> covered;
                for (int i = 0; i < s; ++i) covered |= closed[static_cast<size_t>(idx[static_cast<size_t>(i)])];
                if (covered == full) {
                    std::vector<i64> vs(idx.begin(), idx.end());
                    res.status = Status::Solved;
                    res.gamma = s;
                    res.lower_bound = res.upper_bound = s;
                    res.witness = VertexSet::from_indices(inst.n, vs);
                    res.time_ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
                    return res;
                }
                // next lexicographic combination
                int i = s - 1;
                while (i >= 0 && idx[static_cast<size_t>(i)] == n - s + i) --i;
                if (i < 0) break;
                ++idx[static_cast<size_t>(i)];
                for (int j = i + 1; j < s; ++j)
                    idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            }
        }
        throw std::logic_error("exhaustive: no dominating set found");  // unreachable, D = V dominates
    });
}

SolveResult solve_branch_bound(const Instance& inst, const Budget& budget,
                               const std::vector<std::vector<i64>>& extra_seeds) {
    const auto t0 = clock_type::now();
    const auto deadline = t0 + std::chrono::milliseconds(budget.max_millis);
    SolveResult res;
    res.method = Method::BranchBound;

    const i64 lower = instance_lower_bound(inst);
    std::vector<i64> incumbent = greedy_dominating_set(inst);
    for (const auto& seed : extra_seeds) {
        if (static_cast<i64>(seed.size()) < static_cast<i64>(incumbent.size()) &&
            covers_all(inst, seed))
            incumbent = seed;
    }
    res.lower_bound = lower;
    res.upper_bound = static_cast<i64>(incumbent.size());

    for (i64 s = lower; s < static_cast<i64>(incumbent.size()); ++s) {
        const u64 used = res.nodes;
        if (used >= budget.max_nodes) {
            res.status = Status::Inconclusive;
            res.lower_bound = s;
            res.witness = VertexSet::from_indices(inst.n, incumbent);
            res.time_ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
            return res;
        }
        Decision d = decision_core(inst, s, budget.max_nodes - used, deadline);
        res.nodes += d.nodes;
        if (d.answer == Answer::Yes) {
            res.status = Status::Solved;
            res.gamma = s;
            res.lower_bound = res.upper_bound = s;
            res.witness = *d.witness;
            res.time_ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
            return res;
        }
        if (d.answer == Answer::Inconclusive) {
            res.status = Status::Inconclusive;
            res.lower_bound = s;  // sizes below s are refuted
            res.witness = VertexSet::from_indices(inst.n, incumbent);
            res.time_ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
            return res;
        }
    }
    res.status = Status::Solved;
    res.gamma = static_cast<i64>(incumbent.size());
    res.lower_bound = res.upper_bound = res.gamma;
    res.witness = VertexSet::from_indices(inst.n, incumbent);
    res.time_ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    return res;
}

}  // namespace

Instance Instance::from_graph(const KnodelGraph& g) {
    if (g.vertex_count() > kMaxSolverVertices)
        throw std::invalid_argument("exact: graph too large for the solver (max " +
                                    std::to_string(kMaxSolverVertices) + ")");
    Instance inst;
    inst.n = g.vertex_count();
    inst.closed.resize(static_cast<size_t>(inst.n));
    for (i64 v = 0; v < inst.n; ++v) {
        auto nb = g.neighbor_list(v);
        nb.push_back(v);
        std::sort(nb.begin(), nb.end());
        inst.closed[static_cast<size_t>(v)].assign(nb.begin(), nb.end());
    }
    inst.max_closed = g.degree() + 1;
    inst.regular_bipartite = true;
    inst.regular_degree = g.degree();
    inst.knodel_translations = true;
    return inst;
}

Instance Instance::from_edges(i64 n, std::span<const std::pair<i64, i64>> edges) {
    if (n < 1 || n > kMaxSolverVertices)
        throw std::invalid_argument("exact: vertex count out of range");
    std::vector<std::vector<std::int32_t>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("exact: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("exact: self-loop in edge list");
        adj[static_cast<size_t>(u)].push_back(static_cast<std::int32_t>(v));
        adj[static_cast<size_t>(v)].push_back(static_cast<std::int32_t>(u));
    }
    Instance inst;
    inst.n = n;
    inst.closed.resize(static_cast<size_t>(n));
    int min_deg = std::numeric_limits<int>::max();
    for (i64 v = 0; v < n; ++v) {
        auto& a = adj[static_cast<size_t>(v)];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        a.push_back(static_cast<std::int32_t>(v));
        std::sort(a.begin(), a.end());
        inst.closed[static_cast<size_t>(v)] = a;
        const int sz = static_cast<int>(a.size());
        inst.max_closed = std::max(inst.max_closed, sz);
        min_deg = std::min(min_deg, sz - 1);
    }
    // Regular + bipartite enables the parity counting bound.
    if (min_deg == inst.max_closed - 1) {
        std::vector<int> color(static_cast<size_t>(n), -1);
        bool bipartite = true;
        for (i64 s = 0; s < n && bipartite; ++s) {
            if (color[static_cast<size_t>(s)] != -1) continue;
            color[static_cast<size_t>(s)] = 0;
            std::queue<i64> q;
            q.push(s);
            while (!q.empty() && bipartite) {
                i64 v = q.front();
                q.pop();
                for (auto u : inst.closed[static_cast<size_t>(v)]) {
                    if (u == v) continue;
                    if (color[static_cast<size_t>(u)] == -1) {
                        color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
                        q.push(u);
                    } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
                        bipartite = false;
                        break;
                    }
                }
            }
        }
        if (bipartite) {
            inst.regular_bipartite = true;
            inst.regular_degree = inst.max_closed - 1;
        }
    }
    return inst;
}

std::vector<i64> greedy_dominating_set(const Instance& inst) {
    const size_t words = static_cast<size_t>((inst.n + 63) / 64);
    std::vector<u64> covered(words, 0);
    auto is_covered = [&](i64 v) { return (covered[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u; };
    std::vector<i64> out;
    i64 num_covered = 0;
    while (num_covered < inst.n) {
        i64 best = -1;
        int best_gain = -1;
        for (i64 v = 0; v < inst.n; ++v) {
            int gain = 0;
            for (auto u : inst.closed[static_cast<size_t>(v)])
                if (!is_covered(u)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        for (auto u : inst.closed[static_cast<size_t>(best)]) {
            if (!is_covered(u)) {
                covered[static_cast<size_t>(u >> 6)] |= u64{1} << (u & 63);
                ++num_covered;
            }
        }
        out.push_back(best);
    }
    return out;
}

Decision exists_dominating_of_size(const Instance& inst, i64 s, const Budget& budget) {
    check_instance(inst, budget, Method::BranchBound);
    if (s < 0 || s > inst.n) throw std::invalid_argument("exists_dominating_of_size: bad size");
    Decision d;
    if (s < instance_lower_bound(inst)) {
        d.answer = Answer::No;  // below a proven lower bound
        return d;
    }
    auto greedy = greedy_dominating_set(inst);
    if (static_cast<i64>(greedy.size()) <= s) {
        d.answer = Answer::Yes;
        d.witness = VertexSet::from_indices(inst.n, greedy);
        return d;
    }
    const auto deadline = clock_type::now() + std::chrono::milliseconds(budget.max_millis);
    return decision_core(inst, s, budget.max_nodes, deadline);
}

Decision exists_dominating_of_size(const KnodelGraph& g, i64 s, const Budget& budget) {
    return exists_dominating_of_size(Instance::from_graph(g), s, budget);
}

SolveResult exact_gamma(const Instance& inst, const Budget& budget, Method method) {
    check_instance(inst, budget, method);
    SolveResult res = method == Method::Exhaustive ? solve_exhaustive(inst, budget)
                                                   : solve_branch_bound(inst, budget, {});
    if (res.status == Status::Solved && !covers_all(inst, res.witness.to_vector()))
        throw std::logic_error("exact: witness fails the cover re-check");
    return res;
}

SolveResult exact_gamma(const KnodelGraph& g, const Budget& budget, Method method) {
    Instance inst = Instance::from_graph(g);
    check_instance(inst, budget, method);
    SolveResult res;
    if (method == Method::Exhaustive) {
        res = solve_exhaustive(inst, budget);
    } else {
        // Theorem constructions make strong incumbents when they apply; they
        // are only certified for the default-degree graph.
        std::vector<std::vector<i64>> seeds;
        if (g.degree() == nt::floor_log2(static_cast<u64>(g.vertex_count()))) {
            auto t1 = construct::thm1_witnesses(g.vertex_count());
            if (!t1.empty())
                seeds.push_back(
                    construct::construct_thm1(g.vertex_count(), t1.back()).set.to_vector());
            auto t2 = construct::thm2_witnesses(g.vertex_count());
            if (!t2.empty())
                seeds.push_back(
                    construct::construct_thm2(g.vertex_count(), t2.back()).set.to_vector());
        }
        res = solve_branch_bound(inst, budget, seeds);
    }
    if (res.status == Status::Solved && !verify::certify(g, res.witness).dominating)
        throw std::logic_error("exact: witness fails certification");
    return res;
}

FixedDegreeCheck fixed_degree_gamma_range_check(i64 n, int degree, const Budget& budget) {
    if (degree != 3 && degree != 4)
        throw std::invalid_argument("fixed_degree_gamma_range_check: degree must be 3 or 4");
    FixedDegreeCheck check;
    if (degree == 3) {
        check.range_lo = 2 * (n / 8);
        check.range_hi = check.range_lo + 2;
    } else {
        check.range_lo = 2 * (n / 10);
        check.range_hi = check.range_lo + 4;
    }
    const KnodelGraph g = KnodelGraph::build(n, degree);
    SolveResult res = exact_gamma(g, budget);
    if (res.status == Status::Inconclusive) return check;
    check.gamma = res.gamma;
    check.verdict = (check.range_lo <= res.gamma && res.gamma <= check.range_hi) ? Answer::Yes
                                                                                 : Answer::No;
    return check;
}

}  // namespace knodel::exact
