#include "gci/engine.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "gci/scheduler.hpp"

namespace gci {

std::string verdict_string(Verdict v) {
    switch (v) {
    case Verdict::converged_yes: return "converged-yes";
    case Verdict::converged_no: return "converged-no";
    case Verdict::timeout: return "timeout";
    }
    return "timeout";
}

std::string stability_verdict_string(StabilityVerdict v) {
    switch (v) {
    case StabilityVerdict::all_yes_stable: return "all-yes-stable";
    case StabilityVerdict::all_no_stable: return "all-no-stable";
    case StabilityVerdict::not_convergent: return "not-convergent";
    case StabilityVerdict::mixed: return "mixed";
    }
    return "not-convergent";
}

int64_t default_window(const Graph& g) { return std::max<int64_t>(1, 50 * g.edge_count()); }

Configuration initial_configuration(const Protocol& p, const Graph& g) {
    Configuration c(g.n);
    for (int v = 0; v < g.n; ++v) c[v] = p.initial_state(v, g.n);
    return c;
}

std::vector<char> outputs_of(const Protocol& p, const Configuration& c) {
    std::vector<char> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = p.gamma(c[i]) ? 1 : 0;
    return out;
}

bool outputs_uniform(const Protocol& p, const Configuration& c, char* value) {
    if (c.empty()) return true;
    const char first = p.gamma(c[0]) ? 1 : 0;
    for (size_t i = 1; i < c.size(); ++i)
        if ((p.gamma(c[i]) ? 1 : 0) != first) return false;
    if (value) *value = first;
    return true;
}

namespace {

void check_config(const Protocol& p, const Graph& g, const Configuration& c) {
    if (c.size() != static_cast<size_t>(g.n))
        throw std::invalid_argument("configuration size does not match graph");
    for (int s : c)
        if (s < 0 || s >= p.state_count)
            throw std::invalid_argument("state id out of range");
}

void check_interaction(const Graph& g, const Interaction& inter) {
    if (inter.initiator < 0 || inter.initiator >= g.n || inter.responder < 0 ||
        inter.responder >= g.n)
        throw std::invalid_argument("interaction agent out of range");
    if (inter.initiator == inter.responder)
        throw std::invalid_argument("interaction needs two distinct agents");
    if (!g.has_edge(inter.initiator, inter.responder))
        throw std::invalid_argument("interaction pair is not an edge");
}

} // namespace

Configuration step(const Protocol& p, const Graph& g, const Configuration& c,
                   const Interaction& inter) {
    check_config(p, g, c);
    check_interaction(g, inter);
    Configuration next = c;
    const auto [a, b] = p.delta(c[inter.initiator], c[inter.responder]);
    next[inter.initiator] = a;
    next[inter.responder] = b;
    return next;
}

Trace run(const Protocol& p, const Graph& g, Scheduler& sched, const RunOptions& opt) {
    if (opt.max_steps < 0) throw std::invalid_argument("max_steps must be nonnegative");
    if (opt.window < 0) throw std::invalid_argument("window must be nonnegative");
    const int64_t window = opt.window > 0 ? opt.window : default_window(g);

    Trace t;
    t.protocol_name = p.name;
    t.protocol_params = p.params;
    t.scheduler_spec = sched.spec();
    t.seed = sched.seed();

    Configuration c = opt.start.empty() ? initial_configuration(p, g) : opt.start;
    check_config(p, g, c);
    t.initial = c;

    int64_t yes_count = 0;
    for (int s : c) yes_count += p.gamma(s) ? 1 : 0;
    const auto uniform = [&] { return yes_count == 0 || yes_count == g.n; };

    if (opt.sample_outputs) t.output_samples.push_back(outputs_of(p, c));

    const auto finish = [&](Verdict v) {
        t.verdict = v;
        t.final_config = std::move(c);
        if (opt.sample_outputs) t.output_samples.push_back(outputs_of(p, t.final_config));
        return std::move(t);
    };
    const auto judge = [&] {
        if (!uniform()) return finish(Verdict::timeout);
        return finish(yes_count == g.n ? Verdict::converged_yes : Verdict::converged_no);
    };

    if (g.edge_count() == 0) return judge();

    int64_t quiet = 0;
    for (int64_t i = 1; i <= opt.max_steps; ++i) {
        const auto inter = sched.next(g, i - 1);
        if (!inter) return judge(); // script exhausted
        check_interaction(g, *inter);
        const int u = inter->initiator;
        const int v = inter->responder;
        const auto [a, b] = p.delta(c[u], c[v]);
        const bool flip = p.gamma(a) != p.gamma(c[u]) || p.gamma(b) != p.gamma(c[v]);
        if (flip) {
            yes_count += (p.gamma(a) ? 1 : 0) - (p.gamma(c[u]) ? 1 : 0);
            yes_count += (p.gamma(b) ? 1 : 0) - (p.gamma(c[v]) ? 1 : 0);
        }
        c[u] = a;
        c[v] = b;
        t.step_count = i;
        if (opt.record_steps) t.steps.push_back({i, *inter, a, b});
        if (opt.observer) opt.observer(i, *inter, c);
        quiet = flip ? 0 : quiet + 1;
        if (opt.sample_outputs && i % window == 0) t.output_samples.push_back(outputs_of(p, c));
        if (quiet >= window && uniform())
            return finish(yes_count == g.n ? Verdict::converged_yes : Verdict::converged_no);
    }
    return finish(Verdict::timeout);
}

CapOverflow::CapOverflow(int64_t cap)
    : std::runtime_error("reachable configurations exceed cap " + std::to_string(cap)) {}

namespace {

int key_width(const Protocol& p) {
    if (p.state_count <= 256) return 1;
    if (p.state_count <= 65536) return 2;
    return 4;
}

std::string pack_config(const Configuration& c, int width) {
    std::string key(c.size() * width, '\0');
    for (size_t i = 0; i < c.size(); ++i)
        for (int b = 0; b < width; ++b)
            key[i * width + b] = static_cast<char>((c[i] >> (8 * b)) & 0xff);
    return key;
}

} // namespace

ReachableSet enumerate_reachable(const Protocol& p, const Graph& g, const Configuration& from,
                                 int64_t cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    check_config(p, g, from);
    const int width = key_width(p);
    const int64_t hard_cap = std::min<int64_t>(cap, std::numeric_limits<int>::max() - 1);

    ReachableSet rs;
    std::unordered_map<std::string, int> index;
    const auto intern = [&](const Configuration& c) {
        auto [it, inserted] = index.emplace(pack_config(c, width), static_cast<int>(rs.configs.size()));
        if (inserted) {
            if (static_cast<int64_t>(rs.configs.size()) >= hard_cap) throw CapOverflow(cap);
            rs.configs.push_back(c);
        }
        return it->second;
    };

    intern(from);
    rs.succ_offset.push_back(0);
    std::vector<int> local;
    Configuration next;
    for (size_t qi = 0; qi < rs.configs.size(); ++qi) {
        const Configuration cur = rs.configs[qi]; // copy: configs may reallocate
        local.clear();
        for (const auto& [u, v] : g.edges) {
            for (int o = 0; o < 2; ++o) {
                const int x = o ? v : u;
                const int y = o ? u : v;
                const auto [a, b] = p.delta(cur[x], cur[y]);
                if (a == cur[x] && b == cur[y]) continue;
                next = cur;
                next[x] = a;
                next[y] = b;
                local.push_back(intern(next));
            }
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        rs.succ.insert(rs.succ.end(), local.begin(), local.end());
        rs.succ_offset.push_back(static_cast<int64_t>(rs.succ.size()));
    }
    return rs;
}

namespace {

// Iterative Tarjan; returns component index per node and the component count.
std::pair<std::vector<int>, int> strongly_connected_components(const ReachableSet& rs) {
    const int n = static_cast<int>(rs.configs.size());
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
    std::vector<int> stk;
    std::vector<char> on_stack(n, 0);
    std::vector<std::pair<int, int64_t>> call;
    int counter = 0;
    int ncomp = 0;

    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        num[root] = low[root] = counter++;
        stk.push_back(root);
        on_stack[root] = 1;
        call.emplace_back(root, rs.succ_offset[root]);
        while (!call.empty()) {
            const int u = call.back().first;
            const int64_t cursor = call.back().second;
            if (cursor < rs.succ_offset[u + 1]) {
                call.back().second = cursor + 1;
                const int w = rs.succ[cursor];
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, rs.succ_offset[w]);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], num[w]);
                }
            } else {
                call.pop_back();
                if (!call.empty()) {
                    const int parent = call.back().first;
                    low[parent] = std::min(low[parent], low[u]);
                }
                if (low[u] == num[u]) {
                    while (true) {
                        const int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == u) break;
                    }
                    ++ncomp;
                }
            }
        }
    }
    return {std::move(comp), ncomp};
}

StabilityReport analyze(const Protocol& p, const ReachableSet& rs) {
    const int n = static_cast<int>(rs.configs.size());
    const auto [comp, ncomp] = strongly_connected_components(rs);

    std::vector<char> bottom(ncomp, 1);
    for (int u = 0; u < n; ++u)
        for (int64_t e = rs.succ_offset[u]; e < rs.succ_offset[u + 1]; ++e)
            if (comp[rs.succ[e]] != comp[u]) bottom[comp[u]] = 0;

    // -2 unseen, 1 uniform yes, 0 uniform no, -1 unsettled
    std::vector<int> kind(ncomp, -2);
    std::vector<int64_t> size(ncomp, 0);
    std::vector<int> rep(ncomp, -1), bad(ncomp, -1);
    for (int u = 0; u < n; ++u) {
        const int cid = comp[u];
        if (!bottom[cid]) continue;
        ++size[cid];
        if (rep[cid] < 0) rep[cid] = u;
        char val = 0;
        const int here = outputs_uniform(p, rs.configs[u], &val) ? (val ? 1 : 0) : -1;
        if (here == -1 && bad[cid] < 0) bad[cid] = u;
        if (kind[cid] == -2)
            kind[cid] = here;
        else if (kind[cid] != here)
            kind[cid] = -1;
    }

    StabilityReport report;
    report.reachable_count = n;
    bool any_yes = false, any_no = false, any_unsettled = false;
    for (int cid = 0; cid < ncomp; ++cid) {
        if (!bottom[cid]) continue;
        BottomSCCSummary s;
        s.size = size[cid];
        s.kind = kind[cid] == 1 ? "yes" : kind[cid] == 0 ? "no" : "unsettled";
        s.representative = rs.configs[rep[cid]];
        report.bottom_sccs.push_back(std::move(s));
        any_yes |= kind[cid] == 1;
        any_no |= kind[cid] == 0;
        any_unsettled |= kind[cid] == -1;
        if (kind[cid] == -1)
            report.witnesses.push_back(rs.configs[bad[cid] >= 0 ? bad[cid] : rep[cid]]);
    }
    if (any_unsettled) {
        report.verdict = StabilityVerdict::not_convergent;
    } else if (any_yes && any_no) {
        report.verdict = StabilityVerdict::mixed;
        for (const auto& s : report.bottom_sccs) report.witnesses.push_back(s.representative);
    } else {
        report.verdict = any_yes ? StabilityVerdict::all_yes_stable : StabilityVerdict::all_no_stable;
    }
    return report;
}

} // namespace

StabilityReport check_stable(const Protocol& p, const Graph& g, int64_t cap) {
    return check_stable_from(p, g, initial_configuration(p, g), cap);
}

StabilityReport check_stable_from(const Protocol& p, const Graph& g, const Configuration& from,
                                  int64_t cap) {
    return analyze(p, enumerate_reachable(p, g, from, cap));
}

bool is_stable_configuration(const Protocol& p, const Graph& g, const Configuration& c,
                             int64_t cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    check_config(p, g, c);
    char want = 0;
    if (!outputs_uniform(p, c, &want)) return false;

    const int width = key_width(p);
    std::unordered_set<std::string> seen;
    std::vector<Configuration> order;
    seen.insert(pack_config(c, width));
    order.push_back(c);
    Configuration next;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        const Configuration cur = order[qi];
        for (const auto& [u, v] : g.edges) {
            for (int o = 0; o < 2; ++o) {
                const int x = o ? v : u;
                const int y = o ? u : v;
                const auto [a, b] = p.delta(cur[x], cur[y]);
                if (a == cur[x] && b == cur[y]) continue;
                next = cur;
                next[x] = a;
                next[y] = b;
                if (!seen.insert(pack_config(next, width)).second) continue;
                char got = 0;
                if (!outputs_uniform(p, next, &got) || got != want) return false;
                if (static_cast<int64_t>(order.size()) >= cap) throw CapOverflow(cap);
                order.push_back(next);
            }
        }
    }
    return true;
}

} // namespace gci
