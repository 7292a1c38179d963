#include "gci/protocol.hpp"

#include <stdexcept>

#include "gci/graph.hpp"
#include "gci/kreg_id.hpp"
#include "gci/star_id.hpp"
#include "gci/tree_id.hpp"

namespace gci {

void validate_protocol(const Protocol& p) {
    if (p.state_count < 1) throw std::logic_error(p.name + ": empty state set");
    size_t q = static_cast<size_t>(p.state_count);
    if (p.table.size() != q * q) throw std::logic_error(p.name + ": delta not total");
    if (p.gamma_yes.size() != q) throw std::logic_error(p.name + ": gamma not total");
    if (p.initial < 0 || p.initial >= p.state_count)
        throw std::logic_error(p.name + ": initial state out of range");
    for (auto [a, b] : p.table)
        if (a < 0 || a >= p.state_count || b < 0 || b >= p.state_count)
            throw std::logic_error(p.name + ": delta leaves the state set");
    if (p.symmetric && first_asymmetric_pair(p))
        throw std::logic_error(p.name + ": claimed symmetry does not hold");
}

std::optional<std::pair<int, int>> first_asymmetric_pair(const Protocol& p) {
    for (int a = 0; a < p.state_count; a++)
        for (int b = 0; b < p.state_count; b++) {
            if (a == b) continue;
            auto [a2, b2] = p.delta(a, b);
            auto [b3, a3] = p.delta(b, a);
            if (a2 != a3 || b2 != b3) return std::make_pair(a, b);
        }
    return std::nullopt;
}

namespace {

long long parse_ll(const std::string& s) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

// "k=K,bound=B[,exact]" / "n=N"
std::map<std::string, long long> parse_kv(const std::string& s) {
    std::map<std::string, long long> kv;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos) kv[item] = 1;
        else kv[item.substr(0, eq)] = parse_ll(item.substr(eq + 1));
        pos = end + 1;
    }
    return kv;
}

} // namespace

Protocol parse_protocol_spec(const std::string& spec) {
    size_t colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "tree-id") {
        if (!args.empty()) throw std::invalid_argument("tree-id takes no arguments");
        return tree_id();
    }
    if (kind == "kreg-id") {
        auto kv = parse_kv(args);
        if (!kv.count("k") || !kv.count("bound"))
            throw std::invalid_argument("kreg-id needs k=K,bound=B");
        return kreg_id(static_cast<int>(kv["k"]), static_cast<int>(kv["bound"]),
                       kv.count("exact") != 0);
    }
    if (kind == "star-id") {
        auto kv = parse_kv(args);
        if (!kv.count("n")) throw std::invalid_argument("star-id needs n=N");
        return star_id(static_cast<int>(kv["n"]));
    }
    throw std::invalid_argument("unknown protocol: " + kind);
}

bool protocol_oracle(const Protocol& p, const Graph& g) {
    if (p.name == "tree-id") return is_tree(g);
    if (p.name == "kreg-id") return is_kregular(g, static_cast<int>(p.params.at("k")));
    if (p.name == "star-id") return is_star(g);
    throw std::invalid_argument("no oracle for protocol: " + p.name);
}

} // namespace gci
