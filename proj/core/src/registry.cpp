#include "cwg/registry.hpp"

#include <fstream>
#include <sstream>

#include "cwg/dispatch.hpp"
#include "cwg/strategies.hpp"
#include "cwg/subgraph_iso.hpp"

namespace cwg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::pair<std::string, std::string> key_arg(const std::string& spec) {
    auto pos = spec.find(':');
    if (pos == std::string::npos) return {spec, ""};
    return {spec.substr(0, pos), spec.substr(pos + 1)};
}

}  // namespace

Graph board_by_spec(const std::string& spec) {
    auto [head, arg] = key_arg(spec);
    if (head == "gnp") {
        auto parts = split(arg, ',');
        if (parts.size() < 2) throw UsageError("gnp spec needs gnp:<n>,<p>[,<seed>]");
        uint64_t seed = parts.size() > 2 ? std::stoull(parts[2]) : 1;
        return make_gnp(std::stoi(parts[0]), std::stod(parts[1]), seed);
    }
    if (head == "tree") {
        auto parts = split(arg, ',');
        if (parts.size() != 2) throw UsageError("tree spec needs tree:<m>,<k>");
        return make_mary_tree(std::stoi(parts[0]), std::stoi(parts[1])).graph;
    }
    if (head == "file") {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open board file: " + arg);
        return read_graph(in);
    }
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P') &&
        std::isdigit(static_cast<unsigned char>(spec[1]))) {
        int n = std::stoi(spec.substr(1));
        if (spec[0] == 'K') return make_complete(n);
        if (spec[0] == 'C') return make_cycle(n);
        return make_path(n);
    }
    return pattern_by_name(spec);
}

Goal goal_by_spec(const std::string& spec, const Graph& board) {
    auto [head, arg] = key_arg(spec);
    if (head == "cycle") return Goal::contains_cycle();
    if (head == "component") return Goal::component_at_least(std::stoi(arg));
    if (head == "path") return Goal::path_at_least(std::stoi(arg));
    if (head == "maxdeg") return Goal::max_degree_at_least(std::stoi(arg));
    if (head == "treequota") {
        auto parts = split(arg, ',');
        if (parts.size() != 2) throw UsageError("treequota needs treequota:<k>,<m>");
        int k = std::stoi(parts[0]), m = std::stoi(parts[1]);
        std::vector<std::pair<Vertex, std::vector<EdgeId>>> groups;
        for (Vertex x = 0; x < board.vertex_count(); ++x) {
            std::vector<EdgeId> g;
            for (int c = 1; c <= m; ++c) {
                long long child = static_cast<long long>(m) * x + c;
                if (child >= board.vertex_count()) break;
                EdgeId e = board.edge_id(x, static_cast<Vertex>(child));
                if (e < 0) break;
                g.push_back(e);
            }
            if (static_cast<int>(g.size()) == m) groups.push_back({x, std::move(g)});
        }
        if (groups.empty()) throw UsageError("treequota: board is not the expected m-ary tree");
        return Goal::out_edge_quota(k, std::move(groups));
    }
    return Goal::contains_copy(pattern_by_name(spec));
}

std::unique_ptr<WaiterStrategy> make_waiter(const std::string& key, const Graph& board, int q,
                                            uint64_t seed) {
    auto [head, arg] = key_arg(key);
    if (head == "star") return waiter_star(q);
    if (head == "component" || head == "sc") return waiter_component(q);
    if (head == "path" || head == "sp") return waiter_path(q);
    if (head == "orientation") return waiter_orientation(board, pattern_by_name(arg));
    if (head == "forest") return waiter_forest(board, pattern_by_name(arg));
    if (head == "k3q2") return waiter_k3_bias2(board);
    if (head == "core") return waiter_core_reduction(board, pattern_by_name(arg), q);
    if (head == "dispatch") {
        auto res = waiter_dispatch(board, pattern_by_name(arg), q);
        if (!res.applicable())
            throw UsageError("dispatch found no applicable case: " + res.route);
        return std::move(res.strategy);
    }
    if (head == "solver") return waiter_solver();
    if (head == "random") return waiter_random(seed);
    if (head == "blocker") return waiter_greedy_blocker();
    if (head == "antiquota") {
        int m = arg.empty() ? 0 : std::stoi(arg);
        std::vector<std::vector<EdgeId>> groups;
        for (Vertex x = 0; x < board.vertex_count(); ++x) {
            std::vector<EdgeId> g;
            for (int c = 1; c <= m; ++c) {
                long long child = static_cast<long long>(m) * x + c;
                if (child >= board.vertex_count()) break;
                EdgeId e = board.edge_id(x, static_cast<Vertex>(child));
                if (e < 0) break;
                g.push_back(e);
            }
            if (!g.empty()) groups.push_back(std::move(g));
        }
        return waiter_anti_quota(std::move(groups), seed);
    }
    throw UsageError("unknown waiter key: " + key);
}

std::unique_ptr<ClientStrategy> make_client(const std::string& key, const Graph& board, int q,
                                            uint64_t seed) {
    auto [head, arg] = key_arg(key);
    if (head == "random") return client_random(seed);
    if (head == "star") return client_greedy_star();
    if (head == "component") return client_greedy_component();
    if (head == "path") return client_greedy_path();
    if (head == "triangle") return client_greedy_triangle();
    if (head == "marked") return client_random_subset(q, seed);
    if (head == "solver") return client_solver();
    if (head == "transversal") {
        auto parts = split(arg, ':');
        if (!parts.empty() && parts[0] == "tree") {
            int k = parts.size() > 1 ? std::stoi(parts[1]) : 2;
            FamilyParams prm;
            prm.k = k;
            Family f = build_family("tree_outedges", board, prm, q);
            return client_transversal_potential(std::move(f), q);
        }
        throw UsageError("transversal client needs transversal:tree:<k>");
    }
    throw UsageError("unknown client key: " + key);
}

}  // namespace cwg
