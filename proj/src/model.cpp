#include "cdq/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace cdq {

namespace {

void validate_edges(int n, const std::vector<Edge>& edges) {
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw validation_error("edge endpoint out of range");
        if (i == j) throw validation_error("self-loop in edge list");
        auto key = std::minmax(i, j);
        if (!seen.insert(key).second)
            throw validation_error("duplicate edge in edge list");
    }
}

bool connected(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

PauliSum transverse_field(int n) {
    PauliSum s(n);
    for (int q = 0; q < n; ++q) s.add_term(1ull << q, 0, 1.0);
    return s;
}

PauliSum zz_sum(int n, const std::vector<Edge>& edges, double coeff) {
    PauliSum s(n);
    for (auto [i, j] : edges)
        s.add_term(0, (1ull << i) | (1ull << j), coeff);
    return s;
}

}  // namespace

int ProblemInstance::degree() const {
    if (edges.empty()) return -1;
    std::vector<int> deg(n_qubits, 0);
    for (auto [i, j] : edges) {
        ++deg[i];
        ++deg[j];
    }
    int d = deg[0];
    for (int v : deg)
        if (v != d) return -1;
    return d;
}

bool ProblemInstance::has_triangle() const {
    std::vector<std::uint64_t> adj(n_qubits, 0);
    for (auto [i, j] : edges) {
        adj[i] |= 1ull << j;
        adj[j] |= 1ull << i;
    }
    for (auto [i, j] : edges)
        if (adj[i] & adj[j]) return true;
    return false;
}

ProblemInstance build_two_level() {
    ProblemInstance inst;
    inst.kind = InstanceKind::TwoLevel;
    inst.n_qubits = 2;
    inst.h_simple = pauli_x(2, 0) + pauli_x(2, 1);
    inst.h_target = cplx(-0.5) * pauli_zz(2, 0, 1);
    inst.comm = commutator(inst.h_target, inst.h_simple);
    // shifted so the maximal eigenvalue is 1: objective = -ZZ/2 + 1/2
    inst.objective = inst.h_target + cplx(0.5) * pauli_identity(2);
    inst.obj_max = 1.0;
    // sector-normalized QAOA generators
    inst.qaoa_gamma_gen = cplx(-1.0) * pauli_zz(2, 0, 1);
    inst.qaoa_beta_gen = cplx(0.5) * (pauli_x(2, 0) + pauli_x(2, 1));
    inst.beta_x_coeff = 0.5;
    // reduced single-spin matching pair
    inst.match_n_qubits = 1;
    inst.match_h_target = pauli_z(1, 0);
    inst.match_h_simple = pauli_x(1, 0);
    return inst;
}

ProblemInstance build_ising_ring(int N) {
    if (N < 4 || N % 2 != 0)
        throw validation_error("build_ising_ring: need even N >= 4");
    ProblemInstance inst;
    inst.kind = InstanceKind::IsingRing;
    inst.n_qubits = N;
    for (int i = 0; i < N; ++i) inst.edges.emplace_back(i, (i + 1) % N);
    inst.h_simple = transverse_field(N);
    inst.h_target = zz_sum(N, inst.edges, -0.5);
    inst.comm = commutator(inst.h_target, inst.h_simple);
    inst.objective = zz_sum(N, inst.edges, -0.5);
    PauliSum shift(N);
    shift.add_term(0, 0, 0.5 * static_cast<double>(N));
    inst.objective += shift;
    inst.obj_max = static_cast<double>(N);
    inst.qaoa_gamma_gen = inst.h_target;
    inst.qaoa_beta_gen = inst.h_simple;
    inst.beta_x_coeff = 1.0;
    inst.match_n_qubits = N;
    inst.match_h_target = inst.h_target;
    inst.match_h_simple = inst.h_simple;
    return inst;
}

ProblemInstance build_maxcut(const std::vector<Edge>& edges) {
    int n = 0;
    for (auto [i, j] : edges) n = std::max({n, i + 1, j + 1});
    if (n < 2 || edges.empty()) throw validation_error("build_maxcut: empty graph");
    validate_edges(n, edges);
    if (!connected(n, edges)) throw validation_error("build_maxcut: graph not connected");
    ProblemInstance inst;
    inst.kind = InstanceKind::MaxCutGraph;
    inst.n_qubits = n;
    inst.edges = edges;
    inst.h_simple = transverse_field(n);
    inst.h_target = zz_sum(n, edges, -0.5);
    PauliSum shift(n);
    shift.add_term(0, 0, 0.5 * static_cast<double>(edges.size()));
    inst.h_target += shift;            // 1/2 sum (1 - Z_i Z_j)
    inst.objective = inst.h_target;
    inst.comm = commutator(inst.h_target, inst.h_simple);
    if (n <= 24)
        inst.obj_max = static_cast<double>(max_cut_brute_force(n, edges));
    else
        inst.obj_max = -1.0;           // unknown
    inst.qaoa_gamma_gen = inst.h_target;
    inst.qaoa_beta_gen = inst.h_simple;
    inst.beta_x_coeff = 1.0;
    inst.match_n_qubits = n;
    inst.match_h_target = inst.h_target;
    inst.match_h_simple = inst.h_simple;
    return inst;
}

PauliSum cd_hamiltonian(const ProblemInstance& inst, double lambda, double lambda_dot,
                        double s, double alpha) {
    if (!std::isfinite(lambda) || !std::isfinite(lambda_dot) || !std::isfinite(s) ||
        !std::isfinite(alpha))
        throw validation_error("cd_hamiltonian: non-finite input");
    PauliSum h = cplx(lambda) * inst.h_target;
    h += cplx(1.0 - lambda) * inst.h_simple;
    PauliSum cd = inst.comm;
    cd *= cplx(0.0, s + lambda_dot * alpha);
    h += cd;
    return h;
}

std::vector<Edge> random_regular_graph(int degree, int n, unsigned seed) {
    if (degree < 2 || n <= degree || (n * degree) % 2 != 0)
        throw validation_error("random_regular_graph: bad degree/size combination");
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < degree; ++k) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || !edges.insert(std::minmax(a, b)).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<Edge> out(edges.begin(), edges.end());
        if (!connected(n, out)) continue;
        return out;
    }
    throw numeric_error("random_regular_graph: sampler failed to converge");
}

int max_cut_brute_force(int n, const std::vector<Edge>& edges) {
    if (n > 24) throw resource_error("max_cut_brute_force: n above cap 24");
    validate_edges(n, edges);
    int best = 0;
    const std::uint32_t lim = 1u << n;
    for (std::uint32_t m = 0; m < lim; ++m) {
        int cut = 0;
        for (auto [i, j] : edges)
            cut += static_cast<int>(((m >> i) ^ (m >> j)) & 1u);
        best = std::max(best, cut);
    }
    return best;
}

}  // namespace cdq
