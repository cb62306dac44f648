#pragma once

#include <array>
#include <cstring>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "orbispec/perm.hpp"

namespace orbispec {

// ---------------------------------------------------------------------------
// Involution triples and transplantable pairs.
//
// A triple is an action of <a,b,c : a^2=b^2=c^2=1> on n sheets. Pairs of
// triples are identified up to permuting the letters a,b,c (applied to both
// sides), swapping the two sides, and relabeling the sheets on each side
// independently. Braiding moves act on both sides at once.
// ---------------------------------------------------------------------------

struct InvolutionTriple {
    int n = 0;
    std::array<Perm, 3> perms;  // a, b, c

    InvolutionTriple() = default;
    InvolutionTriple(Perm a, Perm b, Perm c) : n(a.degree()), perms{a, b, c} {
        validate();
    }

    void validate() const {
        for (const auto& p : perms) {
            if (p.degree() != n) throw consistency_error("triple degrees differ");
            if (!p.is_involution()) throw consistency_error("triple entry is not an involution");
        }
    }

    const Perm& a() const { return perms[0]; }
    const Perm& b() const { return perms[1]; }
    const Perm& c() const { return perms[2]; }

    bool is_transitive() const {
        if (n == 0) return false;
        std::vector<int> stack{0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& p : perms) {
                int v = p(u);
                if (!seen[v]) { seen[v] = true; ++count; stack.push_back(v); }
            }
        }
        return count == n;
    }

    Perm word_image(const std::string& word) const {
        Perm w = Perm::identity(n);
        for (char ch : word) {
            int x = ch - 'a';
            if (x < 0 || x > 2) throw parse_error("word letters must be a,b,c");
            w = w * perms[x];
        }
        return w;
    }

    friend bool operator==(const InvolutionTriple& s, const InvolutionTriple& t) {
        return s.n == t.n && s.perms == t.perms;
    }
};

struct TranspPair {
    InvolutionTriple left, right;

    TranspPair() = default;
    TranspPair(InvolutionTriple l, InvolutionTriple r)
        : left(std::move(l)), right(std::move(r)) {
        if (left.n != right.n) throw consistency_error("pair sheet counts differ");
    }
    int n() const { return left.n; }

    friend bool operator==(const TranspPair& p, const TranspPair& q) {
        return p.left == q.left && p.right == q.right;
    }
};

inline InvolutionTriple braid_left(const InvolutionTriple& t) {
    return InvolutionTriple(t.b().conjugated_by(t.a()), t.a(), t.c());
}
inline InvolutionTriple braid_right(const InvolutionTriple& t) {
    return InvolutionTriple(t.a(), t.c(), t.b().conjugated_by(t.c()));
}
inline InvolutionTriple braid_left_inv(const InvolutionTriple& t) {
    return InvolutionTriple(t.b(), t.a().conjugated_by(t.b()), t.c());
}
inline InvolutionTriple braid_right_inv(const InvolutionTriple& t) {
    return InvolutionTriple(t.a(), t.c().conjugated_by(t.b()), t.b());
}

inline TranspPair braid_left(const TranspPair& p) {
    return TranspPair(braid_left(p.left), braid_left(p.right));
}
inline TranspPair braid_right(const TranspPair& p) {
    return TranspPair(braid_right(p.left), braid_right(p.right));
}
inline TranspPair braid_left_inv(const TranspPair& p) {
    return TranspPair(braid_left_inv(p.left), braid_left_inv(p.right));
}
inline TranspPair braid_right_inv(const TranspPair& p) {
    return TranspPair(braid_right_inv(p.left), braid_right_inv(p.right));
}

inline TranspPair swap_sides(const TranspPair& p) { return TranspPair(p.right, p.left); }

// ---------------------------------------------------------------------------
// Canonical forms. A triple is canonicalized under sheet relabeling by a
// minimum-code search over BFS labelings seeded at each sheet; the triple is
// an edge-colored graph of degree <= 3, so this is polynomial and exact.
// ---------------------------------------------------------------------------

namespace detail {

// BFS code of the component containing `seed`, using new labels 0..m-1.
// Appends 3 bytes per visited sheet (image labels under a,b,c).
inline void bfs_component_code(const InvolutionTriple& t, int seed,
                               std::string& code, std::vector<int>& newlab,
                               std::vector<int>& orig) {
    int count = 0;
    newlab[seed] = count;
    orig[count++] = seed;
    for (int u = 0; u < count; ++u) {
        for (int x = 0; x < 3; ++x) {
            int v = t.perms[x](orig[u]);
            if (newlab[v] < 0) { newlab[v] = count; orig[count++] = v; }
            code.push_back(char(newlab[v]));
        }
    }
}

inline std::string component_canonical_code(const InvolutionTriple& t,
                                            const std::vector<int>& comp) {
    std::string best;
    std::vector<int> newlab(t.n), orig(t.n);
    for (int seed : comp) {
        std::fill(newlab.begin(), newlab.end(), -1);
        std::string code;
        code.reserve(comp.size() * 3);
        bfs_component_code(t, seed, code, newlab, orig);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

}  // namespace detail

// Relabeling-canonical byte encoding of a triple (letters kept fixed).
inline std::string canonical_triple_code(const InvolutionTriple& t) {
    // Split into connected components of the union graph.
    std::vector<int> compof(t.n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < t.n; ++s) {
        if (compof[s] >= 0) continue;
        std::vector<int> comp, stack{s};
        compof[s] = int(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (const auto& p : t.perms) {
                int v = p(u);
                if (compof[v] < 0) { compof[v] = int(comps.size()); stack.push_back(v); }
            }
        }
        comps.push_back(std::move(comp));
    }
    std::vector<std::string> codes;
    codes.reserve(comps.size());
    for (auto& comp : comps) {
        std::string c;
        c.push_back(char(comp.size()));
        c += detail::component_canonical_code(t, comp);
        codes.push_back(std::move(c));
    }
    std::sort(codes.begin(), codes.end());
    std::string out;
    out.push_back(char(t.n));
    for (auto& c : codes) out += c;
    return out;
}

inline InvolutionTriple apply_letter_perm(const InvolutionTriple& t,
                                          const std::array<int, 3>& sigma) {
    return InvolutionTriple(t.perms[sigma[0]], t.perms[sigma[1]], t.perms[sigma[2]]);
}

inline const std::array<std::array<int, 3>, 6>& letter_perms() {
    static const std::array<std::array<int, 3>, 6> sigmas = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return sigmas;
}

// Canonical encoding of a pair under the full symmetry group: the 6 letter
// permutations applied to both sides, swapping the sides, and independent
// sheet relabelings per side. Two pairs are equivalent iff encodings match.
inline std::string canonical_form(const TranspPair& p) {
    std::string best;
    for (const auto& sigma : letter_perms()) {
        std::string lc = canonical_triple_code(apply_letter_perm(p.left, sigma));
        std::string rc = canonical_triple_code(apply_letter_perm(p.right, sigma));
        for (int sw = 0; sw < 2; ++sw) {
            std::string enc;
            enc.push_back(char(p.n()));
            enc += sw ? rc : lc;
            enc += sw ? lc : rc;
            if (best.empty() || enc < best) best = std::move(enc);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Transplantability: the paired action must have equal fixed-point counts on
// every element of the group generated by {(P(x),Q(x))}. This is equality of
// the permutation characters on the generated finite group.
// ---------------------------------------------------------------------------

namespace detail {

struct PairKey {
    std::array<std::uint64_t, 4> w;
    friend bool operator==(const PairKey& a, const PairKey& b) { return a.w == b.w; }
};
struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        std::size_t seed = 0;
        for (auto v : k.w) hash_combine(seed, std::hash<std::uint64_t>{}(v));
        return seed;
    }
};

inline PairKey pack_pair(const Perm& p, const Perm& q) {
    auto [pl, ph] = p.pack();
    auto [ql, qh] = q.pack();
    return PairKey{{pl, ph, ql, qh}};
}

}  // namespace detail

inline bool is_transplantable(const TranspPair& pair,
                              std::int64_t element_cap = 10'000'000) {
    const int n = pair.n();
    std::unordered_set<detail::PairKey, detail::PairKeyHash> seen;
    std::deque<std::pair<Perm, Perm>> frontier;
    auto push = [&](const Perm& p, const Perm& q) -> bool {
        if (p.fixed_points() != q.fixed_points()) return false;
        auto key = detail::pack_pair(p, q);
        if (seen.insert(key).second) {
            if (std::int64_t(seen.size()) > element_cap)
                throw resource_limit_error(
                    "transplantability closure exceeded element cap " +
                    std::to_string(element_cap));
            frontier.emplace_back(p, q);
        }
        return true;
    };
    if (!push(Perm::identity(n), Perm::identity(n))) return false;
    while (!frontier.empty()) {
        auto [p, q] = frontier.front();
        frontier.pop_front();
        for (int x = 0; x < 3; ++x) {
            Perm np = pair.left.perms[x] * p;
            Perm nq = pair.right.perms[x] * q;
            if (!push(np, nq)) return false;
        }
    }
    return true;
}

// Order of the group generated by one side of the paired action (the two
// sides have equal kernels whenever the pair is transplantable).
inline std::int64_t generated_group_order(const InvolutionTriple& t,
                                          std::int64_t element_cap = 10'000'000) {
    std::unordered_set<std::uint64_t> dummy;
    std::unordered_set<std::size_t> seen;
    std::unordered_set<Perm, PermHash> elems;
    std::deque<Perm> frontier;
    elems.insert(Perm::identity(t.n));
    frontier.push_back(Perm::identity(t.n));
    while (!frontier.empty()) {
        Perm p = frontier.front();
        frontier.pop_front();
        for (int x = 0; x < 3; ++x) {
            Perm np = t.perms[x] * p;
            if (elems.insert(np).second) {
                if (std::int64_t(elems.size()) > element_cap)
                    throw resource_limit_error("group closure exceeded element cap");
                frontier.push_back(np);
            }
        }
    }
    (void)dummy; (void)seen;
    return std::int64_t(elems.size());
}

// ---------------------------------------------------------------------------
// Permutation isomorphism: a single sheet bijection conjugating P(x) to Q(x)
// for all three letters at once, found by backtracking with propagation.
// ---------------------------------------------------------------------------

namespace detail {

inline bool extend_iso(const TranspPair& pair, std::vector<int>& sigma,
                       std::vector<int>& used) {
    const int n = pair.n();
    int i0 = -1;
    for (int i = 0; i < n; ++i)
        if (sigma[i] < 0) { i0 = i; break; }
    if (i0 < 0) return true;
    for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        // propagate sigma(i0)=j across letters; record assignments for undo
        std::vector<std::pair<int, int>> trail;
        bool ok = true;
        std::vector<int> stack{i0};
        sigma[i0] = j;
        used[j] = 1;
        trail.push_back({i0, j});
        while (ok && !stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int x = 0; x < 3 && ok; ++x) {
                int pu = pair.left.perms[x](u);
                int qu = pair.right.perms[x](sigma[u]);
                if (sigma[pu] < 0) {
                    if (used[qu]) { ok = false; break; }
                    sigma[pu] = qu;
                    used[qu] = 1;
                    trail.push_back({pu, qu});
                    stack.push_back(pu);
                } else if (sigma[pu] != qu) {
                    ok = false;
                }
            }
        }
        if (ok && extend_iso(pair, sigma, used)) return true;
        for (auto& [i, jj] : trail) { sigma[i] = -1; used[jj] = 0; }
    }
    return false;
}

}  // namespace detail

inline bool is_permutation_isomorphic(const TranspPair& pair) {
    std::vector<int> sigma(pair.n(), -1), used(pair.n(), 0);
    return detail::extend_iso(pair, sigma, used);
}

// ---------------------------------------------------------------------------
// Transplantation matrix: T with T P(x) = Q(x) T for all letters, nonnegative
// integer entries, not a scaled permutation matrix, minimal entry sum. The
// intertwiner space has a basis of 0/1 orbit matrices of the paired action
// (i,j) -> (Q(x) i, P(x) j), so the minimum is attained on a single non-
// permutation orbit, or on a sum of two permutation orbits.
// ---------------------------------------------------------------------------

inline std::optional<std::vector<std::vector<std::int64_t>>> transplantation_matrix(
    const TranspPair& pair) {
    const int n = pair.n();
    std::vector<int> orbit(n * n, -1);
    std::vector<std::vector<std::pair<int, int>>> orbits;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (orbit[i * n + j] >= 0) continue;
            int id = int(orbits.size());
            orbits.emplace_back();
            std::vector<std::pair<int, int>> stack{{i, j}};
            orbit[i * n + j] = id;
            while (!stack.empty()) {
                auto [u, v] = stack.back();
                stack.pop_back();
                orbits[id].push_back({u, v});
                for (int x = 0; x < 3; ++x) {
                    int nu = pair.right.perms[x](u);
                    int nv = pair.left.perms[x](v);
                    if (orbit[nu * n + nv] < 0) {
                        orbit[nu * n + nv] = id;
                        stack.push_back({nu, nv});
                    }
                }
            }
        }
    }
    auto is_perm_orbit = [&](const std::vector<std::pair<int, int>>& cells) {
        if (int(cells.size()) != n) return false;
        std::vector<int> rowc(n, 0), colc(n, 0);
        for (auto& [u, v] : cells) { rowc[u]++; colc[v]++; }
        for (int i = 0; i < n; ++i)
            if (rowc[i] != 1 || colc[i] != 1) return false;
        return true;
    };
    int best_single = -1;
    std::vector<int> perm_orbits;
    for (int m = 0; m < int(orbits.size()); ++m) {
        if (is_perm_orbit(orbits[m])) {
            perm_orbits.push_back(m);
        } else if (best_single < 0 ||
                   orbits[m].size() < orbits[best_single].size()) {
            best_single = m;
        }
    }
    std::vector<int> chosen;
    std::int64_t best_sum = -1;
    if (best_single >= 0) {
        chosen = {best_single};
        best_sum = std::int64_t(orbits[best_single].size());
    }
    if (perm_orbits.size() >= 2 && (best_sum < 0 || 2 * n < best_sum)) {
        chosen = {perm_orbits[0], perm_orbits[1]};
        best_sum = 2 * n;
    }
    if (chosen.empty()) return std::nullopt;
    std::vector<std::vector<std::int64_t>> T(n, std::vector<std::int64_t>(n, 0));
    for (int m : chosen)
        for (auto& [u, v] : orbits[m]) T[u][v] += 1;
    return T;
}

// ---------------------------------------------------------------------------
// Quilt exploration: breadth-first closure of a seed pair under the braiding
// moves and their inverses, nodes identified by canonical form, explored in
// left-first order. Each node stores one witness braid word (L, R for the
// forward moves, l, r for inverses).
// ---------------------------------------------------------------------------

struct QuiltNode {
    std::string key;   // canonical encoding
    TranspPair rep;    // representative pair actually reached
    std::string word;  // witness braid word from the seed
};

struct QuiltGraph {
    std::vector<QuiltNode> nodes;                     // in discovery order
    std::vector<std::tuple<int, int, char>> edges;    // (from, to, 'L' or 'R')
    std::string seed_key;
    std::string name;
    std::int64_t group_order = 0;

    int size() const { return int(nodes.size()); }
};

inline QuiltGraph explore_quilt(const TranspPair& seed, int max_nodes = 100000) {
    QuiltGraph g;
    g.seed_key = canonical_form(seed);
    std::unordered_map<std::string, int> index;
    index[g.seed_key] = 0;
    g.nodes.push_back({g.seed_key, seed, ""});
    for (int at = 0; at < int(g.nodes.size()); ++at) {
        // left-first search order: L, R, then the inverse moves
        const std::array<std::pair<TranspPair, char>, 4> moves = {{
            {braid_left(g.nodes[at].rep), 'L'},
            {braid_right(g.nodes[at].rep), 'R'},
            {braid_left_inv(g.nodes[at].rep), 'l'},
            {braid_right_inv(g.nodes[at].rep), 'r'},
        }};
        for (const auto& [next, label] : moves) {
            std::string key = canonical_form(next);
            auto it = index.find(key);
            if (it == index.end()) {
                if (int(g.nodes.size()) >= max_nodes)
                    throw resource_limit_error("quilt exploration exceeded max_nodes=" +
                                               std::to_string(max_nodes));
                index[key] = int(g.nodes.size());
                g.nodes.push_back({key, next, g.nodes[at].word + label});
            }
        }
    }
    // Edge set recomputed from the final node list, so it is independent of
    // the BFS tie-breaking.
    for (int i = 0; i < int(g.nodes.size()); ++i) {
        std::string lk = canonical_form(braid_left(g.nodes[i].rep));
        std::string rk = canonical_form(braid_right(g.nodes[i].rep));
        g.edges.emplace_back(i, index.at(lk), 'L');
        g.edges.emplace_back(i, index.at(rk), 'R');
    }
    return g;
}

// ---------------------------------------------------------------------------
// Pair file format. Line 1 "n=<int>", lines 2-4 cycle notation for a,b,c of
// the left triple, a blank line, then three lines for the right triple.
// ---------------------------------------------------------------------------

inline TranspPair parse_pair_file(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    std::size_t at = 0;
    auto next_nonempty = [&]() -> std::string {
        while (at < lines.size()) {
            std::string s = lines[at++];
            std::size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }
        throw parse_error("pair file truncated");
    };
    std::string header = next_nonempty();
    std::size_t eq = header.find('=');
    if (eq == std::string::npos || header.substr(0, eq) != "n")
        throw parse_error("pair file must start with n=<int>");
    int n = std::stoi(header.substr(eq + 1));
    if (n < 1 || n > 25) throw parse_error("sheet count out of range");
    auto read_triple = [&]() {
        Perm a = Perm::parse(next_nonempty(), n);
        Perm b = Perm::parse(next_nonempty(), n);
        Perm c = Perm::parse(next_nonempty(), n);
        return InvolutionTriple(a, b, c);
    };
    InvolutionTriple left = read_triple();
    InvolutionTriple right = read_triple();
    return TranspPair(left, right);
}

inline TranspPair parse_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open pair file: " + path);
    return parse_pair_file(in);
}

inline void write_pair_file(std::ostream& out, const TranspPair& p) {
    out << "n=" << p.n() << "\n";
    for (const auto& perm : p.left.perms) out << perm.str() << "\n";
    out << "\n";
    for (const auto& perm : p.right.perms) out << perm.str() << "\n";
}

inline std::string pair_to_string(const TranspPair& p) {
    std::ostringstream os;
    write_pair_file(os, p);
    return os.str();
}

}  // namespace orbispec
