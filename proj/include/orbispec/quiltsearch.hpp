#pragma once

#include <atomic>
#include <mutex>

#include "orbispec/permquilt.hpp"

namespace orbispec {

// ---------------------------------------------------------------------------
// Exhaustive catalog search.
//
// enumerate_pairs(n) lists, up to equivalence, every pair of transitive
// involution triples on n sheets that is transplantable but not permutation
// isomorphic, grouped into quilts by the braiding moves. The search space of
// labeled triples is astronomically large for n >= 13, so the enumeration is
// organized as:
//
//   1. backtracking over BFS-rooted coset tables (tables whose sheet labels
//      are in discovery order), which enumerates each relabeling class a
//      small number of times and only transitive actions;
//   2. a group-order prune: a pair can only be transplantable if both sides
//      generate the same finite group, and the groups behind the catalog are
//      small, so triples whose generated group exceeds `group_order_cap` are
//      discarded. A cheap lcm-of-element-orders bound rejects most triples
//      before the Schreier-Sims order computation runs;
//   3. canonical-form dedup, character fingerprint bucketing, and the exact
//      transplantability test within buckets.
//
// The cap makes the search exhaustive relative to a documented bound; the
// quilt report records the generated group order of every surviving pair so
// the bound can be audited.
// ---------------------------------------------------------------------------

namespace detail {

// Deterministic Schreier-Sims with an order cap: returns the exact group
// order if it is <= cap, otherwise any value > cap. The running product of
// orbit sizes is a lower bound for |G|, so exceeding the cap aborts early.
// Sifted residues are inserted into every intermediate level's generator
// set and the affected levels are re-verified until a fixpoint.
class CappedOrder {
  public:
    CappedOrder(int degree, std::int64_t cap) : n_(degree), cap_(cap) {}

    std::int64_t order(const std::vector<Perm>& gens) {
        levels_.clear();
        aborted_ = false;
        for (const auto& g : gens)
            if (!g.is_identity()) insert_residue(0, g);
        // verify deepest dirty level first; shallow verification may dirty
        // deeper levels again, so iterate to a fixpoint
        while (!aborted_) {
            int dirty = -1;
            for (int i = int(levels_.size()) - 1; i >= 0; --i)
                if (levels_[i].dirty) { dirty = i; break; }
            if (dirty < 0) break;
            verify(std::size_t(dirty));
        }
        if (aborted_) return cap_ + 1;
        std::int64_t ord = 1;
        for (const auto& lvl : levels_) ord *= std::int64_t(lvl.orbit.size());
        return ord;
    }

  private:
    struct Level {
        int base = -1;
        bool dirty = true;
        std::vector<Perm> gens;
        std::vector<int> orbit;        // points in discovery order
        std::vector<int> where;        // point -> index in orbit, or -1
        std::vector<Perm> transversal;  // maps base -> orbit point
    };

    int n_;
    std::int64_t cap_;
    bool aborted_ = false;
    std::vector<Level> levels_;

    std::int64_t orbit_product() const {
        std::int64_t p = 1;
        for (const auto& lvl : levels_) {
            p *= std::int64_t(std::max<std::size_t>(lvl.orbit.size(), 1));
            if (p > cap_) return p;
        }
        return p;
    }

    // Sift g through levels from `from`; insert the residue into the
    // generator sets of all levels from `from` through its landing level.
    void insert_residue(std::size_t from, Perm g) {
        if (aborted_) return;
        std::size_t j = from;
        while (j < levels_.size()) {
            int img = g(levels_[j].base);
            if (levels_[j].where[img] < 0) break;
            g = levels_[j].transversal[levels_[j].where[img]].inverse() * g;
            if (g.is_identity()) return;
            ++j;
        }
        if (j == levels_.size()) {
            Level lvl;
            for (int i = 0; i < n_; ++i)
                if (g(i) != i) { lvl.base = i; break; }
            lvl.where.assign(n_, -1);
            lvl.orbit.push_back(lvl.base);
            lvl.where[lvl.base] = 0;
            lvl.transversal.push_back(Perm::identity(n_));
            levels_.push_back(std::move(lvl));
        }
        for (std::size_t l = from; l <= j; ++l) {
            levels_[l].gens.push_back(g);
            levels_[l].dirty = true;
        }
    }

    // Recompute the orbit at level i and sift all Schreier generators one
    // level down. Residue insertion only dirties levels > i or i itself via
    // re-entry, which the fixpoint loop handles.
    void verify(std::size_t i) {
        levels_[i].dirty = false;
        for (std::size_t at = 0; at < levels_[i].orbit.size(); ++at) {
            for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
                int pt = levels_[i].orbit[at];
                Perm gen = levels_[i].gens[gi];
                int img = gen(pt);
                if (levels_[i].where[img] < 0) {
                    levels_[i].where[img] = int(levels_[i].orbit.size());
                    levels_[i].orbit.push_back(img);
                    levels_[i].transversal.push_back(gen * levels_[i].transversal[at]);
                    if (orbit_product() > cap_) { aborted_ = true; return; }
                } else {
                    Perm sg = levels_[i].transversal[levels_[i].where[img]].inverse() *
                              gen * levels_[i].transversal[at];
                    if (!sg.is_identity()) insert_residue(i + 1, sg);
                    if (aborted_) return;
                }
                if (levels_[i].dirty) return;  // re-entered: restart this level
            }
        }
    }
};

// Permutations of degree <= 16 packed into a u64, 4 bits per image.
struct P16 {
    static std::uint64_t ident(int n) {
        std::uint64_t r = 0;
        for (int i = 0; i < n; ++i) r |= std::uint64_t(i) << (4 * i);
        return r;
    }
    static int img(std::uint64_t p, int i) { return int((p >> (4 * i)) & 15); }
    // (p*q)(i) = p(q(i))
    static std::uint64_t mul(std::uint64_t p, std::uint64_t q, int n) {
        std::uint64_t r = 0;
        for (int i = 0; i < n; ++i)
            r |= ((p >> (4 * ((q >> (4 * i)) & 15))) & 15) << (4 * i);
        return r;
    }
    static std::uint64_t inv(std::uint64_t p, int n) {
        std::uint64_t r = 0;
        for (int i = 0; i < n; ++i) r |= std::uint64_t(i) << (4 * ((p >> (4 * i)) & 15));
        return r;
    }
    static std::int64_t order(std::uint64_t p, int n) {
        unsigned seen = 0;
        std::int64_t ord = 1;
        for (int i = 0; i < n; ++i) {
            if (seen & (1u << i)) continue;
            int len = 0, j = i;
            while (!(seen & (1u << j))) { seen |= 1u << j; j = img(p, j); ++len; }
            ord = std::lcm(ord, std::int64_t(len));
        }
        return ord;
    }
};

// Allocation-light Schreier-Sims on packed permutations with an order cap;
// same fixpoint scheme as CappedOrder.
class PackedOrder {
  public:
    PackedOrder(int degree, std::int64_t cap) : n_(degree), cap_(cap) {
        levels_.reserve(16);
    }

    std::int64_t order(const std::array<std::uint64_t, 3>& gens) {
        levels_.clear();
        aborted_ = false;
        std::uint64_t id = P16::ident(n_);
        for (auto g : gens)
            if (g != id) insert_residue(0, g);
        while (!aborted_) {
            int dirty = -1;
            for (int i = int(levels_.size()) - 1; i >= 0; --i)
                if (levels_[i].dirty) { dirty = i; break; }
            if (dirty < 0) break;
            verify(std::size_t(dirty));
        }
        if (aborted_) return cap_ + 1;
        std::int64_t ord = 1;
        for (const auto& lvl : levels_) ord *= lvl.orbn;
        return ord;
    }

  private:
    struct Lvl {
        int base = -1;
        bool dirty = true;
        int orbn = 0;
        std::array<std::int8_t, 16> orbit{};
        std::array<std::int8_t, 16> where{};
        std::array<std::uint64_t, 16> transversal{};
        std::vector<std::uint64_t> gens;
    };

    int n_;
    std::int64_t cap_;
    bool aborted_ = false;
    std::vector<Lvl> levels_;

    std::int64_t orbit_product() const {
        std::int64_t p = 1;
        for (const auto& lvl : levels_) {
            p *= std::max(lvl.orbn, 1);
            if (p > cap_) return p;
        }
        return p;
    }

    void insert_residue(std::size_t from, std::uint64_t g) {
        if (aborted_) return;
        const std::uint64_t id = P16::ident(n_);
        std::size_t j = from;
        while (j < levels_.size()) {
            int im = P16::img(g, levels_[j].base);
            if (levels_[j].where[im] < 0) break;
            g = P16::mul(P16::inv(levels_[j].transversal[levels_[j].where[im]], n_), g, n_);
            if (g == id) return;
            ++j;
        }
        if (j == levels_.size()) {
            Lvl lvl;
            for (int i = 0; i < n_; ++i)
                if (P16::img(g, i) != i) { lvl.base = i; break; }
            lvl.where.fill(-1);
            lvl.orbit[0] = std::int8_t(lvl.base);
            lvl.where[lvl.base] = 0;
            lvl.transversal[0] = id;
            lvl.orbn = 1;
            lvl.gens.reserve(8);
            levels_.push_back(std::move(lvl));
        }
        for (std::size_t l = from; l <= j; ++l) {
            levels_[l].gens.push_back(g);
            levels_[l].dirty = true;
        }
    }

    void verify(std::size_t i) {
        levels_[i].dirty = false;
        for (int at = 0; at < levels_[i].orbn; ++at) {
            for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
                int pt = levels_[i].orbit[at];
                std::uint64_t gen = levels_[i].gens[gi];
                int im = P16::img(gen, pt);
                if (levels_[i].where[im] < 0) {
                    levels_[i].where[im] = std::int8_t(levels_[i].orbn);
                    levels_[i].orbit[levels_[i].orbn] = std::int8_t(im);
                    levels_[i].transversal[levels_[i].orbn] =
                        P16::mul(gen, levels_[i].transversal[at], n_);
                    levels_[i].orbn++;
                    if (orbit_product() > cap_) { aborted_ = true; return; }
                } else {
                    std::uint64_t sg = P16::mul(
                        P16::inv(levels_[i].transversal[levels_[i].where[im]], n_),
                        P16::mul(gen, levels_[i].transversal[at], n_), n_);
                    if (sg != P16::ident(n_)) insert_residue(i + 1, sg);
                    if (aborted_) return;
                }
                if (levels_[i].dirty) return;  // restart this level
            }
        }
    }
};

// Reduced words over {a,b,c} up to a given length (no immediate repeats).
inline const std::vector<std::vector<int>>& fingerprint_words() {
    static const std::vector<std::vector<int>> words = [] {
        std::vector<std::vector<int>> out;
        std::vector<std::vector<int>> frontier;
        for (int x = 0; x < 3; ++x) frontier.push_back({x});
        const int max_len = 5;
        while (!frontier.empty() && int(frontier.front().size()) <= max_len) {
            std::vector<std::vector<int>> next;
            for (auto& w : frontier) {
                out.push_back(w);
                if (int(w.size()) < max_len)
                    for (int x = 0; x < 3; ++x)
                        if (x != w.back()) {
                            auto w2 = w;
                            w2.push_back(x);
                            next.push_back(std::move(w2));
                        }
            }
            frontier = std::move(next);
        }
        return out;
    }();
    return words;
}

// Fixed-point counts of all fingerprint words, minimized over the six letter
// permutations; invariant under relabeling and letter permutation.
inline std::vector<std::uint8_t> letter_min_fingerprint(const InvolutionTriple& t) {
    const auto& words = fingerprint_words();
    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> cur(words.size());
    for (const auto& sigma : letter_perms()) {
        for (std::size_t w = 0; w < words.size(); ++w) {
            // apply the word right-to-left to each point
            int fix = 0;
            for (int i = 0; i < t.n; ++i) {
                int j = i;
                for (auto it = words[w].rbegin(); it != words[w].rend(); ++it)
                    j = t.perms[sigma[*it]](j);
                if (j == i) ++fix;
            }
            cur[w] = std::uint8_t(fix);
        }
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

struct TableState {
    int n;
    std::array<std::array<std::int8_t, 25>, 3> img;
    int seen;
    TableState(int n_) : n(n_), seen(1) {
        for (auto& row : img) row.fill(-1);
    }
};

// Backtracking enumerator over BFS-rooted coset tables for one task prefix,
// with in-tree pruning against alternative seeds and the group-order cap.
// Works on raw arrays; Perm objects are built only for survivors.
class RootedTableSearch {
  public:
    RootedTableSearch(int n, std::int64_t group_cap)
        : n_(n), cap_(group_cap), sims_(n, group_cap) {}

    template <typename Sink>
    void run(const TableState& start, Sink&& sink) {
        img_ = start.img;
        seen_ = start.seen;
        rec(0, sink);
    }

  private:
    int n_;
    std::int64_t cap_;
    PackedOrder sims_;
    std::array<std::array<std::int8_t, 25>, 3> img_{};
    int seen_ = 1;

    // Own-seed 3-byte BFS code prefix of sheet u (images va, vb, vc).
    void seed_prefix(int u, std::int8_t* out) const {
        int va = img_[0][u], vb = img_[1][u], vc = img_[2][u];
        int next = 1;
        int la = 0;
        if (va != u) la = next++;
        out[0] = std::int8_t(la);
        int lb;
        if (vb == u) lb = 0;
        else if (vb == va) lb = la;
        else lb = next++;
        out[1] = std::int8_t(lb);
        int lc;
        if (vc == u) lc = 0;
        else if (vc == va) lc = la;
        else if (vc == vb) lc = lb;
        else lc = next++;
        out[2] = std::int8_t(lc);
    }

    bool row_not_smaller_than_root(int u) const {
        std::int8_t pfx[3];
        seed_prefix(u, pfx);
        for (int x = 0; x < 3; ++x) {
            if (pfx[x] != img_[x][0]) return pfx[x] > img_[x][0];
        }
        return true;
    }

    // Full minimality check over all seeds, early exit on first difference.
    bool rooted_canonical() const {
        std::int8_t newlab[25], orig[25];
        for (int seed = 1; seed < n_; ++seed) {
            std::memset(newlab, -1, sizeof(newlab));
            int count = 0;
            newlab[seed] = 0;
            orig[count++] = std::int8_t(seed);
            bool resolved = false;
            for (int u = 0; u < count && !resolved; ++u) {
                for (int x = 0; x < 3; ++x) {
                    int v = img_[x][orig[u]];
                    if (newlab[v] < 0) { newlab[v] = std::int8_t(count); orig[count++] = std::int8_t(v); }
                    int ref = img_[x][u];
                    if (newlab[v] != ref) {
                        if (newlab[v] < ref) return false;
                        resolved = true;
                        break;
                    }
                }
            }
        }
        return true;
    }

    std::int64_t group_order_if_small() {
        std::array<std::uint64_t, 3> g{0, 0, 0};
        for (int x = 0; x < 3; ++x)
            for (int i = 0; i < n_; ++i)
                g[x] |= std::uint64_t(img_[x][i]) << (4 * i);
        // lcm of a few word orders is a divisor-style lower bound for |G|
        std::uint64_t ab = P16::mul(g[0], g[1], n_);
        std::uint64_t ac = P16::mul(g[0], g[2], n_);
        std::uint64_t bc = P16::mul(g[1], g[2], n_);
        std::int64_t l = std::lcm(P16::order(ab, n_), P16::order(ac, n_));
        l = std::lcm(l, P16::order(bc, n_));
        if (l > cap_) return -1;
        l = std::lcm(l, P16::order(P16::mul(ab, g[2], n_), n_));
        if (l > cap_) return -1;
        l = std::lcm(l, P16::order(P16::mul(ab, bc, n_), n_));
        if (l > cap_) return -1;
        std::int64_t ord = sims_.order(g);
        return ord <= cap_ ? ord : -1;
    }

    template <typename Sink>
    void rec(int cell, Sink&& sink) {
        if (cell == 3 * n_) {
            if (seen_ != n_) return;
            if (!rooted_canonical()) return;
            std::int64_t ord = group_order_if_small();
            if (ord < 0) return;
            sink(img_, ord);
            return;
        }
        int u = cell / 3, x = cell % 3;
        if (u >= seen_) return;  // component closed before reaching all sheets
        if (x == 0 && u >= 1) {
            // row u-1 is complete; its own-seed prefix must not beat the root
            if (!row_not_smaller_than_root(u - 1)) return;
        }
        if (img_[x][u] >= 0) { rec(cell + 1, sink); return; }
        // fixed point: forbidden for letter a when the root row says a moves 0
        if (!(x == 0 && u > 0 && img_[0][0] == 1)) {
            img_[x][u] = std::int8_t(u);
            rec(cell + 1, sink);
            img_[x][u] = -1;
        }
        for (int v = u + 1; v < seen_; ++v) {
            if (img_[x][v] >= 0) continue;
            img_[x][u] = std::int8_t(v);
            img_[x][v] = std::int8_t(u);
            rec(cell + 1, sink);
            img_[x][u] = img_[x][v] = -1;
        }
        if (seen_ < n_) {
            int v = seen_;
            img_[x][u] = std::int8_t(v);
            img_[x][v] = std::int8_t(u);
            seen_++;
            rec(cell + 1, sink);
            seen_--;
            img_[x][u] = img_[x][v] = -1;
        }
    }
};

// lcm-of-orders lower bound for |<a,b,c>| from a fixed word list.
inline std::int64_t order_lcm_bound(const InvolutionTriple& t, std::int64_t cap) {
    static const std::vector<std::string> words = {"ab",     "ac",   "bc",
                                                   "abc",    "abcb", "acbc",
                                                   "abacbc"};
    std::int64_t l = 1;
    for (const auto& w : words) {
        l = std::lcm(l, t.word_image(w).order());
        if (l > cap) return l;
    }
    return l;
}

// True iff the identity labeling is the minimal BFS code over all seeds.
inline bool is_canonical_rooted(const InvolutionTriple& t) {
    const int n = t.n;
    std::vector<int> newlab(n), orig(n);
    for (int seed = 1; seed < n; ++seed) {
        std::fill(newlab.begin(), newlab.end(), -1);
        int count = 0;
        newlab[seed] = count;
        orig[count++] = seed;
        bool smaller = false, larger = false;
        for (int u = 0; u < count && !smaller && !larger; ++u) {
            for (int x = 0; x < 3; ++x) {
                int v = t.perms[x](orig[u]);
                if (newlab[v] < 0) { newlab[v] = count; orig[count++] = v; }
                int ref = t.perms[x](u);  // identity-labeling code byte
                if (newlab[v] != ref) {
                    if (newlab[v] < ref) smaller = true;
                    else larger = true;
                    break;
                }
            }
        }
        if (smaller) return false;
    }
    return true;
}

}  // namespace detail

struct EnumerateOptions {
    std::int64_t group_order_cap = 40000;
    std::int64_t pair_closure_cap = 10'000'000;
    unsigned threads = 0;  // 0 = hardware concurrency
    int max_sheets = 15;   // resource guard; raise explicitly for n up to 21
    int quilt_max_nodes = 100000;
};

struct CatalogPair {
    TranspPair pair;
    std::string key;
    std::int64_t group_order = 0;
};

namespace detail {

// Enumerates canonical transitive involution triples on n sheets whose
// generated group order is <= cap. Parallelized by splitting the search tree
// at a fixed depth; output order is deterministic.
inline std::vector<CatalogPair> collect_candidates(int n, const EnumerateOptions& opt) {
    struct Survivor {
        InvolutionTriple triple;
        std::int64_t order;
        std::vector<std::uint8_t> fingerprint;
    };

    // --- stage 1: canonical transitive triples with small group ---
    std::vector<TableState> tasks;
    {
        // split the tree after the cells of sheet 0 and sheet 1
        TableState root(n);
        std::function<void(TableState&, int)> split = [&](TableState& st, int cell) {
            const int split_depth = std::min(6, 3 * n);
            if (cell == split_depth) { tasks.push_back(st); return; }
            int u = cell / 3, x = cell % 3;
            if (u >= st.seen) return;  // disconnected prefix
            if (st.img[x][u] >= 0) { split(st, cell + 1); return; }
            // fixed point
            st.img[x][u] = std::int8_t(u);
            split(st, cell + 1);
            st.img[x][u] = -1;
            // pair with an already-seen sheet
            for (int v = u + 1; v < st.seen; ++v) {
                if (st.img[x][v] >= 0) continue;
                st.img[x][u] = std::int8_t(v);
                st.img[x][v] = std::int8_t(u);
                split(st, cell + 1);
                st.img[x][u] = st.img[x][v] = -1;
            }
            // introduce the next new sheet
            if (st.seen < n) {
                int v = st.seen;
                st.img[x][u] = std::int8_t(v);
                st.img[x][v] = std::int8_t(u);
                st.seen++;
                split(st, cell + 1);
                st.seen--;
                st.img[x][u] = st.img[x][v] = -1;
            }
        };
        split(root, 0);
    }

    unsigned nthreads = opt.threads ? opt.threads : default_threads();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::vector<Survivor>> results(tasks.size());
    std::atomic<std::size_t> next_task{0};

    if (n > 16)
        throw resource_limit_error(
            "catalog enumeration implemented for n <= 16; larger sizes are "
            "out of practical reach for exhaustive search");

    auto worker = [&](unsigned) {
        detail::RootedTableSearch search(n, opt.group_order_cap);
        for (;;) {
            std::size_t t = next_task.fetch_add(1);
            if (t >= tasks.size()) break;
            auto& out = results[t];
            search.run(tasks[t], [&](const std::array<std::array<std::int8_t, 25>, 3>& img) {
                std::array<Perm, 3> perms;
                for (int x = 0; x < 3; ++x) {
                    std::vector<std::uint8_t> im(n);
                    for (int i = 0; i < n; ++i) im[i] = std::uint8_t(img[x][i]);
                    perms[x] = Perm(std::move(im));
                }
                InvolutionTriple triple(perms[0], perms[1], perms[2]);
                std::int64_t ord = generated_group_order(triple, opt.group_order_cap);
                out.push_back({triple, ord, detail::letter_min_fingerprint(triple)});
            });
        }
    };
    run_workers(nthreads, worker);

    std::vector<Survivor> reps;
    for (auto& r : results)
        for (auto& s : r) reps.push_back(std::move(s));

    // --- stage 2: bucket by (group order, letter-minimized fingerprint) ---
    std::map<std::pair<std::int64_t, std::vector<std::uint8_t>>, std::vector<int>> buckets;
    for (int i = 0; i < int(reps.size()); ++i)
        buckets[{reps[i].order, reps[i].fingerprint}].push_back(i);

    // --- stage 3: exact pair tests within buckets ---
    std::vector<CatalogPair> out;
    std::unordered_set<std::string> seen_keys;
    for (auto& [key, members] : buckets) {
        (void)key;
        for (std::size_t ii = 0; ii < members.size(); ++ii) {
            for (std::size_t jj = ii + 1; jj < members.size(); ++jj) {
                TranspPair cand(reps[members[ii]].triple, reps[members[jj]].triple);
                if (!is_transplantable(cand, opt.pair_closure_cap)) continue;
                if (is_permutation_isomorphic(cand)) continue;
                std::string ck = canonical_form(cand);
                if (seen_keys.insert(ck).second)
                    out.push_back({cand, ck, reps[members[ii]].order});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CatalogPair& a, const CatalogPair& b) { return a.key < b.key; });
    return out;
}

}  // namespace detail

// Exhaustive enumeration (relative to the documented group-order cap),
// grouped into quilts via the braid closure.
inline std::vector<QuiltGraph> enumerate_pairs(int n, EnumerateOptions opt = {}) {
    if (n < 1) throw std::invalid_argument("sheet count must be positive");
    if (n > opt.max_sheets)
        throw resource_limit_error(
            "enumeration limited to n <= " + std::to_string(opt.max_sheets) +
            " (raise max_sheets to go further)");
    auto candidates = detail::collect_candidates(n, opt);

    std::vector<QuiltGraph> quilts;
    std::unordered_set<std::string> assigned;
    for (const auto& cand : candidates) {
        if (assigned.count(cand.key)) continue;
        QuiltGraph g = explore_quilt(cand.pair, opt.quilt_max_nodes);
        g.group_order = cand.group_order;
        for (const auto& node : g.nodes) assigned.insert(node.key);
        quilts.push_back(std::move(g));
    }
    // Braiding preserves transplantability, so every quilt node must be a
    // catalog pair; a mismatch signals a bug.
    std::unordered_set<std::string> cand_keys;
    for (const auto& c : candidates) cand_keys.insert(c.key);
    for (const auto& q : quilts)
        for (const auto& node : q.nodes)
            if (!cand_keys.count(node.key))
                throw consistency_error("braid closure left the candidate set");

    std::sort(quilts.begin(), quilts.end(),
              [](const QuiltGraph& a, const QuiltGraph& b) {
                  return a.seed_key < b.seed_key;
              });
    // Names: "<n>" when the size has a single quilt, else "<n>a", "<n>b", ...
    // in discovery order (the paper's historical letters are a separate
    // labeling; the report carries this mapping note).
    for (std::size_t i = 0; i < quilts.size(); ++i) {
        quilts[i].name = std::to_string(n);
        if (quilts.size() > 1) quilts[i].name += char('a' + i);
    }
    return quilts;
}

// Structured-text quilt listing: canonical pairs with braid-word labels in
// the style "7(1)" plus the braid-word alternative "7LL...".
inline void write_quilt_report(std::ostream& out, const std::vector<QuiltGraph>& quilts) {
    out << "# quilt catalog\n";
    out << "# pair names: <quilt>(<k>) in left-first search order; the\n";
    out << "# braid-word alternative appends the witness word instead of (k).\n";
    out << "# quilt letters are assigned by discovery order, not by the\n";
    out << "# historical naming of the size-11 quilts.\n";
    for (const auto& q : quilts) {
        out << "quilt " << q.name << " pairs=" << q.size()
            << " group_order=" << q.group_order << "\n";
        for (int i = 0; i < q.size(); ++i) {
            const auto& node = q.nodes[i];
            out << "  " << q.name << "(" << (i + 1) << ")";
            out << "  word=" << (node.word.empty() ? "-" : node.word);
            out << "  alias=" << q.name << node.word << "\n";
            for (int side = 0; side < 2; ++side) {
                const auto& t = side ? node.rep.right : node.rep.left;
                out << "    " << (side ? "right" : "left ") << ": a=" << t.a().str()
                    << " b=" << t.b().str() << " c=" << t.c().str() << "\n";
            }
        }
        out << "\n";
    }
}

}  // namespace orbispec
