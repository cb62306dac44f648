#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbispec/common.hpp"

namespace orbispec {

// Permutation of {0..n-1}, images stored directly. Composition convention
// throughout the project: (p*q)(i) = p(q(i)).
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}

    static Perm identity(int n) { return Perm(n); }

    int degree() const { return int(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    std::uint8_t& at(int i) { return img_[i]; }

    friend Perm operator*(const Perm& p, const Perm& q) {
        Perm r;
        r.img_.resize(p.img_.size());
        for (std::size_t i = 0; i < q.img_.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = std::uint8_t(i);
        return r;
    }

    // conj(a) = a * this * a^{-1}: relabels this permutation's cycles through a.
    Perm conjugated_by(const Perm& a) const {
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[a.img_[i]] = a.img_[img_[i]];
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }
    bool is_involution() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[img_[i]] != i) return false;
        return true;
    }

    int fixed_points() const {
        int f = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] == i) ++f;
        return f;
    }

    // lcm of cycle lengths.
    std::int64_t order() const {
        std::vector<bool> seen(img_.size(), false);
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0, j = int(i);
            while (!seen[j]) { seen[j] = true; j = img_[j]; ++len; }
            ord = std::lcm(ord, std::int64_t(len));
        }
        return ord;
    }

    std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            int j = int(i);
            while (!seen[j]) { seen[j] = true; cyc.push_back(j); j = img_[j]; }
            if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    // Cycle notation, 1-based: "(1 2)(5 7)", identity prints "()".
    std::string str() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::ostringstream os;
        for (auto& c : cs) {
            os << '(';
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k) os << ' ';
                os << c[k] + 1;
            }
            os << ')';
        }
        return os.str();
    }

    // Parses cycle notation on n points; accepts "()", "id", "e" for identity.
    static Perm parse(const std::string& text, int n) {
        Perm p(n);
        std::string t;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)) || true) t.push_back(ch);
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < t.size() && std::isspace((unsigned char)t[i])) ++i; };
        skip_ws();
        if (i >= t.size()) throw parse_error("empty permutation");
        if (t.compare(i, 2, "id") == 0 || t[i] == 'e') return p;
        bool any = false;
        std::vector<bool> moved(n, false);
        while (i < t.size()) {
            skip_ws();
            if (i >= t.size()) break;
            if (t[i] != '(') throw parse_error("expected '(' in cycle notation: " + text);
            ++i;
            std::vector<int> cyc;
            while (true) {
                skip_ws();
                if (i < t.size() && t[i] == ')') { ++i; break; }
                std::size_t j = i;
                while (j < t.size() && (std::isdigit((unsigned char)t[j]))) ++j;
                if (j == i) throw parse_error("expected point index in: " + text);
                int v = std::stoi(t.substr(i, j - i));
                if (v < 1 || v > n) throw parse_error("point out of range in: " + text);
                if (moved[v - 1]) throw parse_error("repeated point in: " + text);
                moved[v - 1] = true;
                cyc.push_back(v - 1);
                i = j;
                skip_ws();
                if (i < t.size() && t[i] == ',') ++i;
            }
            any = true;
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                p.img_[from] = std::uint8_t(to);
            }
        }
        if (!any) throw parse_error("no cycles found in: " + text);
        return p;
    }

    // Packs a permutation of degree <= 25 into two 64-bit words (5 bits each).
    std::pair<std::uint64_t, std::uint64_t> pack() const {
        std::uint64_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < img_.size() && i < 12; ++i)
            lo |= std::uint64_t(img_[i]) << (5 * i);
        for (std::size_t i = 12; i < img_.size(); ++i)
            hi |= std::uint64_t(img_[i]) << (5 * (i - 12));
        return {lo, hi};
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    const std::vector<std::uint8_t>& images() const { return img_; }

    static Perm random(int n, std::mt19937_64& rng) {
        Perm p(n);
        for (int i = n - 1; i > 0; --i) {
            int j = int(rng() % std::uint64_t(i + 1));
            std::swap(p.img_[i], p.img_[j]);
        }
        return p;
    }

    static Perm random_involution(int n, std::mt19937_64& rng) {
        Perm p(n);
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 0);
        std::shuffle(pts.begin(), pts.end(), rng);
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
            if (rng() & 1) {
                p.img_[pts[i]] = std::uint8_t(pts[i + 1]);
                p.img_[pts[i + 1]] = std::uint8_t(pts[i]);
            }
        }
        return p;
    }

  private:
    std::vector<std::uint8_t> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        auto [lo, hi] = p.pack();
        std::size_t seed = std::hash<std::uint64_t>{}(lo);
        hash_combine(seed, std::hash<std::uint64_t>{}(hi));
        return seed;
    }
};

}  // namespace orbispec
