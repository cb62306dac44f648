#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>
#include <functional>
#include <ostream>

namespace orbispec {

// Error hierarchy. Callers that care about the failure mode catch the
// specific type; everything derives from std::runtime_error so the CLI can
// report any of them uniformly.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct integration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct conditioning_error : std::runtime_error {
    double condition_estimate = 0.0;
    conditioning_error(const std::string& msg, double cond)
        : std::runtime_error(msg), condition_estimate(cond) {}
};
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct under_coverage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational on int64 with __int128 intermediates. Values stay small
// (weights, conepoint sums, eigenvalue keys), so overflow checking is an
// assertion rather than arbitrary precision.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return double(num_) / double(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return fromI128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return fromI128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return fromI128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return fromI128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

  private:
    using i128 = __int128;
    static Rational fromI128(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        *this = fromI128(num_, den_);
    }
    std::int64_t num_, den_;
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Runs fn(t) on nthreads workers and joins. Used where the work is
// partitioned deterministically by the caller.
inline void run_workers(unsigned nthreads, const std::function<void(unsigned)>& fn) {
    if (nthreads <= 1) { fn(0); return; }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(fn, t);
    for (auto& th : pool) th.join();
}

inline unsigned default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

}  // namespace orbispec
