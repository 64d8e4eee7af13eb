#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitharm/partition.hpp"
#include "orbitharm/rational.hpp"

namespace orbitharm {

/// Rational point in Q^n.
class Point {
public:
    explicit Point(std::vector<Rational> coords) : c_(std::move(coords)) {}

    int nvars() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coords() const { return c_; }
    const Rational& coord(int i) const { return c_.at(static_cast<size_t>(i)); }

    Rational coordinate_sum() const {
        Rational s(0);
        for (const auto& x : c_) s += x;
        return s;
    }

    /// Multiset of coordinate multiplicities, weakly decreasing.
    Partition multiplicity_partition() const {
        std::map<Rational, int> counts;
        for (const auto& x : c_) ++counts[x];
        std::vector<int> parts;
        parts.reserve(counts.size());
        for (const auto& [v, k] : counts) parts.push_back(k);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return Partition(std::move(parts));
    }

    /// Coordinates permuted by the 0-based permutation w (coordinate i moves
    /// to slot w(i)), matching the variable substitution convention.
    Point permuted(const std::vector<int>& w) const {
        if (w.size() != c_.size()) throw std::invalid_argument("Point: permutation length mismatch");
        std::vector<Rational> r(c_.size(), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r.at(static_cast<size_t>(w[i])) = c_[i];
        return Point(std::move(r));
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].to_string();
        }
        return s;
    }

    friend bool operator<(const Point& a, const Point& b) { return a.c_ < b.c_; }
    friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

/// Finite subset of Q^n closed under coordinate permutations, stored sorted
/// and deduplicated. Closure is checked on construction unless the set was
/// produced by orbit_union, which is closed by construction.
class PointSet {
public:
    PointSet(int nvars, std::vector<Point> pts) : nvars_(nvars) {
        for (const auto& p : pts)
            if (p.nvars() != nvars_) throw std::invalid_argument("PointSet: mixed point lengths");
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        pts_ = std::move(pts);
        check_closure();
    }

    /// Union of the S_n orbits of the seed points, deduplicated.
    static PointSet orbit_union(const std::vector<Point>& seeds, int max_n = 7) {
        if (seeds.empty()) throw std::invalid_argument("orbit_union: empty seed list");
        int n = seeds.front().nvars();
        for (const auto& s : seeds)
            if (s.nvars() != n) throw std::invalid_argument("orbit_union: mixed point lengths");
        if (n < 1) throw std::invalid_argument("orbit_union: points must have at least one coordinate");
        if (n > max_n)
            throw std::invalid_argument("orbit_union: n=" + std::to_string(n) + " exceeds bound " +
                                        std::to_string(max_n));
        std::vector<Point> all;
        for (const auto& s : seeds) {
            std::vector<Rational> c = s.coords();
            std::sort(c.begin(), c.end());
            // next_permutation over the sorted multiset enumerates each
            // distinct rearrangement exactly once.
            do {
                all.emplace_back(c);
            } while (std::next_permutation(c.begin(), c.end()));
        }
        PointSet y(n, {});
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        y.pts_ = std::move(all);
        return y;
    }

    int nvars() const { return nvars_; }
    size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    bool contains(const Point& p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }

private:
    void check_closure() const {
        // Closure under the adjacent transpositions implies closure under S_n.
        for (int i = 0; i + 1 < nvars_; ++i) {
            for (const auto& p : pts_) {
                std::vector<Rational> c = p.coords();
                std::swap(c[static_cast<size_t>(i)], c[static_cast<size_t>(i) + 1]);
                if (!contains(Point(std::move(c))))
                    throw std::invalid_argument("PointSet: not closed under coordinate permutations");
            }
        }
    }

    int nvars_;
    std::vector<Point> pts_;
};

}  // namespace orbitharm
