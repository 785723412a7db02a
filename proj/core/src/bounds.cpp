#include "hotplug/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "hotplug/combinat.hpp"

namespace hotplug {

namespace {

void check_memory_range(const Rational& m, const Rational& hi) {
    if (m < 0 || m > hi)
        throw std::invalid_argument("memory outside the curve's domain");
}

Rational line_max(std::initializer_list<Rational> values) {
    Rational best(0);
    for (const Rational& v : values)
        if (v > best) best = v;
    return best;
}

}  // namespace

TradeoffCurve::TradeoffCurve(std::vector<TradeoffPoint> breakpoints)
    : points_(std::move(breakpoints)) {
    if (points_.empty())
        throw std::invalid_argument("a curve needs at least one breakpoint");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i - 1].memory < points_[i].memory))
            throw std::invalid_argument("breakpoints must strictly increase in M");
}

Rational TradeoffCurve::eval(const Rational& memory) const {
    if (memory < points_.front().memory || memory > points_.back().memory)
        throw std::invalid_argument("memory outside the curve's breakpoint range");
    auto it = std::lower_bound(points_.begin(), points_.end(), memory,
                               [](const TradeoffPoint& p, const Rational& m) {
                                   return p.memory < m;
                               });
    if (it != points_.end() && it->memory == memory) return it->load;
    const TradeoffPoint& hi = *it;
    const TradeoffPoint& lo = *(it - 1);
    return lo.load + (hi.load - lo.load) * (memory - lo.memory) /
                         (hi.memory - lo.memory);
}

bool TradeoffCurve::non_increasing() const {
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (points_[i].load > points_[i - 1].load) return false;
    return true;
}

bool TradeoffCurve::convex() const {
    for (std::size_t i = 2; i < points_.size(); ++i) {
        const TradeoffPoint& a = points_[i - 2];
        const TradeoffPoint& b = points_[i - 1];
        const TradeoffPoint& c = points_[i];
        // slope(a,b) <= slope(b,c), cross-multiplied (denominators positive)
        if ((b.load - a.load) * (c.memory - b.memory) >
            (c.load - b.load) * (b.memory - a.memory))
            return false;
    }
    return true;
}

std::vector<TradeoffPoint> achievable_points(SchemeId id, int users,
                                             int active_users, int files) {
    if (users < 1 || active_users < 1 || active_users > users || files < 1)
        throw std::invalid_argument("require 1 <= Kp <= K and N >= 1");
    const Rational n(files);
    std::vector<TradeoffPoint> points;
    auto add = [&](int t) {
        TradeoffPoint p = theoretical_corner(id, users, active_users, files, t);
        if (p.memory <= n) points.push_back(std::move(p));
    };
    switch (id) {
        case SchemeId::man:
        case SchemeId::baseline:
            for (int t = 0; t <= users; ++t) add(t);
            break;
        case SchemeId::new1:
            for (int t = 0; t <= active_users; ++t) add(t);
            break;
        case SchemeId::new2:
            if (active_users < files)
                throw std::invalid_argument("new2 requires Kp >= N");
            add(0);
            break;
        case SchemeId::remark2:
            for (int t = 1; t <= active_users - 1; ++t) add(t);
            break;
        case SchemeId::remark2_example:
            add(0);
            break;
    }
    long long r = id == SchemeId::man ? std::min(files, users)
                                      : std::min(files, active_users);
    points.push_back({Rational(0), Rational(r)});
    points.push_back({n, Rational(0)});
    std::sort(points.begin(), points.end(),
              [](const TradeoffPoint& a, const TradeoffPoint& b) {
                  return a.memory != b.memory ? a.memory < b.memory
                                              : a.load < b.load;
              });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::vector<TradeoffPoint> combined_achievable_points(int users, int active_users,
                                                      int files) {
    std::vector<TradeoffPoint> points =
        achievable_points(SchemeId::baseline, users, active_users, files);
    for (auto& p : achievable_points(SchemeId::new1, users, active_users, files))
        points.push_back(std::move(p));
    if (active_users >= files)
        for (auto& p : achievable_points(SchemeId::new2, users, active_users, files))
            points.push_back(std::move(p));
    std::sort(points.begin(), points.end(),
              [](const TradeoffPoint& a, const TradeoffPoint& b) {
                  return a.memory != b.memory ? a.memory < b.memory
                                              : a.load < b.load;
              });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

TradeoffCurve lower_convex_envelope(std::vector<TradeoffPoint> points) {
    if (points.empty())
        throw std::invalid_argument("envelope of an empty point set");
    std::sort(points.begin(), points.end(),
              [](const TradeoffPoint& a, const TradeoffPoint& b) {
                  return a.memory != b.memory ? a.memory < b.memory
                                              : a.load < b.load;
              });
    std::vector<TradeoffPoint> hull;
    for (const TradeoffPoint& p : points) {
        if (!hull.empty() && hull.back().memory == p.memory) continue;  // keep min R
        while (hull.size() >= 2) {
            const TradeoffPoint& u = hull[hull.size() - 2];
            const TradeoffPoint& v = hull.back();
            // drop v when slope(u,v) >= slope(v,p): v is on or above the chord
            if ((v.load - u.load) * (p.memory - v.memory) >=
                (p.load - v.load) * (v.memory - u.memory))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return TradeoffCurve(std::move(hull));
}

Rational decentralized_load(const Rational& memory, int files, int active_users) {
    check_memory_range(memory, Rational(files));
    const unsigned rp =
        static_cast<unsigned>(std::min(files, active_users));
    if (memory == 0) return Rational(rp);
    Rational mu = memory / files;
    Rational rest = 1 - mu;
    return (rest / mu) * (1 - rat_pow(rest, rp));
}

Rational cutset_bound(const Rational& memory, int files, int active_users) {
    check_memory_range(memory, Rational(files));
    const int rp = std::min(files, active_users);
    Rational best(0);
    for (int s = 1; s <= rp; ++s) {
        Rational v = Rational(s) - Rational(s, files / s) * memory;
        if (v > best) best = v;
    }
    return best;
}

Rational optimal_2x2(const Rational& memory) {
    check_memory_range(memory, Rational(2));
    return line_max({Rational(2) - 2 * memory, Rational(3, 2) - memory,
                     Rational(1) - memory / 2});
}

Rational optimal_2user(const Rational& memory, int files) {
    if (files < 3)
        throw std::invalid_argument("optimal_2user is stated for N >= 3");
    check_memory_range(memory, Rational(files));
    return line_max(
        {Rational(2) - Rational(3, files) * memory,
         Rational(1) - Rational(1, files) * memory});
}

YmaConverse::YmaConverse(int files, int active_users, int alpha_steps)
    : files_(files) {
    if (files < 1 || active_users < 1 || alpha_steps < 1)
        throw std::invalid_argument("need N >= 1, Kp >= 1, alpha_steps >= 1");
    const int rp = std::min(files, active_users);

    // Collect every (s, alpha) line, keeping the best intercept per slope.
    std::map<Rational, Rational> best;  // slope -> max intercept
    for (int s = 1; s <= rp; ++s) {
        for (int i = 0; i <= alpha_steps; ++i) {
            Rational alpha(i, alpha_steps);
            int l = s;
            for (int cand = 1; cand <= s; ++cand) {
                Rational lhs = Rational(static_cast<long long>(s) * (s - 1) -
                                            static_cast<long long>(cand) * (cand - 1),
                                        2) +
                               alpha * s;
                if (lhs <= Rational(static_cast<long long>(files - cand + 1) * cand)) {
                    l = cand;
                    break;
                }
            }
            Rational intercept = Rational(s - 1) + alpha;
            Rational slope = (Rational(static_cast<long long>(s) * (s - 1) -
                                       static_cast<long long>(l) * (l - 1)) +
                              2 * alpha * s) /
                             Rational(2LL * (files - l + 1));
            auto [it, inserted] = best.emplace(slope, intercept);
            if (!inserted && intercept > it->second) it->second = intercept;
        }
    }

    // Upper envelope of R = intercept - slope*M: iterate slopes descending so
    // each new line is flatter; drop lines that never lead on [0, inf).
    std::vector<Line> lines;
    for (auto it = best.rbegin(); it != best.rend(); ++it)
        lines.push_back({it->second, it->first});
    auto crossing = [](const Line& a, const Line& b) {
        // a.slope > b.slope: M where b overtakes a
        return (a.intercept - b.intercept) / (a.slope - b.slope);
    };
    for (const Line& line : lines) {
        while (!hull_.empty() && hull_.back().intercept <= line.intercept)
            hull_.pop_back();  // steeper with no larger intercept never leads
        while (hull_.size() >= 2 &&
               crossing(hull_[hull_.size() - 2], line) <=
                   crossing(hull_[hull_.size() - 2], hull_.back()))
            hull_.pop_back();
        hull_.push_back(line);
    }
    for (std::size_t i = 0; i + 1 < hull_.size(); ++i)
        boundary_.push_back(crossing(hull_[i], hull_[i + 1]));
}

Rational YmaConverse::eval(const Rational& memory) const {
    check_memory_range(memory, Rational(files_));
    std::size_t idx =
        static_cast<std::size_t>(std::upper_bound(boundary_.begin(), boundary_.end(),
                                                  memory) -
                                 boundary_.begin());
    const Line& line = hull_[idx];
    Rational v = line.intercept - line.slope * memory;
    return v < 0 ? Rational(0) : v;
}

Rational yma_converse(const Rational& memory, int files, int active_users,
                      int alpha_steps) {
    return YmaConverse(files, active_users, alpha_steps).eval(memory);
}

bool OptimalityReport::all_applicable_hold() const {
    for (const OptimalityItem& item : items)
        if (item.applicable && !item.holds) return false;
    return true;
}

OptimalityReport verify_optimality_cases(int users, int active_users, int files,
                                         int grid_steps, int alpha_steps) {
    if (users < 1 || active_users < 1 || active_users > users || files < 1)
        throw std::invalid_argument("require 1 <= Kp <= K and N >= 1");
    if (grid_steps < 2) throw std::invalid_argument("need at least two grid points");
    const int rp = std::min(files, active_users);
    const Rational n(files);
    TradeoffCurve envelope =
        lower_convex_envelope(combined_achievable_points(users, active_users, files));

    // Exact-equality scan of envelope vs converse over a closed interval:
    // uniform grid plus every envelope breakpoint inside it.
    auto coincide = [&](const Rational& lo, const Rational& hi,
                        const std::function<Rational(const Rational&)>& converse,
                        std::string& detail) {
        std::vector<Rational> ms;
        for (int i = 0; i < grid_steps; ++i)
            ms.push_back(lo + (hi - lo) * i / (grid_steps - 1));
        for (const TradeoffPoint& bp : envelope.breakpoints())
            if (bp.memory >= lo && bp.memory <= hi) ms.push_back(bp.memory);
        for (const Rational& m : ms) {
            Rational e = envelope.eval(m);
            Rational c = converse(m);
            if (e != c) {
                detail = "mismatch at M=" + to_fraction_string(m) + ": envelope " +
                         to_fraction_string(e) + ", converse " + to_fraction_string(c);
                return false;
            }
        }
        detail = "envelope equals the converse at " + std::to_string(ms.size()) +
                 " points";
        return true;
    };

    OptimalityReport report;
    report.items.resize(6);
    for (int i = 0; i < 6; ++i) report.items[i].item = i + 1;

    {  // item 1: r' = 1, whole curve is 1 - M/N, tight against cut-set s=1
        OptimalityItem& it = report.items[0];
        it.applicable = rp == 1;
        if (it.applicable)
            it.holds = coincide(Rational(0), n,
                                [&](const Rational& m) {
                                    Rational line = 1 - m / files;
                                    Rational cs = cutset_bound(m, files, active_users);
                                    return line == cs ? line : Rational(-1);
                                },
                                it.detail);
        else
            it.detail = "skipped (needs min(N, Kp) = 1)";
    }
    {  // item 2: Kp = N = 2 against max{2-2M, 3/2-M, 1-M/2}
        OptimalityItem& it = report.items[1];
        it.applicable = active_users == 2 && files == 2;
        if (it.applicable)
            it.holds = coincide(Rational(0), n,
                                [&](const Rational& m) { return optimal_2x2(m); },
                                it.detail);
        else
            it.detail = "skipped (needs Kp = N = 2)";
    }
    {  // item 3: Kp = 2, N >= 3 against max{2-3M/N, 1-M/N}
        OptimalityItem& it = report.items[2];
        it.applicable = active_users == 2 && files >= 3;
        if (it.applicable)
            it.holds = coincide(Rational(0), n,
                                [&](const Rational& m) { return optimal_2user(m, files); },
                                it.detail);
        else
            it.detail = "skipped (needs Kp = 2 and N >= 3)";
    }
    {  // item 4: the new2 corner sits on the s=N cut-set line R >= N(1-M)
        OptimalityItem& it = report.items[3];
        it.applicable = active_users >= files;
        if (it.applicable) {
            Rational m0(1, active_users);
            Rational target = n * (1 - m0);
            Rational e = envelope.eval(m0);
            Rational cs = cutset_bound(m0, files, active_users);
            it.holds = e == target && cs == target;
            it.detail = it.holds
                            ? "envelope(1/Kp) = cutset(1/Kp) = " +
                                  to_fraction_string(target)
                            : "envelope " + to_fraction_string(e) + ", cutset " +
                                  to_fraction_string(cs) + ", expected " +
                                  to_fraction_string(target);
        } else {
            it.detail = "skipped (needs Kp >= N)";
        }
    }
    {  // item 5: N >= Kp(Kp+1)/2, segment (0,Kp)-(N/Kp,(Kp-1)/2) on the Lemma-4 line
        OptimalityItem& it = report.items[4];
        it.applicable =
            2LL * files >= static_cast<long long>(active_users) * (active_users + 1);
        if (it.applicable) {
            YmaConverse yma(files, active_users, alpha_steps);
            Rational slope =
                Rational(static_cast<long long>(active_users) * (active_users + 1),
                         2LL * files);
            it.holds = coincide(Rational(0), Rational(files, active_users),
                                [&](const Rational& m) {
                                    Rational line = Rational(active_users) - slope * m;
                                    return yma.eval(m) == line ? line : Rational(-1);
                                },
                                it.detail);
        } else {
            it.detail = "skipped (needs N >= Kp(Kp+1)/2)";
        }
    }
    {  // item 6: for M >= N(1-1/K), the last segment is R = 1 - M/N, tight
        OptimalityItem& it = report.items[5];
        it.applicable = true;
        Rational lo = n * Rational(users - 1, users);
        it.holds = coincide(lo, n,
                            [&](const Rational& m) {
                                Rational line = 1 - m / files;
                                Rational cs = cutset_bound(m, files, active_users);
                                return line == cs ? line : Rational(-1);
                            },
                            it.detail);
    }
    return report;
}

GapCertificate gap_certificate(int users, int active_users, int files,
                               int grid_steps, int alpha_steps) {
    if (grid_steps < 2) throw std::invalid_argument("need at least two grid points");
    TradeoffCurve base = lower_convex_envelope(
        achievable_points(SchemeId::baseline, users, active_users, files));
    YmaConverse yma(files, active_users, alpha_steps);

    GapCertificate cert;
    cert.bound = Rational(200884, 100000);
    cert.ok = true;
    cert.chain_ok = true;
    for (int i = 0; i < grid_steps; ++i) {
        Rational m = Rational(files) * i / (grid_steps - 1);
        Rational achievable = base.eval(m);
        if (achievable > decentralized_load(m, files, active_users))
            cert.chain_ok = false;
        Rational converse = yma.eval(m);
        if (converse == 0) {
            if (achievable != 0) cert.ok = false;  // division guard
            continue;
        }
        Rational ratio = achievable / converse;
        if (ratio > cert.max_ratio) cert.max_ratio = ratio;
    }
    if (cert.max_ratio > cert.bound) cert.ok = false;
    return cert;
}

}  // namespace hotplug
