#include "bowforge/acceptance.hpp"

#include "bowforge/affine_weights.hpp"
#include "bowforge/bow_calculus.hpp"
#include "bowforge/errors.hpp"
#include "bowforge/fock_oracle.hpp"
#include "bowforge/maya.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace bowforge {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Check = std::function<Outcome(const AcceptanceOptions&)>;

struct Entry {
    const char* id;
    const char* title;
    double limit_seconds;
    Check run;
};

std::string show(const std::vector<Int>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

std::string show(const AffineWeight& w)
{
    return "n=" + std::to_string(w.n) + " l=" + std::to_string(w.level) + " " + show(w.profile)
           + " d=" + to_string(w.delta);
}

/* All dominant weights sum w_i Lambda_i with sum w_i = level. */
std::vector<AffineWeight> dominant_weights(int n, int level)
{
    std::vector<AffineWeight> out;
    std::vector<int> w(n, 0);
    std::function<void(int, int)> go = [&](int i, int left) {
        if (i == n - 1) {
            w[i] = left;
            AffineWeight lam = zero_weight(n, 0);
            for (int k = 0; k < n; ++k)
                if (w[k] > 0)
                    lam = lam + Int(w[k]) * fundamental_weight(n, k);
            out.push_back(lam);
            return;
        }
        for (int x = left; x >= 0; --x) {
            w[i] = x;
            go(i + 1, left - x);
        }
    };
    go(0, level);
    return out;
}

BowDiagram random_circle(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> small(1, 4);
    std::uniform_int_distribution<Int> dim(0, 6);
    int n = small(rng), l = small(rng);
    BowDiagram d;
    d.shape = Shape::Circle;
    for (int k = 0; k < n; ++k)
        d.nodes.push_back(BowNode{NodeKind::X, {}});
    for (int k = 0; k < l; ++k)
        d.nodes.push_back(BowNode{NodeKind::O, OParam{k + 1, 0}});
    std::shuffle(d.nodes.begin(), d.nodes.end(), rng);
    for (std::size_t k = 0; k < d.nodes.size(); ++k)
        d.dims.push_back(dim(rng));
    d.base = static_cast<int>(std::find_if(d.nodes.begin(), d.nodes.end(),
                                           [](const BowNode& b) { return b.kind == NodeKind::X; })
                              - d.nodes.begin());
    return d;
}

BowDiagram random_line(std::mt19937_64& rng)
{
    BowDiagram d = random_circle(rng);
    std::uniform_int_distribution<Int> dim(0, 6);
    d.shape = Shape::Line;
    d.base = 0;
    d.dims.assign(d.nodes.size() + 1, 0);
    for (std::size_t k = 1; k < d.nodes.size(); ++k)
        d.dims[k] = dim(rng);
    return d;
}

std::vector<int> legal_moves(const BowDiagram& d)
{
    std::vector<int> out;
    const int m = static_cast<int>(d.nodes.size());
    const int last = d.shape == Shape::Circle ? m : m - 1;
    for (int pos = 0; pos < last; ++pos) {
        int b = (pos + 1) % m;
        if (b == pos || d.nodes[pos].kind == d.nodes[b].kind)
            continue;
        if (hw_new_dimension(d, pos) >= 0)
            out.push_back(pos);
    }
    return out;
}

bool same_invariants(const InvariantRecord& a, const InvariantRecord& b)
{
    return a.n_pair_h == b.n_pair_h && a.n_pair_x == b.n_pair_x && a.quad_h == b.quad_h
           && a.quad_x == b.quad_x;
}

Outcome ac1(const AcceptanceOptions& o)
{
    Outcome out;
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> len(0, 20);
    int cases = 0, moves = 0;
    for (int t = 0; t < o.random_cases + o.random_cases / 2; ++t) {
        BowDiagram d = t < o.random_cases ? random_circle(rng) : random_line(rng);
        const InvariantRecord start = invariants(d);
        int steps = len(rng);
        for (int s = 0; s < steps; ++s) {
            auto legal = legal_moves(d);
            if (legal.empty())
                break;
            d = hw_transition(d, legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)]);
            ++moves;
            if (!same_invariants(start, invariants(d))) {
                out.pass = false;
                out.detail = "invariant changed in case " + std::to_string(t);
                return out;
            }
        }
        ++cases;
    }
    out.detail = std::to_string(cases) + " diagrams, " + std::to_string(moves) + " transitions";
    return out;
}

Outcome ac2(const AcceptanceOptions&)
{
    Outcome out;
    int cases = 0;
    std::size_t max_states = 0;
    for (int n = 1; n <= 3; ++n) {
        for (int l = 1; l <= 2; ++l) {
            for (int i = 0; i < n; ++i) {
                AffineWeight lambda = Int(l) * fundamental_weight(n, i);
                std::vector<Int> v(n, 0);
                for (;;) {
                    AffineWeight mu = lambda - root_combination(n, RootVector{v});
                    BowDiagram d = balanced_form(lambda, mu);
                    auto [lw, mw] = weights_of(d);
                    if (!(lw == lambda) || !(mw == mu)) {
                        out.pass = false;
                        out.detail = "round trip failed at lambda " + show(lambda) + " v " + show(v);
                        return out;
                    }
                    auto found = hw_reachable_balanced(d, 8);
                    max_states = std::max(max_states, found.states);
                    if (found.balanced.size() != 1) {
                        out.pass = false;
                        out.detail = std::to_string(found.balanced.size())
                                     + " balanced diagrams reachable at lambda " + show(lambda)
                                     + " v " + show(v);
                        return out;
                    }
                    ++cases;
                    int k = n - 1;
                    while (k >= 0 && v[k] == 3)
                        v[k--] = 0;
                    if (k < 0)
                        break;
                    ++v[k];
                }
            }
        }
    }
    out.detail = std::to_string(cases) + " cases, largest search " + std::to_string(max_states)
                 + " states";
    return out;
}

Outcome ac3(const AcceptanceOptions&)
{
    Outcome out;
    const std::vector<Int> lambda{1, 0, 0};
    std::set<std::pair<Int, Int>> got;
    for (Int v1 = 0; v1 <= 2; ++v1)
        for (Int v2 = 0; v2 <= 2; ++v2)
            if (t_fixed_point_exists_linear(lambda, {1 - v1, v1 - v2, v2}))
                got.insert({v1, v2});
    const std::set<std::pair<Int, Int>> expected{{0, 0}, {1, 0}, {1, 1}};
    out.pass = got == expected;
    out.detail = "fixed points at";
    for (auto [a, b] : got)
        out.detail += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out;
}

struct GridPoint {
    AffineWeight lambda;
    AffineWeight mu;
    Int mult;
};

std::vector<GridPoint> existence_grid(int depth)
{
    std::vector<GridPoint> out;
    for (int n : {2, 3}) {
        for (int l : {1, 2}) {
            for (const auto& lambda : dominant_weights(n, l)) {
                MultTable table(lambda, depth);
                for (const auto& c : cone_coefficients(n, depth))
                    out.push_back({lambda, lambda - root_combination(n, RootVector{c}),
                                   table.mult_at(c)});
            }
        }
    }
    return out;
}

Outcome ac4(const AcceptanceOptions& o)
{
    Outcome out;
    auto grid = existence_grid(o.depth);
    std::size_t weights = 0;
    for (const auto& g : grid) {
        bool exists = t_fixed_point_exists(g.lambda, g.mu);
        weights += g.mult > 0;
        if (exists != (g.mult > 0)) {
            out.pass = false;
            out.detail = "mismatch at lambda " + show(g.lambda) + " mu " + show(g.mu) + ": mult "
                         + std::to_string(g.mult);
            return out;
        }
    }
    out.detail = std::to_string(grid.size()) + " grid points, " + std::to_string(weights)
                 + " weights";
    return out;
}

Outcome ac5(const AcceptanceOptions& o)
{
    Outcome out;
    std::size_t checked = 0;
    for (int n : {2, 3}) {
        auto rep = serre_and_commutator_check(n, o.depth);
        checked += rep.checked;
        if (!rep.pass) {
            out.pass = false;
            out.detail = "n=" + std::to_string(n) + ": " + rep.failures.front();
            return out;
        }
    }
    out.detail = std::to_string(checked) + " relation instances";
    return out;
}

Outcome ac6(const AcceptanceOptions& o)
{
    Outcome out;
    std::ostringstream msg;
    for (Int v = 0; v <= 6; ++v) {
        AffineWeight lambda(1, 1, {0});
        AffineWeight mu(1, 1, {0}, Rational(-v));
        auto q = make_query(lambda, mu);
        Int count = static_cast<Int>(enumerate_fixed_points(q, q.v0).diagrams.size());
        msg << (v ? "," : "n=1 counts ") << count;
        if (count != partition_count(v))
            out.pass = false;
    }

    const AffineWeight top = fundamental_weight(2, 0);
    MultTable table(top, o.depth);
    auto passes = [&](ColumnConvention conv) {
        for (const auto& c : cone_coefficients(2, o.depth)) {
            AffineWeight mu = top - root_combination(2, RootVector{c});
            auto q = make_query(top, mu);
            auto res = enumerate_fixed_points(q, q.v0, conv);
            Int expected = 0;
            for (Int j = 0; j <= std::min(c[0], c[1]); ++j)
                expected += partition_count(j) * table.mult_at({c[0] - j, c[1] - j});
            if (static_cast<Int>(res.diagrams.size()) != expected)
                return false;
            for (const auto& m : res.diagrams) {
                auto s = maya_stats(m, conv);
                if (s.row_charge != q.row_targets || s.column_stat != q.column_targets
                    || s.v0 != q.v0)
                    return false;
            }
        }
        return true;
    };
    bool aggregate = passes(ColumnConvention::Aggregate);
    bool lift = passes(ColumnConvention::FundamentalLift);
    msg << "; n=2 convolution: aggregate " << (aggregate ? "pass" : "fail") << ", lift "
        << (lift ? "pass" : "fail");
    out.pass = out.pass && aggregate;
    out.detail = msg.str();
    return out;
}

Outcome ac7(const AcceptanceOptions& o)
{
    Outcome out;
    std::ostringstream msg;
    for (int n : {2, 3}) {
        auto rep = crystal_completeness_check(n, o.depth);
        msg << (n == 2 ? "" : ", ") << "n=" << n << ": " << rep.elements << " elements";
        if (!rep.pass) {
            out.pass = false;
            for (const auto& row : rep.rows)
                if (row.crystal != row.mult) {
                    msg << " mismatch at " << show(row.mu) << " crystal " << row.crystal
                        << " mult " << row.mult;
                    break;
                }
            if (!rep.inverse_ok)
                msg << " (e~ and f~ are not mutually inverse)";
        }
    }
    out.detail = msg.str();
    return out;
}

Outcome ac8(const AcceptanceOptions& o)
{
    Outcome out;
    std::size_t checked = 0;
    for (const auto& g : existence_grid(o.depth)) {
        if (!t_fixed_point_exists(g.lambda, g.mu))
            continue;
        const int n = g.mu.n;
        for (int i = 0; i < n; ++i) {
            auto data = sl2_restriction(g.lambda, g.mu, i, 2 * o.depth + 2);
            const auto& p = g.mu.profile;
            Int formula = i == 0 ? g.mu.level + p[n - 1] - p[0] : p[i - 1] - p[i];
            bool ok = data.mu_prime == formula && data.lambda_prime >= std::abs(data.mu_prime)
                      && (data.lambda_prime - data.mu_prime) % 2 == 0 && !data.strata.empty();
            for (const auto& s : data.strata)
                ok = ok && s.w - 2 * s.v == formula && s.tau1 - s.tau2 == s.w;
            ++checked;
            if (!ok) {
                out.pass = false;
                out.detail = "failed at mu " + show(g.mu) + " i=" + std::to_string(i);
                return out;
            }
        }
    }
    out.detail = std::to_string(checked) + " restrictions";
    return out;
}

Outcome ac9(const AcceptanceOptions&)
{
    Outcome out;
    std::ostringstream msg;
    for (int n : {2, 3}) {
        auto from_vacuum = divided_power_check(n, 0);
        auto extremal = divided_power_check(n, 3);
        msg << (n == 2 ? "" : ", ") << "n=" << n << ": " << from_vacuum.checked << "+"
            << extremal.checked << " string steps";
        if (!from_vacuum.pass || !extremal.pass) {
            out.pass = false;
            msg << " "
                << (from_vacuum.pass ? extremal.failures.front() : from_vacuum.failures.front());
        }
    }
    out.detail = msg.str();
    return out;
}

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table{
        {"AC-1", "transition invariants", 5, ac1},
        {"AC-2", "balanced round trip and uniqueness", 30, ac2},
        {"AC-3", "A2 fixed points of Lambda_1", 1, ac3},
        {"AC-4", "existence matches multiplicity", 10, ac4},
        {"AC-5", "Fock relations", 10, ac5},
        {"AC-6", "Maya enumeration against the character", 30, ac6},
        {"AC-7", "crystal of the vacuum", 10, ac7},
        {"AC-8", "sl(2) restriction data", 10, ac8},
        {"AC-9", "divided powers along strings", 10, ac9},
    };
    return table;
}

} // namespace

std::vector<std::string> acceptance_ids()
{
    std::vector<std::string> ids;
    for (const auto& e : entries())
        ids.push_back(e.id);
    return ids;
}

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& opts)
{
    for (const auto& id : opts.ids) {
        auto ids = acceptance_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw DomainError("unknown_check", "no acceptance check named " + id);
    }
    std::vector<AcceptanceResult> out;
    for (const auto& e : entries()) {
        if (!opts.ids.empty() && std::find(opts.ids.begin(), opts.ids.end(), e.id) == opts.ids.end())
            continue;
        AcceptanceResult r;
        r.id = e.id;
        r.title = e.title;
        r.limit_seconds = e.limit_seconds;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = e.run(opts);
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > r.limit_seconds) {
            r.pass = false;
            r.detail += "; over the time limit";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const AcceptanceResult& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs of %.0fs) ", r.seconds, r.limit_seconds);
    return r.id + (r.pass ? " PASS" : " FAIL") + buf + r.title + ": " + r.detail;
}

} // namespace bowforge
