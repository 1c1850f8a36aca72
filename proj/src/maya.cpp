#include "bowforge/maya.hpp"

#include "bowforge/errors.hpp"
#include "bowforge/fock_oracle.hpp"
#include "bowforge/young_diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

namespace bowforge {

namespace {

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int column_of(int l, Int p) { return static_cast<int>(p - l * floor_div(p - 1, l)); }

} // namespace

MayaDiagram::MayaDiagram(int n_, int l_, std::vector<std::vector<Int>> rows_)
    : n(n_), l(l_), rows(std::move(rows_))
{
    if (n < 1 || l < 1)
        throw DomainError("invalid_diagram", "Maya diagrams need n >= 1 and l >= 1");
    if (rows.size() != static_cast<std::size_t>(n))
        throw DomainError("invalid_diagram", "expected one row per rank");
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            throw DomainError("invalid_diagram", "repeated position in a row");
    }
}

bool MayaDiagram::gray(int row, Int p) const
{
    const auto& r = rows.at(row);
    bool flipped = std::binary_search(r.begin(), r.end(), p);
    return (p <= 0) != flipped;
}

MayaDiagram maya_vacuum(int n, int l)
{
    return MayaDiagram(n, l, std::vector<std::vector<Int>>(n));
}

Int maya_cell_energy(int l, Int p)
{
    if (p <= 0)
        return 1 + floor_div(-p, l);
    return floor_div(p - 1, l);
}

MayaStats maya_stats(const MayaDiagram& m, ColumnConvention conv)
{
    MayaStats s;
    s.row_charge.assign(m.n, 0);
    s.column_stat.assign(m.l, 0);
    for (int r = 0; r < m.n; ++r) {
        for (Int p : m.rows[r]) {
            Int sign = p >= 1 ? 1 : -1;
            s.row_charge[r] += sign;
            bool counted = conv == ColumnConvention::Aggregate || (p >= 1 - m.l && p <= m.l);
            if (counted)
                s.column_stat[column_of(m.l, p) - 1] += sign;
            s.v0 += maya_cell_energy(m.l, p);
        }
    }
    return s;
}

FixedPointQuery make_query(const AffineWeight& lambda, const AffineWeight& mu)
{
    if (lambda.level < 1 || !in_fundamental_alcove(lambda))
        throw DomainError("not_dominant", "lambda must lie in the fundamental alcove");
    if (lambda.n != mu.n || lambda.level != mu.level)
        throw DomainError("level_mismatch", "lambda and mu must share rank and level");

    FixedPointQuery q;
    q.lambda = lambda;
    q.mu = mu;
    const int n = lambda.n;
    RootVector v;
    try {
        v = root_difference(lambda, mu);
    } catch (const DomainError& e) {
        if (e.kind() != "non_integral")
            throw;
        q.empty = true;
        return q;
    }
    if (!v.nonnegative()) {
        q.empty = true;
        return q;
    }
    std::vector<Int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = coroot_pairing(lambda, i);
    auto [lam, mun] = weight_pair_from_dims(n, lambda.level, w, v.c);
    q.row_targets.assign(n, 0);
    q.row_targets[0] = mun.profile[n - 1];
    for (int r = 1; r < n; ++r)
        q.row_targets[r] = mun.profile[r - 1];
    q.column_targets = gyd_transpose(GYDiagram(n, lambda.level, lam.profile)).entries;
    q.v0 = v.c[0];
    return q;
}

namespace {

struct RowCandidate {
    std::vector<Int> cells;
    Int energy = 0;
    std::vector<Int> columns;
};

std::vector<RowCandidate> rows_with_charge(int l, Int charge, Int budget, ColumnConvention conv)
{
    std::vector<RowCandidate> out;
    const Int lo = 1 - l * budget;
    const Int hi = l * (budget + 1);

    std::vector<Int> whites;
    std::vector<Int> grays;
    std::function<void(Int, Int, Int)> choose_grays = [&](Int next, Int need, Int left) {
        if (need == 0) {
            RowCandidate c;
            c.cells = whites;
            c.cells.insert(c.cells.end(), grays.begin(), grays.end());
            std::sort(c.cells.begin(), c.cells.end());
            c.energy = budget - left;
            MayaDiagram one(1, l, {c.cells});
            c.columns = maya_stats(one, conv).column_stat;
            out.push_back(std::move(c));
            return;
        }
        for (Int p = next; p <= hi; ++p) {
            Int e = maya_cell_energy(l, p);
            if (e > left)
                break;
            grays.push_back(p);
            choose_grays(p + 1, need - 1, left - e);
            grays.pop_back();
        }
    };
    std::function<void(Int, Int)> choose_whites = [&](Int next, Int left) {
        Int need = charge + static_cast<Int>(whites.size());
        if (need >= 0)
            choose_grays(1, need, left);
        // whites are added from 0 downwards; energy grows as p decreases
        for (Int p = next; p >= lo; --p) {
            Int e = maya_cell_energy(l, p);
            if (e > left)
                break;
            whites.push_back(p);
            choose_whites(p - 1, left - e);
            whites.pop_back();
        }
    };
    choose_whites(0, budget);
    return out;
}

} // namespace

EnumerationResult enumerate_fixed_points(const FixedPointQuery& q, Int energy_bound,
                                         ColumnConvention conv)
{
    EnumerationResult res;
    if (q.empty)
        return res;
    if (energy_bound < q.v0)
        throw DomainError("energy_bound", "energy bound is below the v0 target");
    const int n = q.lambda.n;
    const int l = q.lambda.level;
    Int rs = 0, cs = 0;
    for (Int c : q.row_targets)
        rs += c;
    for (Int c : q.column_targets)
        cs += c;
    if (rs != cs || static_cast<int>(q.row_targets.size()) != n
        || static_cast<int>(q.column_targets.size()) != l)
        throw DomainError("inconsistent_targets", "row and column targets do not match");

    const Int V = q.v0;
    res.window_lo = 1 - l * V;
    res.window_hi = l * (V + 1);

    std::vector<std::vector<RowCandidate>> cand(n);
    for (int r = 0; r < n; ++r)
        cand[r] = rows_with_charge(l, q.row_targets[r], V, conv);

    std::vector<const RowCandidate*> chosen(n, nullptr);
    std::vector<Int> cols(l, 0);
    std::function<void(int, Int)> go = [&](int r, Int left) {
        if (r == n) {
            if (left != 0 || cols != q.column_targets)
                return;
            std::vector<std::vector<Int>> rows;
            for (auto* c : chosen)
                rows.push_back(c->cells);
            res.diagrams.emplace_back(n, l, std::move(rows));
            return;
        }
        for (const auto& c : cand[r]) {
            if (c.energy > left)
                continue;
            chosen[r] = &c;
            for (int x = 0; x < l; ++x)
                cols[x] += c.columns[x];
            go(r + 1, left - c.energy);
            for (int x = 0; x < l; ++x)
                cols[x] -= c.columns[x];
        }
    };
    go(0, V);

    std::sort(res.diagrams.begin(), res.diagrams.end());
    for (const auto& m : res.diagrams)
        for (const auto& r : m.rows)
            for (Int p : r)
                if (p == res.window_lo || p == res.window_hi)
                    res.touches_bound = true;
    return res;
}

bool t_fixed_point_exists(const AffineWeight& lambda, const AffineWeight& mu)
{
    if (lambda.level < 1 || !in_fundamental_alcove(lambda))
        throw DomainError("not_dominant", "lambda must lie in the fundamental alcove");
    if (lambda.n != mu.n || lambda.level != mu.level)
        throw DomainError("level_mismatch", "lambda and mu must share rank and level");
    try {
        return dominance_leq(to_dominant(mu), lambda).holds;
    } catch (const DomainError& e) {
        if (e.kind() == "non_integral")
            return false;
        throw;
    }
}

bool t_fixed_point_exists_linear(const std::vector<Int>& lambda, const std::vector<Int>& mu)
{
    if (finite_dominant(lambda) != lambda)
        throw DomainError("not_dominant", "lambda must be weakly decreasing");
    auto c = finite_root_difference(lambda, finite_dominant(mu));
    return c && std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
}

std::vector<DeformedFixedPoint> deformed_fixed_points(const AffineWeight& lambda1,
                                                      const AffineWeight& lambda2,
                                                      const AffineWeight& mu)
{
    AffineWeight lambda = lambda1 + lambda2;
    if (lambda.n != mu.n || lambda.level != mu.level)
        throw DomainError("level_mismatch", "levels of the factors must add up to level(mu)");
    std::vector<DeformedFixedPoint> out;
    RootVector v;
    try {
        v = root_difference(lambda, mu);
    } catch (const DomainError& e) {
        if (e.kind() != "non_integral")
            throw;
        return out;
    }
    if (!v.nonnegative())
        return out;

    const int n = mu.n;
    RootVector v1{std::vector<Int>(n, 0)};
    for (;;) {
        RootVector v2{std::vector<Int>(n)};
        for (int i = 0; i < n; ++i)
            v2.c[i] = v.c[i] - v1.c[i];
        AffineWeight mu1 = lambda1 - root_combination(n, v1);
        AffineWeight mu2 = lambda2 - root_combination(n, v2);
        if (t_fixed_point_exists(lambda1, mu1) && t_fixed_point_exists(lambda2, mu2))
            out.push_back({mu1, mu2, v1, v2});
        int k = n - 1;
        while (k >= 0 && v1.c[k] == v.c[k]) {
            v1.c[k] = 0;
            --k;
        }
        if (k < 0)
            break;
        ++v1.c[k];
    }
    return out;
}

Sl2RestrictionData sl2_restriction(const AffineWeight& lambda, const AffineWeight& mu, int i,
                                   int depth)
{
    Sl2RestrictionData out;
    out.mu_prime = coroot_pairing(mu, i);
    out.lambda_prime = string_top(lambda, mu, i, depth);

    const int n = mu.n;
    for (Int w = out.lambda_prime; w >= std::abs(out.mu_prime); w -= 2) {
        Sl2Stratum s;
        s.w = w;
        s.v = (w - out.mu_prime) / 2;
        if (i == 0) {
            s.tau1 = mu.profile[n - 1] + mu.level + s.v;
            s.tau2 = mu.profile[0] - s.v;
        } else {
            s.tau1 = mu.profile[i - 1] + s.v;
            s.tau2 = mu.profile[i] - s.v;
        }
        out.strata.push_back(s);
    }
    return out;
}

AInfinityWeight unwind_to_a_infinity(int n, const std::map<std::pair<Int, int>, Int>& table)
{
    if (n < 1)
        throw DomainError("invalid_weight", "rank must be at least 1");
    AInfinityWeight out;
    for (const auto& [key, value] : table) {
        auto [m, i] = key;
        if (i < 0 || i >= n)
            throw DomainError("index_out_of_range", "residue outside 0..n-1");
        if (value < 0)
            throw DomainError("negative_entry", "unwound dimensions must be nonnegative");
        if (value != 0)
            out.root_coeffs[m * n + i] += value;
    }
    return out;
}

Int attracting_dim_a1(Int w, Int v)
{
    if (w < 0 || v < 0)
        throw DomainError("negative_entry", "dimensions must be nonnegative");
    if (v > w)
        throw DomainError("no_fixed_point", "v > w: the variety has no fixed point");
    return v;
}

Int module_dim_a1(Int w)
{
    if (w < 0)
        throw DomainError("negative_entry", "w must be nonnegative");
    return w + 1;
}

} // namespace bowforge
