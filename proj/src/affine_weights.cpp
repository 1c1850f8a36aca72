#include "bowforge/affine_weights.hpp"

#include "bowforge/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace bowforge {

AffineWeight::AffineWeight(int n_, int level_, std::vector<Int> profile_, Rational delta_)
    : n(n_), level(level_), profile(std::move(profile_)), delta(delta_)
{
    if (n < 1)
        throw DomainError("invalid_weight", "rank must be at least 1");
    if (level < 0)
        throw DomainError("invalid_weight", "level must be nonnegative");
    if (profile.size() != static_cast<std::size_t>(n))
        throw DomainError("invalid_weight", "profile length " + std::to_string(profile.size())
                                                + " does not match rank " + std::to_string(n));
}

Int AffineWeight::charge() const
{
    return std::accumulate(profile.begin(), profile.end(), Int(0));
}

namespace {

void require_same_rank(const AffineWeight& a, const AffineWeight& b)
{
    if (a.n != b.n)
        throw DomainError("rank_mismatch", "weights of rank " + std::to_string(a.n) + " and "
                                               + std::to_string(b.n));
}

void require_same_level(const AffineWeight& a, const AffineWeight& b)
{
    require_same_rank(a, b);
    if (a.level != b.level)
        throw DomainError("level_mismatch", "weights of level " + std::to_string(a.level)
                                                + " and " + std::to_string(b.level));
}

void require_index(int n, int i)
{
    if (i < 0 || i >= n)
        throw DomainError("index_out_of_range",
                          "index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
}

} // namespace

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b)
{
    require_same_rank(a, b);
    std::vector<Int> p(a.profile);
    for (int k = 0; k < a.n; ++k)
        p[k] += b.profile[k];
    return AffineWeight(a.n, a.level + b.level, std::move(p), a.delta + b.delta);
}

AffineWeight operator-(const AffineWeight& a, const AffineWeight& b)
{
    require_same_rank(a, b);
    if (a.level < b.level)
        throw DomainError("level_mismatch", "difference would have negative level");
    std::vector<Int> p(a.profile);
    for (int k = 0; k < a.n; ++k)
        p[k] -= b.profile[k];
    return AffineWeight(a.n, a.level - b.level, std::move(p), a.delta - b.delta);
}

AffineWeight operator*(Int k, const AffineWeight& a)
{
    if (k < 0)
        throw DomainError("level_mismatch", "negative multiple of a weight");
    std::vector<Int> p(a.profile);
    for (auto& x : p)
        x *= k;
    return AffineWeight(a.n, static_cast<int>(k * a.level), std::move(p), a.delta * k);
}

AffineWeight fundamental_weight(int n, int i)
{
    require_index(n, i);
    std::vector<Int> p(n, 0);
    for (int k = 0; k < i; ++k)
        p[k] = 1;
    return AffineWeight(n, 1, std::move(p));
}

AffineWeight simple_root(int n, int i)
{
    require_index(n, i);
    std::vector<Int> p(n, 0);
    if (i == 0) {
        p[0] -= 1;
        p[n - 1] += 1;
        return AffineWeight(n, 0, std::move(p), Rational(1));
    }
    p[i - 1] = 1;
    p[i] = -1;
    return AffineWeight(n, 0, std::move(p));
}

AffineWeight null_root(int n)
{
    return AffineWeight(n, 0, std::vector<Int>(n, 0), Rational(1));
}

AffineWeight zero_weight(int n, int level)
{
    return AffineWeight(n, level, std::vector<Int>(n, 0));
}

AffineWeight sl_canonical(const AffineWeight& mu)
{
    AffineWeight out = mu;
    Int shift = mu.profile.back();
    for (auto& x : out.profile)
        x -= shift;
    return out;
}

bool sl_equivalent(const AffineWeight& a, const AffineWeight& b)
{
    return sl_canonical(a) == sl_canonical(b);
}

bool RootVector::nonnegative() const
{
    return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
}

Int RootVector::height() const
{
    return std::accumulate(c.begin(), c.end(), Int(0));
}

AffineWeight root_combination(int n, const RootVector& v)
{
    if (v.c.size() != static_cast<std::size_t>(n))
        throw DomainError("length_mismatch", "root vector length does not match rank");
    std::vector<Int> p(n, 0);
    for (int i = 1; i < n; ++i) {
        p[i - 1] += v.c[i];
        p[i] -= v.c[i];
    }
    p[0] -= v.c[0];
    p[n - 1] += v.c[0];
    return AffineWeight(n, 0, std::move(p), Rational(v.c[0]));
}

std::pair<AffineWeight, AffineWeight>
weight_pair_from_dims(int n, int level, const std::vector<Int>& w, const std::vector<Int>& v)
{
    if (n < 1)
        throw DomainError("invalid_weight", "rank must be at least 1");
    if (w.size() != static_cast<std::size_t>(n) || v.size() != static_cast<std::size_t>(n))
        throw DomainError("length_mismatch", "w and v must both have length n");
    for (int i = 0; i < n; ++i)
        if (w[i] < 0 || v[i] < 0)
            throw DomainError("negative_entry", "dimension vectors must be nonnegative");
    if (std::accumulate(w.begin(), w.end(), Int(0)) != level)
        throw DomainError("level_mismatch", "level must equal the sum of w");

    std::vector<Int> lam(n, 0);
    for (int i = n - 2; i >= 0; --i)
        lam[i] = lam[i + 1] + w[i + 1];

    // u = w - C v with the affine Cartan matrix, indices mod n
    std::vector<Int> u(n);
    for (int i = 0; i < n; ++i) {
        if (n == 1)
            u[i] = w[i];
        else
            u[i] = w[i] + v[(i + n - 1) % n] + v[(i + 1) % n] - 2 * v[i];
    }
    std::vector<Int> mu(n, 0);
    Int tail = 0;
    for (int i = n; i >= 1; --i) {
        if (i <= n - 1)
            tail += u[i];
        mu[i - 1] = v[n - 1] - v[0] + tail;
    }
    return {AffineWeight(n, level, std::move(lam)), AffineWeight(n, level, std::move(mu), Rational(-v[0]))};
}

Int coroot_pairing(const AffineWeight& mu, int i)
{
    require_index(mu.n, i);
    if (i == 0)
        return mu.level + mu.profile[mu.n - 1] - mu.profile[0];
    return mu.profile[i - 1] - mu.profile[i];
}

AffineWeight reflect(const AffineWeight& mu, int i)
{
    require_index(mu.n, i);
    AffineWeight out = mu;
    Int k = coroot_pairing(mu, i);
    if (i == 0) {
        if (mu.n > 1) {
            out.profile[0] += k;
            out.profile[mu.n - 1] -= k;
        }
        out.delta -= k;
    } else {
        std::swap(out.profile[i - 1], out.profile[i]);
    }
    return out;
}

bool in_fundamental_alcove(const AffineWeight& mu)
{
    for (int i = 0; i < mu.n; ++i)
        if (coroot_pairing(mu, i) < 0)
            return false;
    return true;
}

AffineWeight to_dominant(const AffineWeight& mu)
{
    bool constant = std::all_of(mu.profile.begin(), mu.profile.end(),
                                [&](Int x) { return x == mu.profile.front(); });
    if (mu.level == 0) {
        if (!constant)
            throw DomainError("level_zero", "level-0 weight with nonconstant profile has no alcove representative");
        return mu;
    }
    if (mu.n == 1)
        return mu;

    AffineWeight cur = mu;
    auto by_desc = std::greater<Int>();
    for (;;) {
        // finite Weyl group: sort by adjacent swaps, which leave delta unchanged
        std::sort(cur.profile.begin(), cur.profile.end(), by_desc);
        if (coroot_pairing(cur, 0) >= 0)
            return cur;
        cur = reflect(cur, 0);
    }
}

RootVector root_difference(const AffineWeight& lambda, const AffineWeight& mu)
{
    require_same_level(lambda, mu);
    const int n = lambda.n;
    std::vector<Int> d(n);
    Int sum = 0;
    for (int k = 0; k < n; ++k) {
        d[k] = lambda.profile[k] - mu.profile[k];
        sum += d[k];
    }
    if (sum % n != 0)
        throw DomainError("non_integral", "profiles differ by a non-root-lattice vector");
    Int shift = sum / n;
    for (auto& x : d)
        x -= shift;

    Rational dd = lambda.delta - mu.delta;
    if (!is_integer(dd))
        throw DomainError("non_integral", "delta coefficients differ by " + to_string(dd));

    RootVector r;
    r.c.assign(n, 0);
    r.c[0] = dd.numerator();
    for (int k = 1; k < n; ++k)
        r.c[k] = r.c[k - 1] + d[k - 1];
    return r;
}

DominanceResult dominance_leq(const AffineWeight& mu, const AffineWeight& lambda)
{
    DominanceResult res;
    res.witness = root_difference(lambda, mu);
    res.holds = res.witness.nonnegative();
    return res;
}

bool generic_cocharacter(const std::vector<Rational>& m)
{
    const std::size_t n = m.size();
    Rational total(0);
    for (const auto& x : m)
        total += x;
    if (total == Rational(0))
        return false;
    for (std::size_t j = 0; j < n; ++j) {
        Rational partial(0);
        for (std::size_t i = j + 1; i <= n; ++i) {
            partial += m[i - 1];
            if (j == 0 && i == n)
                break;
            if (is_integer(partial / total))
                return false;
        }
    }
    return true;
}

std::vector<Int> finite_dominant(std::vector<Int> profile)
{
    std::sort(profile.begin(), profile.end(), std::greater<Int>());
    return profile;
}

std::optional<std::vector<Int>> finite_root_difference(const std::vector<Int>& lambda,
                                                       const std::vector<Int>& mu)
{
    if (lambda.size() != mu.size())
        throw DomainError("rank_mismatch", "profiles of different length");
    std::vector<Int> c;
    Int running = 0;
    for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
        running += lambda[k] - mu[k];
        c.push_back(running);
    }
    running += lambda.back() - mu.back();
    if (running != 0)
        return std::nullopt;
    return c;
}

} // namespace bowforge
