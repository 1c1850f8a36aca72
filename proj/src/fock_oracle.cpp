#include "bowforge/fock_oracle.hpp"

#include "bowforge/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace bowforge {

namespace {

Int floor_mod(Int a, Int b)
{
    Int r = a % b;
    return r < 0 ? r + b : r;
}

Int floor_div(Int a, Int b)
{
    return (a - floor_mod(a, b)) / b;
}

std::string join(const std::vector<Int>& v)
{
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(v[k]);
    }
    return s + "]";
}

} // namespace

std::vector<std::vector<Int>> partitions(Int k)
{
    std::vector<std::vector<Int>> out;
    if (k < 0)
        return out;
    std::vector<Int> cur;
    std::function<void(Int, Int)> go = [&](Int left, Int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (Int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            go(left - p, p);
            cur.pop_back();
        }
    };
    go(k, k);
    return out;
}

Int partition_count(Int k)
{
    if (k < 0)
        return 0;
    std::vector<Int> p(k + 1, 0);
    p[0] = 1;
    for (Int part = 1; part <= k; ++part)
        for (Int s = part; s <= k; ++s)
            p[s] += p[s - part];
    return p[k];
}

Int cartan_entry(int n, int i, int j)
{
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw DomainError("index_out_of_range", "Cartan index outside 0..n-1");
    if (n < 2)
        throw DomainError("unsupported_rank", "the affine Cartan matrix needs n >= 2");
    if (i == j)
        return 2;
    if (n == 2)
        return -2;
    if (floor_mod(i - j, n) == 1 || floor_mod(j - i, n) == 1)
        return -1;
    return 0;
}

MultTable::MultTable(AffineWeight lambda, Int depth) : lambda_(std::move(lambda)), depth_(depth)
{
    if (lambda_.n < 2)
        throw DomainError("unsupported_rank", "multiplicities need n >= 2");
    if (!in_fundamental_alcove(lambda_))
        throw DomainError("not_dominant", "the highest weight must lie in the fundamental alcove");
    if (depth_ < 0)
        throw DomainError("invalid_depth", "depth must be nonnegative");
    lambda_pairing_.resize(lambda_.n);
    for (int i = 0; i < lambda_.n; ++i)
        lambda_pairing_[i] = coroot_pairing(lambda_, i);
}

Int MultTable::pair_lambda(const std::vector<Int>& a) const
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * lambda_pairing_[i];
    return s;
}

Int MultTable::form(const std::vector<Int>& a, const std::vector<Int>& b) const
{
    const int n = lambda_.n;
    Int s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s += a[i] * cartan_entry(n, i, j) * b[j];
    return s;
}

const std::vector<MultTable::Root>& MultTable::roots_up_to(Int m)
{
    const int n = lambda_.n;
    while (roots_m_ < m) {
        Int k = ++roots_m_;
        for (int a = 1; a < n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                std::vector<Int> pos(n, k), neg(n, k);
                for (int t = a; t < b; ++t) {
                    pos[t] += 1;
                    neg[t] -= 1;
                }
                roots_.push_back({pos, 1, 2});
                if (k >= 1)
                    roots_.push_back({neg, 1, 2});
            }
        }
        if (k >= 1)
            roots_.push_back({std::vector<Int>(n, k), n - 1, 0});
    }
    return roots_;
}

Int MultTable::mult(const AffineWeight& mu)
{
    RootVector v;
    try {
        v = root_difference(lambda_, mu);
    } catch (const DomainError& e) {
        if (e.kind() != "non_integral")
            throw;
        return 0;
    }
    return mult_at(v.c);
}

Int MultTable::mult_at(const std::vector<Int>& c)
{
    if (c.size() != static_cast<std::size_t>(lambda_.n))
        throw DomainError("length_mismatch", "coefficient vector length does not match rank");
    if (std::any_of(c.begin(), c.end(), [](Int x) { return x < 0; }))
        return 0;
    Int h = std::accumulate(c.begin(), c.end(), Int(0));
    if (h > depth_)
        throw DomainError("depth_exceeded", "weight of height " + std::to_string(h)
                                                + " lies beyond depth " + std::to_string(depth_));
    return compute(c);
}

Int MultTable::compute(const std::vector<Int>& c)
{
    if (std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }))
        return 1;
    if (auto it = memo_.find(c); it != memo_.end())
        return it->second;

    const int n = lambda_.n;
    // |lambda+rho|^2 - |mu+rho|^2 with mu = lambda - beta
    Int lhs = 0;
    for (int i = 0; i < n; ++i)
        lhs += 2 * c[i] * (lambda_pairing_[i] + 1);
    lhs -= form(c, c);

    Int result = 0;
    if (lhs > 0) {
        Int rhs = 0;
        std::vector<Int> shifted(n);
        for (const Root& r : roots_up_to(c[0])) {
            if (r.a[0] > c[0])
                continue;
            Int base = pair_lambda(r.a) - form(c, r.a);
            for (Int j = 1;; ++j) {
                bool inside = true;
                for (int i = 0; i < n; ++i) {
                    shifted[i] = c[i] - j * r.a[i];
                    if (shifted[i] < 0)
                        inside = false;
                }
                if (!inside)
                    break;
                Int m = compute(shifted);
                if (m != 0)
                    rhs += r.multiplicity * (base + j * r.norm) * m;
            }
        }
        rhs *= 2;
        if (rhs % lhs != 0)
            throw DomainError("internal", "Freudenthal recursion produced a fraction at "
                                              + join(c));
        result = rhs / lhs;
    }
    memo_[c] = result;
    return result;
}

Int freudenthal_mult(const AffineWeight& lambda, const AffineWeight& mu, Int depth)
{
    MultTable t(lambda, depth);
    return t.mult(mu);
}

Int string_top(const AffineWeight& lambda, const AffineWeight& mu, int i, Int depth)
{
    Int mu_prime = coroot_pairing(mu, i);
    RootVector v;
    try {
        v = root_difference(lambda, mu);
    } catch (const DomainError& e) {
        if (e.kind() != "non_integral")
            throw;
        throw DomainError("no_fixed_point", "mu is not a weight of V(lambda)");
    }
    if (!v.nonnegative())
        throw DomainError("no_fixed_point", "mu is not a weight of V(lambda)");
    MultTable t(lambda, v.height());
    if (t.mult_at(v.c) == 0)
        throw DomainError("no_fixed_point", "mu is not a weight of V(lambda)");

    Int k = 0;
    std::vector<Int> c = v.c;
    while (c[i] > 0) {
        --c[i];
        if (t.mult_at(c) == 0)
            break;
        if (k >= depth)
            throw DomainError("depth_exhausted", "string still alive at k = " + std::to_string(k)
                                                     + "; lambda' >= "
                                                     + std::to_string(mu_prime + 2 * k));
        ++k;
    }
    return mu_prime + 2 * k;
}

bool FockState::occupied(Int j) const
{
    bool flipped = std::binary_search(flips.begin(), flips.end(), j);
    return (j <= 0) != flipped;
}

FockState fock_state(std::vector<Int> flips)
{
    std::sort(flips.begin(), flips.end());
    if (std::adjacent_find(flips.begin(), flips.end()) != flips.end())
        throw DomainError("invalid_state", "repeated position in a Fock state");
    return FockState{std::move(flips)};
}

FockState fock_vacuum() { return FockState{}; }

FockState fock_charged_vacuum(Int charge)
{
    return fock_from_partition(charge, {});
}

FockState fock_from_partition(Int charge, const std::vector<Int>& part)
{
    std::set<Int> occ;
    const Int len = static_cast<Int>(part.size());
    const Int count = len + std::abs(charge) + 2;
    for (Int k = 1; k <= count; ++k) {
        Int pk = k <= len ? part[k - 1] : 0;
        occ.insert(charge + pk - k + 1);
    }
    const Int floor_occ = charge - count; // everything at or below is occupied
    const Int hi = *occ.rbegin();
    std::vector<Int> flips;
    for (Int j = std::min<Int>(floor_occ, 0) + 1; j <= std::max<Int>(hi, 0); ++j) {
        bool o = j <= floor_occ || occ.count(j);
        if (o != (j <= 0))
            flips.push_back(j);
    }
    return FockState{std::move(flips)};
}

AffineWeight fock_weight(int n, const FockState& s)
{
    if (n < 1)
        throw DomainError("invalid_weight", "rank must be at least 1");
    std::vector<Int> profile(n, 0);
    Int energy = 0;
    for (Int j : s.flips) {
        Int a = floor_mod(j - 1, n);
        Int p = floor_div(j - 1, n) + 1;
        if (j >= 1) {
            profile[a] += 1;
            energy += p - 1;
        } else {
            profile[a] -= 1;
            energy += 1 - p;
        }
    }
    return AffineWeight(n, 1, std::move(profile), Rational(-energy));
}

MayaDiagram fock_to_maya(int n, const FockState& s)
{
    std::vector<std::vector<Int>> rows(n);
    for (Int j : s.flips)
        rows[floor_mod(j - 1, n)].push_back(floor_div(j - 1, n) + 1);
    return MayaDiagram(n, 1, std::move(rows));
}

FockState maya_to_fock(const MayaDiagram& m)
{
    if (m.l != 1)
        throw DomainError("invalid_diagram", "the Fock model uses block width 1");
    std::vector<Int> flips;
    for (int a = 0; a < m.n; ++a)
        for (Int p : m.rows[a])
            flips.push_back(static_cast<Int>(m.n) * (p - 1) + a + 1);
    return fock_state(std::move(flips));
}

FockVector FockVector::basis(int n, const FockState& s)
{
    FockVector v;
    v.n = n;
    v.terms[s] = Rational(1);
    return v;
}

void FockVector::add(const FockState& s, const Rational& c)
{
    if (c == Rational(0))
        return;
    auto [it, inserted] = terms.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Rational(0))
            terms.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o)
{
    for (const auto& [s, c] : o.terms)
        add(s, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o)
{
    for (const auto& [s, c] : o.terms)
        add(s, -c);
    return *this;
}

FockVector FockVector::scaled(const Rational& c) const
{
    FockVector out;
    out.n = n;
    if (c == Rational(0))
        return out;
    for (const auto& [s, x] : terms)
        out.terms.emplace(s, x * c);
    return out;
}

namespace {

std::pair<Int, Int> window(const FockState& s)
{
    Int lo = s.flips.empty() ? 0 : std::min<Int>(s.flips.front(), 0);
    Int hi = s.flips.empty() ? 1 : std::max<Int>(s.flips.back(), 1);
    return {lo - 1, hi + 1};
}

FockState toggle_pair(const FockState& s, Int j)
{
    std::vector<Int> out;
    out.reserve(s.flips.size() + 2);
    const Int pair[2] = {j, j + 1};
    std::set_symmetric_difference(s.flips.begin(), s.flips.end(), pair, pair + 2,
                                  std::back_inserter(out));
    return FockState{std::move(out)};
}

void require_residue(int n, int i)
{
    if (n < 2)
        throw DomainError("unsupported_rank", "the Fock action needs n >= 2");
    if (i < 0 || i >= n)
        throw DomainError("index_out_of_range", "residue outside 0..n-1");
}

// signature entries: +1 where f acts at j, -1 where e acts at j
std::vector<std::pair<Int, int>> signature(int n, int i, const FockState& s)
{
    std::vector<std::pair<Int, int>> sig;
    auto [lo, hi] = window(s);
    for (Int j = lo; j <= hi; ++j) {
        if (floor_mod(j, n) != i)
            continue;
        bool a = s.occupied(j), b = s.occupied(j + 1);
        if (a && !b)
            sig.push_back({j, +1});
        else if (!a && b)
            sig.push_back({j, -1});
    }
    return sig;
}

std::vector<std::pair<Int, int>> reduced_signature(int n, int i, const FockState& s)
{
    std::vector<std::pair<Int, int>> st;
    for (const auto& e : signature(n, i, s)) {
        if (e.second == -1 && !st.empty() && st.back().second == +1)
            st.pop_back();
        else
            st.push_back(e);
    }
    return st;
}

} // namespace

FockVector chevalley_apply(Chevalley op, int i, const FockVector& v)
{
    require_residue(v.n, i);
    FockVector out;
    out.n = v.n;
    for (const auto& [s, c] : v.terms) {
        auto [lo, hi] = window(s);
        if (op == Chevalley::H) {
            Int h = 0;
            for (Int j = lo; j <= hi; ++j)
                if (floor_mod(j, v.n) == i)
                    h += Int(s.occupied(j)) - Int(s.occupied(j + 1));
            out.add(s, c * h);
            continue;
        }
        for (Int j = lo; j <= hi; ++j) {
            if (floor_mod(j, v.n) != i)
                continue;
            bool a = s.occupied(j), b = s.occupied(j + 1);
            if ((op == Chevalley::F && a && !b) || (op == Chevalley::E && !a && b))
                out.add(toggle_pair(s, j), c);
        }
    }
    return out;
}

std::optional<FockState> crystal_apply(CrystalOp op, int n, int i, const FockState& s)
{
    require_residue(n, i);
    auto red = reduced_signature(n, i, s);
    if (op == CrystalOp::F) {
        for (const auto& [j, sign] : red)
            if (sign == +1)
                return toggle_pair(s, j);
        return std::nullopt;
    }
    for (auto it = red.rbegin(); it != red.rend(); ++it)
        if (it->second == -1)
            return toggle_pair(s, it->first);
    return std::nullopt;
}

Int crystal_epsilon(int n, int i, const FockState& s)
{
    require_residue(n, i);
    auto red = reduced_signature(n, i, s);
    return std::count_if(red.begin(), red.end(), [](const auto& e) { return e.second == -1; });
}

Int crystal_phi(int n, int i, const FockState& s)
{
    require_residue(n, i);
    auto red = reduced_signature(n, i, s);
    return std::count_if(red.begin(), red.end(), [](const auto& e) { return e.second == +1; });
}

Int fock_weight_count(const AffineWeight& mu)
{
    if (mu.level != 1)
        throw DomainError("level_mismatch", "the Fock module has level 1");
    const Int charge = mu.charge();
    AffineWeight ref = fock_weight(mu.n, fock_charged_vacuum(charge));
    RootVector v;
    try {
        v = root_difference(ref, mu);
    } catch (const DomainError& e) {
        if (e.kind() != "non_integral")
            throw;
        return 0;
    }
    if (!v.nonnegative())
        return 0;
    Int count = 0;
    for (const auto& part : partitions(v.height()))
        if (fock_weight(mu.n, fock_from_partition(charge, part)) == mu)
            ++count;
    return count;
}

std::vector<FockState> fock_basis(int n, Int depth)
{
    (void)n;
    std::vector<FockState> out;
    for (Int h = 0; h <= depth; ++h)
        for (const auto& part : partitions(h))
            out.push_back(fock_from_partition(0, part));
    return out;
}

std::vector<std::vector<Int>> cone_coefficients(int n, Int depth)
{
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(n, 0);
    std::function<void(int, Int)> go = [&](int k, Int left) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (Int x = 0; x <= left; ++x) {
            cur[k] = x;
            go(k + 1, left - x);
        }
        cur[k] = 0;
    };
    go(0, depth);
    return out;
}

CharReport char_factorization_check(int n, Int depth)
{
    if (n < 2)
        throw DomainError("unsupported_rank", "the check needs n >= 2");
    CharReport rep;
    const AffineWeight top = fundamental_weight(n, 0);
    MultTable table(top, depth);
    for (const auto& c : cone_coefficients(n, depth)) {
        CharRow row{top - root_combination(n, RootVector{c})};
        row.fock = fock_weight_count(row.mu);
        Int lowest = *std::min_element(c.begin(), c.end());
        for (Int j = 0; j <= lowest; ++j) {
            std::vector<Int> shifted(c);
            for (auto& x : shifted)
                x -= j;
            row.convolution += partition_count(j) * table.mult_at(shifted);
        }
        row.ok = row.fock == row.convolution;
        rep.pass = rep.pass && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

FockVector apply_word(const std::vector<std::pair<Chevalley, int>>& word, FockVector v)
{
    // rightmost operator first
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = chevalley_apply(it->first, it->second, v);
    return v;
}

Int binomial(Int n, Int k)
{
    Int r = 1;
    for (Int t = 1; t <= k; ++t)
        r = r * (n - k + t) / t;
    return r;
}

std::string state_label(const FockState& s) { return join(s.flips); }

} // namespace

RelationReport serre_and_commutator_check(int n, Int depth)
{
    if (n < 2)
        throw DomainError("unsupported_rank", "the check needs n >= 2");
    RelationReport rep;
    auto fail = [&](const std::string& what, int i, int j, const FockState& s) {
        rep.pass = false;
        rep.failures.push_back(what + " i=" + std::to_string(i) + " j=" + std::to_string(j)
                               + " at " + state_label(s));
    };
    using C = Chevalley;
    for (const FockState& s : fock_basis(n, depth)) {
        const FockVector b = FockVector::basis(n, s);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const Int a = cartan_entry(n, i, j);

                FockVector lhs = apply_word({{C::E, i}, {C::F, j}}, b);
                lhs -= apply_word({{C::F, j}, {C::E, i}}, b);
                FockVector rhs = i == j ? chevalley_apply(C::H, i, b) : FockVector{n, {}};
                ++rep.checked;
                if (!(lhs == rhs))
                    fail("[e,f]", i, j, s);

                for (C x : {C::E, C::F}) {
                    FockVector hx = apply_word({{C::H, i}, {x, j}}, b);
                    hx -= apply_word({{x, j}, {C::H, i}}, b);
                    Int sign = x == C::E ? 1 : -1;
                    ++rep.checked;
                    if (!(hx == chevalley_apply(x, j, b).scaled(Rational(sign * a))))
                        fail(x == C::E ? "[h,e]" : "[h,f]", i, j, s);
                }

                if (i == j)
                    continue;
                const Int N = 1 - a;
                for (C x : {C::E, C::F}) {
                    FockVector total{n, {}};
                    for (Int k = 0; k <= N; ++k) {
                        std::vector<std::pair<C, int>> word;
                        for (Int t = 0; t < N - k; ++t)
                            word.push_back({x, i});
                        word.push_back({x, j});
                        for (Int t = 0; t < k; ++t)
                            word.push_back({x, i});
                        Int coeff = (k % 2 ? -1 : 1) * binomial(N, k);
                        total += apply_word(word, b).scaled(Rational(coeff));
                    }
                    ++rep.checked;
                    if (!total.is_zero())
                        fail(x == C::E ? "serre(e)" : "serre(f)", i, j, s);
                }
            }
        }
    }
    return rep;
}

CrystalReport crystal_completeness_check(int n, Int depth)
{
    if (n < 2)
        throw DomainError("unsupported_rank", "the check needs n >= 2");
    CrystalReport rep;
    const AffineWeight top = fundamental_weight(n, 0);
    auto height_of = [&](const FockState& s) {
        return root_difference(top, fock_weight(n, s)).height();
    };

    std::set<FockState> seen{fock_vacuum()};
    std::deque<FockState> queue{fock_vacuum()};
    while (!queue.empty()) {
        FockState s = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            for (CrystalOp op : {CrystalOp::F, CrystalOp::E}) {
                auto t = crystal_apply(op, n, i, s);
                if (!t)
                    continue;
                CrystalOp back = op == CrystalOp::F ? CrystalOp::E : CrystalOp::F;
                auto r = crystal_apply(back, n, i, *t);
                if (!r || !(*r == s))
                    rep.inverse_ok = false;
                if (height_of(*t) > depth || seen.count(*t))
                    continue;
                seen.insert(*t);
                queue.push_back(*t);
            }
        }
    }
    rep.elements = seen.size();

    std::map<std::vector<Int>, Int> counts;
    for (const auto& s : seen)
        ++counts[root_difference(top, fock_weight(n, s)).c];
    MultTable table(top, depth);
    for (const auto& c : cone_coefficients(n, depth)) {
        CrystalRow row{top - root_combination(n, RootVector{c})};
        auto it = counts.find(c);
        row.crystal = it == counts.end() ? 0 : it->second;
        row.mult = table.mult_at(c);
        if (row.crystal != row.mult)
            rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    rep.pass = rep.pass && rep.inverse_ok;
    return rep;
}

RelationReport divided_power_check(int n, int max_length)
{
    if (n < 2)
        throw DomainError("unsupported_rank", "the check needs n >= 2");
    RelationReport rep;
    auto fail = [&](const std::string& what, int i, Int k, const FockState& s) {
        rep.pass = false;
        rep.failures.push_back(what + " i=" + std::to_string(i) + " k=" + std::to_string(k)
                               + " at " + state_label(s));
    };

    std::set<FockState> extremal{fock_vacuum()};
    std::vector<FockState> layer{fock_vacuum()};
    for (int len = 0; len <= max_length; ++len) {
        std::vector<FockState> next;
        for (const FockState& b : layer) {
            const AffineWeight wt = fock_weight(n, b);
            for (int i = 0; i < n; ++i) {
                const Int m = coroot_pairing(wt, i);
                if (m < 0)
                    continue;
                ++rep.checked;
                if (!chevalley_apply(Chevalley::E, i, FockVector::basis(n, b)).is_zero())
                    fail("e_i b != 0", i, 0, b);
                FockVector power = FockVector::basis(n, b);
                FockState path = b;
                Int factorial = 1;
                for (Int k = 1; k <= m; ++k) {
                    power = chevalley_apply(Chevalley::F, i, power);
                    factorial *= k;
                    auto step = crystal_apply(CrystalOp::F, n, i, path);
                    ++rep.checked;
                    if (!step) {
                        fail("crystal string too short", i, k, b);
                        break;
                    }
                    path = *step;
                    // f^k b / k! has unit coefficients and contains the crystal path
                    bool unit = !power.terms.empty();
                    for (const auto& [st, c] : power.terms)
                        unit = unit && c == Rational(factorial);
                    if (!unit || !power.terms.count(path))
                        fail("f^k b != k! G", i, k, b);
                    if (k == m && power.terms.size() != 1)
                        fail("f^m b not extremal", i, k, b);
                }
                if (m > 0 && rep.pass) {
                    if (crystal_apply(CrystalOp::F, n, i, path))
                        fail("crystal string too long", i, m, b);
                    if (!chevalley_apply(Chevalley::F, i, power).is_zero())
                        fail("f^(m+1) b != 0", i, m + 1, b);
                    if (extremal.insert(path).second)
                        next.push_back(path);
                }
            }
        }
        layer = std::move(next);
    }
    return rep;
}

} // namespace bowforge
