#include "bowforge/bow_calculus.hpp"

#include "bowforge/errors.hpp"
#include "bowforge/young_diagrams.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace bowforge {

namespace {

int mod(int a, int m)
{
    int r = a % m;
    return r < 0 ? r + m : r;
}

bool is_x(const BowDiagram& d, int k) { return d.nodes[k].kind == NodeKind::X; }

} // namespace

void BowDiagram::validate() const
{
    const std::size_t m = nodes.size();
    if (shape == Shape::Circle) {
        if (m == 0)
            throw DomainError("invalid_diagram", "circle diagram without nodes");
        if (dims.size() != m)
            throw DomainError("invalid_diagram", "a circle needs one dimension per node");
        if (base < 0 || static_cast<std::size_t>(base) >= m || nodes[base].kind != NodeKind::X)
            throw DomainError("invalid_diagram", "base must point at an X node");
    } else {
        if (dims.size() != m + 1)
            throw DomainError("invalid_diagram", "a line needs one more dimension than nodes");
        if (dims.front() != 0 || dims.back() != 0)
            throw DomainError("invalid_diagram", "outer segments of a line must be 0");
    }
    for (Int x : dims)
        if (x < 0)
            throw DomainError("negative_dimension", "segment dimensions must be nonnegative");
    std::set<int> syms;
    for (const auto& node : nodes)
        if (node.kind == NodeKind::O && !syms.insert(node.param.sym).second)
            throw DomainError("invalid_diagram", "O symbols must be distinct");
}

int BowDiagram::num_x() const
{
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                          [](const BowNode& b) { return b.kind == NodeKind::X; }));
}

int BowDiagram::num_o() const { return static_cast<int>(nodes.size()) - num_x(); }

Int BowDiagram::out_dim(int k) const
{
    if (shape == Shape::Line)
        return dims[k];
    return dims[mod(k - 1, static_cast<int>(nodes.size()))];
}

Int BowDiagram::in_dim(int k) const
{
    if (shape == Shape::Line)
        return dims[k + 1];
    return dims[k];
}

std::vector<int> x_positions(const BowDiagram& d)
{
    std::vector<int> out;
    const int m = static_cast<int>(d.nodes.size());
    if (d.shape == Shape::Line) {
        for (int k = 0; k < m; ++k)
            if (is_x(d, k))
                out.push_back(k);
        return out;
    }
    for (int s = 0; s < m; ++s) {
        int k = mod(d.base + s, m);
        if (is_x(d, k))
            out.push_back(k);
    }
    return out;
}

std::vector<int> h_positions(const BowDiagram& d)
{
    std::vector<int> out;
    const int m = static_cast<int>(d.nodes.size());
    if (d.shape == Shape::Line) {
        for (int k = m - 1; k >= 0; --k)
            if (!is_x(d, k))
                out.push_back(k);
        return out;
    }
    for (int s = 1; s <= m; ++s) {
        int k = mod(d.base - s, m);
        if (!is_x(d, k))
            out.push_back(k);
    }
    if (out.empty())
        return out;
    auto first = std::min_element(out.begin(), out.end(), [&](int a, int b) {
        return d.nodes[a].param.sym < d.nodes[b].param.sym;
    });
    std::rotate(out.begin(), first, out.end());
    return out;
}

InvariantRecord invariants(const BowDiagram& d)
{
    d.validate();
    const int m = static_cast<int>(d.nodes.size());
    const bool circle = d.shape == Shape::Circle;
    const auto xs = x_positions(d);
    const auto hs = h_positions(d);

    // nodes strictly between a and b going anticlockwise from a; the whole
    // circle minus a when a == b
    auto count_between = [&](int a, int b, NodeKind kind) {
        Int c = 0;
        if (circle) {
            for (int k = mod(a + 1, m); k != b; k = mod(k + 1, m))
                c += d.nodes[k].kind == kind;
        } else {
            for (int k = a + 1; k < b; ++k)
                c += d.nodes[k].kind == kind;
        }
        return c;
    };

    InvariantRecord r;
    for (int k : hs) {
        r.h_syms.push_back(d.nodes[k].param.sym);
        r.n_h.push_back(d.in_dim(k) - d.out_dim(k));
    }
    for (int k : xs)
        r.n_x.push_back(d.out_dim(k) - d.in_dim(k));

    const int l = static_cast<int>(hs.size());
    const int n = static_cast<int>(xs.size());
    const int hpairs = circle ? l : std::max(0, l - 1);
    for (int s = 0; s < hpairs; ++s) {
        int t = (s + 1) % l;
        r.n_pair_h.push_back(r.n_h[s] - r.n_h[t] + count_between(hs[t], hs[s], NodeKind::X));
    }
    const int xpairs = circle ? n : std::max(0, n - 1);
    for (int i = 0; i < xpairs; ++i) {
        int j = (i + 1) % n;
        r.n_pair_x.push_back(r.n_x[i] - r.n_x[j] + count_between(xs[i], xs[j], NodeKind::O));
    }

    for (Int v : r.n_h)
        r.quad_h -= v * v;
    for (int k : xs)
        r.quad_h += d.out_dim(k) + d.in_dim(k);
    for (Int v : r.n_x)
        r.quad_x -= v * v;
    for (int k : hs)
        r.quad_x += d.out_dim(k) + d.in_dim(k);
    return r;
}

Int hw_new_dimension(const BowDiagram& d, int pos)
{
    const int m = static_cast<int>(d.nodes.size());
    if (d.shape == Shape::Line) {
        if (pos < 0 || pos + 1 >= m)
            throw DomainError("invalid_position", "no adjacent pair at this position");
        return d.dims[pos] + d.dims[pos + 2] + 1 - d.dims[pos + 1];
    }
    if (pos < 0 || pos >= m || m < 2)
        throw DomainError("invalid_position", "no adjacent pair at this position");
    int a = pos, b = mod(pos + 1, m);
    return d.out_dim(a) + d.in_dim(b) + 1 - d.dims[a];
}

BowDiagram hw_transition(const BowDiagram& d, int pos)
{
    const int m = static_cast<int>(d.nodes.size());
    Int fresh = hw_new_dimension(d, pos);
    int a = pos;
    int b = d.shape == Shape::Line ? pos + 1 : mod(pos + 1, m);
    if (d.nodes[a].kind == d.nodes[b].kind)
        throw DomainError("invalid_position", "transition needs one O and one X");
    if (fresh < 0)
        throw DomainError("negative_dimension",
                          "transition would give dimension " + std::to_string(fresh));

    BowDiagram out = d;
    std::swap(out.nodes[a], out.nodes[b]);
    if (d.shape == Shape::Line) {
        out.dims[pos + 1] = fresh;
        return out;
    }
    out.dims[a] = fresh;
    if (d.base == a || d.base == b) {
        out.base = d.base == a ? b : a;
        // the O now sits after x_0 (moved anticlockwise past it) or before it
        if (d.nodes[a].kind == NodeKind::O)
            out.nodes[b].param.nu_star -= 1;
        else
            out.nodes[a].param.nu_star += 1;
    }
    return out;
}

bool is_balanced(const BowDiagram& d)
{
    for (int k = 0; k < static_cast<int>(d.nodes.size()); ++k)
        if (d.nodes[k].kind == NodeKind::O && d.out_dim(k) != d.in_dim(k))
            return false;
    return true;
}

bool is_separated(const BowDiagram& d)
{
    if (d.shape != Shape::Circle)
        throw DomainError("shape", "separated form is defined for circles");
    const int m = static_cast<int>(d.nodes.size());
    bool passed_x1 = false;
    for (int s = 1; s < m; ++s) {
        int k = mod(d.base + s, m);
        if (is_x(d, k))
            passed_x1 = true;
        else if (passed_x1)
            return false;
    }
    return true;
}

namespace {

SeparatedRecord read_separated(const BowDiagram& d)
{
    const int m = static_cast<int>(d.nodes.size());
    SeparatedRecord r;
    r.n = d.num_x();
    for (int s = 1; s <= m; ++s) {
        int k = mod(d.base - s, m);
        if (!is_x(d, k)) {
            r.tlambda.push_back(d.in_dim(k) - d.out_dim(k));
            r.params.push_back(d.nodes[k].param);
        }
    }
    std::vector<int> xs = x_positions(d);
    for (std::size_t i = 1; i < xs.size(); ++i)
        r.mu.push_back(d.out_dim(xs[i]) - d.in_dim(xs[i]));
    r.mu.push_back(d.out_dim(xs[0]) - d.in_dim(xs[0]));
    r.v0 = d.dims[d.base];
    return r;
}

} // namespace

SeparationResult separated_form(const BowDiagram& d)
{
    d.validate();
    if (d.shape != Shape::Circle)
        throw DomainError("shape", "separated form is defined for circles");

    SeparationResult res;
    res.diagram = d;
    const int m = static_cast<int>(d.nodes.size());
    const int guard = 4 * m * m + 16;
    while (!is_separated(res.diagram)) {
        const BowDiagram& cur = res.diagram;
        // an O preceded by some x_j with j != 0 can move clockwise past it
        std::vector<int> movable;
        for (int s = 1; s <= m; ++s) {
            int k = mod(cur.base - s, m);
            int prev = mod(k - 1, m);
            if (!is_x(cur, k) && is_x(cur, prev) && prev != cur.base)
                movable.push_back(prev);
        }
        bool moved = false;
        for (int pos : movable) {
            if (hw_new_dimension(cur, pos) >= 0) {
                res.diagram = hw_transition(cur, pos);
                ++res.transitions;
                moved = true;
                break;
            }
        }
        if (!moved)
            throw DomainError("no_admissible_sequence",
                              "every remaining move would create a negative dimension");
        if (res.transitions > guard)
            throw DomainError("no_admissible_sequence", "separation did not terminate");
    }
    res.record = read_separated(res.diagram);
    return res;
}

BowDiagram realize(const SeparatedRecord& r)
{
    const int n = r.n;
    const int l = static_cast<int>(r.tlambda.size());
    if (n < 1 || r.mu.size() != static_cast<std::size_t>(n))
        throw DomainError("invalid_record", "record needs n >= 1 and n entries of mu");
    if (!r.params.empty() && r.params.size() != static_cast<std::size_t>(l))
        throw DomainError("invalid_record", "one parameter label per O is required");

    BowDiagram d;
    d.shape = Shape::Circle;
    d.base = 0;
    Int cur = r.v0;
    d.nodes.push_back({NodeKind::X, {}});
    d.dims.push_back(cur);
    for (int s = l; s >= 1; --s) {
        OParam p = r.params.empty() ? OParam{s, 0} : r.params[s - 1];
        d.nodes.push_back({NodeKind::O, p});
        cur += r.tlambda[s - 1];
        d.dims.push_back(cur);
    }
    for (int i = 1; i < n; ++i) {
        d.nodes.push_back({NodeKind::X, {}});
        cur -= r.mu[i - 1];
        d.dims.push_back(cur);
    }
    if (cur - r.v0 != r.mu[n - 1])
        throw DomainError("invalid_record", "sum of mu differs from sum of tlambda");
    d.validate();
    return d;
}

std::pair<AffineWeight, AffineWeight> weights_of(const BowDiagram& d)
{
    SeparatedRecord r = separated_form(d).record;
    const int n = r.n;
    const int l = static_cast<int>(r.tlambda.size());
    AffineWeight lambda = zero_weight(n, l);
    if (l > 0) {
        GYDiagram t(l, n, r.tlambda);
        GYDiagram g = gyd_transpose(t);
        lambda = AffineWeight(n, l, g.entries);
    }
    AffineWeight mu(n, l, r.mu, Rational(-r.v0));
    return {lambda, mu};
}

BowDiagram balanced_from_dims(const std::vector<Int>& w, const std::vector<Int>& v)
{
    const int n = static_cast<int>(w.size());
    if (n < 1 || v.size() != w.size())
        throw DomainError("length_mismatch", "w and v must have the same positive length");
    for (int i = 0; i < n; ++i)
        if (w[i] < 0 || v[i] < 0)
            throw DomainError("negative_entry", "dimension vectors must be nonnegative");
    const int l = static_cast<int>(std::accumulate(w.begin(), w.end(), Int(0)));

    BowDiagram d;
    d.shape = Shape::Circle;
    d.base = 0;
    int placed = 0;
    for (int i = 0; i < n; ++i) {
        d.nodes.push_back({NodeKind::X, {}});
        d.dims.push_back(v[i]);
        for (Int k = 0; k < w[i]; ++k) {
            d.nodes.push_back({NodeKind::O, {l - placed, 0}});
            d.dims.push_back(v[i]);
            ++placed;
        }
    }
    return d;
}

BowDiagram balanced_form(const AffineWeight& lambda, const AffineWeight& mu)
{
    if (lambda.level < 1 || !in_fundamental_alcove(lambda))
        throw DomainError("not_dominant", "lambda must lie in the fundamental alcove");
    RootVector v = root_difference(lambda, mu);
    if (!v.nonnegative())
        throw DomainError("negative_entry", "lambda - mu has a negative coefficient");
    std::vector<Int> w(lambda.n);
    for (int i = 0; i < lambda.n; ++i)
        w[i] = coroot_pairing(lambda, i);
    return balanced_from_dims(w, v.c);
}

SeparatedRecord rotate_base(const SeparatedRecord& r)
{
    if (r.tlambda.empty())
        throw DomainError("invalid_record", "rotation needs at least one O");
    SeparatedRecord out = r;
    Int first = r.tlambda.front();
    out.tlambda.erase(out.tlambda.begin());
    out.tlambda.push_back(first - r.n);
    for (auto& x : out.mu)
        x -= 1;
    out.v0 = r.v0 - first + r.n;
    if (out.v0 < 0)
        throw DomainError("negative_dimension", "rotation would make v0 negative");
    if (!r.params.empty()) {
        OParam p = r.params.front();
        p.nu_star -= 1;
        out.params.erase(out.params.begin());
        out.params.push_back(p);
    }
    return out;
}

SeparationResult rotate_base_by_transitions(const SeparatedRecord& r)
{
    if (r.tlambda.empty())
        throw DomainError("invalid_record", "rotation needs at least one O");
    SeparationResult res;
    res.diagram = realize(r);
    const int m = static_cast<int>(res.diagram.nodes.size());
    int pos = static_cast<int>(r.tlambda.size()); // h_1 is the last O after x_0
    for (int step = 0; step < r.n; ++step) {
        res.diagram = hw_transition(res.diagram, pos);
        ++res.transitions;
        pos = mod(pos + 1, m);
    }
    res.record = read_separated(res.diagram);
    return res;
}

BowDiagram rotate_to_base(const BowDiagram& d)
{
    if (d.shape != Shape::Circle || d.base == 0)
        return d;
    BowDiagram out = d;
    const int m = static_cast<int>(d.nodes.size());
    for (int k = 0; k < m; ++k) {
        out.nodes[k] = d.nodes[mod(d.base + k, m)];
        out.dims[k] = d.dims[mod(d.base + k, m)];
    }
    out.base = 0;
    return out;
}

std::vector<Int> serialize_key(const BowDiagram& d)
{
    BowDiagram c = rotate_to_base(d);
    std::vector<Int> key;
    key.push_back(c.shape == Shape::Circle ? 0 : 1);
    key.push_back(static_cast<Int>(c.nodes.size()));
    for (const auto& node : c.nodes) {
        key.push_back(node.kind == NodeKind::X ? 0 : 1);
        key.push_back(node.kind == NodeKind::X ? 0 : node.param.sym);
        key.push_back(node.kind == NodeKind::X ? 0 : node.param.nu_star);
    }
    key.insert(key.end(), c.dims.begin(), c.dims.end());
    return key;
}

SearchResult hw_reachable_balanced(const BowDiagram& d, Int dim_bound)
{
    d.validate();
    if (d.shape != Shape::Circle)
        throw DomainError("shape", "search is defined for circles");
    const int m = static_cast<int>(d.nodes.size());
    const std::size_t cap = 2000000;

    SearchResult res;
    std::set<std::vector<Int>> seen;
    std::map<std::vector<Int>, BowDiagram> found;
    std::deque<BowDiagram> queue;
    BowDiagram start = rotate_to_base(d);
    seen.insert(serialize_key(start));
    queue.push_back(start);
    while (!queue.empty() && seen.size() < cap) {
        BowDiagram cur = std::move(queue.front());
        queue.pop_front();
        if (is_balanced(cur))
            found.emplace(serialize_key(cur), cur);
        for (int pos = 0; pos < m; ++pos) {
            int b = mod(pos + 1, m);
            if (pos == b || cur.nodes[pos].kind == cur.nodes[b].kind)
                continue;
            Int fresh = hw_new_dimension(cur, pos);
            if (fresh < 0 || fresh > dim_bound)
                continue;
            BowDiagram next = rotate_to_base(hw_transition(cur, pos));
            if (seen.insert(serialize_key(next)).second)
                queue.push_back(std::move(next));
        }
    }
    res.states = seen.size();
    for (auto& [key, diagram] : found)
        res.balanced.push_back(diagram);
    return res;
}

std::vector<Int> line_x_charges(const BowDiagram& d)
{
    if (d.shape != Shape::Line)
        throw DomainError("shape", "expected a line diagram");
    d.validate();
    std::vector<Int> out;
    for (int k : x_positions(d))
        out.push_back(d.out_dim(k) - d.in_dim(k));
    return out;
}

} // namespace bowforge
