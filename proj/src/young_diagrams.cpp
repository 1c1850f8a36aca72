#include "bowforge/young_diagrams.hpp"

#include "bowforge/errors.hpp"

#include <algorithm>
#include <string>

namespace bowforge {

bool satisfies_level_constraint(int level, const std::vector<Int>& entries)
{
    if (entries.empty())
        return false;
    for (std::size_t k = 1; k < entries.size(); ++k)
        if (entries[k] > entries[k - 1])
            return false;
    return entries.back() >= entries.front() - level;
}

GYDiagram::GYDiagram(int rank_, int level_, std::vector<Int> entries_)
    : rank(rank_), level(level_), entries(std::move(entries_))
{
    if (rank < 1 || entries.size() != static_cast<std::size_t>(rank))
        throw DomainError("invalid_diagram", "diagram needs rank >= 1 and one entry per row");
    if (level < 0)
        throw DomainError("invalid_diagram", "level must be nonnegative");
    if (!satisfies_level_constraint(level, entries))
        throw DomainError("constraint_violation", "entries violate the level-"
                                                      + std::to_string(level) + " constraint");
}

bool cell_is_gray(const GYDiagram& d, int row, int column, Int block)
{
    return d.level * block + column <= d.entries.at(row - 1);
}

GYDiagram gyd_transpose(const GYDiagram& d)
{
    if (d.level < 1)
        throw DomainError("level_zero", "transpose needs level >= 1");
    const Int L = d.level;
    const Int lo = *std::min_element(d.entries.begin(), d.entries.end()) - L;
    const Int hi = *std::max_element(d.entries.begin(), d.entries.end()) + L;

    std::vector<Int> t(L, 0);
    for (int x = 1; x <= L; ++x) {
        Int count = 0;
        for (int i = 1; i <= d.rank; ++i) {
            // beyond these blocks every block >= 0 is white and every block < 0 is gray
            Int first = std::min<Int>(-1, (lo - x) >= 0 ? (lo - x) / L : -((x - lo + L - 1) / L));
            Int last = std::max<Int>(0, (hi - x) >= 0 ? (hi - x) / L : 0);
            for (Int block = first; block <= last; ++block) {
                bool gray = cell_is_gray(d, i, x, block);
                if (block >= 0 && gray)
                    ++count;
                else if (block < 0 && !gray)
                    --count;
            }
        }
        t[x - 1] = count;
    }
    return GYDiagram(static_cast<int>(L), d.rank, std::move(t));
}

GYDiagram gyd_rotate(const GYDiagram& d)
{
    std::vector<Int> e(d.entries.begin() + 1, d.entries.end());
    e.push_back(d.entries.front() - d.level);
    return GYDiagram(d.rank, d.level, std::move(e));
}

GYDiagram gyd_from_weight(const AffineWeight& lambda)
{
    if (lambda.level < 1)
        throw DomainError("level_zero", "diagram of a level-0 weight");
    if (!in_fundamental_alcove(lambda))
        throw DomainError("not_dominant", "weight is not in the fundamental alcove");
    return GYDiagram(lambda.n, lambda.level, lambda.profile);
}

AffineWeight gyd_to_weight(const GYDiagram& d, Rational delta)
{
    return AffineWeight(d.rank, d.level, d.entries, delta);
}

} // namespace bowforge
