#include "watermelon/tableaux.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace watermelon {

std::size_t SemistandardTableau::rows() const
{
    std::size_t r = 0;
    for (const auto& c : columns) r = std::max(r, c.size());
    return r;
}

std::optional<int> SemistandardTableau::at(std::size_t row, std::size_t col) const
{
    if (col >= columns.size() || row >= columns[col].size()) return std::nullopt;
    return columns[col][row];
}

bool SemistandardTableau::is_semistandard() const
{
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t r = 0; r < columns[c].size(); ++r) {
            if (r > 0 && columns[c][r] <= columns[c][r - 1]) return false;
            if (c > 0 && (r >= columns[c - 1].size() || columns[c][r] < columns[c - 1][r])) return false;
        }
    }
    return true;
}

SemistandardTableau tableau_from_rows(const std::vector<std::vector<int>>& rows)
{
    SemistandardTableau tab;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (tab.columns.size() <= c) tab.columns.resize(c + 1);
            tab.columns[c].push_back(row[c]);
        }
    return tab;
}

std::vector<std::vector<int>> tableau_rows(const SemistandardTableau& tab)
{
    std::vector<std::vector<int>> rows(tab.rows());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < tab.columns.size(); ++c)
            if (auto v = tab.at(r, c)) rows[r].push_back(*v);
    return rows;
}

std::string format_tableau(const SemistandardTableau& tab)
{
    std::ostringstream os;
    for (const auto& row : tableau_rows(tab)) {
        for (int v : row) os << std::setw(3) << v;
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<int> down_labels(const std::vector<int>& steps)
{
    std::vector<int> labels;
    for (std::size_t x = 0; x < steps.size(); ++x)
        if (steps[x] < 0) labels.push_back(static_cast<int>(x));
    return labels;
}

SemistandardTableau labels_tableau(const PathFamily& fam)
{
    SemistandardTableau tab;
    for (const auto& p : fam.paths) tab.columns.push_back(down_labels(p));
    return tab;
}

void check_watermelon_family(const WatermelonSpec& spec, const PathFamily& fam)
{
    WalkerSpec w = spec.walkers();
    if (static_cast<int>(fam.paths.size()) != spec.n) throw DomainError("family has the wrong number of walkers");
    for (const auto& p : fam.paths)
        if (static_cast<int>(p.size()) != spec.t) throw DomainError("path length does not match t");
    if (!family_is_valid(w.a, w.e, fam)) throw DomainError("not a valid watermelon family");
}

std::vector<int> image_ends(const WatermelonSpec& spec, long l)
{
    std::vector<int> e;
    for (int i = 0; i + 1 < spec.n; ++i) e.push_back(spec.y + 2 * i);
    e.push_back(static_cast<int>(spec.y + 2 * spec.n + l - 3));
    return e;
}

std::vector<int> image_starts(const WatermelonSpec& spec)
{
    std::vector<int> a;
    for (int i = 0; i < spec.n; ++i) a.push_back(2 * i);
    return a;
}

void set(SemistandardTableau& tab, Cell c, int v) { tab.columns[c.col][c.row] = v; }

}  // namespace

SemistandardTableau walkers_to_tableau(const WatermelonSpec& spec, const PathFamily& fam)
{
    check_watermelon_family(spec, fam);
    SemistandardTableau tab = labels_tableau(fam);
    if (!tab.is_semistandard()) throw InternalError("walker family did not translate to a semistandard tableau");
    return tab;
}

PathFamily tableau_to_walkers(const SemistandardTableau& tab, const std::vector<int>& lengths)
{
    if (lengths.size() != tab.columns.size()) throw DomainError("need one length per column");
    if (!tab.is_semistandard()) throw DomainError("tableau is not semistandard");
    PathFamily fam;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        std::vector<int> steps(lengths[j], 1);
        for (int x : tab.columns[j]) {
            if (x < 0 || x >= lengths[j]) throw DomainError("tableau entry outside the walk length");
            steps[x] = -1;
        }
        fam.paths.push_back(std::move(steps));
    }
    return fam;
}

Cell jt_slide(SemistandardTableau& tab, Cell s, const SlideObserver& observe)
{
    if (!tab.at(s.row, s.col)) throw DomainError("special entry is not inside the tableau");
    for (;;) {
        auto right = tab.at(s.row, s.col + 1);
        auto below = tab.at(s.row + 1, s.col);
        if (!right && !below) return s;
        const int sv = *tab.at(s.row, s.col);
        if (below && (!right || *right >= *below - 1)) {
            set(tab, s, *below - 1);
            s = {s.row + 1, s.col};
        } else {
            set(tab, s, *right + 1);
            s = {s.row, s.col + 1};
        }
        set(tab, s, sv);
        if (observe) observe(tab, s);
    }
}

Cell jt_star_slide(SemistandardTableau& tab, Cell s, const SlideObserver& observe)
{
    if (!tab.at(s.row, s.col)) throw DomainError("special entry is not inside the tableau");
    for (;;) {
        if (s.row == 0 && s.col == 0) return s;
        auto left = s.col > 0 ? tab.at(s.row, s.col - 1) : std::nullopt;
        auto above = s.row > 0 ? tab.at(s.row - 1, s.col) : std::nullopt;
        const int i = static_cast<int>(s.row) + 1;
        if (!left && above && *above + 1 <= 2 * i - 1) return s;
        const int sv = *tab.at(s.row, s.col);
        if (!left || (above && *left <= *above + 1)) {
            set(tab, s, *above + 1);
            s = {s.row - 1, s.col};
        } else {
            set(tab, s, *left - 1);
            s = {s.row, s.col - 1};
        }
        set(tab, s, sv);
        if (observe) observe(tab, s);
    }
}

long removable_contacts(const SemistandardTableau& tab)
{
    long l = 0;
    if (tab.columns.empty()) return 0;
    const auto& first = tab.columns[0];
    for (std::size_t r = 0; r < first.size(); ++r) l += (first[r] == static_cast<int>(2 * r + 1));
    return l;
}

PathFamily prop6_forward(const WatermelonSpec& spec, const PathFamily& fam, Prop6Trace* trace)
{
    SemistandardTableau tab = walkers_to_tableau(spec, fam);
    const long l = removable_contacts(tab);
    if (l + 1 != contacts(spec.walkers(), fam)) throw InternalError("first-column bound entries do not match the contacts");
    const std::size_t last = tab.columns.size() - 1;
    for (long round = 0; round < l; ++round) {
        const auto& first = tab.columns[0];
        std::size_t r = first.size();
        while (r-- > 0)
            if (first[r] == static_cast<int>(2 * r + 1)) break;
        Cell end = jt_slide(tab, {r, 0});
        if (!(end == Cell{tab.columns[last].size() - 1, last}))
            throw InternalError("special entry did not end at the bottom of the last column");
        if (trace) trace->after_round.push_back(tab);
        tab.columns[last].pop_back();
    }
    if (removable_contacts(tab) != 0) throw InternalError("contact entries left after all rounds");
    if (trace) trace->before_shift = tab;
    for (auto& c : tab.columns)
        for (int& v : c) v -= 1;
    if (trace) trace->image = tab;

    std::vector<int> lengths(spec.n, spec.t);
    lengths.back() = static_cast<int>(spec.t - l - 1);
    PathFamily image = tableau_to_walkers(tab, lengths);
    if (!family_is_valid(image_starts(spec), image_ends(spec, l), image))
        throw InternalError("forward bijection produced an invalid family");
    return image;
}

PathFamily prop6_inverse(const WatermelonSpec& spec, const PathFamily& image)
{
    spec.validate();
    if (static_cast<int>(image.paths.size()) != spec.n) throw DomainError("family has the wrong number of walkers");
    const long l = spec.t - 1 - static_cast<long>(image.paths.back().size());
    if (l < 0) throw DomainError("last walker too long for a second-set family");
    for (int i = 0; i + 1 < spec.n; ++i)
        if (static_cast<int>(image.paths[i].size()) != spec.t) throw DomainError("path length does not match t");
    if (!family_is_valid(image_starts(spec), image_ends(spec, l), image))
        throw DomainError("not a family of the second set");

    SemistandardTableau tab = labels_tableau(image);
    for (auto& c : tab.columns)
        for (int& v : c) v += 1;
    const std::size_t last = tab.columns.size() - 1;
    for (long round = 0; round < l; ++round) {
        tab.columns[last].push_back(0);  // value irrelevant until it lands
        Cell end = jt_star_slide(tab, {tab.columns[last].size() - 1, last});
        set(tab, end, static_cast<int>(2 * end.row + 1));
    }
    if (!tab.is_semistandard()) throw InternalError("inverse bijection produced a non-semistandard tableau");
    PathFamily fam = tableau_to_walkers(tab, std::vector<int>(spec.n, spec.t));
    check_watermelon_family(spec, fam);
    return fam;
}

std::vector<PathFamily> second_set_families(const WatermelonSpec& spec, long l)
{
    WalkerSpec w = spec.walkers();
    w.e.back() = static_cast<int>(spec.y + 2 * spec.n + 2 * l - 2);
    std::vector<PathFamily> out;
    if (spec.t - l - 1 < 0) return out;
    enumerate_families(w, [&](const PathFamily& f) {
        const auto& p = f.paths.back();
        for (long k = 0; k <= l; ++k)
            if (p[spec.t - 1 - k] != 1) return true;
        PathFamily g = f;
        g.paths.back().resize(spec.t - l - 1);
        out.push_back(std::move(g));
        return true;
    });
    return out;
}

}  // namespace watermelon
