#include "helpers.hpp"
#include "watermelon/lgv.hpp"
#include "watermelon/oracle.hpp"
#include "watermelon/tableaux.hpp"

#include <doctest.h>

using namespace watermelon;

namespace {

PathFamily from_codes(std::initializer_list<const char*> codes)
{
    PathFamily f;
    for (const char* c : codes) f.paths.push_back(parse_path_code(c));
    return f;
}

const WatermelonSpec kExample{4, 12, 2};

PathFamily example_family() { return from_codes({"343343443433", "334333444433", "334333443434", "333333444344"}); }
PathFamily example_image() { return from_codes({"334434334433", "334334433434", "333344334344", "33333443"}); }

SemistandardTableau example_tableau() { return tableau_from_rows({{1, 2, 2, 6}, {4, 6, 6, 7}, {6, 7, 7, 8}, {7, 8, 9, 10}, {9, 9, 11, 11}}); }
SemistandardTableau after_removals() { return tableau_from_rows({{3, 3, 5, 6}, {4, 6, 6, 7}, {6, 7, 9}, {9, 10, 11}, {10, 12, 12}}); }
SemistandardTableau image_tableau() { return tableau_from_rows({{2, 2, 4, 5}, {3, 5, 5, 6}, {5, 6, 8}, {8, 9, 10}, {9, 11, 11}}); }
SemistandardTableau after_first_slide() { return tableau_from_rows({{1, 2, 2, 6}, {4, 6, 6, 7}, {6, 7, 7, 8}, {7, 8, 9, 10}, {10, 12, 12, 9}}); }

// rows weakly increasing, columns strictly increasing, skipping the special cell
bool monotone_ignoring(const SemistandardTableau& tab, Cell s)
{
    for (std::size_t c = 0; c < tab.columns.size(); ++c)
        for (std::size_t r = 0; r < tab.columns[c].size(); ++r) {
            if (Cell{r, c} == s) continue;
            int v = tab.columns[c][r];
            if (r > 0 && !(Cell{r - 1, c} == s) && v <= tab.columns[c][r - 1]) return false;
            if (c > 0 && !(Cell{r, c - 1} == s)) {
                auto left = tab.at(r, c - 1);
                if (!left || v < *left) return false;
            }
        }
    return true;
}

}  // namespace

TEST_CASE("walkers to tableau on the worked example")
{
    CHECK(walkers_to_tableau(kExample, example_family()) == example_tableau());
    CHECK(tableau_to_walkers(example_tableau(), {12, 12, 12, 12}) == example_family());
    CHECK(tableau_to_walkers(image_tableau(), {12, 12, 12, 8}) == example_image());
    CHECK(walkers_to_tableau(WatermelonSpec{1, 2, 0}, from_codes({"34"})) == tableau_from_rows({{1}}));
    CHECK(format_tableau(tableau_from_rows({{1, 2}, {3}})) == "  1  2\n  3\n");
    CHECK_THROWS_AS(walkers_to_tableau(WatermelonSpec{1, 2, 0}, from_codes({"43"})), DomainError);
}

TEST_CASE("one slide on the worked example")
{
    SemistandardTableau tab = example_tableau();
    std::size_t moves = 0;
    Cell end = jt_slide(tab, {4, 0}, [&](const SemistandardTableau& t, Cell s) {
        ++moves;
        CHECK(monotone_ignoring(t, s));
    });
    CHECK((end == Cell{4, 3}));
    CHECK(moves == 3);
    CHECK(tab == after_first_slide());
}

TEST_CASE("slide corner cases")
{
    SemistandardTableau single = tableau_from_rows({{5}});
    CHECK(jt_slide(single, {0, 0}) == Cell{0, 0});
    CHECK(single == tableau_from_rows({{5}}));

    SemistandardTableau col = tableau_from_rows({{1}, {4}});
    CHECK(jt_slide(col, {0, 0}) == Cell{1, 0});
    CHECK(col == tableau_from_rows({{3}, {1}}));
}

TEST_CASE("forward bijection on the worked example")
{
    Prop6Trace trace;
    PathFamily image = prop6_forward(kExample, example_family(), &trace);
    REQUIRE(trace.after_round.size() == 3);
    CHECK(trace.after_round[0] == after_first_slide());
    CHECK(trace.before_shift == after_removals());
    CHECK(trace.image == image_tableau());
    CHECK(image == example_image());
    CHECK(prop6_inverse(kExample, image) == example_family());
}

TEST_CASE("small bijection cases")
{
    WatermelonSpec s{1, 2, 0};
    PathFamily f = from_codes({"34"});
    PathFamily img = prop6_forward(s, f);
    REQUIRE(img.paths.size() == 1);
    CHECK(img.paths[0].empty());
    CHECK(prop6_inverse(s, img) == f);

    // first walk only touches at the origin: no slides, only the shift
    WatermelonSpec s2{2, 4, 2};
    PathFamily g = from_codes({"3343", "3343"});
    Prop6Trace tr;
    PathFamily gi = prop6_forward(s2, g, &tr);
    CHECK(tr.after_round.empty());
    CHECK(tr.image.columns.size() == 2);
    CHECK(gi.paths[1].size() == 3);
    CHECK(prop6_inverse(s2, gi) == g);
}

TEST_CASE("round trip and cardinalities on small watermelons")
{
    for (int n = 1; n <= 3; ++n)
        for (int y = 0; y <= 2; ++y)
            for (int t = std::max(y, 1); t <= 10; ++t) {
                if ((t - y) % 2) continue;
                WatermelonSpec m{n, t, y};
                WalkerSpec w = m.walkers();
                std::vector<long> by_l((t - y) / 2 + 1);
                enumerate_families(w, [&](const PathFamily& f) {
                    PathFamily img = prop6_forward(m, f);
                    CHECK(prop6_inverse(m, img) == f);
                    by_l[contacts(w, f) - 1]++;
                    return true;
                });
                for (long l = 0; l < static_cast<long>(by_l.size()); ++l) {
                    auto second = second_set_families(m, l);
                    CHECK(static_cast<long>(second.size()) == by_l[l]);
                    CHECK(n_fixed_contacts(t, y, n, l) == by_l[l]);
                    for (const auto& g : second) {
                        PathFamily back = prop6_inverse(m, g);
                        CHECK(prop6_forward(m, back) == g);
                    }
                }
            }
}

TEST_CASE("every slide keeps the tableau monotone and ends in the last column")
{
    WatermelonSpec m{3, 10, 2};
    enumerate_families(m.walkers(), [&](const PathFamily& f) {
        SemistandardTableau tab = walkers_to_tableau(m, f);
        long l = removable_contacts(tab);
        for (long round = 0; round < l; ++round) {
            std::size_t r = tab.columns[0].size();
            while (r-- > 0)
                if (tab.columns[0][r] == static_cast<int>(2 * r + 1)) break;
            Cell end = jt_slide(tab, {r, 0}, [](const SemistandardTableau& t, Cell s) { CHECK(monotone_ignoring(t, s)); });
            CHECK((end == Cell{tab.columns.back().size() - 1, tab.columns.size() - 1}));
            tab.columns.back().pop_back();
        }
        return true;
    });
}
