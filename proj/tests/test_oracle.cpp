#include "helpers.hpp"
#include "watermelon/oracle.hpp"

#include <doctest.h>

using namespace watermelon;
using testing_support::poly;

namespace {

PathFamily from_codes(std::initializer_list<const char*> codes)
{
    PathFamily f;
    for (const char* c : codes) f.paths.push_back(parse_path_code(c));
    return f;
}

}  // namespace

TEST_CASE("contacts of two sample watermelons")
{
    PathFamily a = from_codes({"33434434", "33344344", "33343444", "33334444"});
    WalkerSpec wa = WatermelonSpec{4, 8, 0}.walkers();
    CHECK(contacts(wa, a) == 3);

    PathFamily b = from_codes({"343343443433", "334333444433", "334333443434", "333343344344", "333343343444"});
    WalkerSpec wb = WatermelonSpec{5, 12, 2}.walkers();
    CHECK(contacts(wb, b) == 4);

    WalkerSpec one{1, 2, {0}, {0}};
    CHECK(contacts(one, from_codes({"34"})) == 2);
    CHECK_THROWS_AS(contacts(one, from_codes({"43"})), DomainError);
}

TEST_CASE("dynamic programming anchors")
{
    CHECK(enumerate_contact_polynomial(WalkerSpec{1, 2, {1}, {1}}) == poly({{0, 1}, {1, 1}}));
    CHECK(enumerate_contact_polynomial(WatermelonSpec{2, 4, 0}.walkers()) == poly({{2, 1}, {3, 2}}));
    CHECK(enumerate_contact_polynomial(WalkerSpec{1, 3, {0}, {1}}) == poly({{1, 1}, {2, 1}}));
}

TEST_CASE("base case t = 0")
{
    CHECK(enumerate_contact_polynomial(WalkerSpec{1, 0, {0}, {0}}) == poly({{1, 1}}));
    CHECK(enumerate_contact_polynomial(WalkerSpec{2, 0, {1, 3}, {1, 3}}) == poly({{0, 1}}));
    CHECK(enumerate_contact_polynomial(WalkerSpec{2, 0, {0, 2}, {0, 2}}) == poly({{1, 1}}));
}

TEST_CASE("family enumeration anchors")
{
    auto one = list_families(WalkerSpec{1, 2, {0}, {0}});
    REQUIRE(one.size() == 1);
    CHECK(path_code(one[0].paths[0]) == "34");
    CHECK(list_families(WatermelonSpec{2, 4, 0}.walkers()).size() == 3);
    CHECK(list_families(WatermelonSpec{3, 5, 5}.walkers()).size() == 1);
}

TEST_CASE("family stream agrees with the DP")
{
    testing_support::for_watermelons(3, 10, 4, [](int n, int t, int y) {
        WalkerSpec w = WatermelonSpec{n, t, y}.walkers();
        ContactPolynomial sum;
        std::vector<int> prev;
        long count = 0;
        enumerate_families(w, [&](const PathFamily& f) {
            CHECK(family_is_valid(w.a, w.e, f));
            std::vector<int> key;
            for (const auto& p : f.paths) key.insert(key.end(), p.begin(), p.end());
            // up (+1) sorts before down, so keys decrease lexicographically
            if (count > 0) CHECK(key < prev);
            prev = key;
            sum.add_term(contacts(w, f), 1);
            ++count;
            return true;
        });
        ContactPolynomial dp = enumerate_contact_polynomial(w);
        CHECK(sum == dp);
        CHECK(poly_eval(dp, Rational(1)) == count);
    });
}

TEST_CASE("general start and end heights")
{
    WalkerSpec w{2, 2, {1, 3}, {1, 3}};
    // lower up-step meets upper down-step, so three of the four pairs survive
    CHECK(enumerate_contact_polynomial(w) == poly({{0, 1}, {1, 2}}));
    long count = 0;
    enumerate_families(w, [&](const PathFamily&) { return ++count < 100; });
    CHECK(count == 3);
}
