#include <doctest.h>

#include <cmath>
#include <string>

#include "uavplace/model.hpp"

using namespace uavplace;

namespace {

Scenario small_valid() {
    Scenario s;
    s.area = {0.0, 10.0, 0.0, 10.0};
    s.k = 2;
    s.users = {{"a", 1.0, 1.0, 1.0},
               {"b", 2.0, 2.0, 2.0},
               {"c", 3.0, 3.0, 1.0},
               {"d", 4.0, 4.0, 3.0},
               {"e", 5.0, 5.0, 1.0}};
    return s;
}

bool mentions(const ValidationResult& r, const std::string& needle) {
    for (const std::string& v : r.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("a well-formed scenario validates cleanly") {
    CHECK(validate_scenario(small_valid()).ok());
}

TEST_CASE("k outside [1, n] is flagged") {
    Scenario s = small_valid();
    s.k = 0;
    CHECK(mentions(validate_scenario(s), "k out of range"));
    s.k = 6;
    CHECK(mentions(validate_scenario(s), "k out of range"));
}

TEST_CASE("non-positive loads are flagged per user") {
    Scenario s = small_valid();
    s.users[1].load = -1.0;
    s.users[3].load = 0.0;
    auto r = validate_scenario(s);
    CHECK(mentions(r, "non-positive load for user 'b'"));
    CHECK(mentions(r, "non-positive load for user 'd'"));
}

TEST_CASE("duplicate ids, stray positions, and bad areas are all collected") {
    Scenario s = small_valid();
    s.users[2].id = "a";
    s.users[3].x = 25.0;
    s.users[4].y = std::nan("");
    auto r = validate_scenario(s);
    CHECK(mentions(r, "duplicate id 'a'"));
    CHECK(mentions(r, "outside area"));
    CHECK(mentions(r, "non-finite position for user 'e'"));
    CHECK(r.violations.size() >= 3);

    s = small_valid();
    s.area = {5.0, 1.0, 0.0, 10.0};
    CHECK(mentions(validate_scenario(s), "invalid area"));
}

TEST_CASE("users on the area boundary are inside") {
    Scenario s = small_valid();
    s.users[0].x = 0.0;
    s.users[0].y = 10.0;
    CHECK(validate_scenario(s).ok());
}

TEST_CASE("median load averages the middle pair for even counts") {
    Scenario s = small_valid();  // loads 1 1 1 2 3
    CHECK(median_load(s) == 1.0);
    s.users.push_back({"f", 6.0, 6.0, 8.0});  // loads 1 1 1 2 3 8
    CHECK(median_load(s) == 1.5);
}

TEST_CASE("canonical user order sorts by id regardless of storage order") {
    Scenario s = small_valid();
    std::swap(s.users[0], s.users[4]);
    std::swap(s.users[1], s.users[3]);
    auto order = order_by_id(s);
    REQUIRE(order.size() == 5);
    for (std::size_t i = 1; i < order.size(); ++i)
        CHECK(s.users[order[i - 1]].id < s.users[order[i]].id);
}
