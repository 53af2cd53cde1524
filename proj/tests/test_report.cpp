#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ladprob/report.hpp"

using namespace ladprob;

namespace {

lad::GroupedInstance running_example() {
    std::istringstream in("a,b,c,d,e,f,g,h,group\n"
                          "0,1,0,1,0,1,1,0,1\n"
                          "1,1,0,1,1,0,0,1,1\n"
                          "0,1,1,0,1,0,0,1,1\n"
                          "1,0,1,0,1,0,1,1,2\n"
                          "0,0,0,1,1,1,0,0,2\n"
                          "1,1,0,1,0,1,0,1,2\n"
                          "0,0,1,0,1,0,1,0,2\n");
    return lad::load_instance(in);
}

} // namespace

TEST_CASE("analyze_instance covers the five questions") {
    auto inst = running_example();
    auto rep = report::analyze_instance(inst, {5, 6});
    std::set<std::string> questions;
    for (auto& e : rep.entries) questions.insert(e.question);
    for (const char* q : report::kQuestions) CHECK(questions.count(q));
    for (auto& e : rep.entries)
        if (e.value) CHECK(!e.conditioning.empty());
}

TEST_CASE("unsatisfiable instance is rejected") {
    std::istringstream in("x,y,group\n1,0,1\n1,0,2\n");
    auto inst = lad::load_instance(in);
    CHECK_THROWS_AS(report::analyze_instance(inst, {0}), unsatisfiable_instance);
}

TEST_CASE("json rendering is idempotent and carries exact rationals") {
    auto inst = running_example();
    auto rep = report::analyze_instance(inst, {5, 6});
    auto once = report::render_json(rep);
    auto parsed = nlohmann::json::parse(once);
    CHECK(parsed.dump(2) + "\n" == once);
    bool saw_rational = false;
    for (auto& e : parsed["entries"])
        if (e.contains("probability")) {
            saw_rational = true;
            CHECK(e["probability"].contains("numerator"));
            CHECK(e["probability"].contains("denominator"));
        }
    CHECK(saw_rational);
}

TEST_CASE("text and csv render every entry with its question") {
    auto inst = running_example();
    auto rep = report::analyze_instance(inst, {5, 6});
    auto text = report::render_text(rep);
    auto csv = report::render_csv(rep);
    for (auto& e : rep.entries) {
        CHECK(text.find("[" + e.question + "]") != std::string::npos);
        CHECK(csv.find("entry," + e.question) != std::string::npos);
    }
    CHECK(csv.rfind("kind,question,", 0) == 0);
}

TEST_CASE("rendered probabilities re-parse within one printed ulp") {
    auto inst = running_example();
    auto rep = report::analyze_instance(inst, {5, 6});
    for (auto& e : rep.entries) {
        if (!e.value || e.value->is_zero() || e.value->is_one()) continue;
        std::string s = to_decimal(*e.value, 4);
        if (s.rfind("1 - ", 0) == 0) continue;
        double printed = std::stod(s);
        double exact = to_double(*e.value);
        // one unit in the last of 4 significant digits
        CHECK(std::abs(printed - exact) <= 1.0001 * std::abs(exact) * 1e-3);
    }
}
