#include <doctest.h>

#include <fstream>
#include <random>

#include "fixture.hpp"
#include "oracles.hpp"
#include "snq/curate.hpp"
#include "snq/workload.hpp"

using namespace snq;
using namespace snq::testing;

namespace {

SocialNetwork load_model(const FixtureModel& model) {
    TempDir dir;
    write_fixture(model, dir.path());
    return load_directory(dir.path());
}

std::filesystem::path write_lines(const TempDir& dir, const char* name,
                                  const std::string& content) {
    const auto path = dir.path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE("runner") {

TEST_CASE("query line grammar") {
    const auto q1 = parse_query_line("query1(576, 400, -1)", 1);
    const auto* a = std::get_if<Query1>(&q1);
    REQUIRE(a);
    CHECK(a->person1 == 576);
    CHECK(a->person2 == 400);
    CHECK(a->reply_threshold == -1);

    const auto q3 = parse_query_line("query3(3, 2, Asia)", 1);
    const auto* c = std::get_if<Query3>(&q3);
    REQUIRE(c);
    CHECK(c->k == 3);
    CHECK(c->max_hops == 2);
    CHECK(c->place == "Asia");

    const auto q2 = parse_query_line("query2(4,1985-05-20)", 1);
    const auto* b = std::get_if<Query2>(&q2);
    REQUIRE(b);
    CHECK(b->k == 4);
    CHECK(b->min_birthday == Date{1985, 5, 20});

    // the trailing name argument is greedy and keeps embedded commas
    const auto q4 = parse_query_line("query4(7, Washington, D.C.)", 1);
    const auto* d = std::get_if<Query4>(&q4);
    REQUIRE(d);
    CHECK(d->k == 7);
    CHECK(d->tag == "Washington, D.C.");

    // names pass through byte-for-byte, including non-ASCII
    const auto q3u = parse_query_line("query3(2, 3, K\xc3\xb6ln)", 1);
    CHECK(std::get<Query3>(q3u).place == "K\xc3\xb6ln");
}

TEST_CASE("query line errors") {
    CHECK_THROWS_AS(parse_query_line("query5(1)", 3), UnknownQueryTypeError);
    CHECK_THROWS_AS(parse_query_line("frobnicate(1)", 3), UnknownQueryTypeError);
    CHECK_THROWS_AS(parse_query_line("query1(1, 2)", 3), QuerySyntaxError);
    CHECK_THROWS_AS(parse_query_line("query1(1, 2, x)", 3), QuerySyntaxError);
    CHECK_THROWS_AS(parse_query_line("query1(1, 2, -2)", 3), QuerySyntaxError);
    CHECK_THROWS_AS(parse_query_line("query2(0, 1990-01-01)", 3), QuerySyntaxError);
    CHECK_THROWS_AS(parse_query_line("query2(1, 1990-13-01)", 3), QuerySyntaxError);
    CHECK_THROWS_AS(parse_query_line("query3(1, 2, Asia", 3), QuerySyntaxError);
    CHECK_THROWS_AS(parse_query_line("query1", 3), QuerySyntaxError);
    try {
        parse_query_line("query9(1)", 17);
        FAIL("expected UnknownQueryTypeError");
    } catch (const QuerySyntaxError& e) {
        CHECK(e.line == 17);
    }
}

TEST_CASE("format and parse round-trip") {
    const QueryInstance queries[] = {
        Query1{10, 20, -1},
        Query1{7, 7, 3},
        Query2{5, Date{1987, 11, 2}},
        Query3{2, 4, "United States"},
        Query4{9, "Name, with commas"},
    };
    for (const auto& q : queries) {
        const auto text = format_query(q);
        const auto parsed = parse_query_line(text, 1);
        CHECK(format_query(parsed) == text);
    }
}

TEST_CASE("parse_query_file skips blank lines and tracks line numbers") {
    TempDir dir;
    const auto path = write_lines(dir, "q.txt",
                                  "query1(1, 2, -1)\n"
                                  "\n"
                                  "  query2(3, 1990-01-01)  \n");
    const auto workload = parse_query_file(path);
    REQUIRE(workload.size() == 2);
    CHECK(workload.lines == std::vector<std::size_t>{1, 3});
}

TEST_CASE("run_workload keeps input order and is worker-count independent") {
    const auto model = random_fixture({.persons = 50, .knows_prob = 0.08, .seed = 51});
    const SocialNetwork net = load_model(model);

    Workload workload;
    std::mt19937_64 rng(52);
    for (int i = 0; i < 60; ++i) {
        switch (i % 4) {
            case 0:
                workload.queries.push_back(Query1{model.persons[rng() % 50].id,
                                                  model.persons[rng() % 50].id,
                                                  std::int64_t(rng() % 3) - 1});
                break;
            case 1: workload.queries.push_back(Query2{3, Date{1990, 1, 1}}); break;
            case 2: workload.queries.push_back(Query3{3, 2, "Asia"}); break;
            case 3: workload.queries.push_back(Query4{3, model.tags[rng() % model.tags.size()].name}); break;
        }
        workload.lines.push_back(i + 1);
    }

    RunTimings timings;
    const auto serial = run_workload(net, workload, 1, &timings);
    REQUIRE(serial.size() == workload.size());
    CHECK(timings.count_by_type[0] == 15);
    CHECK(timings.wall_seconds >= 0.0);

    for (std::size_t i = 0; i < workload.size(); ++i)
        CHECK(serial[i] == evaluate(net, workload.queries[i]));

    for (const unsigned workers : {2u, 8u}) CHECK(run_workload(net, workload, workers) == serial);
}

TEST_CASE("run_workload on an empty workload") {
    const SocialNetwork net = load_model(random_fixture({.persons = 5, .seed = 53}));
    CHECK(run_workload(net, Workload{}, 4).empty());
}

TEST_CASE("workload errors carry the source line") {
    const auto model = random_fixture({.persons = 10, .seed = 54});
    const SocialNetwork net = load_model(model);
    Workload workload;
    workload.queries.push_back(Query2{1, Date{1990, 1, 1}});
    workload.queries.push_back(Query1{424242, 424243, -1});  // unknown persons
    workload.lines = {1, 5};

    for (const unsigned workers : {1u, 4u}) {
        try {
            run_workload(net, workload, workers);
            FAIL("expected WorkloadError");
        } catch (const WorkloadError& e) {
            CHECK(e.line == 5);
        }
    }
}

TEST_CASE("verify_answers strips comments and trailing blanks") {
    TempDir dir;
    const auto expected = write_lines(dir, "answers.txt",
                                      "3 % via node 42\n"
                                      "4\n"
                                      "alpha beta  % top tags\n");
    const std::vector<QueryResult> actual{"3", "4", "alpha beta"};
    const auto report = verify_answers(actual, expected);
    CHECK(report.ok());
    CHECK(report.matched == 3);
    CHECK(report.compared == 3);
}

TEST_CASE("verify_answers reports mismatches with both strings") {
    TempDir dir;
    const auto expected = write_lines(dir, "answers.txt", "3\n5\n");
    const std::vector<QueryResult> actual{"3", "4"};
    const auto report = verify_answers(actual, expected);
    CHECK_FALSE(report.ok());
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].line == 2);
    CHECK(report.mismatches[0].expected == "5");
    CHECK(report.mismatches[0].actual == "4");
}

TEST_CASE("verify_answers counts lines") {
    TempDir dir;
    const auto expected = write_lines(dir, "answers.txt", "3\n4\n5\n");
    const std::vector<QueryResult> actual{"3", "4"};
    const auto report = verify_answers(actual, expected);
    CHECK_FALSE(report.ok());
    CHECK(report.line_count_mismatch == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(report.compared == 2);
    CHECK(report.matched == 2);
}

TEST_CASE("workload round-trips through its own answers") {
    const auto model = random_fixture({.persons = 40, .seed = 55});
    const SocialNetwork net = load_model(model);
    Workload workload;
    workload.queries = {Query2{3, Date{1989, 1, 1}}, Query3{2, 2, "Australia"},
                        Query4{3, model.tags[0].name}};
    workload.lines = {1, 2, 3};
    const auto results = run_workload(net, workload, 2);

    TempDir dir;
    std::string text;
    for (const auto& line : results) text += line + "\n";
    const auto path = write_lines(dir, "answers.txt", text);
    CHECK(verify_answers(results, path).ok());
}

TEST_CASE("curate per-category zero yields nothing") {
    const SocialNetwork net = load_model(random_fixture({.persons = 20, .seed = 56}));
    const auto result = curate_parameters(net, 1, 0);
    CHECK(result.queries.empty());
    CHECK(result.unsatisfiable.empty());
}

TEST_CASE("curate flags unreachable as unsatisfiable on a connected graph") {
    FixtureModel m;
    m.persons = {{1, Date{1990, 1, 1}}, {2, Date{1990, 1, 1}}, {3, Date{1990, 1, 1}}};
    m.knows = {{1, 2}, {2, 3}, {1, 3}};
    m.tags = {{50, "t"}};
    m.places = {{700, "X", "City", std::nullopt}};
    const SocialNetwork net = load_model(m);

    const auto result = curate_parameters(net, 1, 1);
    bool unreachable_flagged = false;
    for (const auto& cat : result.unsatisfiable)
        if (cat == "x=none/unreachable") unreachable_flagged = true;
    CHECK(unreachable_flagged);
}

TEST_CASE("curated query1 parameters really belong to their category") {
    const auto model = random_fixture({.persons = 90, .knows_prob = 0.05, .seed = 57});
    const SocialNetwork net = load_model(model);
    const auto result = curate_parameters(net, 1, 1);
    CHECK(result.queries.size() + result.unsatisfiable.size() == 9);

    for (const auto& q : result.queries) {
        const auto* inst = std::get_if<Query1>(&q);
        REQUIRE(inst);
        const auto d = std::stoll(query1(net, inst->person1, inst->person2,
                                         inst->reply_threshold));
        // every emitted pair re-evaluates into one of the reachability classes
        CHECK((d == -1 || (d >= 1 && d <= 2) || d >= 4));
    }
}

TEST_CASE("curate draws dates and names from the data") {
    const auto model = random_fixture({.persons = 30, .seed = 58});
    const SocialNetwork net = load_model(model);

    for (const int type : {2, 3, 4}) {
        const auto result = curate_parameters(net, type, 2);
        CHECK(result.queries.size() == 6);  // k in {3, 5, 10}, two each
        for (const auto& q : result.queries) {
            // formattable and re-parsable
            const auto text = format_query(q);
            CHECK(format_query(parse_query_line(text, 1)) == text);
        }
    }
    CHECK_THROWS_AS(curate_parameters(net, 7, 1), Error);
}

}  // TEST_SUITE
