#include "fixture.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <unordered_map>

#include "snq/csv.hpp"

namespace snq::testing {

namespace {

struct PlaceSpec {
    const char* name;
    const char* kind;
    int parent;  // index into this table, -1 for roots
};

// Two roots; "Australia" is deliberately both a Continent and a Country.
constexpr PlaceSpec kPlaces[] = {
    {"Australia", "Continent", -1},  // 0
    {"Asia", "Continent", -1},       // 1
    {"Australia", "Country", 0},     // 2
    {"India", "Country", 1},         // 3
    {"China", "Country", 1},         // 4
    {"Sydney", "City", 2},           // 5
    {"Melbourne", "City", 2},        // 6
    {"Delhi", "City", 3},            // 7
    {"Mumbai", "City", 3},           // 8
    {"Beijing", "City", 4},          // 9
    {"Shanghai", "City", 4},         // 10
};

constexpr const char* kTagStems[] = {"anthem",  "basalt", "cobalt", "dynamo", "ember",
                                     "fresco",  "garnet", "helium", "indigo", "jasper",
                                     "krypton", "lichen", "meteor", "nectar", "opal"};

}  // namespace

FixtureModel random_fixture(const FixtureParams& params) {
    std::mt19937_64 rng(params.seed);
    FixtureModel model;

    // persons with shuffled non-consecutive sparse ids
    std::vector<SparseId> ids;
    ids.reserve(params.persons * 3);
    for (SparseId i = 0; i < params.persons * 3; ++i) ids.push_back(100 + i);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::uniform_int_distribution<int> year(1980, 1999);
    std::uniform_int_distribution<int> month(1, 12);
    std::uniform_int_distribution<int> day(1, 28);
    for (std::uint32_t i = 0; i < params.persons; ++i) {
        model.persons.push_back({ids[i], Date{static_cast<std::uint16_t>(year(rng)),
                                              static_cast<std::uint8_t>(month(rng)),
                                              static_cast<std::uint8_t>(day(rng))}});
    }

    std::bernoulli_distribution knows_edge(params.knows_prob);
    for (std::uint32_t i = 0; i < params.persons; ++i)
        for (std::uint32_t j = i + 1; j < params.persons; ++j)
            if (knows_edge(rng)) model.knows.emplace_back(model.persons[i].id, model.persons[j].id);

    // reply counts per direction of each knows pair, plus a few stray reply
    // relations between pairs that do not know each other
    std::uniform_int_distribution<std::uint32_t> reply_count(0, params.max_reply_count);
    for (const auto& [a, b] : model.knows) {
        if (const auto c = reply_count(rng)) model.replies.push_back({a, b, c});
        if (const auto c = reply_count(rng)) model.replies.push_back({b, a, c});
    }
    if (params.persons >= 2) {
        std::set<std::pair<SparseId, SparseId>> knows_set;
        for (const auto& [a, b] : model.knows) {
            knows_set.insert({a, b});
            knows_set.insert({b, a});
        }
        std::uniform_int_distribution<std::uint32_t> pick(0, params.persons - 1);
        for (int i = 0; i < 5; ++i) {
            const SparseId a = model.persons[pick(rng)].id;
            const SparseId b = model.persons[pick(rng)].id;
            if (a != b && !knows_set.count({a, b})) model.replies.push_back({a, b, 1 + i % 3u});
        }
    }

    // tags; roughly one in six reuses an earlier name
    for (std::uint32_t t = 0; t < params.tags; ++t) {
        std::string name = kTagStems[t % std::size(kTagStems)];
        if (t >= std::size(kTagStems)) name += "_" + std::to_string(t / std::size(kTagStems));
        if (t > 2 && t % 6 == 0) name = model.tags[t - 2].name;
        model.tags.push_back({5000 + t * 3, name});
    }

    std::bernoulli_distribution interested(params.interest_prob);
    for (const auto& person : model.persons)
        for (const auto& tag : model.tags)
            if (interested(rng)) model.interests.emplace_back(person.id, tag.id);

    std::uniform_int_distribution<std::size_t> any_tag(0, model.tags.empty() ? 0 : model.tags.size() - 1);
    std::bernoulli_distribution member(params.member_prob);
    for (std::uint32_t f = 0; f < params.forums; ++f) {
        const SparseId forum = 9000 + f * 7;
        model.forums.push_back(forum);
        model.forum_tags.emplace_back(forum, model.tags[any_tag(rng)].id);
        if (f % 3 == 0) model.forum_tags.emplace_back(forum, model.tags[any_tag(rng)].id);
        for (const auto& person : model.persons)
            if (member(rng)) model.forum_members.emplace_back(forum, person.id);
    }

    // places and organisations
    for (std::size_t p = 0; p < std::size(kPlaces); ++p) {
        const auto& spec = kPlaces[p];
        model.places.push_back({700 + p, spec.name, spec.kind,
                                spec.parent < 0 ? std::nullopt
                                                : std::optional<SparseId>(700 + spec.parent)});
    }
    std::uniform_int_distribution<std::size_t> any_city(5, std::size(kPlaces) - 1);
    for (const auto& person : model.persons)
        model.person_located.emplace_back(person.id, model.places[any_city(rng)].id);

    std::uniform_int_distribution<std::size_t> any_place(2, std::size(kPlaces) - 1);
    for (int o = 0; o < 6; ++o)
        model.organisations.push_back({SparseId(400 + o), model.places[any_place(rng)].id});
    std::uniform_int_distribution<std::size_t> any_org(0, model.organisations.size() - 1);
    std::bernoulli_distribution enrolled(0.3);
    for (const auto& person : model.persons) {
        if (enrolled(rng)) model.study_at.emplace_back(person.id, model.organisations[any_org(rng)].id);
        if (enrolled(rng)) model.work_at.emplace_back(person.id, model.organisations[any_org(rng)].id);
    }

    return model;
}

void write_fixture(const FixtureModel& model, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw IoError(std::string("cannot create ") + name);
        return out;
    };

    {
        auto out = open("person.csv");
        out << "id|firstName|birthday\n";
        for (const auto& p : model.persons)
            out << p.id << "|p" << p.id << "|" << format_date(p.birthday) << "\n";
    }
    {
        auto out = open("person_knows_person.csv");
        out << "Person.id|Person.id\n";
        for (std::size_t i = 0; i < model.knows.size(); ++i) {
            const auto& [a, b] = model.knows[i];
            out << a << "|" << b << "\n";
            // occasionally list the reverse direction too; the loader dedups
            if (i % 5 == 0) out << b << "|" << a << "\n";
        }
    }
    {
        // one base comment per person; replies attach to the repliee's base
        auto creator = open("comment_hasCreator_person.csv");
        auto reply_of = open("comment_replyOf_comment.csv");
        creator << "Comment.id|Person.id\n";
        reply_of << "Comment.id|Comment.id\n";
        std::uint64_t next_comment = 10'000'000;
        std::unordered_map<SparseId, std::uint64_t> base;
        for (const auto& p : model.persons) {
            base[p.id] = next_comment;
            creator << next_comment << "|" << p.id << "\n";
            ++next_comment;
        }
        for (const auto& r : model.replies) {
            for (std::uint32_t c = 0; c < r.count; ++c) {
                creator << next_comment << "|" << r.replier << "\n";
                reply_of << next_comment << "|" << base.at(r.repliee) << "\n";
                ++next_comment;
            }
        }
    }
    {
        auto out = open("tag.csv");
        out << "id|name|url\n";
        for (const auto& t : model.tags)
            out << t.id << "|" << t.name << "|http://example.org/" << t.id << "\n";
    }
    {
        auto out = open("person_hasInterest_tag.csv");
        out << "Person.id|Tag.id\n";
        for (const auto& [p, t] : model.interests) out << p << "|" << t << "\n";
    }
    {
        auto out = open("forum_hasTag_tag.csv");
        out << "Forum.id|Tag.id\n";
        for (const auto& [f, t] : model.forum_tags) out << f << "|" << t << "\n";
    }
    {
        auto out = open("forum_hasMember_person.csv");
        out << "Forum.id|Person.id|joinDate\n";
        for (const auto& [f, p] : model.forum_members)
            out << f << "|" << p << "|2012-01-01T00:00:00Z\n";
    }
    {
        auto out = open("place.csv");
        out << "id|name|url|type\n";
        for (const auto& p : model.places)
            out << p.id << "|" << p.name << "|http://example.org/" << p.id << "|" << p.kind
                << "\n";
    }
    {
        auto out = open("place_isPartOf_place.csv");
        out << "Place.id|Place.id\n";
        for (const auto& p : model.places)
            if (p.parent) out << p.id << "|" << *p.parent << "\n";
    }
    {
        auto out = open("person_isLocatedIn_place.csv");
        out << "Person.id|Place.id\n";
        for (const auto& [p, pl] : model.person_located) out << p << "|" << pl << "\n";
    }
    {
        auto out = open("organisation_isLocatedIn_place.csv");
        out << "Organisation.id|Place.id\n";
        for (const auto& o : model.organisations)
            if (o.place) out << o.id << "|" << *o.place << "\n";
    }
    {
        auto out = open("person_studyAt_organisation.csv");
        out << "Person.id|Organisation.id|classYear\n";
        for (const auto& [p, o] : model.study_at) out << p << "|" << o << "|2010\n";
    }
    {
        auto out = open("person_workAt_organisation.csv");
        out << "Person.id|Organisation.id|workFrom\n";
        for (const auto& [p, o] : model.work_at) out << p << "|" << o << "|2011\n";
    }
}

TempDir::TempDir() {
    static std::atomic<std::uint64_t> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("snq_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

}  // namespace snq::testing
