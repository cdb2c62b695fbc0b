#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "snq/common.hpp"

namespace snq::testing {

// In-memory ground truth for a generated data set. The CSV writer and the
// oracles both consume this model; the engine only ever sees the files.
struct FixtureModel {
    struct Person {
        SparseId id = 0;
        Date birthday;
    };
    struct Tag {
        SparseId id = 0;
        std::string name;
    };
    struct Place {
        SparseId id = 0;
        std::string name;
        std::string kind;  // Continent / Country / City
        std::optional<SparseId> parent;
    };
    struct Organisation {
        SparseId id = 0;
        std::optional<SparseId> place;
    };
    struct Reply {
        SparseId replier = 0;
        SparseId repliee = 0;
        std::uint32_t count = 0;  // comments by replier answering repliee
    };

    std::vector<Person> persons;
    std::vector<std::pair<SparseId, SparseId>> knows;  // undirected, listed once
    std::vector<Reply> replies;                        // directed, may hit non-knows pairs
    std::vector<Tag> tags;
    std::vector<std::pair<SparseId, SparseId>> interests;      // person, tag
    std::vector<SparseId> forums;
    std::vector<std::pair<SparseId, SparseId>> forum_tags;     // forum, tag
    std::vector<std::pair<SparseId, SparseId>> forum_members;  // forum, person
    std::vector<Place> places;
    std::vector<std::pair<SparseId, SparseId>> person_located;  // person, place
    std::vector<Organisation> organisations;
    std::vector<std::pair<SparseId, SparseId>> study_at;  // person, organisation
    std::vector<std::pair<SparseId, SparseId>> work_at;   // person, organisation
};

struct FixtureParams {
    std::uint32_t persons = 100;
    double knows_prob = 0.05;
    std::uint32_t tags = 12;
    std::uint32_t forums = 8;
    std::uint32_t max_reply_count = 4;
    double interest_prob = 0.12;
    double member_prob = 0.18;
    std::uint64_t seed = 1;
};

// Random social network over a fixed three-level place hierarchy that
// contains a Country and a Continent sharing the name "Australia".
FixtureModel random_fixture(const FixtureParams& params);

// Writes the full pipe-delimited dump for `model` into `dir`.
void write_fixture(const FixtureModel& model, const std::filesystem::path& dir);

// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace snq::testing
