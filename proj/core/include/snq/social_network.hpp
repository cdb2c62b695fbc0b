#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snq/common.hpp"
#include "snq/csr.hpp"
#include "snq/csv.hpp"
#include "snq/place_hierarchy.hpp"
#include "snq/vertex_mask.hpp"

namespace snq {

enum class PlaceKind : std::uint8_t { Continent, Country, City };

PlaceKind parse_place_kind(std::string_view text);

// Number of Comments by `src` in reply to Comments by `dst`, for an ordered
// pair of persons that know each other. Pairs with count 0 are omitted.
struct ReplyCountEdge {
    DenseId src = 0;
    DenseId dst = 0;
    std::uint32_t count = 0;
};

// Persons ordered ascending by (birthday, dense id).
struct BirthdayIndex {
    std::vector<DenseId> persons;  // permutation of all person indices
    std::vector<Date> birthdays;   // parallel sort keys

    VertexMask born_on_or_after(Date d) const;
};

// Immutable post-load container of all entity tables, indexes, and the
// knows adjacency. Safe for unrestricted concurrent reads.
struct SocialNetwork {
    // persons
    DenseIdMap person_ids;
    std::vector<Date> birthdays;

    // tags
    DenseIdMap tag_ids;
    std::vector<std::string> tag_names;
    std::unordered_map<std::string, std::vector<DenseId>> tags_by_name;

    // places
    DenseIdMap place_ids;
    std::vector<std::string> place_names;
    std::vector<PlaceKind> place_kinds;
    PlaceHierarchy places;

    // organisations and forums carry no attributes of their own
    DenseIdMap organisation_ids;
    DenseIdMap forum_ids;

    // Person-knows-Person, symmetric; edge_annotation holds the directed
    // reply count, mutual_reply_min its per-edge two-way minimum.
    Csr knows;
    std::vector<std::uint32_t> mutual_reply_min;

    // indexes
    BirthdayIndex birthday_index;
    AdjacencyIndex interests_of_person;   // person -> tags
    AdjacencyIndex persons_with_interest; // tag -> persons
    AdjacencyIndex forums_with_tag;       // tag -> forums
    AdjacencyIndex members_of_forum;      // forum -> persons
    AdjacencyIndex persons_located_at;    // place -> persons (direct)
    AdjacencyIndex orgs_located_at;       // place -> organisations (direct)
    AdjacencyIndex persons_of_org;        // organisation -> persons (study or work)

    DenseId person_count() const { return person_ids.size(); }
};

// Parses the pipe-delimited dump in `dir` (see file list in the README) and
// builds the network: dense relabelling in first-appearance order, knows
// symmetrization, eager reply counts, and all query indexes.
SocialNetwork load_directory(const std::filesystem::path& dir);

// For each ordered knows-pair (a,b): how many Comments by a reply to
// Comments by b. Tables are (Comment.id, Person.id) and
// (Comment.id, Comment.id) projections; counts for pairs that do not know
// each other are discarded. Throws DanglingReferenceError for unknown ids.
std::vector<ReplyCountEdge> compute_reply_counts(const CsvTable& comment_creator,
                                                 const CsvTable& comment_reply_of,
                                                 const DenseIdMap& person_ids,
                                                 const Csr& knows);

// --- vertex selections ----------------------------------------------------

// Persons located in a place with this name, or studying/working at an
// organisation located there; containment is transitive over partOf, and
// all places sharing the name are unioned. Unknown name -> empty mask.
VertexMask persons_in_place(const SocialNetwork& net, std::string_view place_name);

VertexMask persons_born_on_or_after(const SocialNetwork& net, Date d);

// Members of at least one forum that has a tag with this name.
VertexMask persons_in_forums_with_tag(const SocialNetwork& net, std::string_view tag_name);

VertexMask persons_interested_in_tag(const SocialNetwork& net, DenseId tag);

// --- edge selection ---------------------------------------------------------

// Keeps knows edge (a,b) iff both directed reply counts exceed `threshold`.
// threshold = -1 accepts every edge.
struct ReplyEdgePredicate {
    const std::uint32_t* mutual_min = nullptr;  // may be null: all counts zero
    std::int64_t threshold = -1;

    bool operator()(DenseId, DenseId, std::uint64_t edge_idx) const {
        const std::int64_t count = mutual_min ? mutual_min[edge_idx] : 0;
        return count > threshold;
    }
};

ReplyEdgePredicate induce_by_reply_threshold(const SocialNetwork& net, std::int64_t threshold);

}  // namespace snq
