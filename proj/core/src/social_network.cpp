#include "snq/social_network.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace snq {

namespace {

std::uint64_t parse_u64(const std::string& field, const std::string& file, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw DataError(file + ":" + std::to_string(line) + ": not an integer: '" + field + "'");
    return value;
}

// Data rows start on line 2; blank lines are rare enough to ignore here.
std::size_t row_line(std::size_t row_index) { return row_index + 2; }

DenseId resolve(const DenseIdMap& map, const std::string& field, const std::string& file,
                std::size_t row, const char* entity) {
    const SparseId id = parse_u64(field, file, row_line(row));
    const auto dense = map.find(id);
    if (!dense)
        throw DanglingReferenceError(file, row_line(row),
                                     std::string("unknown ") + entity + " id " + field);
    return *dense;
}

}  // namespace

PlaceKind parse_place_kind(std::string_view text) {
    if (text == "continent" || text == "Continent") return PlaceKind::Continent;
    if (text == "country" || text == "Country") return PlaceKind::Country;
    if (text == "city" || text == "City") return PlaceKind::City;
    throw DataError("unknown place kind '" + std::string(text) + "'");
}

VertexMask BirthdayIndex::born_on_or_after(Date d) const {
    VertexMask mask(persons.size());
    const auto begin = std::lower_bound(birthdays.begin(), birthdays.end(), d);
    for (auto it = begin; it != birthdays.end(); ++it)
        mask.set(persons[static_cast<std::size_t>(it - birthdays.begin())]);
    return mask;
}

std::vector<ReplyCountEdge> compute_reply_counts(const CsvTable& comment_creator,
                                                 const CsvTable& comment_reply_of,
                                                 const DenseIdMap& person_ids,
                                                 const Csr& knows) {
    std::unordered_map<SparseId, DenseId> creator_of;
    creator_of.reserve(comment_creator.rows.size());
    for (std::size_t i = 0; i < comment_creator.rows.size(); ++i) {
        const auto& row = comment_creator.rows[i];
        const SparseId comment = parse_u64(row[0], comment_creator.source, row_line(i));
        const DenseId person = resolve(person_ids, row[1], comment_creator.source, i, "person");
        if (!creator_of.emplace(comment, person).second)
            throw DataError(comment_creator.source + ":" + std::to_string(row_line(i)) +
                            ": comment " + row[0] + " has more than one creator");
    }

    auto creator = [&](const std::string& field, std::size_t row) {
        const SparseId comment = parse_u64(field, comment_reply_of.source, row_line(row));
        const auto it = creator_of.find(comment);
        if (it == creator_of.end())
            throw DanglingReferenceError(comment_reply_of.source, row_line(row),
                                         "unknown comment id " + field);
        return it->second;
    };

    std::vector<std::uint32_t> counts(knows.edge_count(), 0);
    for (std::size_t i = 0; i < comment_reply_of.rows.size(); ++i) {
        const auto& row = comment_reply_of.rows[i];
        const DenseId replier = creator(row[0], i);
        const DenseId repliee = creator(row[1], i);
        if (const auto edge = knows.edge_index(replier, repliee)) ++counts[*edge];
    }

    std::vector<ReplyCountEdge> result;
    for (DenseId v = 0; v < knows.n; ++v) {
        for (auto e = knows.offsets[v]; e < knows.offsets[v + 1]; ++e) {
            if (counts[e] > 0) result.push_back({v, knows.neighbors[e], counts[e]});
        }
    }
    return result;
}

SocialNetwork load_directory(const std::filesystem::path& dir) {
    SocialNetwork net;

    // persons
    {
        const auto table = parse_csv(dir / "person.csv", {"id", "birthday"});
        net.birthdays.reserve(table.rows.size());
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            const SparseId id = parse_u64(row[0], table.source, row_line(i));
            if (net.person_ids.find(id))
                throw DataError(table.source + ":" + std::to_string(row_line(i)) +
                                ": duplicate person id " + row[0]);
            net.person_ids.add(id);
            net.birthdays.push_back(parse_date(row[1]));
        }
    }
    const DenseId n = net.person_count();

    // knows edges, symmetrized
    {
        const auto table = parse_csv(dir / "person_knows_person.csv", {"Person.id", "Person.id"});
        std::vector<Edge> edges;
        edges.reserve(table.rows.size() * 2);
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const DenseId a = resolve(net.person_ids, table.rows[i][0], table.source, i, "person");
            const DenseId b = resolve(net.person_ids, table.rows[i][1], table.source, i, "person");
            edges.push_back({a, b, 0});
            edges.push_back({b, a, 0});
        }
        net.knows = build_csr(n, edges);
    }

    // reply counts onto the knows edges
    {
        const auto creator = parse_csv(dir / "comment_hasCreator_person.csv",
                                       {"Comment.id", "Person.id"});
        const auto reply_of = parse_csv(dir / "comment_replyOf_comment.csv",
                                        {"Comment.id", "Comment.id"});
        const auto reply_counts = compute_reply_counts(creator, reply_of, net.person_ids, net.knows);
        net.knows.edge_annotation.assign(net.knows.edge_count(), 0);
        for (const auto& rce : reply_counts) {
            const auto edge = net.knows.edge_index(rce.src, rce.dst);
            assert(edge.has_value());
            net.knows.edge_annotation[*edge] = rce.count;
        }
        net.mutual_reply_min = mutual_annotation_min(net.knows);
    }

    // tags
    {
        const auto table = parse_csv(dir / "tag.csv", {"id", "name"});
        net.tag_names.reserve(table.rows.size());
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            const SparseId id = parse_u64(row[0], table.source, row_line(i));
            if (net.tag_ids.find(id))
                throw DataError(table.source + ":" + std::to_string(row_line(i)) +
                                ": duplicate tag id " + row[0]);
            if (row[1].empty())
                throw DataError(table.source + ":" + std::to_string(row_line(i)) +
                                ": empty tag name");
            const DenseId dense = net.tag_ids.add(id);
            net.tag_names.push_back(row[1]);
            net.tags_by_name[row[1]].push_back(dense);
        }
    }

    // interests, both directions
    {
        const auto table = parse_csv(dir / "person_hasInterest_tag.csv", {"Person.id", "Tag.id"});
        std::vector<std::pair<DenseId, DenseId>> person_tag;
        std::vector<std::pair<DenseId, DenseId>> tag_person;
        person_tag.reserve(table.rows.size());
        tag_person.reserve(table.rows.size());
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const DenseId p = resolve(net.person_ids, table.rows[i][0], table.source, i, "person");
            const DenseId t = resolve(net.tag_ids, table.rows[i][1], table.source, i, "tag");
            person_tag.emplace_back(p, t);
            tag_person.emplace_back(t, p);
        }
        net.interests_of_person = AdjacencyIndex::build(n, std::move(person_tag));
        net.persons_with_interest = AdjacencyIndex::build(net.tag_ids.size(), std::move(tag_person));
    }

    // forums; there is no forum attribute file, so ids are discovered from
    // the two edge files in this order
    {
        const auto has_tag = parse_csv(dir / "forum_hasTag_tag.csv", {"Forum.id", "Tag.id"});
        std::vector<std::pair<DenseId, DenseId>> tag_forum;
        tag_forum.reserve(has_tag.rows.size());
        for (std::size_t i = 0; i < has_tag.rows.size(); ++i) {
            const SparseId fid = parse_u64(has_tag.rows[i][0], has_tag.source, row_line(i));
            const DenseId f = net.forum_ids.add(fid);
            const DenseId t = resolve(net.tag_ids, has_tag.rows[i][1], has_tag.source, i, "tag");
            tag_forum.emplace_back(t, f);
        }

        const auto members = parse_csv(dir / "forum_hasMember_person.csv",
                                       {"Forum.id", "Person.id"});
        std::vector<std::pair<DenseId, DenseId>> forum_person;
        forum_person.reserve(members.rows.size());
        for (std::size_t i = 0; i < members.rows.size(); ++i) {
            const SparseId fid = parse_u64(members.rows[i][0], members.source, row_line(i));
            const DenseId f = net.forum_ids.add(fid);
            const DenseId p = resolve(net.person_ids, members.rows[i][1], members.source, i,
                                      "person");
            forum_person.emplace_back(f, p);
        }

        net.forums_with_tag = AdjacencyIndex::build(net.tag_ids.size(), std::move(tag_forum));
        net.members_of_forum = AdjacencyIndex::build(net.forum_ids.size(), std::move(forum_person));
    }

    // places
    {
        const auto table = parse_csv(dir / "place.csv", {"id", "name", "type"});
        net.place_names.reserve(table.rows.size());
        net.place_kinds.reserve(table.rows.size());
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            const SparseId id = parse_u64(row[0], table.source, row_line(i));
            if (net.place_ids.find(id))
                throw DataError(table.source + ":" + std::to_string(row_line(i)) +
                                ": duplicate place id " + row[0]);
            net.place_ids.add(id);
            net.place_names.push_back(row[1]);
            net.place_kinds.push_back(parse_place_kind(row[2]));
        }

        const auto part_of = parse_csv(dir / "place_isPartOf_place.csv", {"Place.id", "Place.id"});
        std::vector<std::optional<DenseId>> parents(net.place_ids.size());
        for (std::size_t i = 0; i < part_of.rows.size(); ++i) {
            const DenseId child = resolve(net.place_ids, part_of.rows[i][0], part_of.source, i,
                                          "place");
            const DenseId parent = resolve(net.place_ids, part_of.rows[i][1], part_of.source, i,
                                           "place");
            if (parents[child] && *parents[child] != parent)
                throw DataError(part_of.source + ":" + std::to_string(row_line(i)) + ": place " +
                                part_of.rows[i][0] + " has two parents");
            parents[child] = parent;
        }
        net.places = PlaceHierarchy::build(parents, net.place_names);
    }

    // person and organisation locations
    {
        const auto located = parse_csv(dir / "person_isLocatedIn_place.csv",
                                       {"Person.id", "Place.id"});
        std::vector<std::pair<DenseId, DenseId>> place_person;
        place_person.reserve(located.rows.size());
        for (std::size_t i = 0; i < located.rows.size(); ++i) {
            const DenseId p = resolve(net.person_ids, located.rows[i][0], located.source, i,
                                      "person");
            const DenseId pl = resolve(net.place_ids, located.rows[i][1], located.source, i,
                                       "place");
            place_person.emplace_back(pl, p);
        }
        net.persons_located_at = AdjacencyIndex::build(net.place_ids.size(),
                                                       std::move(place_person));

        const auto org_located = parse_csv(dir / "organisation_isLocatedIn_place.csv",
                                           {"Organisation.id", "Place.id"});
        std::vector<std::pair<DenseId, DenseId>> place_org;
        place_org.reserve(org_located.rows.size());
        for (std::size_t i = 0; i < org_located.rows.size(); ++i) {
            const SparseId oid = parse_u64(org_located.rows[i][0], org_located.source, row_line(i));
            const DenseId org = net.organisation_ids.add(oid);
            const DenseId pl = resolve(net.place_ids, org_located.rows[i][1], org_located.source,
                                       i, "place");
            place_org.emplace_back(pl, org);
        }

        std::vector<std::pair<DenseId, DenseId>> org_person;
        for (const char* file : {"person_studyAt_organisation.csv",
                                 "person_workAt_organisation.csv"}) {
            const auto table = parse_csv(dir / file, {"Person.id", "Organisation.id"});
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                const DenseId p = resolve(net.person_ids, table.rows[i][0], table.source, i,
                                          "person");
                const SparseId oid = parse_u64(table.rows[i][1], table.source, row_line(i));
                const DenseId org = net.organisation_ids.add(oid);
                org_person.emplace_back(org, p);
            }
        }

        net.orgs_located_at = AdjacencyIndex::build(net.place_ids.size(), std::move(place_org));
        net.persons_of_org = AdjacencyIndex::build(net.organisation_ids.size(),
                                                   std::move(org_person));
    }

    // birthday index: persons ascending by (birthday, dense id)
    {
        net.birthday_index.persons.resize(n);
        for (DenseId p = 0; p < n; ++p) net.birthday_index.persons[p] = p;
        std::sort(net.birthday_index.persons.begin(), net.birthday_index.persons.end(),
                  [&](DenseId a, DenseId b) {
                      return net.birthdays[a] != net.birthdays[b] ? net.birthdays[a] < net.birthdays[b]
                                                                  : a < b;
                  });
        net.birthday_index.birthdays.resize(n);
        for (DenseId i = 0; i < n; ++i)
            net.birthday_index.birthdays[i] = net.birthdays[net.birthday_index.persons[i]];
    }

    return net;
}

VertexMask persons_in_place(const SocialNetwork& net, std::string_view place_name) {
    VertexMask mask(net.person_count());
    for (DenseId q : net.places.places_named(place_name)) {
        for (DenseId r : net.places.subtree(q)) {
            for (DenseId p : net.persons_located_at.values_of(r)) mask.set(p);
            for (DenseId org : net.orgs_located_at.values_of(r))
                for (DenseId p : net.persons_of_org.values_of(org)) mask.set(p);
        }
    }
    return mask;
}

VertexMask persons_born_on_or_after(const SocialNetwork& net, Date d) {
    return net.birthday_index.born_on_or_after(d);
}

VertexMask persons_in_forums_with_tag(const SocialNetwork& net, std::string_view tag_name) {
    VertexMask mask(net.person_count());
    const auto it = net.tags_by_name.find(std::string(tag_name));
    if (it == net.tags_by_name.end()) return mask;
    for (DenseId tag : it->second)
        for (DenseId forum : net.forums_with_tag.values_of(tag))
            for (DenseId p : net.members_of_forum.values_of(forum)) mask.set(p);
    return mask;
}

VertexMask persons_interested_in_tag(const SocialNetwork& net, DenseId tag) {
    VertexMask mask(net.person_count());
    for (DenseId p : net.persons_with_interest.values_of(tag)) mask.set(p);
    return mask;
}

ReplyEdgePredicate induce_by_reply_threshold(const SocialNetwork& net, std::int64_t threshold) {
    return {net.mutual_reply_min.empty() ? nullptr : net.mutual_reply_min.data(), threshold};
}

}  // namespace snq
