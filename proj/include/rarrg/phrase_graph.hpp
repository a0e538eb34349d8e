#pragma once
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace rarrg {

enum class EntityLabel { anat_dp, obs_dp, obs_da, obs_u };
enum class RelationKind { modify, located_at, suggestive_of };

EntityLabel parse_entity_label(const std::string& s);
RelationKind parse_relation_kind(const std::string& s);
std::string to_string(EntityLabel label);
std::string to_string(RelationKind kind);

struct Entity {
    std::string id;
    std::string tokens;
    int token_start = 0;
    EntityLabel label = EntityLabel::obs_dp;
};

struct Relation {
    std::string source;
    std::string target;
    RelationKind kind = RelationKind::modify;
};

// A connected component under modify edges only.
struct PhraseGraph {
    std::vector<Entity> entities; // source order
    std::vector<Relation> edges;  // the modify relations inside the component
};

struct KeyPhrase {
    std::string text;
    int source_graph = -1; // index into the graph list, -1 when not applicable
};

// Validates one annotation document (see the JSON schema in the README) and
// returns its entities in source order plus all relations.
std::pair<std::vector<Entity>, std::vector<Relation>>
parse_annotation(const nlohmann::json& doc);

// Connected components over modify edges; located_at / suggestive_of never
// merge. Components are ordered by their smallest token_start.
std::vector<PhraseGraph> build_graphs(const std::vector<Entity>& entities,
                                      const std::vector<Relation>& relations);

// Entity tokens joined in ascending token_start order; "no " when the graph
// holds any OBS-DA entity, else "maybe " when it holds any OBS-U entity.
KeyPhrase graph_to_phrase(const PhraseGraph& graph);

std::vector<KeyPhrase> extract_radgraph_phrases(const nlohmann::json& doc);

std::vector<std::string> phrase_texts(const std::vector<KeyPhrase>& phrases);

} // namespace rarrg
