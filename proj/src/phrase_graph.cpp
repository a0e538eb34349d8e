#include "rarrg/phrase_graph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <unordered_map>

#include "rarrg/errors.hpp"

namespace rarrg {

EntityLabel parse_entity_label(const std::string& s) {
    if (s == "ANAT-DP") return EntityLabel::anat_dp;
    if (s == "OBS-DP") return EntityLabel::obs_dp;
    if (s == "OBS-DA") return EntityLabel::obs_da;
    if (s == "OBS-U") return EntityLabel::obs_u;
    throw ValidationError("unknown entity label '" + s + "'");
}

RelationKind parse_relation_kind(const std::string& s) {
    if (s == "modify") return RelationKind::modify;
    if (s == "located_at") return RelationKind::located_at;
    if (s == "suggestive_of") return RelationKind::suggestive_of;
    throw ValidationError("unknown relation kind '" + s + "'");
}

std::string to_string(EntityLabel label) {
    switch (label) {
        case EntityLabel::anat_dp: return "ANAT-DP";
        case EntityLabel::obs_dp: return "OBS-DP";
        case EntityLabel::obs_da: return "OBS-DA";
        case EntityLabel::obs_u: return "OBS-U";
    }
    return "?";
}

std::string to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::modify: return "modify";
        case RelationKind::located_at: return "located_at";
        case RelationKind::suggestive_of: return "suggestive_of";
    }
    return "?";
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                    const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(where + ": missing field '" + key + "'");
    }
    return *it;
}

} // namespace

std::pair<std::vector<Entity>, std::vector<Relation>>
parse_annotation(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ValidationError("annotation document must be a JSON object");
    }
    const auto& jents = require_field(doc, "entities", "document");
    const auto& jrels = require_field(doc, "relations", "document");
    if (!jents.is_array() || !jrels.is_array()) {
        throw ValidationError("document: 'entities' and 'relations' must be arrays");
    }

    std::vector<Entity> entities;
    entities.reserve(jents.size());
    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < jents.size(); ++i) {
        const std::string where = "entity #" + std::to_string(i);
        const auto& je = jents[i];
        if (!je.is_object()) throw ValidationError(where + ": not an object");
        Entity e;
        e.id = require_field(je, "id", where).get<std::string>();
        e.tokens = require_field(je, "tokens", where).get<std::string>();
        const auto& jstart = require_field(je, "start", where);
        if (!jstart.is_number_integer()) {
            throw ValidationError(where + " (id '" + e.id + "'): 'start' must be an integer");
        }
        e.token_start = jstart.get<int>();
        if (e.token_start < 0) {
            throw ValidationError(where + " (id '" + e.id + "'): 'start' must be non-negative");
        }
        if (e.tokens.empty()) {
            throw ValidationError(where + " (id '" + e.id + "'): empty tokens");
        }
        try {
            e.label = parse_entity_label(require_field(je, "label", where).get<std::string>());
        } catch (const ValidationError& err) {
            throw ValidationError(where + " (id '" + e.id + "'): " + err.what());
        }
        if (!by_id.emplace(e.id, i).second) {
            throw ValidationError(where + ": duplicate entity id '" + e.id + "'");
        }
        entities.push_back(std::move(e));
    }

    std::vector<Relation> relations;
    relations.reserve(jrels.size());
    for (std::size_t i = 0; i < jrels.size(); ++i) {
        const std::string where = "relation #" + std::to_string(i);
        const auto& jr = jrels[i];
        if (!jr.is_object()) throw ValidationError(where + ": not an object");
        Relation r;
        r.source = require_field(jr, "source", where).get<std::string>();
        r.target = require_field(jr, "target", where).get<std::string>();
        try {
            r.kind = parse_relation_kind(require_field(jr, "kind", where).get<std::string>());
        } catch (const ValidationError& err) {
            throw ValidationError(where + ": " + std::string(err.what()));
        }
        if (r.source == r.target) {
            throw ValidationError(where + ": source equals target ('" + r.source + "')");
        }
        for (const auto& endpoint : {r.source, r.target}) {
            if (!by_id.count(endpoint)) {
                throw ValidationError(where + ": unresolved entity id '" + endpoint + "'");
            }
        }
        relations.push_back(std::move(r));
    }
    return {std::move(entities), std::move(relations)};
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<PhraseGraph> build_graphs(const std::vector<Entity>& entities,
                                      const std::vector<Relation>& relations) {
    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < entities.size(); ++i) {
        by_id.emplace(entities[i].id, i);
    }

    UnionFind uf(entities.size());
    for (const auto& r : relations) {
        if (r.kind != RelationKind::modify) continue;
        auto s = by_id.find(r.source);
        auto t = by_id.find(r.target);
        if (s == by_id.end() || t == by_id.end()) {
            throw ValidationError("relation references unknown entity '" +
                                  (s == by_id.end() ? r.source : r.target) + "'");
        }
        uf.unite(s->second, t->second);
    }

    // Gather components in entity source order.
    std::unordered_map<std::size_t, std::size_t> root_to_graph;
    std::vector<PhraseGraph> graphs;
    for (std::size_t i = 0; i < entities.size(); ++i) {
        const std::size_t root = uf.find(i);
        auto [it, inserted] = root_to_graph.emplace(root, graphs.size());
        if (inserted) graphs.emplace_back();
        graphs[it->second].entities.push_back(entities[i]);
    }
    for (const auto& r : relations) {
        if (r.kind != RelationKind::modify) continue;
        const std::size_t root = uf.find(by_id.at(r.source));
        graphs[root_to_graph.at(root)].edges.push_back(r);
    }

    std::stable_sort(graphs.begin(), graphs.end(), [](const PhraseGraph& a, const PhraseGraph& b) {
        const auto min_start = [](const PhraseGraph& g) {
            int m = g.entities.front().token_start;
            for (const auto& e : g.entities) m = std::min(m, e.token_start);
            return m;
        };
        return min_start(a) < min_start(b);
    });
    return graphs;
}

KeyPhrase graph_to_phrase(const PhraseGraph& graph) {
    if (graph.entities.empty()) {
        throw ValidationError("graph_to_phrase: empty graph");
    }
    std::vector<std::size_t> order(graph.entities.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return graph.entities[a].token_start < graph.entities[b].token_start;
    });

    bool has_da = false;
    bool has_u = false;
    std::string text;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Entity& e = graph.entities[order[k]];
        has_da = has_da || e.label == EntityLabel::obs_da;
        has_u = has_u || e.label == EntityLabel::obs_u;
        if (k > 0) text += ' ';
        text += e.tokens;
    }
    // Definite absence beats uncertainty when a graph carries both.
    if (has_da) {
        text = "no " + text;
    } else if (has_u) {
        text = "maybe " + text;
    }
    return KeyPhrase{std::move(text), -1};
}

std::vector<KeyPhrase> extract_radgraph_phrases(const nlohmann::json& doc) {
    auto [entities, relations] = parse_annotation(doc);
    const auto graphs = build_graphs(entities, relations);
    std::vector<KeyPhrase> phrases;
    phrases.reserve(graphs.size());
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        KeyPhrase p = graph_to_phrase(graphs[g]);
        p.source_graph = static_cast<int>(g);
        phrases.push_back(std::move(p));
    }
    return phrases;
}

std::vector<std::string> phrase_texts(const std::vector<KeyPhrase>& phrases) {
    std::vector<std::string> out;
    out.reserve(phrases.size());
    for (const auto& p : phrases) out.push_back(p.text);
    return out;
}

} // namespace rarrg
