#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ems/attrs.hpp"
#include "ems/errors.hpp"
#include "ems/geometry.hpp"

namespace ems {

// ------------------------------------------------------------ node types

enum class Modality { text, audio, video, sensor, other };

inline const char* modality_name(Modality m) {
    switch (m) {
        case Modality::text: return "text";
        case Modality::audio: return "audio";
        case Modality::video: return "video";
        case Modality::sensor: return "sensor";
        case Modality::other: return "other";
    }
    return "other";
}

inline Modality modality_from(const std::string& s) {
    if (s == "text") return Modality::text;
    if (s == "audio") return Modality::audio;
    if (s == "video") return Modality::video;
    if (s == "sensor") return Modality::sensor;
    return Modality::other;
}

struct Report {
    std::string id;
    Modality modality = Modality::text;
    int64_t timestamp = 0;  // UTC seconds
    std::string raw_ref;
    AttrMap attrs;
};

struct Event {
    std::string id;
    std::string event_type;
    std::string milieu_time;    // optional TemporalMilieu id
    std::string milieu_space;   // optional SpatialMilieu id
    std::string location_pdf;   // optional id into the pdf store
    AttrMap attrs;
};

struct Entity {
    std::string id;
    std::string entity_type;
    AttrMap attrs;
};

struct TemporalMilieu {
    std::string id;
    enum class Kind { point, interval } kind = Kind::point;
    int64_t start = 0;
    int64_t end = 0;  // == start for points
    AttrMap attrs;
};

struct SpatialMilieu {
    std::string id;
    enum class Kind { point, region, named } kind = Kind::region;
    Polygon geometry;  // single vertex for points
    std::string name;
    AttrMap attrs;
};

using Node = std::variant<Report, Event, Entity, TemporalMilieu, SpatialMilieu>;

inline const std::string& node_id(const Node& n) {
    return std::visit([](const auto& v) -> const std::string& { return v.id; }, n);
}

enum class NodeKind { report, event, entity, temporal_milieu, spatial_milieu };

inline NodeKind node_kind(const Node& n) {
    return static_cast<NodeKind>(n.index());
}

inline const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::report: return "report";
        case NodeKind::event: return "event";
        case NodeKind::entity: return "entity";
        case NodeKind::temporal_milieu: return "temporal_milieu";
        case NodeKind::spatial_milieu: return "spatial_milieu";
    }
    return "?";
}

inline const AttrMap& node_attrs(const Node& n) {
    return std::visit([](const auto& v) -> const AttrMap& { return v.attrs; }, n);
}

// ------------------------------------------------------------ edge types

enum class EdgeFamily {
    event_entity,
    entity_entity,
    event_milieu,
    milieu_milieu,
    event_event,
    event_report,
};

inline const char* family_name(EdgeFamily f) {
    switch (f) {
        case EdgeFamily::event_entity: return "event_entity";
        case EdgeFamily::entity_entity: return "entity_entity";
        case EdgeFamily::event_milieu: return "event_milieu";
        case EdgeFamily::milieu_milieu: return "milieu_milieu";
        case EdgeFamily::event_event: return "event_event";
        case EdgeFamily::event_report: return "event_report";
    }
    return "?";
}

inline EdgeFamily family_from(const std::string& s) {
    if (s == "event_entity") return EdgeFamily::event_entity;
    if (s == "entity_entity") return EdgeFamily::entity_entity;
    if (s == "event_milieu") return EdgeFamily::event_milieu;
    if (s == "milieu_milieu") return EdgeFamily::milieu_milieu;
    if (s == "event_event") return EdgeFamily::event_event;
    if (s == "event_report") return EdgeFamily::event_report;
    throw Error(errc::bad_format, "unknown edge family: " + s);
}

// Controlled vocabulary per family; entity_entity is free-form.
inline const std::set<std::string>& family_vocabulary(EdgeFamily f) {
    static const std::set<std::string> event_entity{"agentive", "influencing", "mediating",
                                                    "participant"};
    static const std::set<std::string> event_milieu{"at-time", "during", "at-location",
                                                    "near-location"};
    static const std::set<std::string> milieu_milieu{"before", "begins",   "ends",    "during",
                                                     "contains", "overlaps", "meets", "equals",
                                                     "touches",  "disjoint", "near"};
    static const std::set<std::string> event_event{"causes", "hinders", "composed-of"};
    static const std::set<std::string> event_report{"reported-in"};
    static const std::set<std::string> empty;
    switch (f) {
        case EdgeFamily::event_entity: return event_entity;
        case EdgeFamily::event_milieu: return event_milieu;
        case EdgeFamily::milieu_milieu: return milieu_milieu;
        case EdgeFamily::event_event: return event_event;
        case EdgeFamily::event_report: return event_report;
        case EdgeFamily::entity_entity: return empty;
    }
    return empty;
}

inline bool label_valid_for(EdgeFamily f, const std::string& label) {
    if (f == EdgeFamily::entity_entity) return !label.empty();
    return family_vocabulary(f).count(label) > 0;
}

struct EdgeType {
    EdgeFamily family = EdgeFamily::entity_entity;
    std::string label;
    double weight = 1.0;
};

struct Edge {
    std::string src;
    std::string dst;
    EdgeType type;
    AttrMap attrs;
};

// ------------------------------------------------------------ choice nodes

// An unresolved reference: owner is connected to exactly one of the
// candidates (or to the virtual not-in-database object z). Weights are the
// current confidence distribution; resolution updates them in place.
struct ChoiceNode {
    std::string id;
    std::string owner;
    std::vector<std::string> candidates;
    bool has_z = true;
    std::vector<double> weights;  // aligned with candidates
    double weight_z = 0.0;
    std::string description;  // the raw reference string (ingest bookkeeping)
    std::string role;         // intended event_entity role
};

// ------------------------------------------------------------ EventWeb

class EventWeb {
public:
    using EdgeId = size_t;

    std::string add_node(Node n) {
        std::string id = node_id(n);
        if (id.empty()) throw Error(errc::invalid_argument, "node id must be nonempty");
        if (nodes_.count(id)) throw Error(errc::duplicate_id, "node already present: " + id);
        validate_node(n);
        nodes_.emplace(id, std::move(n));
        return id;
    }

    bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }

    const Node& node(const std::string& id) const {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) throw Error(errc::unknown_id, "no such node: " + id);
        return it->second;
    }

    size_t node_count() const { return nodes_.size(); }
    size_t edge_count() const { return edges_.size(); }

    EdgeId add_edge(const std::string& src, const std::string& dst, EdgeType type,
                    AttrMap attrs = {}) {
        if (!has_node(src)) throw Error(errc::missing_node, "edge source missing: " + src);
        if (!has_node(dst)) throw Error(errc::missing_node, "edge target missing: " + dst);
        if (!label_valid_for(type.family, type.label))
            throw Error(errc::invalid_label, "label '" + type.label + "' not valid for family " +
                                                 family_name(type.family));
        if (type.weight < 0) throw Error(errc::invalid_argument, "edge weight must be >= 0");
        auto key = std::make_tuple(src, dst, type.label);
        if (edge_keys_.count(key))
            throw Error(errc::duplicate_edge,
                        "duplicate edge " + src + " -> " + dst + " [" + type.label + "]");
        if (type.family == EdgeFamily::event_event && type.label == "composed-of" &&
            composition_reaches(dst, src))
            throw Error(errc::cycle, "composed-of cycle via " + src + " -> " + dst);
        EdgeId id = edges_.size();
        edges_.push_back(Edge{src, dst, std::move(type), std::move(attrs)});
        edge_keys_.insert(std::move(key));
        adj_[src].push_back(id);
        adj_[dst].push_back(id);
        return id;
    }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    // Edge ids incident to a node (either endpoint).
    const std::vector<EdgeId>& incident(const std::string& id) const {
        static const std::vector<EdgeId> none;
        auto it = adj_.find(id);
        return it == adj_.end() ? none : it->second;
    }

    const std::map<std::string, Node>& nodes() const { return nodes_; }

    // -------------------------------------------------- choice nodes

    void add_choice_node(ChoiceNode c) {
        if (c.candidates.empty())
            throw Error(errc::invalid_argument, "choice node needs at least one candidate");
        if (choice_nodes_.count(c.id)) throw Error(errc::duplicate_id, "choice node: " + c.id);
        if (!has_node(c.owner)) throw Error(errc::missing_node, "choice owner: " + c.owner);
        for (const auto& v : c.candidates)
            if (!has_node(v)) throw Error(errc::missing_node, "choice candidate: " + v);
        if (c.weights.empty()) {
            size_t n = c.candidates.size() + (c.has_z ? 1 : 0);
            c.weights.assign(c.candidates.size(), 1.0 / static_cast<double>(n));
            c.weight_z = c.has_z ? 1.0 / static_cast<double>(n) : 0.0;
        }
        choice_nodes_.emplace(c.id, std::move(c));
    }

    std::map<std::string, ChoiceNode>& choice_nodes() { return choice_nodes_; }
    const std::map<std::string, ChoiceNode>& choice_nodes() const { return choice_nodes_; }

    // -------------------------------------------------- serialization

    nlohmann::json to_json() const;
    static EventWeb from_json(const nlohmann::json& j);

private:
    static void validate_node(const Node& n) {
        if (const auto* e = std::get_if<Event>(&n)) {
            if (e->event_type.empty())
                throw Error(errc::invalid_argument, "event_type must be nonempty: " + e->id);
        } else if (const auto* t = std::get_if<TemporalMilieu>(&n)) {
            if (t->start > t->end)
                throw Error(errc::invalid_argument, "temporal milieu start > end: " + t->id);
            if (t->kind == TemporalMilieu::Kind::point && t->start != t->end)
                throw Error(errc::invalid_argument, "temporal point with start != end: " + t->id);
        } else if (const auto* s = std::get_if<SpatialMilieu>(&n)) {
            if (s->kind == SpatialMilieu::Kind::point) {
                if (s->geometry.size() != 1)
                    throw Error(errc::degenerate_geometry, "point milieu needs 1 vertex: " + s->id);
            } else if (s->geometry.size() < 3 || !is_simple_polygon(s->geometry)) {
                throw Error(errc::degenerate_geometry,
                            "milieu polygon must be simple with >= 3 vertices: " + s->id);
            }
        }
    }

    bool composition_reaches(const std::string& from, const std::string& to) const {
        if (from == to) return true;
        std::vector<const std::string*> stack{&from};
        std::set<std::string> seen{from};
        while (!stack.empty()) {
            const std::string& cur = *stack.back();
            stack.pop_back();
            for (EdgeId eid : incident(cur)) {
                const Edge& e = edges_[eid];
                if (e.type.label != "composed-of" || e.src != cur) continue;
                if (e.dst == to) return true;
                if (seen.insert(e.dst).second) stack.push_back(&edges_[eid].dst);
            }
        }
        return false;
    }

    std::map<std::string, Node> nodes_;
    std::vector<Edge> edges_;
    std::set<std::tuple<std::string, std::string, std::string>> edge_keys_;
    std::map<std::string, std::vector<EdgeId>> adj_;
    std::map<std::string, ChoiceNode> choice_nodes_;
};

// ------------------------------------------------------------ relations

// Temporal milieu relations over closed intervals (points are degenerate
// intervals). "during" is inclusive containment, so begins/ends imply it.
inline std::set<std::string> temporal_relate(const TemporalMilieu& a, const TemporalMilieu& b) {
    std::set<std::string> out;
    const int64_t as = a.start, ae = a.end, bs = b.start, be = b.end;
    if (as == bs && ae == be) {
        out.insert("equals");
        return out;
    }
    if (ae < bs) out.insert("before");
    if (as > be) out.insert("after");
    if (as == bs && ae < be) out.insert("begins");
    if (ae == be && as > bs) out.insert("ends");
    if (as >= bs && ae <= be) out.insert("during");
    if (bs >= as && be <= ae) out.insert("contains");
    if (ae == bs && as < ae && bs < be) out.insert("meets");
    if ((as < bs && bs < ae && ae < be) || (bs < as && as < be && be < ae)) out.insert("overlaps");
    return out;
}

// Spatial milieu relations; near holds iff the region distance is in
// (0, near_dist]. disjoint and near can co-occur.
inline std::set<std::string> spatial_relate(const SpatialMilieu& a, const SpatialMilieu& b,
                                            double near_dist) {
    if (near_dist < 0) throw Error(errc::invalid_argument, "near_dist must be >= 0");
    auto check = [](const SpatialMilieu& m) {
        if (m.kind != SpatialMilieu::Kind::point &&
            (m.geometry.size() < 3 || !is_simple_polygon(m.geometry)))
            throw Error(errc::degenerate_geometry, "milieu geometry not simple: " + m.id);
    };
    check(a);
    check(b);
    PolyRelation r = relate_polygons(a.geometry, b.geometry);
    std::set<std::string> out;
    if (r.equals) out.insert("equals");
    if (r.a_contains_b) out.insert("contains");
    if (r.b_contains_a) out.insert("within");
    if (r.overlaps) out.insert("overlaps");
    if (r.touches) out.insert("touches");
    if (r.disjoint) {
        out.insert("disjoint");
        if (r.distance > 0 && r.distance <= near_dist) out.insert("near");
    }
    return out;
}

// ------------------------------------------------------------ JSON

namespace detail {

inline nlohmann::json polygon_to_json(const Polygon& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto v : p) arr.push_back(nlohmann::json::array({v.x, v.y}));
    return arr;
}

inline Polygon polygon_from_json(const nlohmann::json& j) {
    Polygon p;
    for (const auto& v : j) p.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    return p;
}

}  // namespace detail

inline nlohmann::json EventWeb::to_json() const {
    nlohmann::json j;
    j["version"] = 1;
    auto& nodes = j["nodes"];
    nodes["reports"] = nlohmann::json::array();
    nodes["events"] = nlohmann::json::array();
    nodes["entities"] = nlohmann::json::array();
    nodes["temporal_milieus"] = nlohmann::json::array();
    nodes["spatial_milieus"] = nlohmann::json::array();
    for (const auto& [id, n] : nodes_) {
        if (const auto* r = std::get_if<Report>(&n)) {
            nodes["reports"].push_back({{"id", r->id},
                                        {"modality", modality_name(r->modality)},
                                        {"timestamp", r->timestamp},
                                        {"raw_ref", r->raw_ref},
                                        {"attrs", attrs_to_json(r->attrs)}});
        } else if (const auto* e = std::get_if<Event>(&n)) {
            nlohmann::json je{{"id", e->id},
                              {"event_type", e->event_type},
                              {"attrs", attrs_to_json(e->attrs)}};
            if (!e->milieu_time.empty()) je["milieu_time"] = e->milieu_time;
            if (!e->milieu_space.empty()) je["milieu_space"] = e->milieu_space;
            if (!e->location_pdf.empty()) je["location_pdf"] = e->location_pdf;
            nodes["events"].push_back(std::move(je));
        } else if (const auto* en = std::get_if<Entity>(&n)) {
            nodes["entities"].push_back({{"id", en->id},
                                         {"entity_type", en->entity_type},
                                         {"attrs", attrs_to_json(en->attrs)}});
        } else if (const auto* t = std::get_if<TemporalMilieu>(&n)) {
            nodes["temporal_milieus"].push_back(
                {{"id", t->id},
                 {"kind", t->kind == TemporalMilieu::Kind::point ? "point" : "interval"},
                 {"start", t->start},
                 {"end", t->end},
                 {"attrs", attrs_to_json(t->attrs)}});
        } else if (const auto* s = std::get_if<SpatialMilieu>(&n)) {
            const char* kind = s->kind == SpatialMilieu::Kind::point     ? "point"
                               : s->kind == SpatialMilieu::Kind::region ? "region"
                                                                        : "named";
            nodes["spatial_milieus"].push_back({{"id", s->id},
                                                {"kind", kind},
                                                {"geometry", detail::polygon_to_json(s->geometry)},
                                                {"name", s->name},
                                                {"attrs", attrs_to_json(s->attrs)}});
        }
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges_) {
        j["edges"].push_back({{"src", e.src},
                              {"dst", e.dst},
                              {"family", family_name(e.type.family)},
                              {"label", e.type.label},
                              {"weight", e.type.weight},
                              {"attrs", attrs_to_json(e.attrs)}});
    }
    j["choice_nodes"] = nlohmann::json::array();
    for (const auto& [id, c] : choice_nodes_) {
        j["choice_nodes"].push_back({{"id", c.id},
                                     {"owner", c.owner},
                                     {"candidates", c.candidates},
                                     {"has_z", c.has_z},
                                     {"weights", c.weights},
                                     {"weight_z", c.weight_z},
                                     {"description", c.description},
                                     {"role", c.role}});
    }
    return j;
}

inline EventWeb EventWeb::from_json(const nlohmann::json& j) {
    EventWeb g;
    const auto& nodes = j.at("nodes");
    for (const auto& r : nodes.at("reports")) {
        g.add_node(Report{r.at("id").get<std::string>(),
                          modality_from(r.at("modality").get<std::string>()),
                          r.at("timestamp").get<int64_t>(), r.value("raw_ref", std::string{}),
                          attrs_from_json(r.value("attrs", nlohmann::json{}))});
    }
    for (const auto& e : nodes.at("events")) {
        g.add_node(Event{e.at("id").get<std::string>(), e.at("event_type").get<std::string>(),
                         e.value("milieu_time", std::string{}),
                         e.value("milieu_space", std::string{}),
                         e.value("location_pdf", std::string{}),
                         attrs_from_json(e.value("attrs", nlohmann::json{}))});
    }
    for (const auto& en : nodes.at("entities")) {
        g.add_node(Entity{en.at("id").get<std::string>(),
                          en.value("entity_type", std::string{}),
                          attrs_from_json(en.value("attrs", nlohmann::json{}))});
    }
    for (const auto& t : nodes.at("temporal_milieus")) {
        g.add_node(TemporalMilieu{
            t.at("id").get<std::string>(),
            t.at("kind").get<std::string>() == "point" ? TemporalMilieu::Kind::point
                                                       : TemporalMilieu::Kind::interval,
            t.at("start").get<int64_t>(), t.at("end").get<int64_t>(),
            attrs_from_json(t.value("attrs", nlohmann::json{}))});
    }
    for (const auto& s : nodes.at("spatial_milieus")) {
        std::string kind = s.at("kind").get<std::string>();
        g.add_node(SpatialMilieu{s.at("id").get<std::string>(),
                                 kind == "point"    ? SpatialMilieu::Kind::point
                                 : kind == "region" ? SpatialMilieu::Kind::region
                                                    : SpatialMilieu::Kind::named,
                                 detail::polygon_from_json(s.at("geometry")),
                                 s.value("name", std::string{}),
                                 attrs_from_json(s.value("attrs", nlohmann::json{}))});
    }
    for (const auto& e : j.at("edges")) {
        g.add_edge(e.at("src").get<std::string>(), e.at("dst").get<std::string>(),
                   EdgeType{family_from(e.at("family").get<std::string>()),
                            e.at("label").get<std::string>(), e.value("weight", 1.0)},
                   attrs_from_json(e.value("attrs", nlohmann::json{})));
    }
    if (j.contains("choice_nodes")) {
        for (const auto& c : j.at("choice_nodes")) {
            ChoiceNode cn;
            cn.id = c.at("id").get<std::string>();
            cn.owner = c.at("owner").get<std::string>();
            cn.candidates = c.at("candidates").get<std::vector<std::string>>();
            cn.has_z = c.value("has_z", true);
            cn.weights = c.value("weights", std::vector<double>{});
            cn.weight_z = c.value("weight_z", 0.0);
            cn.description = c.value("description", std::string{});
            cn.role = c.value("role", std::string{});
            g.add_choice_node(std::move(cn));
        }
    }
    return g;
}

}  // namespace ems
