#include "cnqf/topology.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

namespace cnqf::topo {

using nlohmann::json;

const char* to_string(ElementKind k) {
    switch (k) {
    case ElementKind::router: return "router";
    case ElementKind::gateway: return "gateway";
    case ElementKind::access_point: return "access_point";
    }
    return "?";
}

const char* to_string(Technology t) {
    switch (t) {
    case Technology::wimax: return "wimax";
    case Technology::wifi: return "wifi";
    case Technology::xdsl: return "xdsl";
    case Technology::cellular: return "cellular";
    case Technology::cable: return "cable";
    case Technology::satellite: return "satellite";
    }
    return "?";
}

const char* to_string(BrokerRoleKind r) {
    switch (r) {
    case BrokerRoleKind::WARB: return "WARB";
    case BrokerRoleKind::FARB: return "FARB";
    case BrokerRoleKind::CNRB: return "CNRB";
    }
    return "?";
}

ElementKind element_kind_from(const std::string& s) {
    if (s == "router") return ElementKind::router;
    if (s == "gateway") return ElementKind::gateway;
    if (s == "access_point") return ElementKind::access_point;
    throw_error(Errc::validation_error, "unknown element kind '" + s + "'");
}

Technology technology_from(const std::string& s) {
    if (s == "wimax") return Technology::wimax;
    if (s == "wifi") return Technology::wifi;
    if (s == "xdsl") return Technology::xdsl;
    if (s == "cellular") return Technology::cellular;
    if (s == "cable") return Technology::cable;
    if (s == "satellite") return Technology::satellite;
    throw_error(Errc::validation_error, "unknown technology '" + s + "'");
}

BrokerRoleKind broker_role_for(Technology t) {
    switch (t) {
    case Technology::wimax:
    case Technology::wifi:
    case Technology::cellular:
    case Technology::satellite:
        return BrokerRoleKind::WARB;
    case Technology::xdsl:
    case Technology::cable:
        return BrokerRoleKind::FARB;
    }
    return BrokerRoleKind::FARB;
}

Topology::Topology(std::vector<NetworkElement> elements, std::vector<Link> links,
                   std::vector<AccessNetwork> access_networks) {
    for (auto& e : elements) {
        if (!elements_.emplace(e.id, e).second)
            throw_error(Errc::validation_error, "duplicate element id " + e.id);
    }
    for (auto& an : access_networks) {
        if (an.id == "core")
            throw_error(Errc::validation_error, "access network id 'core' is reserved");
        if (!access_networks_.emplace(an.id, an).second)
            throw_error(Errc::validation_error, "duplicate access network id " + an.id);
    }
    for (auto& [id, e] : elements_) {
        if (e.domain != "core" && access_networks_.count(e.domain) == 0)
            throw_error(Errc::validation_error,
                        "element " + id + " references unknown domain " + e.domain);
    }
    for (auto& l : links) {
        if (l.capacity_kbps <= 0)
            throw_error(Errc::validation_error, "link " + l.id + " has non-positive capacity");
        if (l.latency_ms < 0)
            throw_error(Errc::validation_error, "link " + l.id + " has negative latency");
        if (!elements_.count(l.from) || !elements_.count(l.to))
            throw_error(Errc::validation_error, "link " + l.id + " has dangling endpoint");
        if (l.from == l.to)
            throw_error(Errc::validation_error, "link " + l.id + " is a self loop");
        if (!links_.emplace(l.id, l).second)
            throw_error(Errc::validation_error, "duplicate link id " + l.id);
    }
    if (access_networks_.empty())
        throw_error(Errc::validation_error, "topology has no access network");
    bool has_core = std::any_of(elements_.begin(), elements_.end(),
                                [](const auto& kv) { return kv.second.domain == "core"; });
    if (!has_core)
        throw_error(Errc::validation_error, "topology has an empty core");

    for (auto& [id, l] : links_) {
        adjacency_[l.from].push_back(id);
        adjacency_[l.to].push_back(id);
        const std::string& da = elements_.at(l.from).domain;
        const std::string& db = elements_.at(l.to).domain;
        if (da == db)
            link_domain_[id] = da;
        else if (da == "core")
            link_domain_[id] = db;
        else if (db == "core")
            link_domain_[id] = da;
        else
            link_domain_[id] = std::min(da, db);
    }
    for (auto& [id, ls] : adjacency_) std::sort(ls.begin(), ls.end());
}

const NetworkElement& Topology::element(const std::string& id) const {
    auto it = elements_.find(id);
    if (it == elements_.end()) throw_error(Errc::unknown_element, id);
    return it->second;
}

const Link& Topology::link(const std::string& id) const {
    auto it = links_.find(id);
    if (it == links_.end()) throw_error(Errc::unknown_link, id);
    return it->second;
}

const std::string& Topology::link_domain(const std::string& link_id) const {
    auto it = link_domain_.find(link_id);
    if (it == link_domain_.end()) throw_error(Errc::unknown_link, link_id);
    return it->second;
}

const std::vector<std::string>& Topology::links_at(const std::string& element_id) const {
    static const std::vector<std::string> none;
    auto it = adjacency_.find(element_id);
    return it == adjacency_.end() ? none : it->second;
}

std::vector<std::string> Topology::link_ids_in_domain(const std::string& domain) const {
    std::vector<std::string> out;
    for (auto& [id, dom] : link_domain_)
        if (dom == domain) out.push_back(id);
    return out;
}

namespace {

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok)
            throw_error(Errc::validation_error, "unknown key '" + it.key() + "' in " + where);
    }
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw_error(Errc::validation_error, where + " requires string field '" + key + "'");
    return obj[key].get<std::string>();
}

std::int64_t require_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw_error(Errc::validation_error, where + " requires integer field '" + key + "'");
    return obj[key].get<std::int64_t>();
}

} // namespace

Topology load_topology(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw_error(Errc::parse_error,
                    "topology document: " + std::string(e.what()) + " (byte " +
                        std::to_string(e.byte) + ")");
    }
    if (!doc.is_object())
        throw_error(Errc::validation_error, "topology document must be an object");
    check_keys(doc, {"elements", "links", "access_networks"}, "topology document");

    std::vector<NetworkElement> elements;
    std::vector<Link> links;
    std::vector<AccessNetwork> access_networks;

    for (const auto& e : doc.value("elements", json::array())) {
        check_keys(e, {"id", "kind", "domain"}, "element");
        NetworkElement el;
        el.id = require_string(e, "id", "element");
        el.kind = element_kind_from(require_string(e, "kind", "element"));
        el.domain = require_string(e, "domain", "element");
        elements.push_back(std::move(el));
    }
    for (const auto& l : doc.value("links", json::array())) {
        check_keys(l, {"id", "from", "to", "capacity_kbps", "latency_ms"}, "link");
        Link lk;
        lk.id = require_string(l, "id", "link");
        lk.from = require_string(l, "from", "link");
        lk.to = require_string(l, "to", "link");
        lk.capacity_kbps = require_int(l, "capacity_kbps", "link " + lk.id);
        lk.latency_ms = require_int(l, "latency_ms", "link " + lk.id);
        links.push_back(std::move(lk));
    }
    for (const auto& a : doc.value("access_networks", json::array())) {
        check_keys(a, {"id", "technology"}, "access_network");
        AccessNetwork an;
        an.id = require_string(a, "id", "access_network");
        an.technology = technology_from(require_string(a, "technology", "access_network"));
        access_networks.push_back(std::move(an));
    }
    return Topology(std::move(elements), std::move(links), std::move(access_networks));
}

std::vector<std::string> find_path(const Topology& topology, const std::string& src,
                                   const std::string& dst,
                                   const std::set<std::string>& excluded_links) {
    topology.element(src);
    topology.element(dst);
    if (src == dst) return {};

    // BFS from dst gives hop distances; a greedy walk from src that always
    // picks the smallest feasible next element id yields the
    // lexicographically smallest minimum-hop element sequence.
    std::map<std::string, int> dist;
    dist[dst] = 0;
    std::deque<std::string> queue{dst};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const auto& lid : topology.links_at(cur)) {
            if (excluded_links.count(lid)) continue;
            const Link& l = topology.link(lid);
            const std::string& peer = l.from == cur ? l.to : l.from;
            if (!dist.count(peer)) {
                dist[peer] = dist[cur] + 1;
                queue.push_back(peer);
            }
        }
    }
    if (!dist.count(src))
        throw_error(Errc::no_path, src + " -> " + dst);

    std::vector<std::string> path;
    std::string cur = src;
    while (cur != dst) {
        int want = dist.at(cur) - 1;
        std::string best_peer;
        std::string best_link;
        for (const auto& lid : topology.links_at(cur)) {
            if (excluded_links.count(lid)) continue;
            const Link& l = topology.link(lid);
            const std::string& peer = l.from == cur ? l.to : l.from;
            auto it = dist.find(peer);
            if (it == dist.end() || it->second != want) continue;
            if (best_peer.empty() || peer < best_peer ||
                (peer == best_peer && lid < best_link)) {
                best_peer = peer;
                best_link = lid;
            }
        }
        path.push_back(best_link);
        cur = best_peer;
    }
    return path;
}

std::vector<std::string> path_elements(const Topology& topology, const std::string& src,
                                       const std::vector<std::string>& path) {
    std::vector<std::string> elems{src};
    std::string cur = src;
    for (const auto& lid : path) {
        const Link& l = topology.link(lid);
        cur = l.from == cur ? l.to : l.from;
        elems.push_back(cur);
    }
    return elems;
}

} // namespace cnqf::topo
