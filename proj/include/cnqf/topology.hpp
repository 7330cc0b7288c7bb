#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cnqf/errors.hpp"

namespace cnqf::topo {

enum class ElementKind { router, gateway, access_point };
enum class Technology { wimax, wifi, xdsl, cellular, cable, satellite };
enum class BrokerRoleKind { WARB, FARB, CNRB };

const char* to_string(ElementKind k);
const char* to_string(Technology t);
const char* to_string(BrokerRoleKind r);
ElementKind element_kind_from(const std::string& s);
Technology technology_from(const std::string& s);

// Wireless technologies are brokered by a WARB, fixed ones by a FARB.
BrokerRoleKind broker_role_for(Technology t);

struct NetworkElement {
    std::string id;
    ElementKind kind = ElementKind::router;
    std::string domain; // access-network id or "core"
};

struct Link {
    std::string id;
    std::string from;
    std::string to;
    std::int64_t capacity_kbps = 0;
    std::int64_t latency_ms = 0;
};

struct AccessNetwork {
    std::string id;
    Technology technology = Technology::wifi;

    BrokerRoleKind broker_role() const { return broker_role_for(technology); }
};

// Immutable once loaded; safe to share read-only across threads.
class Topology {
public:
    Topology(std::vector<NetworkElement> elements, std::vector<Link> links,
             std::vector<AccessNetwork> access_networks);

    const std::map<std::string, NetworkElement>& elements() const { return elements_; }
    const std::map<std::string, Link>& links() const { return links_; }
    const std::map<std::string, AccessNetwork>& access_networks() const { return access_networks_; }

    bool has_element(const std::string& id) const { return elements_.count(id) != 0; }
    bool has_link(const std::string& id) const { return links_.count(id) != 0; }
    const NetworkElement& element(const std::string& id) const;
    const Link& link(const std::string& id) const;

    // Domain a link belongs to: the non-core endpoint domain when the link
    // straddles the access/core boundary, the shared domain otherwise. A link
    // joining two distinct access networks is assigned the lexicographically
    // smaller one.
    const std::string& link_domain(const std::string& link_id) const;

    // Link ids incident to an element, sorted.
    const std::vector<std::string>& links_at(const std::string& element_id) const;

    std::vector<std::string> link_ids_in_domain(const std::string& domain) const;

private:
    std::map<std::string, NetworkElement> elements_;
    std::map<std::string, Link> links_;
    std::map<std::string, AccessNetwork> access_networks_;
    std::map<std::string, std::vector<std::string>> adjacency_;
    std::map<std::string, std::string> link_domain_;
};

// Parses and validates a JSON topology document. Top-level keys `elements`,
// `links`, `access_networks`; unknown keys anywhere are a ValidationError.
Topology load_topology(const std::string& document);

// Minimum-hop path from src to dst; among equal-hop paths the one whose
// element-id sequence after src is lexicographically smallest. Parallel links
// between the chosen elements resolve to the smallest link id. Throws NoPath
// when disconnected. `excluded_links` supports policy-directed reroutes.
std::vector<std::string> find_path(const Topology& topology, const std::string& src,
                                   const std::string& dst,
                                   const std::set<std::string>& excluded_links = {});

// Element sequence corresponding to a link path starting at src.
std::vector<std::string> path_elements(const Topology& topology, const std::string& src,
                                       const std::vector<std::string>& path);

} // namespace cnqf::topo
