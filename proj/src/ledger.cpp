#include "cnqf/ledger.hpp"

#include <sstream>

namespace cnqf::rms {

ReservationLedger::ReservationLedger(std::map<std::string, std::int64_t> capacities)
    : capacity_(std::move(capacities)) {
    for (auto& [id, cap] : capacity_) {
        if (cap <= 0)
            throw_error(Errc::validation_error, "link " + id + " has non-positive capacity");
        reserved_[id] = 0;
    }
}

ReservationLedger ReservationLedger::for_topology(const topo::Topology& topology) {
    std::map<std::string, std::int64_t> caps;
    for (auto& [id, l] : topology.links()) caps[id] = l.capacity_kbps;
    return ReservationLedger(std::move(caps));
}

ReservationLedger ReservationLedger::for_domain(const topo::Topology& topology,
                                                const std::string& domain) {
    std::map<std::string, std::int64_t> caps;
    for (auto& [id, l] : topology.links())
        if (topology.link_domain(id) == domain) caps[id] = l.capacity_kbps;
    return ReservationLedger(std::move(caps));
}

std::int64_t ReservationLedger::capacity_kbps(const std::string& link_id) const {
    auto it = capacity_.find(link_id);
    if (it == capacity_.end()) throw_error(Errc::unknown_link, link_id);
    return it->second;
}

std::int64_t ReservationLedger::reserved_kbps(const std::string& link_id) const {
    auto it = reserved_.find(link_id);
    if (it == reserved_.end()) throw_error(Errc::unknown_link, link_id);
    return it->second;
}

std::int64_t ReservationLedger::residual_kbps(const std::string& link_id) const {
    return capacity_kbps(link_id) - reserved_kbps(link_id);
}

const ReservationLedger::Allocation& ReservationLedger::allocation(
    const std::string& session_id) const {
    auto it = allocations_.find(session_id);
    if (it == allocations_.end()) throw_error(Errc::unknown_session, session_id);
    return it->second;
}

bool ReservationLedger::fits(const std::vector<std::string>& path, std::int64_t kbps) const {
    for (const auto& lid : path)
        if (reserved_kbps(lid) + kbps > capacity_kbps(lid)) return false;
    return true;
}

void ReservationLedger::reserve(const std::string& session_id,
                                const std::vector<std::string>& path, std::int64_t kbps) {
    if (kbps <= 0)
        throw_error(Errc::validation_error, "bandwidth must be positive");
    if (allocations_.count(session_id))
        throw_error(Errc::duplicate_allocation, session_id);
    for (const auto& lid : path) {
        if (!capacity_.count(lid)) throw_error(Errc::unknown_link, lid);
        if (reserved_.at(lid) + kbps > capacity_.at(lid))
            throw_error(Errc::capacity_violation,
                        "link " + lid + " cannot hold " + std::to_string(kbps) + " kbps");
    }
    for (const auto& lid : path) reserved_[lid] += kbps;
    allocations_[session_id] = Allocation{path, kbps};
}

void ReservationLedger::release(const std::string& session_id) {
    auto it = allocations_.find(session_id);
    if (it == allocations_.end()) throw_error(Errc::unknown_session, session_id);
    for (const auto& lid : it->second.path) reserved_[lid] -= it->second.kbps;
    allocations_.erase(it);
}

std::string ReservationLedger::serialize() const {
    std::ostringstream out;
    for (auto& [id, cap] : capacity_)
        out << "link " << id << " reserved=" << reserved_.at(id) << " capacity=" << cap << "\n";
    for (auto& [sid, alloc] : allocations_) {
        out << "alloc " << sid << " kbps=" << alloc.kbps << " path=";
        for (std::size_t i = 0; i < alloc.path.size(); ++i) {
            if (i) out << "|";
            out << alloc.path[i];
        }
        out << "\n";
    }
    return out.str();
}

void ReservationLedger::audit() const {
    std::map<std::string, std::int64_t> sums;
    for (auto& [id, cap] : capacity_) sums[id] = 0;
    for (auto& [sid, alloc] : allocations_) {
        for (const auto& lid : alloc.path) {
            auto it = sums.find(lid);
            if (it == sums.end())
                throw_error(Errc::validation_error,
                            "allocation " + sid + " crosses unknown link " + lid);
            it->second += alloc.kbps;
        }
    }
    for (auto& [id, sum] : sums) {
        if (sum != reserved_.at(id))
            throw_error(Errc::validation_error, "reserved mismatch on link " + id);
        if (sum > capacity_.at(id))
            throw_error(Errc::capacity_violation, "link " + id + " over capacity");
    }
}

std::int64_t residual_capacity(const topo::Link& link, const ReservationLedger& ledger) {
    return ledger.residual_kbps(link.id);
}

} // namespace cnqf::rms
