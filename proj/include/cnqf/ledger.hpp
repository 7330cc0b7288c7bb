#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cnqf/errors.hpp"
#include "cnqf/topology.hpp"

namespace cnqf::rms {

// Per-link bandwidth accounting for one broker scope. All arithmetic is
// integer kbps; reserved never exceeds capacity and always equals the sum of
// recorded allocations crossing each link.
class ReservationLedger {
public:
    struct Allocation {
        std::vector<std::string> path; // links, in path order
        std::int64_t kbps = 0;
    };

    explicit ReservationLedger(std::map<std::string, std::int64_t> capacities);

    // Ledger over every link of the topology.
    static ReservationLedger for_topology(const topo::Topology& topology);
    // Ledger over the links owned by one domain (access-network id or "core").
    static ReservationLedger for_domain(const topo::Topology& topology, const std::string& domain);

    bool has_link(const std::string& link_id) const { return capacity_.count(link_id) != 0; }
    std::int64_t capacity_kbps(const std::string& link_id) const;
    std::int64_t reserved_kbps(const std::string& link_id) const;
    std::int64_t residual_kbps(const std::string& link_id) const;

    bool has_allocation(const std::string& session_id) const {
        return allocations_.count(session_id) != 0;
    }
    const Allocation& allocation(const std::string& session_id) const;
    const std::map<std::string, Allocation>& allocations() const { return allocations_; }
    const std::map<std::string, std::int64_t>& capacities() const { return capacity_; }

    // Atomic: validates everything, then applies. Throws ValidationError for
    // kbps <= 0, DuplicateAllocation, UnknownLink, CapacityViolation.
    void reserve(const std::string& session_id, const std::vector<std::string>& path,
                 std::int64_t kbps);

    // Inverse of reserve; throws UnknownSession.
    void release(const std::string& session_id);

    bool fits(const std::vector<std::string>& path, std::int64_t kbps) const;

    // Canonical text form, used for byte-equality checks.
    std::string serialize() const;

    // Recomputes reserved from the allocation set and checks both ledger
    // invariants; throws on violation.
    void audit() const;

private:
    std::map<std::string, std::int64_t> capacity_;
    std::map<std::string, std::int64_t> reserved_;
    std::map<std::string, Allocation> allocations_;
};

// capacity - reserved for one link; throws UnknownLink outside ledger scope.
std::int64_t residual_capacity(const topo::Link& link, const ReservationLedger& ledger);

} // namespace cnqf::rms
