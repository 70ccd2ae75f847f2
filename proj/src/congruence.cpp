#include "resq/congruence.hpp"

#include <utility>

namespace resq {

CongruenceReport make_congruence(std::string label, std::uint64_t q, std::uint64_t e, const Integer& lhs,
                                 const Integer& rhs) {
    const Integer modulus = pow(Integer(static_cast<unsigned long>(q)), e);
    CongruenceReport r;
    r.label = std::move(label);
    r.q = q;
    r.modulus_power = e;
    r.lhs = mod_floor(lhs, modulus);
    r.rhs = mod_floor(rhs, modulus);
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace resq
