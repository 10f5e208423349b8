#pragma once

#include <string>
#include <vector>

#include "detlab/poly.hpp"

namespace support {

// Table of bare names ("x", "y", ...), ordinal order as listed.
inline detlab::VarTablePtr names(std::initializer_list<const char*> ns) {
    std::vector<detlab::Variable> vs;
    for (const char* n : ns) vs.push_back({n, 0, 0});
    return std::make_shared<const detlab::VarTable>(vs);
}

inline detlab::Polynomial P(const detlab::VarTablePtr& ctx, const std::string& text) {
    return detlab::parse_polynomial(text, ctx);
}

inline std::vector<detlab::Polynomial> Ps(const detlab::VarTablePtr& ctx, std::initializer_list<const char*> ts) {
    std::vector<detlab::Polynomial> out;
    for (const char* t : ts) out.push_back(P(ctx, t));
    return out;
}

}  // namespace support
