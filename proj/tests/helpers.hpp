#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "slopelab/formal_module.hpp"

namespace testutil {

using slopelab::CycloRat;
using slopelab::ElementaryModule;
using slopelab::FormalModule;
using slopelab::Rat;
using slopelab::RegularPart;

inline FormalModule El(std::int64_t p, std::vector<std::pair<std::int64_t, CycloRat>> phi, std::int64_t rank = 1) {
    return FormalModule(ElementaryModule::make(p, std::move(phi), RegularPart::trivial(rank)));
}

inline FormalModule El(std::int64_t p, std::vector<std::pair<std::int64_t, CycloRat>> phi, std::vector<Rat> exps) {
    return FormalModule(ElementaryModule::make(p, std::move(phi), RegularPart(std::move(exps))));
}

inline FormalModule Reg(std::int64_t rank) {
    return FormalModule(ElementaryModule::regular(RegularPart::trivial(rank)));
}

inline FormalModule Reg(std::vector<Rat> exps) {
    return FormalModule(ElementaryModule::regular(RegularPart(std::move(exps))));
}

inline FormalModule operator+(const FormalModule& a, const FormalModule& b) {
    return slopelab::direct_sum(a, b);
}

}  // namespace testutil
