#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triclose/corpus.hpp"

namespace triclose {

inline std::uint64_t pair_key(AuthorId a, AuthorId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline AuthorId pair_key_lo(std::uint64_t k) { return static_cast<AuthorId>(k >> 32); }
inline AuthorId pair_key_hi(std::uint64_t k) { return static_cast<AuthorId>(k & 0xffffffffu); }

// Unordered author pair -> indexes of papers containing both. Lists are tiny
// in practice (repeat collaborations), so linear membership checks suffice.
class PairIndex {
public:
    explicit PairIndex(const Corpus& corpus) {
        for (std::uint32_t p = 0; p < corpus.papers().size(); ++p) {
            const auto& au = corpus.papers()[p].authors;
            for (std::size_t i = 0; i < au.size(); ++i)
                for (std::size_t j = i + 1; j < au.size(); ++j)
                    map_[pair_key(au[i], au[j])].push_back(p);
        }
    }

    const std::vector<std::uint32_t>* papers_of(AuthorId a, AuthorId b) const {
        auto it = map_.find(pair_key(a, b));
        return it == map_.end() ? nullptr : &it->second;
    }

    // True iff some paper other than `exclude1`/`exclude2` contains the pair.
    bool closed_by_third(AuthorId a, AuthorId b,
                         std::uint32_t exclude1, std::uint32_t exclude2) const {
        const auto* v = papers_of(a, b);
        if (!v) return false;
        for (std::uint32_t p : *v)
            if (p != exclude1 && p != exclude2) return true;
        return false;
    }

private:
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> map_;
};

} // namespace triclose
