#include "dbe/set_family.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace dbe {

namespace {

constexpr unsigned kMaxGround = 24;

struct Search {
    std::vector<std::uint32_t> candidates;
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> best;
    std::uint64_t nodes = 0;

    void run(std::size_t from) {
        ++nodes;
        if (chosen.size() > best.size()) best = chosen;
        if (chosen.size() + (candidates.size() - from) <= best.size()) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const std::uint32_t c = candidates[i];
            const bool fits = std::all_of(chosen.begin(), chosen.end(),
                                          [c](std::uint32_t m) { return std::popcount(c & m) == 1; });
            if (!fits) continue;
            chosen.push_back(c);
            run(i + 1);
            chosen.pop_back();
            if (chosen.size() + (candidates.size() - i - 1) <= best.size()) return;
        }
    }
};

} // namespace

void SetFamily::validate() const {
    if (n > kMaxGround) throw std::invalid_argument("set family: ground set larger than 24");
    const std::uint32_t universe = n == 32 ? ~0u : (1u << n) - 1;
    std::set<std::uint32_t> seen;
    for (auto m : members) {
        if (m == 0) throw std::invalid_argument("set family: empty member");
        if (m & ~universe) throw std::invalid_argument("set family: member outside [n]");
        if (!seen.insert(m).second) throw std::invalid_argument("set family: repeated member");
    }
}

std::uint32_t mask_of(const std::vector<unsigned>& elements) {
    std::uint32_t m = 0;
    for (auto e : elements) {
        if (e < 1 || e > kMaxGround) throw std::invalid_argument("element out of range 1..24");
        m |= 1u << (e - 1);
    }
    return m;
}

std::vector<unsigned> elements_of(std::uint32_t mask) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < 32; ++i)
        if (mask & (1u << i)) out.push_back(i + 1);
    return out;
}

bool unique_intersection(const SetFamily& f) {
    f.validate();
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (std::popcount(f.members[i] & f.members[j]) != 1) return false;
    return true;
}

std::vector<std::vector<int>> as_binary_vectors(const SetFamily& f) {
    std::vector<std::vector<int>> out;
    for (auto m : f.members) {
        std::vector<int> v(f.n, 0);
        for (unsigned i = 0; i < f.n; ++i) v[i] = (m >> i) & 1u;
        out.push_back(std::move(v));
    }
    return out;
}

bool unique_intersection_vectors(const std::vector<std::vector<int>>& vectors) {
    for (std::size_t a = 0; a < vectors.size(); ++a)
        for (std::size_t b = a + 1; b < vectors.size(); ++b) {
            if (vectors[a].size() != vectors[b].size())
                throw std::invalid_argument("binary vectors of different length");
            std::size_t hits = 0;
            for (std::size_t i = 0; i < vectors[a].size(); ++i)
                if (vectors[a][i] == vectors[b][i] && vectors[a][i] > 0) ++hits;
            if (hits != 1) return false;
        }
    return true;
}

FamilySearchResult max_family_size(unsigned n) {
    if (n < 2 || n > 5) throw std::invalid_argument("max_family_size: n must be in 2..5");
    Search s;
    for (std::uint32_t m = 1; m < (1u << n); ++m) s.candidates.push_back(m);
    std::stable_sort(s.candidates.begin(), s.candidates.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    s.run(0);
    FamilySearchResult r;
    r.max_size = s.best.size();
    r.witness = SetFamily{n, s.best};
    r.nodes = s.nodes;
    return r;
}

SetFamily near_pencil(unsigned n) {
    if (n < 3) throw std::invalid_argument("near_pencil: n must be at least 3");
    if (n > kMaxGround) throw std::invalid_argument("near_pencil: n larger than 24");
    SetFamily f{n, {}};
    f.members.push_back(((1u << n) - 1) & ~1u);
    for (unsigned i = 2; i <= n; ++i) f.members.push_back(1u | (1u << (i - 1)));
    return f;
}

std::string to_string(const SetFamily& f) {
    std::string out = "{";
    for (std::size_t k = 0; k < f.members.size(); ++k) {
        if (k) out += ", ";
        out += "{";
        const auto els = elements_of(f.members[k]);
        for (std::size_t i = 0; i < els.size(); ++i) out += (i ? "," : "") + std::to_string(els[i]);
        out += "}";
    }
    return out + "}";
}

} // namespace dbe
