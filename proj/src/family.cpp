#include "workbench/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace workbench {

std::vector<SetWord> subsets_of_size(const SetWord& mask, int h) {
    std::vector<SetWord> out;
    for_each_subset_of_size(mask, h, [&](const SetWord& w) { out.push_back(w); });
    return out;
}

void for_each_subset_of_size(const SetWord& mask, int h, const std::function<void(const SetWord&)>& fn) {
    if (h < 0) return;
    if (h == 0) {
        fn(SetWord::empty());
        return;
    }
    std::vector<int> elems = mask.elements();
    const int m = static_cast<int>(elems.size());
    if (h > m) return;
    // index combinations in lex order over ascending elements = colex order on sets
    std::vector<int> idx(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        SetWord w;
        for (int i : idx) w.set(elems[static_cast<std::size_t>(i)]);
        fn(w);
        int j = h - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - h + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < h; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

std::uint64_t colex_rank(const SetWord& w) {
    std::uint64_t rank = 0;
    int i = 1;
    for (int e : w.elements()) {
        // C(e, i)
        std::uint64_t c = 1;
        for (int j = 0; j < i; ++j) c = c * static_cast<std::uint64_t>(e - j) / static_cast<std::uint64_t>(j + 1);
        rank += c;
        ++i;
    }
    return rank;
}

Family::Family(int ground_n, std::vector<SetWord> members, std::optional<int> uniformity)
    : members_(std::move(members)), ground_n_(ground_n), uniformity_(uniformity) {
    if (ground_n_ < 0 || ground_n_ > SetWord::max_ground)
        throw std::invalid_argument("Family: ground set size must be in [0,128]");
    const SetWord ground = SetWord::range(ground_n_);
    for (const SetWord& w : members_)
        if (!w.subset_of(ground)) throw std::invalid_argument("Family: member outside ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    std::vector<int> sizes;
    for (const SetWord& w : members_) sizes.push_back(w.count());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    layer_sizes_ = std::move(sizes);
    if (uniformity_) {
        for (const SetWord& w : members_)
            if (w.count() != *uniformity_)
                throw std::invalid_argument("Family: member cardinality violates declared uniformity");
    } else if (layer_sizes_.size() == 1) {
        uniformity_ = layer_sizes_.front();
    }
}

bool Family::contains(const SetWord& w) const {
    return std::binary_search(members_.begin(), members_.end(), w);
}

Family Family::layer(int h) const {
    std::vector<SetWord> out;
    for (const SetWord& w : members_)
        if (w.count() == h) out.push_back(w);
    return Family(ground_n_, std::move(out), h >= 0 ? std::optional<int>(h) : std::nullopt);
}

int Family::min_member_size() const {
    return layer_sizes_.empty() ? -1 : layer_sizes_.front();
}

int Family::max_member_size() const {
    return layer_sizes_.empty() ? -1 : layer_sizes_.back();
}

SetWord support(const Family& fam) {
    SetWord s;
    for (const SetWord& w : fam.members()) s |= w;
    return s;
}

Family shadow(const Family& fam, int h, bool* degenerate) {
    if (degenerate) *degenerate = false;
    if (h < 0) {
        if (degenerate) *degenerate = true;
        return Family(fam.ground_n(), {});
    }
    if (!fam.is_empty() && h > fam.max_member_size()) {
        if (degenerate) *degenerate = true;
        return Family(fam.ground_n(), {}, h);
    }
    std::vector<SetWord> out;
    for (const SetWord& w : fam.members())
        if (w.count() >= h) for_each_subset_of_size(w, h, [&](const SetWord& sub) { out.push_back(sub); });
    return Family(fam.ground_n(), std::move(out), h);
}

Family restrict(const Family& fam, const SetWord& a, const SetWord& b) {
    if (!a.subset_of(b)) throw std::invalid_argument("restrict: A must be a subset of B");
    std::vector<SetWord> out;
    for (const SetWord& w : fam.members())
        if ((w & b) == a) out.push_back(w - b);
    return Family(fam.ground_n(), std::move(out));
}

Family filter_superset(const Family& fam, const Family& basis) {
    std::vector<SetWord> out;
    for (const SetWord& w : fam.members())
        for (const SetWord& b : basis.members())
            if (b.subset_of(w)) {
                out.push_back(w);
                break;
            }
    return Family(fam.ground_n(), std::move(out), fam.uniformity());
}

Family join(const Family& f1, const Family& f2) {
    std::vector<SetWord> out;
    out.reserve(f1.size() * f2.size());
    for (const SetWord& a : f1.members())
        for (const SetWord& b : f2.members()) out.push_back(a | b);
    return Family(std::max(f1.ground_n(), f2.ground_n()), std::move(out));
}

}  // namespace workbench
