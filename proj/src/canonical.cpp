#include "workbench/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

namespace workbench {

namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 64;

/// Backtracking over vertex orderings: labels 0,1,... are assigned to support
/// vertices one at a time (high-degree vertices tried first). Members whose
/// elements are all labeled are "completed"; completed images only ever grow
/// the low end of the final sorted image, so they can be compared against the
/// reference incrementally, pruning any branch whose prefix is already larger
/// and stopping as soon as a strictly smaller labeling is certain.
///
/// Every completed labeling that reproduces the reference yields an
/// automorphism of the input (relative to the first such labeling found);
/// automorphisms that fix the currently assigned prefix pointwise map sibling
/// candidates onto each other, and such equivalent siblings are skipped. That
/// keeps highly symmetric families (clique unions, star forests) from
/// exploding into one branch per automorphism.
class MinImageEngine {
  public:
    explicit MinImageEngine(const std::vector<SetWord>& members) : members_(members) {
        SetWord supp;
        for (const SetWord& w : members_) supp |= w;
        support_ = supp.elements();
        r_ = static_cast<int>(support_.size());
        vert_index_.fill(-1);
        for (int si = 0; si < r_; ++si) vert_index_[static_cast<std::size_t>(support_[static_cast<std::size_t>(si)])] = si;
        vert_members_.resize(static_cast<std::size_t>(r_));
        for (int si = 0; si < r_; ++si)
            for (int mi = 0; mi < static_cast<int>(members_.size()); ++mi)
                if (members_[static_cast<std::size_t>(mi)].test(support_[static_cast<std::size_t>(si)]))
                    vert_members_[static_cast<std::size_t>(si)].push_back(mi);
        order_.resize(static_cast<std::size_t>(r_));
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            std::size_t da = vert_members_[static_cast<std::size_t>(a)].size();
            std::size_t db = vert_members_[static_cast<std::size_t>(b)].size();
            return da != db ? da > db : a < b;
        });
    }

    /// Search for a labeling whose image is strictly below `ref` (sorted).
    std::optional<std::vector<SetWord>> find_smaller(const std::vector<SetWord>& ref) {
        ref_ = &ref;
        image_.assign(members_.size(), SetWord{});
        remaining_.resize(members_.size());
        for (std::size_t i = 0; i < members_.size(); ++i) remaining_[i] = members_[i].count();
        label_of_.assign(static_cast<std::size_t>(r_), -1);
        vertex_at_.assign(static_cast<std::size_t>(r_), -1);
        completed_.clear();
        first_equal_.clear();  // stored automorphisms are reference-independent and kept
        result_.reset();
        dfs(0, 0);
        return std::move(result_);
    }

  private:
    bool dfs(int level, int pos) {
        if (level == r_ || pos == static_cast<int>(members_.size())) {
            record_automorphism(level);
            return false;  // image equals ref
        }
        std::array<char, SetWord::max_ground> tried{};
        for (int oi = 0; oi < r_; ++oi) {
            const int si = order_[static_cast<std::size_t>(oi)];
            if (label_of_[static_cast<std::size_t>(si)] >= 0) continue;
            if (orbit_seen(tried, si, level)) continue;
            tried[static_cast<std::size_t>(si)] = 1;

            label_of_[static_cast<std::size_t>(si)] = level;
            vertex_at_[static_cast<std::size_t>(level)] = si;
            const int batch_start = static_cast<int>(completed_.size());
            for (int mi : vert_members_[static_cast<std::size_t>(si)]) {
                image_[static_cast<std::size_t>(mi)].set(level);
                if (--remaining_[static_cast<std::size_t>(mi)] == 0)
                    completed_.push_back(image_[static_cast<std::size_t>(mi)]);
            }
            if (completed_.size() - static_cast<std::size_t>(batch_start) > 1)
                std::sort(completed_.begin() + batch_start, completed_.end());
            int cmp = 0;
            int bp = pos;
            for (int bi = batch_start; bi < static_cast<int>(completed_.size()); ++bi, ++bp) {
                const SetWord& a = completed_[static_cast<std::size_t>(bi)];
                const SetWord& b = (*ref_)[static_cast<std::size_t>(bp)];
                if (a < b) {
                    cmp = -1;
                    break;
                }
                if (b < a) {
                    cmp = +1;
                    break;
                }
            }
            // every future completion carries a label above `level`, so a
            // still-unmatched reference member inside [0..level] can never be
            // matched again: the image is already strictly greater
            if (cmp == 0 && bp < static_cast<int>(members_.size()) &&
                (*ref_)[static_cast<std::size_t>(bp)].max_element() <= level)
                cmp = +1;
            bool done = false;
            if (cmp < 0) {
                result_ = complete_labeling(level);
                done = true;
            } else if (cmp == 0) {
                done = dfs(level + 1, bp);
            }
            for (int mi : vert_members_[static_cast<std::size_t>(si)]) {
                image_[static_cast<std::size_t>(mi)].reset(level);
                ++remaining_[static_cast<std::size_t>(mi)];
            }
            completed_.resize(static_cast<std::size_t>(batch_start));
            label_of_[static_cast<std::size_t>(si)] = -1;
            vertex_at_[static_cast<std::size_t>(level)] = -1;
            if (done) return true;
        }
        return false;
    }

    /// The current assignment maps the input onto the reference. Composing it
    /// with the inverse of the first such assignment gives a permutation of
    /// the support stabilizing the input family.
    void record_automorphism(int level) {
        std::vector<int> sigma(static_cast<std::size_t>(r_), -1);  // support index -> label
        for (int l = 0; l < level; ++l) sigma[static_cast<std::size_t>(vertex_at_[static_cast<std::size_t>(l)])] = l;
        int next = level;
        for (int si = 0; si < r_; ++si)
            if (sigma[static_cast<std::size_t>(si)] < 0) sigma[static_cast<std::size_t>(si)] = next++;
        if (first_equal_.empty()) {
            first_equal_ = std::move(sigma);
            return;
        }
        if (auts_.size() >= kMaxStoredAutomorphisms) return;
        // tau = first_equal^{-1} ∘ sigma over support indices
        std::vector<int> inv(static_cast<std::size_t>(r_));
        for (int si = 0; si < r_; ++si) inv[static_cast<std::size_t>(first_equal_[static_cast<std::size_t>(si)])] = si;
        std::vector<int> tau(static_cast<std::size_t>(r_));
        bool identity = true;
        for (int si = 0; si < r_; ++si) {
            tau[static_cast<std::size_t>(si)] = inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(si)])];
            identity = identity && tau[static_cast<std::size_t>(si)] == si;
        }
        if (!identity) auts_.push_back(std::move(tau));
    }

    /// True iff a known automorphism fixing all vertices assigned to labels
    /// < level maps `si` onto a candidate already tried at this level.
    bool orbit_seen(const std::array<char, SetWord::max_ground>& tried, int si, int level) const {
        for (const std::vector<int>& tau : auts_) {
            const int image = tau[static_cast<std::size_t>(si)];
            if (image == si || !tried[static_cast<std::size_t>(image)]) continue;
            bool fixes_prefix = true;
            for (int l = 0; l < level && fixes_prefix; ++l) {
                const int v = vertex_at_[static_cast<std::size_t>(l)];
                fixes_prefix = tau[static_cast<std::size_t>(v)] == v;
            }
            if (fixes_prefix) return true;
        }
        return false;
    }

    /// Assign the remaining labels arbitrarily; any completion stays strictly
    /// below the reference once the completed prefix is.
    std::vector<SetWord> complete_labeling(int used_level) {
        std::vector<SetWord> img = image_;
        int lvl = used_level + 1;
        for (int oi = 0; oi < r_; ++oi) {
            const int si = order_[static_cast<std::size_t>(oi)];
            if (label_of_[static_cast<std::size_t>(si)] >= 0) continue;
            for (int mi : vert_members_[static_cast<std::size_t>(si)]) img[static_cast<std::size_t>(mi)].set(lvl);
            ++lvl;
        }
        std::sort(img.begin(), img.end());
        return img;
    }

    const std::vector<SetWord>& members_;
    std::vector<int> support_;
    std::array<int, SetWord::max_ground> vert_index_{};
    int r_ = 0;
    std::vector<std::vector<int>> vert_members_;
    std::vector<int> order_;
    const std::vector<SetWord>* ref_ = nullptr;
    std::vector<SetWord> image_;
    std::vector<int> remaining_;
    std::vector<int> label_of_;   // support index -> label or -1
    std::vector<int> vertex_at_;  // label -> support index or -1
    std::vector<SetWord> completed_;
    std::vector<std::vector<int>> auts_;
    std::vector<int> first_equal_;
    std::optional<std::vector<SetWord>> result_;
};

/// Order-preserving relabeling of the support onto {0..r-1}.
std::vector<SetWord> compress(const std::vector<SetWord>& members) {
    SetWord supp;
    for (const SetWord& w : members) supp |= w;
    std::vector<int> verts = supp.elements();
    std::vector<SetWord> out;
    out.reserve(members.size());
    for (const SetWord& w : members) {
        SetWord m;
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            if (w.test(verts[static_cast<std::size_t>(i)])) m.set(i);
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<SetWord> min_image(const std::vector<SetWord>& members) {
    if (members.empty()) return {};
    MinImageEngine engine(members);
    std::vector<SetWord> cur = compress(members);
    while (auto smaller = engine.find_smaller(cur)) cur = std::move(*smaller);
    return cur;
}

bool is_canonical(const std::vector<SetWord>& members) {
    if (members.empty()) return true;
    MinImageEngine engine(members);
    return !engine.find_smaller(members).has_value();
}

Family canonical_family(const Family& fam) {
    return Family(fam.ground_n(), min_image(fam.members()), fam.uniformity());
}

}  // namespace workbench
