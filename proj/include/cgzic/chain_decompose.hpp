#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cgzic/channel_model.hpp"
#include "cgzic/tolerances.hpp"

namespace cgzic {

// Contiguous run of users [first, first + size) taken from a longer chain.
// May hold a single user, which ChannelConfig cannot.
struct SubChain {
    std::size_t first = 0; // 0-based index of the first user in the parent chain
    std::vector<double> interference;
    std::vector<double> power;

    std::size_t size() const { return power.size(); }
    /// Requires size() >= 2.
    ChannelConfig config() const;
    SubChain slice(std::size_t begin, std::size_t end) const; // local [begin, end)
};

SubChain whole_chain(const ChannelConfig& cfg);

enum class CutReason { VeryStrong, Lemma2 };

struct Cut {
    std::size_t after = 0; // 1-based user number; the link after this user is cut
    CutReason reason = CutReason::VeryStrong;
};

struct VeryStrongSplit {
    std::vector<SubChain> pieces;
    std::vector<Cut> cuts;
};

/// Cuts every link with a_i >= sqrt(1 + P_{i+1}).
VeryStrongSplit remove_very_strong(const ChannelConfig& cfg);

enum class SegmentStatus {
    ExactSingleUser,
    ExactTwoUser,
    ExactNoisy,
    ExactStrong,
    ExactMixedI,
    Gap05MixedII,
    AchievableOnly,
};

std::string_view to_string(SegmentStatus s);
std::string_view to_string(CutReason r);
bool is_known(SegmentStatus s);

struct Segment {
    std::size_t first = 0; // 1-based, inclusive
    std::size_t last = 0;  // 1-based, inclusive
    double value = 0.0;    // sum capacity when known, else best achievable
    SegmentStatus status = SegmentStatus::AchievableOnly;
};

struct Segmentation {
    std::vector<Segment> segments;
    std::vector<Cut> cuts;
    std::optional<double> total; // present iff every segment is known exactly

    double segment_sum() const;
};

/// Sum capacity of a chain that the scan could not split further.
Segment evaluate_segment(const SubChain& chain, double slack = tol::kRegimeSlack);

/// Greedy left-to-right application of the segmentation lemma: cut after user
/// k when the prefix sum capacity is attained by a simple HK scheme (any
/// 2-user prefix, 3-user prefixes with an exact regime) and
/// a_k >= sqrt(1 + P_{k+1}) h_k. Expects no very strong links.
Segmentation lemma2_segment(const SubChain& chain, double slack = tol::kRegimeSlack);
Segmentation lemma2_segment(const ChannelConfig& cfg, double slack = tol::kRegimeSlack);

/// remove_very_strong followed by lemma2_segment on every piece.
Segmentation decompose(const ChannelConfig& cfg, double slack = tol::kRegimeSlack);

} // namespace cgzic
