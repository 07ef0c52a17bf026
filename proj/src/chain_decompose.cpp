#include "cgzic/chain_decompose.hpp"

#include <cmath>
#include <stdexcept>

#include "cgzic/hk_core.hpp"
#include "cgzic/regimes3.hpp"

namespace cgzic {

ChannelConfig SubChain::config() const {
    if (size() < 2) {
        throw std::logic_error("SubChain::config: single-user chain");
    }
    ChannelConfig cfg{size(), interference, power};
    require_valid(cfg);
    return cfg;
}

SubChain SubChain::slice(std::size_t begin, std::size_t end) const {
    if (begin >= end || end > size()) {
        throw std::out_of_range("SubChain::slice: bad range");
    }
    SubChain out;
    out.first = first + begin;
    out.power.assign(power.begin() + static_cast<std::ptrdiff_t>(begin),
                     power.begin() + static_cast<std::ptrdiff_t>(end));
    out.interference.assign(interference.begin() + static_cast<std::ptrdiff_t>(begin),
                            interference.begin() + static_cast<std::ptrdiff_t>(end - 1));
    return out;
}

SubChain whole_chain(const ChannelConfig& cfg) {
    require_valid(cfg);
    return SubChain{0, cfg.interference, cfg.power};
}

VeryStrongSplit remove_very_strong(const ChannelConfig& cfg) {
    const SubChain all = whole_chain(cfg);
    VeryStrongSplit out;
    std::size_t begin = 0;
    for (std::size_t link = 0; link < cfg.links(); ++link) {
        if (is_very_strong_link(cfg, link)) {
            out.pieces.push_back(all.slice(begin, link + 1));
            out.cuts.push_back({link + 1, CutReason::VeryStrong});
            begin = link + 1;
        }
    }
    out.pieces.push_back(all.slice(begin, all.size()));
    return out;
}

std::string_view to_string(SegmentStatus s) {
    switch (s) {
    case SegmentStatus::ExactSingleUser: return "ExactSingleUser";
    case SegmentStatus::ExactTwoUser: return "ExactTwoUser";
    case SegmentStatus::ExactNoisy: return "ExactNoisy";
    case SegmentStatus::ExactStrong: return "ExactStrong";
    case SegmentStatus::ExactMixedI: return "ExactMixedI";
    case SegmentStatus::Gap05MixedII: return "Gap05MixedII";
    case SegmentStatus::AchievableOnly: return "AchievableOnly";
    }
    return "?";
}

std::string_view to_string(CutReason r) {
    return r == CutReason::VeryStrong ? "VeryStrong" : "Lemma2";
}

bool is_known(SegmentStatus s) {
    return s != SegmentStatus::Gap05MixedII && s != SegmentStatus::AchievableOnly;
}

double Segmentation::segment_sum() const {
    double sum = 0.0;
    for (const auto& s : segments) {
        sum += s.value;
    }
    return sum;
}

namespace {

SegmentStatus from_capacity(CapacityStatus s) {
    switch (s) {
    case CapacityStatus::ExactNoisy: return SegmentStatus::ExactNoisy;
    case CapacityStatus::ExactStrong: return SegmentStatus::ExactStrong;
    case CapacityStatus::ExactMixedI: return SegmentStatus::ExactMixedI;
    case CapacityStatus::Gap05MixedII: return SegmentStatus::Gap05MixedII;
    case CapacityStatus::AchievableOnly: return SegmentStatus::AchievableOnly;
    }
    return SegmentStatus::AchievableOnly;
}

} // namespace

Segment evaluate_segment(const SubChain& chain, double slack) {
    Segment seg;
    seg.first = chain.first + 1;
    seg.last = chain.first + chain.size();
    switch (chain.size()) {
    case 1:
        seg.value = gaussian_capacity(chain.power[0]);
        seg.status = SegmentStatus::ExactSingleUser;
        break;
    case 2:
        // Z-channel: the simple HK optimum is the sum capacity for all gains.
        seg.value = max_sum_rate(chain.config()).sum_rate;
        seg.status = SegmentStatus::ExactTwoUser;
        break;
    case 3: {
        const RegimeReport rep = classify(chain.config(), slack);
        seg.value = rep.achievable;
        seg.status = from_capacity(rep.capacity_status);
        break;
    }
    default:
        seg.value = max_sum_rate(chain.config()).sum_rate;
        seg.status = SegmentStatus::AchievableOnly;
        break;
    }
    return seg;
}

Segmentation lemma2_segment(const SubChain& chain, double slack) {
    Segmentation out;
    SubChain rest = chain;
    std::size_t k = 2; // candidate prefix length within `rest`
    while (k < rest.size()) {
        const SubChain prefix = rest.slice(0, k);
        const ChannelConfig pcfg = prefix.config();
        bool prefix_solved = false;
        Segment prefix_seg;
        if (k == 2 || k == 3) {
            prefix_seg = evaluate_segment(prefix, slack);
            prefix_solved = is_known(prefix_seg.status);
        }
        if (prefix_solved) {
            const double h_last = effective_gains(pcfg).amplitude.back();
            const double a = rest.interference[k - 1];
            const double threshold = std::sqrt(1.0 + rest.power[k]) * h_last;
            if (a >= threshold - slack) {
                out.segments.push_back(prefix_seg);
                out.cuts.push_back({rest.first + k, CutReason::Lemma2});
                rest = rest.slice(k, rest.size());
                k = 2;
                continue;
            }
        }
        ++k;
    }
    out.segments.push_back(evaluate_segment(rest, slack));

    bool all_known = true;
    for (const auto& s : out.segments) {
        all_known = all_known && is_known(s.status);
    }
    if (all_known) {
        out.total = out.segment_sum();
    }
    return out;
}

Segmentation lemma2_segment(const ChannelConfig& cfg, double slack) {
    return lemma2_segment(whole_chain(cfg), slack);
}

Segmentation decompose(const ChannelConfig& cfg, double slack) {
    const VeryStrongSplit split = remove_very_strong(cfg);
    Segmentation out;
    std::size_t next_cut = 0;
    for (const auto& piece : split.pieces) {
        Segmentation part = lemma2_segment(piece, slack);
        out.segments.insert(out.segments.end(), part.segments.begin(), part.segments.end());
        out.cuts.insert(out.cuts.end(), part.cuts.begin(), part.cuts.end());
        if (next_cut < split.cuts.size()) {
            out.cuts.push_back(split.cuts[next_cut++]);
        }
    }
    bool all_known = true;
    for (const auto& s : out.segments) {
        all_known = all_known && is_known(s.status);
    }
    if (all_known) {
        out.total = out.segment_sum();
    }
    return out;
}

} // namespace cgzic
