#include "arseg/word_seg.hpp"

#include "arseg/errors.hpp"
#include "arseg/profile.hpp"

namespace arseg {

std::vector<ConnectedPart> connected_parts(const InkImage& line) {
    const Profile vp = vertical_profile(line);
    std::vector<ConnectedPart> parts;
    const int n = static_cast<int>(vp.values.size());
    int x = 0;
    while (x < n) {
        if (vp.values[x] == 0) {
            ++x;
            continue;
        }
        const int start = x;
        while (x < n && vp.values[x] > 0)
            ++x;
        ConnectedPart part;
        part.x_band = {start, x - 1};
        part.image = crop(line, part.x_band, {0, line.height - 1});
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<WordCluster> cluster_words(const std::vector<ConnectedPart>& parts,
                                       int gap_threshold) {
    std::vector<WordCluster> clusters;
    for (const auto& part : parts) {
        const bool join =
            !clusters.empty() &&
            part.x_band.start - clusters.back().x_band.end - 1 < gap_threshold;
        if (join) {
            clusters.back().parts.push_back(part);
            clusters.back().x_band.end = part.x_band.end;
        } else {
            WordCluster c;
            c.x_band = part.x_band;
            c.parts.push_back(part);
            clusters.push_back(std::move(c));
        }
    }
    return clusters;
}

} // namespace arseg
